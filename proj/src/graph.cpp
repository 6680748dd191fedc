#include "ebtc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ebtc {

std::size_t UndirectedGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& list : adjacency_) {
        total += list.size();
    }
    return total / 2;
}

void UndirectedGraph::add_edge(NodeId a, NodeId b) {
    if (a == b) {
        throw std::invalid_argument("self loop");
    }
    if (a >= adjacency_.size() || b >= adjacency_.size()) {
        throw std::out_of_range("edge endpoint out of range");
    }
    auto insert = [](std::vector<NodeId>& list, NodeId id) {
        auto it = std::lower_bound(list.begin(), list.end(), id);
        if (it == list.end() || *it != id) {
            list.insert(it, id);
        }
    };
    insert(adjacency_[a], b);
    insert(adjacency_[b], a);
}

bool UndirectedGraph::has_edge(NodeId a, NodeId b) const {
    if (a >= adjacency_.size() || b >= adjacency_.size()) {
        return false;
    }
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> UndirectedGraph::edges() const {
    std::vector<Edge> out;
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
        for (NodeId v : adjacency_[u]) {
            if (u < v) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

bool is_connected(const UndirectedGraph& graph, const std::vector<bool>& members) {
    const std::size_t n = graph.node_count();
    auto first = std::find(members.begin(), members.end(), true);
    if (first == members.end()) {
        return true;
    }
    const auto member_count = static_cast<std::size_t>(std::count(members.begin(), members.end(), true));

    std::vector<bool> seen(n, false);
    std::vector<NodeId> stack{static_cast<NodeId>(first - members.begin())};
    seen[stack.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (NodeId v : graph.neighbors(u)) {
            if (members[v] && !seen[v]) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == member_count;
}

bool is_connected(const UndirectedGraph& graph) {
    return is_connected(graph, std::vector<bool>(graph.node_count(), true));
}

bool is_symmetric(const UndirectedGraph& graph) {
    for (NodeId u = 0; u < graph.node_count(); ++u) {
        for (NodeId v : graph.neighbors(u)) {
            if (!graph.has_edge(v, u)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace ebtc
