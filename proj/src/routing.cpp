#include "ebtc/routing.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "ebtc/radio.hpp"

namespace ebtc {

HopCost hop_cost(const World& world, NodeId from, NodeId to) {
    const auto& radio = world.radio();
    const auto m = world.config().packet_bits();
    const auto mp = world.config().ack_bits();
    const double d = world.distance(from, to);
    HopCost cost;
    cost.sender_debit = radio::energy_send(radio, m, d) + radio::energy_recv(radio, mp);
    cost.receiver_debit = radio::energy_recv(radio, m) + radio::energy_send(radio, mp, d);
    cost.total = cost.sender_debit + cost.receiver_debit;
    return cost;
}

RouteTree::RouteTree(const World& world, const UndirectedGraph& adjacency, NodeId source)
    : source_(source),
      energy_(world.size(), std::numeric_limits<double>::infinity()),
      parent_(world.size(), source),
      reached_(world.size(), false) {
    const std::size_t n = world.size();
    std::vector<bool> settled(n, false);

    // Compares the full source->a and source->b paths through the parent links.
    auto lex_less = [this](NodeId a, NodeId b) {
        const auto pa = path_to(a);
        const auto pb = path_to(b);
        return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
    };

    using Entry = std::pair<double, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    energy_[source] = 0.0;
    reached_[source] = true;
    queue.push({0.0, source});
    while (!queue.empty()) {
        const auto [energy, u] = queue.top();
        queue.pop();
        if (settled[u] || energy > energy_[u]) {
            continue;
        }
        settled[u] = true;
        for (NodeId v : adjacency.neighbors(u)) {
            if (settled[v] || !world.node(v).alive) {
                continue;
            }
            const double candidate = energy_[u] + hop_cost(world, u, v).total;
            if (candidate < energy_[v]) {
                energy_[v] = candidate;
                parent_[v] = u;
                reached_[v] = true;
                queue.push({candidate, v});
            } else if (candidate == energy_[v] && parent_[v] != u && lex_less(u, parent_[v])) {
                parent_[v] = u;
            }
        }
    }
}

std::vector<NodeId> RouteTree::path_to(NodeId dest) const {
    std::vector<NodeId> path;
    if (!reached_[dest]) {
        return path;
    }
    for (NodeId at = dest; at != source_; at = parent_[at]) {
        path.push_back(at);
    }
    path.push_back(source_);
    std::reverse(path.begin(), path.end());
    return path;
}

RouteResult min_energy_path(const TopologySnapshot& snapshot, NodeId source, NodeId dest, const World& world) {
    if (source == dest) {
        throw std::invalid_argument("min_energy_path: source and destination must differ");
    }
    const RouteTree tree(world, snapshot.adjacency, source);
    RouteResult result;
    result.found = tree.reaches(dest);
    if (result.found) {
        result.path = tree.path_to(dest);
        result.total_energy = tree.energy_to(dest);
    }
    return result;
}

RoutePlan::RoutePlan(const World& world, const TopologySnapshot& snapshot) : trees_(world.size()) {
    double sum = 0.0;
    std::size_t pairs = 0;
    for (const auto& s : world.nodes()) {
        if (!s.alive) {
            continue;
        }
        const auto& tree = trees_[s.id].emplace(world, snapshot.adjacency, s.id);
        for (const auto& t : world.nodes()) {
            if (t.id == s.id || !t.alive) {
                continue;
            }
            if (tree.reaches(t.id)) {
                sum += tree.energy_to(t.id);
                ++pairs;
            } else {
                ++unreachable_pairs_;
            }
        }
    }
    average_path_cost_ = pairs > 0 ? sum / static_cast<double>(pairs) : 0.0;
}

double TrafficReport::total_spent() const {
    double total = 0.0;
    for (double e : energy_spent) {
        total += e;
    }
    return total;
}

TrafficReport apply_round_traffic(World& world, const RoutePlan& plan) {
    const std::size_t n = world.size();
    TrafficReport report;
    report.energy_spent.assign(n, 0.0);
    report.deficit.assign(n, 0.0);

    const std::vector<bool> alive_at_start = world.alive_mask();

    auto debit = [&](NodeId id, double amount) {
        NodeState& node = world.node(id);
        report.energy_spent[id] += amount;
        if (!node.alive) {
            // died earlier on this same packet's path
            report.deficit[id] += amount;
            return;
        }
        node.residual_energy -= amount;
        if (node.residual_energy <= 0.0) {
            report.deficit[id] = -node.residual_energy;
            node.residual_energy = 0.0;
            node.alive = false;
            report.died.push_back(id);
            if (!report.first_dead) {
                report.first_dead = id;
            }
        }
    };

    std::vector<HopCost> hops;
    for (NodeId s = 0; s < n; ++s) {
        if (!alive_at_start[s]) {
            continue;
        }
        const RouteTree& tree = plan.tree(s);
        for (NodeId t = 0; t < n; ++t) {
            if (t == s || !alive_at_start[t]) {
                continue;
            }
            if (!tree.reaches(t)) {
                ++report.unreachable_pairs;
                continue;
            }
            const auto path = tree.path_to(t);
            if (std::any_of(path.begin(), path.end(), [&world](NodeId id) { return !world.node(id).alive; })) {
                ++report.packets_dropped;
                continue;
            }
            for (std::size_t h = 0; h + 1 < path.size(); ++h) {
                const HopCost cost = hop_cost(world, path[h], path[h + 1]);
                debit(path[h], cost.sender_debit);
                debit(path[h + 1], cost.receiver_debit);
            }
            report.route_energy_sum += tree.energy_to(t);
            ++report.packets_routed;
        }
    }
    return report;
}

TrafficReport apply_round_traffic(World& world, const TopologySnapshot& snapshot) {
    return apply_round_traffic(world, RoutePlan(world, snapshot));
}

}  // namespace ebtc
