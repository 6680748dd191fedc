#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ebtc {

using NodeId = std::uint32_t;

// Undirected edge stored with u < v.
struct Edge {
    NodeId u;
    NodeId v;

    static Edge make(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph over node ids [0, n) with sorted adjacency lists.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(std::size_t node_count) : adjacency_(node_count) {}

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const;

    // Idempotent; self loops are rejected.
    void add_edge(NodeId a, NodeId b);
    bool has_edge(NodeId a, NodeId b) const;

    std::span<const NodeId> neighbors(NodeId node) const { return adjacency_[node]; }
    std::size_t degree(NodeId node) const { return adjacency_[node].size(); }

    // All edges, sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

private:
    std::vector<std::vector<NodeId>> adjacency_;
};

// True when every node flagged in `members` can reach every other flagged
// node. Unflagged nodes are ignored (their edges are not traversed).
bool is_connected(const UndirectedGraph& graph, const std::vector<bool>& members);
bool is_connected(const UndirectedGraph& graph);

// Checks adjacency-list symmetry directly (a in N(b) <=> b in N(a)).
bool is_symmetric(const UndirectedGraph& graph);

}  // namespace ebtc
