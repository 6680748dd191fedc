#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "ebtc/graph.hpp"
#include "ebtc/world.hpp"

namespace ebtc {

// Weighted undirected edge, u < v.
struct WeightedEdge {
    NodeId u = 0;
    NodeId v = 0;
    double weight = 0.0;

    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

WeightedEdge make_weighted_edge(NodeId a, NodeId b, double weight);

// Global total order used for every weight comparison: (weight, max id, min id).
// Independent local decisions only agree when all nodes rank edges the same way.
bool lighter(const WeightedEdge& a, const WeightedEdge& b);

enum class WeightScheme {
    EnergyBalanced,  // max(C_ij, C_ji) from linkcost
    TransmitPower,   // P_ij
    EnergyWeightedPower,  // P_ij * (S0/S_i + S0/S_j)
};

double link_weight(const World& world, WeightScheme scheme, NodeId i, NodeId j);

struct NeighborReport {
    NodeId sender = 0;
    double residual_energy = 0.0;
    std::vector<NodeId> neighbor_list;        // R_i, ascending
    std::map<NodeId, double> weight_list;     // U_i, keyed by neighbor

    friend bool operator==(const NeighborReport&, const NeighborReport&) = default;
};

struct MessageCount {
    std::uint32_t broadcasts = 0;
    std::uint64_t payload_entries = 0;

    friend bool operator==(const MessageCount&, const MessageCount&) = default;
};

using MessageLedger = std::vector<MessageCount>;

// Two broadcasts per alive node: (id, S_i) then (R_i, U_i).
std::map<NodeId, NeighborReport> collect_data(const World& world, const UndirectedGraph& graph,
                                              WeightScheme scheme, MessageLedger& ledger);

// Convenience overload with EBTC weights and a throwaway ledger.
std::map<NodeId, NeighborReport> collect_data(const World& world, const UndirectedGraph& graph);

struct WeightedLocalGraph {
    NodeId owner = 0;
    std::vector<NodeId> vertices;     // ascending, includes owner
    std::vector<WeightedEdge> edges;  // ascending by (u, v)

    friend bool operator==(const WeightedLocalGraph&, const WeightedLocalGraph&) = default;
};

// Assembles the owner's two-hop view from its own and its neighbors' reports.
// Throws std::logic_error if an edge is reported twice with different weights
// or a neighbor's report is missing.
WeightedLocalGraph construct_local_graph(NodeId owner, const std::map<NodeId, NeighborReport>& reports);

struct DlssResult {
    std::vector<NodeId> retained;            // Y candidate, ascending
    std::vector<WeightedEdge> owner_edges;   // E_i'
};

// Local minimum spanning forest over the view; keeps the owner's incident
// edges that survive.
DlssResult dlss_reduce(const WeightedLocalGraph& local);

// Edge (i, j) survives iff j in retained[i] and i in retained[j].
UndirectedGraph symmetric_prune(const std::vector<std::vector<NodeId>>& retained);

// P_i = max over adjacency neighbors of P_ij (0 for isolated nodes).
std::vector<double> assign_powers(const World& world, const UndirectedGraph& adjacency);

struct TopologySnapshot {
    std::size_t round = 0;
    UndirectedGraph adjacency;
    std::vector<double> node_powers;
    MessageLedger messages;

    friend bool operator==(const TopologySnapshot&, const TopologySnapshot&) = default;
};

// The per-round local-MST protocol: collect data, build local views, reduce,
// exchange retained sets, drop non-mutual edges, assign powers.
TopologySnapshot local_mst_round(const World& world, const UndirectedGraph& graph, WeightScheme scheme,
                                 std::size_t round = 0);

// EBTC: local_mst_round with energy-balanced weights.
TopologySnapshot ebtc_round(const World& world, const UndirectedGraph& graph, std::size_t round = 0);

// WDTC baseline: local_mst_round with energy-weighted power.
TopologySnapshot wdtc_round(const World& world, const UndirectedGraph& graph, std::size_t round = 0);

// DLSS baseline: local_mst_round with plain transmit-power weights.
TopologySnapshot dlss_topology(const World& world, const UndirectedGraph& graph, std::size_t round = 0);

// DRNG baseline: (i, j) dropped when a neighbor k of i has both (i, k) and
// (k, j) strictly lighter in transmit power than (i, j).
TopologySnapshot drng_topology(const World& world, const UndirectedGraph& graph, std::size_t round = 0);

}  // namespace ebtc
