#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ebtc/topology.hpp"
#include "ebtc/world.hpp"

namespace ebtc {

// Energy for one data packet across one hop, including its acknowledgement.
struct HopCost {
    double sender_debit = 0.0;    // E_S(i,j,m) + E_R(m')
    double receiver_debit = 0.0;  // E_R(m) + E_S(j,i,m')
    double total = 0.0;
};

HopCost hop_cost(const World& world, NodeId from, NodeId to);

struct RouteResult {
    std::vector<NodeId> path;
    double total_energy = 0.0;
    bool found = false;
};

// Single-source minimum-energy routes over a snapshot. Equal-cost routes are
// resolved toward the lexicographically smallest node-id sequence.
class RouteTree {
public:
    RouteTree(const World& world, const UndirectedGraph& adjacency, NodeId source);

    NodeId source() const { return source_; }
    bool reaches(NodeId dest) const { return reached_[dest]; }
    double energy_to(NodeId dest) const { return energy_[dest]; }
    std::vector<NodeId> path_to(NodeId dest) const;

private:
    NodeId source_;
    std::vector<double> energy_;
    std::vector<NodeId> parent_;
    std::vector<bool> reached_;
};

// Throws std::invalid_argument when source == dest.
RouteResult min_energy_path(const TopologySnapshot& snapshot, NodeId source, NodeId dest, const World& world);

// Route trees for every alive source, built once per round.
class RoutePlan {
public:
    RoutePlan(const World& world, const TopologySnapshot& snapshot);

    const RouteTree& tree(NodeId source) const { return *trees_.at(source); }

    // Mean route energy over reachable ordered alive pairs (0 if none).
    double average_path_cost() const { return average_path_cost_; }
    std::size_t unreachable_pairs() const { return unreachable_pairs_; }

private:
    std::vector<std::optional<RouteTree>> trees_;
    double average_path_cost_ = 0.0;
    std::size_t unreachable_pairs_ = 0;
};

struct TrafficReport {
    std::optional<NodeId> first_dead;
    std::vector<NodeId> died;               // in order of death
    std::vector<double> energy_spent;       // per node, before clamping at zero
    std::vector<double> deficit;            // per node, how far below zero it was driven
    double route_energy_sum = 0.0;          // sum of RouteResult totals over routed packets
    std::size_t packets_routed = 0;
    std::size_t packets_dropped = 0;        // route crossed a node that died earlier this round
    std::size_t unreachable_pairs = 0;

    double total_spent() const;
};

// One packet per ordered alive pair (s, t), ascending, along the planned
// routes. Each hop debits its sender and receiver; a node that reaches zero
// is marked dead and clamped, and later packets touching it are dropped.
TrafficReport apply_round_traffic(World& world, const RoutePlan& plan);
TrafficReport apply_round_traffic(World& world, const TopologySnapshot& snapshot);

}  // namespace ebtc
