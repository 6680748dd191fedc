#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ebtc/graph.hpp"
#include "ebtc/radio.hpp"

namespace ebtc {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct WorldConfig {
    double region_width = 1000.0;       // m
    std::uint32_t node_count = 200;
    double initial_energy = 10.0;       // J
    double max_radius_fraction = 0.2;   // of region_width
    std::uint64_t seed = 1;
    radio::RadioParams radio{};
    std::uint32_t packet_bytes = 32;
    std::uint32_t ack_bytes = 11;

    std::uint64_t packet_bits() const { return std::uint64_t{packet_bytes} * 8; }
    std::uint64_t ack_bits() const { return std::uint64_t{ack_bytes} * 8; }
    double max_radius() const { return max_radius_fraction * region_width; }

    // Throws ConfigError naming the offending field.
    void validate() const;

    friend bool operator==(const WorldConfig&, const WorldConfig&) = default;
};

struct NodeState {
    NodeId id = 0;
    Point position{};
    double residual_energy = 0.0;  // J
    double assigned_power = 0.0;   // J/bit, see radio::tx_energy_per_bit
    bool alive = true;

    friend bool operator==(const NodeState&, const NodeState&) = default;
};

// A deployment plus its geometry. Positions and distances are fixed after
// construction; only per-node energy and power change during a simulation.
class World {
public:
    // Builds a world from explicit positions (used by generate_world and by
    // tests that need hand-placed nodes). Positions must lie in the region.
    World(WorldConfig config, std::span<const Point> positions);

    const WorldConfig& config() const { return config_; }
    const radio::RadioParams& radio() const { return config_.radio; }
    std::size_t size() const { return nodes_.size(); }

    std::span<const NodeState> nodes() const { return nodes_; }
    const NodeState& node(NodeId id) const { return nodes_.at(id); }
    NodeState& node(NodeId id) { return nodes_.at(id); }

    double distance(NodeId i, NodeId j) const { return distances_[i * nodes_.size() + j]; }
    double r_max() const { return r_max_; }
    double p_max() const { return p_max_; }

    std::vector<bool> alive_mask() const;
    std::size_t alive_count() const;

    // FNV-1a over the raw position bits; identifies a deployment.
    std::uint64_t checksum() const;

private:
    WorldConfig config_;
    std::vector<NodeState> nodes_;
    std::vector<double> distances_;
    double r_max_ = 0.0;
    double p_max_ = 0.0;
};

// Uniform i.i.d. placement over the square, seeded by config.seed.
World generate_world(const WorldConfig& config);

// P_{i,j}: per-bit transmit energy needed to reach j from i. Rejects i == j.
double min_link_power(const World& world, NodeId i, NodeId j);

// G: edges (i, j) with d_{i,j} <= r_max among alive nodes.
UndirectedGraph max_power_graph(const World& world);

}  // namespace ebtc
