#include "ebtc/world.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "ebtc/errors.hpp"

namespace ebtc {

void WorldConfig::validate() const {
    if (!(region_width > 0.0) || !std::isfinite(region_width)) {
        throw ConfigError("region_width", "must be > 0");
    }
    if (node_count < 2) {
        throw ConfigError("node_count", "must be >= 2");
    }
    if (!(initial_energy > 0.0) || !std::isfinite(initial_energy)) {
        throw ConfigError("initial_energy", "must be > 0");
    }
    if (!(max_radius_fraction > 0.0 && max_radius_fraction <= 1.0)) {
        throw ConfigError("max_radius_fraction", "must lie in (0, 1]");
    }
    if (packet_bytes == 0) {
        throw ConfigError("packet_bytes", "must be > 0");
    }
    if (ack_bytes == 0) {
        throw ConfigError("ack_bytes", "must be > 0");
    }
    try {
        radio.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("radio", e.what());
    }
}

World::World(WorldConfig config, std::span<const Point> positions) : config_(std::move(config)) {
    config_.validate();
    if (positions.size() != config_.node_count) {
        throw ConfigError("node_count", "does not match the number of positions");
    }
    const double w = config_.region_width;
    const std::size_t n = positions.size();
    nodes_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = positions[i];
        if (!(p.x >= 0.0 && p.x <= w && p.y >= 0.0 && p.y <= w)) {
            throw std::invalid_argument("node position outside the region");
        }
        nodes_.push_back(NodeState{static_cast<NodeId>(i), p, config_.initial_energy, 0.0, true});
    }

    distances_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = std::hypot(positions[i].x - positions[j].x, positions[i].y - positions[j].y);
            distances_[i * n + j] = d;
            distances_[j * n + i] = d;
        }
    }
    r_max_ = config_.max_radius();
    p_max_ = radio::tx_energy_per_bit(config_.radio, r_max_);
}

std::vector<bool> World::alive_mask() const {
    std::vector<bool> mask(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        mask[i] = nodes_[i].alive;
    }
    return mask;
}

std::size_t World::alive_count() const {
    std::size_t count = 0;
    for (const auto& node : nodes_) {
        count += node.alive ? 1 : 0;
    }
    return count;
}

std::uint64_t World::checksum() const {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    auto mix = [&hash](double value) {
        auto bits = std::bit_cast<std::uint64_t>(value);
        for (int b = 0; b < 8; ++b) {
            hash ^= (bits >> (8 * b)) & 0xffU;
            hash *= 0x100000001b3ULL;
        }
    };
    for (const auto& node : nodes_) {
        mix(node.position.x);
        mix(node.position.y);
    }
    return hash;
}

World generate_world(const WorldConfig& config) {
    config.validate();
    std::mt19937_64 rng(config.seed);
    // 53 high bits -> [0, 1); explicit so placement does not depend on the
    // standard library's distribution implementation.
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<Point> positions(config.node_count);
    for (auto& p : positions) {
        p.x = unit() * config.region_width;
        p.y = unit() * config.region_width;
    }
    return World(config, positions);
}

double min_link_power(const World& world, NodeId i, NodeId j) {
    if (i == j) {
        throw std::invalid_argument("min_link_power: i and j must differ");
    }
    return radio::tx_energy_per_bit(world.radio(), world.distance(i, j));
}

UndirectedGraph max_power_graph(const World& world) {
    const auto n = static_cast<NodeId>(world.size());
    UndirectedGraph graph(n);
    for (NodeId i = 0; i < n; ++i) {
        if (!world.node(i).alive) {
            continue;
        }
        for (NodeId j = i + 1; j < n; ++j) {
            if (world.node(j).alive && world.distance(i, j) <= world.r_max()) {
                graph.add_edge(i, j);
            }
        }
    }
    return graph;
}

}  // namespace ebtc
