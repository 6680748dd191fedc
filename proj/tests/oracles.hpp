#pragma once

// Test-only reference implementations. These deliberately avoid the library's
// algorithmic paths (no UnionFind, no RouteTree, no dlss_reduce) so they can
// serve as independent checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "ebtc/topology.hpp"
#include "ebtc/world.hpp"

namespace oracle {

using ebtc::NodeId;

// Default first-order radio constants, written out by hand.
inline double tx_per_bit(double d) {
    const double e_elec = 50e-9;
    const double eps_fs = 10e-12;
    const double eps_mp = 0.0013e-12;
    const double d0 = std::sqrt(eps_fs / eps_mp);
    return d < d0 ? e_elec + eps_fs * d * d : e_elec + eps_mp * d * d * d * d;
}

// Data + ACK energy over one hop, both endpoints, default constants.
inline double hop_total(double d, double data_bits, double ack_bits) {
    const double e_elec = 50e-9;
    return data_bits * tx_per_bit(d) + ack_bits * e_elec + data_bits * e_elec + ack_bits * tx_per_bit(d);
}

inline ebtc::World random_world(std::mt19937_64& rng, std::uint32_t n, double width, double fraction,
                                std::uint32_t packet_bytes = 32, std::uint32_t ack_bytes = 11) {
    ebtc::WorldConfig cfg;
    cfg.node_count = n;
    cfg.region_width = width;
    cfg.max_radius_fraction = fraction;
    cfg.packet_bytes = packet_bytes;
    cfg.ack_bytes = ack_bytes;
    std::uniform_real_distribution<double> u(0.0, width);
    std::vector<ebtc::Point> pts(n);
    for (auto& p : pts) {
        p = {u(rng), u(rng)};
    }
    return ebtc::World(cfg, pts);
}

inline void randomize_energy(ebtc::World& world, std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    for (NodeId i = 0; i < world.size(); ++i) {
        world.node(i).residual_energy = u(rng);
    }
}

inline std::tuple<double, NodeId, NodeId> key(NodeId a, NodeId b, double w) {
    return {w, std::max(a, b), std::min(a, b)};
}

// V and E of the owner's view computed from global knowledge: every node
// within two hops, and every edge touching the owner or one of its neighbors.
struct Closure {
    std::set<NodeId> vertices;
    std::set<std::pair<NodeId, NodeId>> edges;
};

inline Closure two_hop_closure(const ebtc::UndirectedGraph& g, NodeId owner) {
    Closure c;
    std::set<NodeId> inner{owner};
    for (NodeId j : g.neighbors(owner)) {
        inner.insert(j);
    }
    for (NodeId a : inner) {
        c.vertices.insert(a);
        for (NodeId b : g.neighbors(a)) {
            c.vertices.insert(b);
            c.edges.insert({std::min(a, b), std::max(a, b)});
        }
    }
    return c;
}

// Full Kruskal over the local view using a map-based forest; returns the
// owner's incident MSF edges as (min, max) pairs.
inline std::set<std::pair<NodeId, NodeId>> kruskal_owner_edges(const ebtc::WeightedLocalGraph& local) {
    auto edges = local.edges;
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        return key(a.u, a.v, a.weight) < key(b.u, b.v, b.weight);
    });
    std::map<NodeId, NodeId> parent;
    for (NodeId v : local.vertices) {
        parent[v] = v;
    }
    std::function<NodeId(NodeId)> root = [&](NodeId x) { return parent[x] == x ? x : root(parent[x]); };
    std::set<std::pair<NodeId, NodeId>> out;
    for (const auto& e : edges) {
        NodeId a = root(e.u), b = root(e.v);
        if (a == b) {
            continue;
        }
        parent[a] = b;
        if (e.u == local.owner || e.v == local.owner) {
            out.insert({e.u, e.v});
        }
    }
    return out;
}

// Cycle property: an owner edge belongs to the MSF iff its endpoints are not
// joined by a path of strictly lighter edges.
inline std::set<std::pair<NodeId, NodeId>> cycle_property_owner_edges(const ebtc::WeightedLocalGraph& local) {
    std::set<std::pair<NodeId, NodeId>> out;
    for (const auto& e : local.edges) {
        if (e.u != local.owner && e.v != local.owner) {
            continue;
        }
        const auto limit = key(e.u, e.v, e.weight);
        std::set<NodeId> seen{e.u};
        std::vector<NodeId> stack{e.u};
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (const auto& f : local.edges) {
                if (key(f.u, f.v, f.weight) >= limit) {
                    continue;
                }
                NodeId other;
                if (f.u == x) {
                    other = f.v;
                } else if (f.v == x) {
                    other = f.u;
                } else {
                    continue;
                }
                if (seen.insert(other).second) {
                    stack.push_back(other);
                }
            }
        }
        if (!seen.contains(e.v)) {
            out.insert({e.u, e.v});
        }
    }
    return out;
}

// Brute-force RNG over transmit power with the global tie-break: (i, j)
// removed if any node k has both (i, k) and (k, j) strictly lighter.
inline std::set<std::pair<NodeId, NodeId>> rng_edges(const ebtc::World& world) {
    const auto n = static_cast<NodeId>(world.size());
    auto w = [&](NodeId a, NodeId b) { return key(a, b, tx_per_bit(world.distance(a, b))); };
    std::set<std::pair<NodeId, NodeId>> out;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (world.distance(i, j) > world.r_max()) {
                continue;
            }
            bool witnessed = false;
            for (NodeId k = 0; k < n && !witnessed; ++k) {
                if (k != i && k != j && w(i, k) < w(i, j) && w(k, j) < w(i, j)) {
                    witnessed = true;
                }
            }
            if (!witnessed) {
                out.insert({i, j});
            }
        }
    }
    return out;
}

// Minimum route energy by enumerating all simple paths (small graphs only).
inline double exhaustive_min_route(const ebtc::World& world, const ebtc::UndirectedGraph& g, NodeId s, NodeId t) {
    const double m = static_cast<double>(world.config().packet_bits());
    const double mp = static_cast<double>(world.config().ack_bits());
    double best = std::numeric_limits<double>::infinity();
    std::vector<bool> on_path(world.size(), false);
    std::function<void(NodeId, double)> walk = [&](NodeId at, double cost) {
        if (at == t) {
            best = std::min(best, cost);
            return;
        }
        on_path[at] = true;
        for (NodeId next : g.neighbors(at)) {
            if (!on_path[next]) {
                walk(next, cost + hop_total(world.distance(at, next), m, mp));
            }
        }
        on_path[at] = false;
    };
    walk(s, 0.0);
    return best;
}

inline std::set<std::pair<NodeId, NodeId>> edge_set(const ebtc::UndirectedGraph& g) {
    std::set<std::pair<NodeId, NodeId>> out;
    for (const auto& e : g.edges()) {
        out.insert({e.u, e.v});
    }
    return out;
}

}  // namespace oracle
