#include "ebtc/topology.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

#include "ebtc/linkcost.hpp"
#include "ebtc/union_find.hpp"

namespace ebtc {

WeightedEdge make_weighted_edge(NodeId a, NodeId b, double weight) {
    return a < b ? WeightedEdge{a, b, weight} : WeightedEdge{b, a, weight};
}

bool lighter(const WeightedEdge& a, const WeightedEdge& b) {
    return std::tie(a.weight, a.v, a.u) < std::tie(b.weight, b.v, b.u);
}

double link_weight(const World& world, WeightScheme scheme, NodeId i, NodeId j) {
    switch (scheme) {
    case WeightScheme::EnergyBalanced:
        return edge_weight(link_cost_inputs(world, i, j)).w;
    case WeightScheme::TransmitPower:
        return min_link_power(world, i, j);
    case WeightScheme::EnergyWeightedPower: {
        const double s0 = world.config().initial_energy;
        const double si = world.node(i).residual_energy;
        const double sj = world.node(j).residual_energy;
        if (!(si > 0.0) || !(sj > 0.0)) {
            throw std::invalid_argument("link weight requested for an endpoint with no residual energy");
        }
        return min_link_power(world, i, j) * (s0 / si + s0 / sj);
    }
    }
    throw std::invalid_argument("unknown weight scheme");
}

std::map<NodeId, NeighborReport> collect_data(const World& world, const UndirectedGraph& graph,
                                              WeightScheme scheme, MessageLedger& ledger) {
    ledger.resize(world.size());
    std::map<NodeId, NeighborReport> reports;
    for (const auto& node : world.nodes()) {
        if (!node.alive) {
            continue;
        }
        NeighborReport report;
        report.sender = node.id;
        report.residual_energy = node.residual_energy;
        for (NodeId j : graph.neighbors(node.id)) {
            if (!world.node(j).alive) {
                continue;
            }
            report.neighbor_list.push_back(j);
            report.weight_list.emplace(j, link_weight(world, scheme, node.id, j));
        }
        // (id, S_i), then (R_i, U_i).
        ledger[node.id].broadcasts += 2;
        ledger[node.id].payload_entries += 1 + 2 * report.neighbor_list.size();
        reports.emplace(node.id, std::move(report));
    }
    return reports;
}

std::map<NodeId, NeighborReport> collect_data(const World& world, const UndirectedGraph& graph) {
    MessageLedger ledger;
    return collect_data(world, graph, WeightScheme::EnergyBalanced, ledger);
}

namespace {

const NeighborReport& report_of(const std::map<NodeId, NeighborReport>& reports, NodeId id) {
    auto it = reports.find(id);
    if (it == reports.end()) {
        throw std::logic_error("missing neighbor report from node " + std::to_string(id));
    }
    return it->second;
}

}  // namespace

WeightedLocalGraph construct_local_graph(NodeId owner, const std::map<NodeId, NeighborReport>& reports) {
    const NeighborReport& own = report_of(reports, owner);
    std::map<Edge, double> edges;
    std::vector<NodeId> vertices{owner};

    auto add = [&edges](NodeId a, NodeId b, double w) {
        auto [it, inserted] = edges.emplace(Edge::make(a, b), w);
        if (!inserted) {
            const double scale = std::max(std::abs(it->second), std::abs(w));
            if (std::abs(it->second - w) > 1e-9 * scale) {
                throw std::logic_error("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                       ") reported with inconsistent weights");
            }
        }
    };

    for (NodeId j : own.neighbor_list) {
        vertices.push_back(j);
        add(owner, j, own.weight_list.at(j));
        const NeighborReport& theirs = report_of(reports, j);
        for (NodeId k : theirs.neighbor_list) {
            add(j, k, theirs.weight_list.at(k));
            vertices.push_back(k);
        }
    }

    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

    WeightedLocalGraph local;
    local.owner = owner;
    local.vertices = std::move(vertices);
    local.edges.reserve(edges.size());
    for (const auto& [edge, w] : edges) {
        local.edges.push_back({edge.u, edge.v, w});
    }
    return local;
}

DlssResult dlss_reduce(const WeightedLocalGraph& local) {
    const auto& vertices = local.vertices;
    auto index_of = [&vertices](NodeId id) {
        return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), id) - vertices.begin());
    };

    std::vector<WeightedEdge> order = local.edges;
    std::sort(order.begin(), order.end(), lighter);

    const std::size_t owner_index = index_of(local.owner);
    std::vector<std::size_t> neighbor_indices;
    for (const auto& e : local.edges) {
        if (e.u == local.owner || e.v == local.owner) {
            neighbor_indices.push_back(index_of(e.u == local.owner ? e.v : e.u));
        }
    }

    UnionFind forest(vertices.size());
    auto owner_spans_neighbors = [&] {
        return std::all_of(neighbor_indices.begin(), neighbor_indices.end(),
                           [&](std::size_t n) { return forest.connected(owner_index, n); });
    };

    DlssResult result;
    for (const auto& e : order) {
        if (!forest.unite(index_of(e.u), index_of(e.v))) {
            continue;
        }
        if (e.u == local.owner || e.v == local.owner) {
            result.owner_edges.push_back(e);
        }
        if (owner_spans_neighbors()) {
            break;
        }
    }

    for (const auto& e : result.owner_edges) {
        result.retained.push_back(e.u == local.owner ? e.v : e.u);
    }
    std::sort(result.retained.begin(), result.retained.end());
    return result;
}

UndirectedGraph symmetric_prune(const std::vector<std::vector<NodeId>>& retained) {
    UndirectedGraph out(retained.size());
    for (NodeId i = 0; i < retained.size(); ++i) {
        for (NodeId j : retained[i]) {
            if (j < retained.size() && std::find(retained[j].begin(), retained[j].end(), i) != retained[j].end()) {
                out.add_edge(i, j);
            }
        }
    }
    return out;
}

std::vector<double> assign_powers(const World& world, const UndirectedGraph& adjacency) {
    std::vector<double> powers(world.size(), 0.0);
    for (NodeId i = 0; i < adjacency.node_count(); ++i) {
        for (NodeId j : adjacency.neighbors(i)) {
            powers[i] = std::max(powers[i], min_link_power(world, i, j));
        }
    }
    return powers;
}

namespace {

TopologySnapshot finish(const World& world, const std::vector<std::vector<NodeId>>& retained, MessageLedger ledger,
                        std::size_t round) {
    // Retained-set exchange: one broadcast carrying Y_i.
    for (const auto& node : world.nodes()) {
        if (node.alive) {
            ledger[node.id].broadcasts += 1;
            ledger[node.id].payload_entries += retained[node.id].size();
        }
    }
    TopologySnapshot snapshot;
    snapshot.round = round;
    snapshot.adjacency = symmetric_prune(retained);
    snapshot.node_powers = assign_powers(world, snapshot.adjacency);
    snapshot.messages = std::move(ledger);
    return snapshot;
}

}  // namespace

TopologySnapshot local_mst_round(const World& world, const UndirectedGraph& graph, WeightScheme scheme,
                                 std::size_t round) {
    MessageLedger ledger(world.size());
    const auto reports = collect_data(world, graph, scheme, ledger);
    std::vector<std::vector<NodeId>> retained(world.size());
    for (const auto& [id, report] : reports) {
        retained[id] = dlss_reduce(construct_local_graph(id, reports)).retained;
    }
    return finish(world, retained, std::move(ledger), round);
}

TopologySnapshot ebtc_round(const World& world, const UndirectedGraph& graph, std::size_t round) {
    return local_mst_round(world, graph, WeightScheme::EnergyBalanced, round);
}

TopologySnapshot wdtc_round(const World& world, const UndirectedGraph& graph, std::size_t round) {
    return local_mst_round(world, graph, WeightScheme::EnergyWeightedPower, round);
}

TopologySnapshot dlss_topology(const World& world, const UndirectedGraph& graph, std::size_t round) {
    return local_mst_round(world, graph, WeightScheme::TransmitPower, round);
}

TopologySnapshot drng_topology(const World& world, const UndirectedGraph& graph, std::size_t round) {
    MessageLedger ledger(world.size());
    const auto reports = collect_data(world, graph, WeightScheme::TransmitPower, ledger);
    std::vector<std::vector<NodeId>> retained(world.size());
    for (const auto& [i, report] : reports) {
        for (NodeId j : report.neighbor_list) {
            const WeightedEdge ij = make_weighted_edge(i, j, report.weight_list.at(j));
            bool witnessed = false;
            for (NodeId k : report.neighbor_list) {
                if (k == j) {
                    continue;
                }
                const WeightedEdge ik = make_weighted_edge(i, k, report.weight_list.at(k));
                if (!lighter(ik, ij)) {
                    continue;
                }
                const auto& via = reports.at(k).weight_list;
                auto kj = via.find(j);
                if (kj != via.end() && lighter(make_weighted_edge(k, j, kj->second), ij)) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) {
                retained[i].push_back(j);
            }
        }
    }
    return finish(world, retained, std::move(ledger), round);
}

}  // namespace ebtc
