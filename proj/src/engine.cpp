#include "ebtc/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include <boost/math/distributions/students_t.hpp>

#include "ebtc/radio.hpp"

namespace ebtc {

std::string_view algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::EBTC:
        return "EBTC";
    case Algorithm::WDTC:
        return "WDTC";
    case Algorithm::DLSS:
        return "DLSS";
    case Algorithm::DRNG:
        return "DRNG";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    std::string upper(name);
    for (auto& c : upper) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    if (upper.ends_with("-STATIC")) {
        upper.resize(upper.size() - 7);
    }
    for (Algorithm a : {Algorithm::EBTC, Algorithm::WDTC, Algorithm::DLSS, Algorithm::DRNG}) {
        if (upper == algorithm_name(a)) {
            return a;
        }
    }
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

bool is_dynamic(Algorithm algorithm) {
    return algorithm == Algorithm::EBTC || algorithm == Algorithm::WDTC;
}

TopologySnapshot compute_topology(Algorithm algorithm, const World& world, const UndirectedGraph& graph,
                                  std::size_t round) {
    switch (algorithm) {
    case Algorithm::EBTC:
        return ebtc_round(world, graph, round);
    case Algorithm::WDTC:
        return wdtc_round(world, graph, round);
    case Algorithm::DLSS:
        return dlss_topology(world, graph, round);
    case Algorithm::DRNG:
        return drng_topology(world, graph, round);
    }
    throw std::invalid_argument("unknown algorithm");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::size_t kMaxRedraws = 1000;

// Control frames: an ACK-sized header plus 4 bytes per payload entry.
double control_broadcast_energy(const World& world, std::uint64_t payload_entries) {
    const std::uint64_t bits = world.config().ack_bits() + 32 * payload_entries;
    return radio::energy_send(world.radio(), bits, world.r_max());
}

}  // namespace

SeededWorld generate_connected_world(WorldConfig config, std::uint64_t seed) {
    for (std::size_t attempt = 0; attempt <= kMaxRedraws; ++attempt) {
        config.seed = attempt == 0 ? seed : splitmix64(seed ^ splitmix64(attempt));
        World world = generate_world(config);
        if (is_connected(max_power_graph(world))) {
            return SeededWorld{std::move(world), attempt};
        }
    }
    throw std::runtime_error("seed " + std::to_string(seed) + ": no connected deployment after " +
                             std::to_string(kMaxRedraws) + " redraws");
}

RunRecord run_simulation(const WorldConfig& config, Algorithm algorithm, std::uint64_t seed,
                         const SimulationOptions& options) {
    auto [world, discarded] = generate_connected_world(config, seed);
    const UndirectedGraph graph = max_power_graph(world);

    RunRecord record;
    record.seed = seed;
    record.algorithm = algorithm;
    record.discarded_disconnected_seeds = discarded;
    record.world_checksum = world.checksum();

    std::optional<TopologySnapshot> fixed;
    for (std::size_t round = 1;; ++round) {
        const bool rebuild = is_dynamic(algorithm) || !fixed;
        if (rebuild) {
            fixed = compute_topology(algorithm, world, graph, round);
        }
        const TopologySnapshot& snapshot = *fixed;

        double power_sum = 0.0;
        const std::size_t alive = world.alive_count();
        for (NodeId id = 0; id < world.size(); ++id) {
            NodeState& node = world.node(id);
            node.assigned_power = snapshot.node_powers[id];
            if (node.alive) {
                power_sum += node.assigned_power;
            }
        }

        bool control_death = false;
        if (options.debit_control_energy && rebuild) {
            for (const auto& node : world.nodes()) {
                const MessageCount& sent = snapshot.messages[node.id];
                if (sent.broadcasts == 0) {
                    continue;
                }
                // Every broadcast carries at least the header.
                double spent = 0.0;
                spent += control_broadcast_energy(world, sent.payload_entries);
                spent += static_cast<double>(sent.broadcasts - 1) * control_broadcast_energy(world, 0);
                NodeState& state = world.node(node.id);
                state.residual_energy -= spent;
                record.control_energy += spent;
                if (state.residual_energy <= 0.0) {
                    state.residual_energy = 0.0;
                    state.alive = false;
                    control_death = true;
                }
            }
        }

        const RoutePlan routes(world, snapshot);
        record.avg_tx_power.push_back(power_sum / static_cast<double>(alive));
        record.avg_path_cost.push_back(routes.average_path_cost());
        record.unreachable_pairs += routes.unreachable_pairs();

        const TrafficReport traffic = apply_round_traffic(world, routes);
        record.alive_count.push_back(world.alive_count());

        if (options.observer) {
            options.observer(RoundEvent{seed, algorithm, round, world, graph, snapshot, routes, traffic});
        }
        if (control_death || traffic.first_dead) {
            record.lifetime_rounds = round;
            break;
        }
    }
    return record;
}

ConfidenceInterval batch_means_ci(std::span<const double> samples, std::size_t batch_count) {
    if (batch_count < 2) {
        throw std::invalid_argument("batch_means_ci: need at least 2 batches");
    }
    if (samples.size() % batch_count != 0 || samples.size() / batch_count < 2) {
        throw std::invalid_argument("batch_means_ci: " + std::to_string(samples.size()) +
                                    " samples do not split into " + std::to_string(batch_count) +
                                    " equal batches of >= 2");
    }
    const std::size_t per_batch = samples.size() / batch_count;
    std::vector<double> means(batch_count);
    for (std::size_t b = 0; b < batch_count; ++b) {
        auto batch = samples.subspan(b * per_batch, per_batch);
        means[b] = std::accumulate(batch.begin(), batch.end(), 0.0) / static_cast<double>(per_batch);
    }
    const double k = static_cast<double>(batch_count);
    const double mean = std::accumulate(means.begin(), means.end(), 0.0) / k;
    double ss = 0.0;
    for (double m : means) {
        ss += (m - mean) * (m - mean);
    }
    const double sd = std::sqrt(ss / (k - 1.0));
    const boost::math::students_t dist(k - 1.0);
    const double t = boost::math::quantile(dist, 0.975);
    return ConfidenceInterval{mean, t * sd / std::sqrt(k)};
}

std::vector<double> survival_curve(std::span<const RunRecord> runs) {
    if (runs.empty()) {
        return {};
    }
    std::size_t longest = 0;
    for (const auto& r : runs) {
        longest = std::max(longest, r.lifetime_rounds);
    }
    std::vector<double> curve(longest + 1);
    for (std::size_t round = 0; round <= longest; ++round) {
        const auto alive = std::count_if(runs.begin(), runs.end(),
                                         [round](const RunRecord& r) { return r.lifetime_rounds > round; });
        curve[round] = static_cast<double>(alive) / static_cast<double>(runs.size());
    }
    return curve;
}

double median_lifetime(std::span<const RunRecord> runs) {
    if (runs.empty()) {
        return 0.0;
    }
    std::vector<double> values;
    for (const auto& r : runs) {
        values.push_back(static_cast<double>(r.lifetime_rounds));
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

BatchResult run_batch(const WorldConfig& config, Algorithm algorithm, std::span<const std::uint64_t> seeds,
                      const SimulationOptions& options, std::size_t batch_count, std::size_t threads) {
    if (seeds.empty()) {
        throw std::invalid_argument("run_batch: empty seed list");
    }
    std::vector<std::uint64_t> order(seeds.begin(), seeds.end());
    std::sort(order.begin(), order.end());

    std::vector<std::optional<RunRecord>> slots(order.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::uint64_t error_seed = 0;

    auto worker = [&] {
        for (std::size_t i = next++; i < order.size(); i = next++) {
            try {
                slots[i] = run_simulation(config, algorithm, order[i], options);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error || order[i] < error_seed) {
                    error = std::current_exception();
                    error_seed = order[i];
                }
            }
        }
    };

    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, order.size());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }

    if (error) {
        try {
            std::rethrow_exception(error);
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string(algorithm_name(algorithm)) + " seed " + std::to_string(error_seed) +
                                     ": " + e.what());
        }
    }

    BatchResult result;
    result.algorithm = algorithm;
    for (auto& slot : slots) {
        result.runs.push_back(std::move(*slot));
    }
    result.survival_curve = survival_curve(result.runs);
    result.median_lifetime = median_lifetime(result.runs);
    if (batch_count > 0) {
        std::vector<double> lifetimes;
        for (const auto& r : result.runs) {
            lifetimes.push_back(static_cast<double>(r.lifetime_rounds));
        }
        result.lifetime_ci = batch_means_ci(lifetimes, batch_count);
    }
    return result;
}

}  // namespace ebtc
