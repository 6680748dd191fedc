#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ebtc/routing.hpp"
#include "ebtc/topology.hpp"
#include "ebtc/world.hpp"

namespace ebtc {

enum class Algorithm { EBTC, WDTC, DLSS, DRNG };

std::string_view algorithm_name(Algorithm algorithm);
// Case-insensitive; accepts "DLSS-static"/"DRNG-static" as aliases.
Algorithm parse_algorithm(std::string_view name);
// Dynamic algorithms rebuild the topology every round; static ones once.
bool is_dynamic(Algorithm algorithm);

TopologySnapshot compute_topology(Algorithm algorithm, const World& world, const UndirectedGraph& graph,
                                  std::size_t round);

// Draws worlds for `seed` until the max-power graph is connected. Attempt 0
// uses the seed itself; later attempts use derived seeds. Gives up after
// 1000 redraws.
struct SeededWorld {
    World world;
    std::size_t discarded = 0;
};
SeededWorld generate_connected_world(WorldConfig config, std::uint64_t seed);

struct RoundEvent {
    std::uint64_t seed;
    Algorithm algorithm;
    std::size_t round;                     // 1-based
    const World& world;                    // after traffic
    const UndirectedGraph& max_power;      // G at the start of the run
    const TopologySnapshot& snapshot;
    const RoutePlan& routes;
    const TrafficReport& traffic;
};

struct SimulationOptions {
    // Charge each control broadcast at P_Max to its sender.
    bool debit_control_energy = false;
    // Called after every round. Must be thread-safe when used with run_batch.
    std::function<void(const RoundEvent&)> observer;
};

struct RunRecord {
    std::uint64_t seed = 0;
    Algorithm algorithm = Algorithm::EBTC;
    std::size_t lifetime_rounds = 0;
    std::vector<double> avg_tx_power;        // per round, J/bit
    std::vector<double> avg_path_cost;       // per round, J, before traffic
    std::vector<std::size_t> alive_count;    // per round, after traffic
    std::size_t discarded_disconnected_seeds = 0;
    std::uint64_t world_checksum = 0;
    std::size_t unreachable_pairs = 0;
    double control_energy = 0.0;

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

RunRecord run_simulation(const WorldConfig& config, Algorithm algorithm, std::uint64_t seed,
                         const SimulationOptions& options = {});

struct ConfidenceInterval {
    double mean = 0.0;
    double halfwidth = 0.0;

    double relative() const { return mean != 0.0 ? halfwidth / mean : 0.0; }

    friend bool operator==(const ConfidenceInterval&, const ConfidenceInterval&) = default;
};

// Batch means: split `samples` in order into `batch_count` equal batches and
// put a 95% Student-t interval on the batch averages. Requires
// batch_count >= 2, equal batches, and at least 2 samples per batch.
ConfidenceInterval batch_means_ci(std::span<const double> samples, std::size_t batch_count);

struct BatchResult {
    Algorithm algorithm = Algorithm::EBTC;
    std::vector<RunRecord> runs;          // ascending by seed
    std::vector<double> survival_curve;   // [r] = fraction of runs with lifetime > r
    double median_lifetime = 0.0;
    std::optional<ConfidenceInterval> lifetime_ci;

    friend bool operator==(const BatchResult&, const BatchResult&) = default;
};

std::vector<double> survival_curve(std::span<const RunRecord> runs);
double median_lifetime(std::span<const RunRecord> runs);

// threads == 0 picks the hardware concurrency. batch_count == 0 skips the CI.
BatchResult run_batch(const WorldConfig& config, Algorithm algorithm, std::span<const std::uint64_t> seeds,
                      const SimulationOptions& options = {}, std::size_t batch_count = 0, std::size_t threads = 1);

}  // namespace ebtc
