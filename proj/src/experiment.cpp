#include "ebtc/experiment.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ebtc {

namespace {

std::vector<const BatchResult*> by_name(std::span<const BatchResult> batches) {
    std::vector<const BatchResult*> sorted;
    for (const auto& b : batches) {
        sorted.push_back(&b);
    }
    std::stable_sort(sorted.begin(), sorted.end(), [](const BatchResult* a, const BatchResult* b) {
        return algorithm_name(a->algorithm) < algorithm_name(b->algorithm);
    });
    return sorted;
}

std::vector<const RunRecord*> by_seed(const BatchResult& batch) {
    std::vector<const RunRecord*> sorted;
    for (const auto& r : batch.runs) {
        sorted.push_back(&r);
    }
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const RunRecord* a, const RunRecord* b) { return a->seed < b->seed; });
    return sorted;
}

}  // namespace

void write_rounds_csv(std::ostream& out, std::span<const BatchResult> batches) {
    out << kRoundsHeader << '\n';
    for (const BatchResult* batch : by_name(batches)) {
        const auto name = algorithm_name(batch->algorithm);
        for (const RunRecord* run : by_seed(*batch)) {
            for (std::size_t r = 0; r < run->lifetime_rounds; ++r) {
                out << name << ',' << run->seed << ',' << r + 1 << ',' << format_double(run->avg_tx_power[r]) << ','
                    << format_double(run->avg_path_cost[r]) << ',' << run->alive_count[r] << '\n';
            }
        }
    }
}

void write_summary_csv(std::ostream& out, std::span<const BatchResult> batches) {
    out << kSummaryHeader << '\n';
    for (const BatchResult* batch : by_name(batches)) {
        for (const RunRecord* run : by_seed(*batch)) {
            out << algorithm_name(batch->algorithm) << ',' << run->seed << ',' << run->lifetime_rounds << '\n';
        }
    }
}

void write_survival_csv(std::ostream& out, std::span<const BatchResult> batches) {
    out << kSurvivalHeader << '\n';
    for (const BatchResult* batch : by_name(batches)) {
        for (std::size_t r = 0; r < batch->survival_curve.size(); ++r) {
            out << r << ',' << algorithm_name(batch->algorithm) << ',' << format_double(batch->survival_curve[r])
                << '\n';
        }
    }
}

std::vector<BatchResult> run_experiment(const ExperimentConfig& config) {
    config.validate();
    std::vector<Algorithm> algorithms;
    for (Algorithm a : config.algorithms) {
        if (std::find(algorithms.begin(), algorithms.end(), a) == algorithms.end()) {
            algorithms.push_back(a);
        }
    }

    SimulationOptions options;
    options.debit_control_energy = config.debit_control_energy;
    const auto seeds = config.seeds();

    std::vector<BatchResult> batches;
    for (Algorithm a : algorithms) {
        batches.push_back(run_batch(config.world, a, seeds, options, config.batch_count, config.threads));
    }

    std::map<std::uint64_t, std::uint64_t> checksums;
    for (const auto& batch : batches) {
        for (const auto& run : batch.runs) {
            auto [it, inserted] = checksums.emplace(run.seed, run.world_checksum);
            if (!inserted && it->second != run.world_checksum) {
                throw std::logic_error("seed " + std::to_string(run.seed) +
                                       " produced different deployments across algorithms");
            }
        }
    }
    return batches;
}

std::string lifetime_table(std::span<const BatchResult> batches) {
    std::ostringstream out;
    out << std::left << std::setw(10) << "algorithm" << std::right << std::setw(10) << "runs" << std::setw(16)
        << "median_rounds" << std::setw(14) << "mean_rounds" << std::setw(16) << "ci95_halfwidth" << std::setw(12)
        << "ci95_rel" << '\n';
    out << std::fixed;
    for (const auto& b : batches) {
        out << std::left << std::setw(10) << algorithm_name(b.algorithm) << std::right << std::setw(10)
            << b.runs.size() << std::setw(16) << std::setprecision(1) << b.median_lifetime;
        if (b.lifetime_ci) {
            out << std::setw(14) << std::setprecision(2) << b.lifetime_ci->mean << std::setw(16)
                << std::setprecision(2) << b.lifetime_ci->halfwidth << std::setw(11) << std::setprecision(2)
                << 100.0 * b.lifetime_ci->relative() << '%';
        } else {
            out << std::setw(14) << "-" << std::setw(16) << "-" << std::setw(12) << "-";
        }
        out << '\n';
    }
    const BatchResult* ebtc = nullptr;
    for (const auto& b : batches) {
        if (b.algorithm == Algorithm::EBTC) {
            ebtc = &b;
        }
    }
    if (ebtc != nullptr) {
        for (const auto& b : batches) {
            if (&b != ebtc && b.median_lifetime > 0.0) {
                out << "EBTC/" << algorithm_name(b.algorithm) << " median lifetime ratio: " << std::setprecision(3)
                    << ebtc->median_lifetime / b.median_lifetime << '\n';
            }
        }
    }
    return out.str();
}

void write_outputs(const ExperimentConfig& config, std::span<const BatchResult> batches,
                   const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> written;
    auto emit = [&](const char* name, auto&& writer) {
        const fs::path path = dir / name;
        written.push_back(path);
        std::ofstream file(path);
        if (!file) {
            throw std::runtime_error("cannot open " + path.string() + " for writing");
        }
        writer(file);
        file.flush();
        if (!file) {
            throw std::runtime_error("write failed: " + path.string());
        }
    };

    try {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) {
            throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
        }
        emit("rounds.csv", [&](std::ostream& o) { write_rounds_csv(o, batches); });
        emit("summary.csv", [&](std::ostream& o) { write_summary_csv(o, batches); });
        emit("survival.csv", [&](std::ostream& o) { write_survival_csv(o, batches); });
        emit("metadata.csv", [&](std::ostream& o) {
            o << "key,value\n";
            o << "ack_bytes," << config.world.ack_bytes << '\n';
            o << "packet_bytes," << config.world.packet_bytes << '\n';
            std::istringstream cfg(emit_config(config));
            for (std::string line; std::getline(cfg, line);) {
                const auto eq = line.find(" = ");
                const auto value = line.substr(eq + 3);
                o << "config." << line.substr(0, eq) << ','
                  << (value.find(',') != std::string::npos ? '"' + value + '"' : value) << '\n';
            }
            if (!batches.empty()) {
                for (const auto& run : batches.front().runs) {
                    o << "world_checksum." << run.seed << ',' << run.world_checksum << '\n';
                    o << "discarded_disconnected." << run.seed << ',' << run.discarded_disconnected_seeds << '\n';
                }
            }
        });
    } catch (...) {
        std::error_code ignored;
        for (const auto& path : written) {
            fs::remove(path, ignored);
        }
        throw;
    }
}

}  // namespace ebtc
