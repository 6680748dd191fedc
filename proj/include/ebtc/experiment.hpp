#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ebtc/config.hpp"
#include "ebtc/engine.hpp"

namespace ebtc {

// Fixed CSV headers.
inline constexpr const char* kRoundsHeader = "algorithm,seed,round,avg_tx_power,avg_path_cost,alive_count";
inline constexpr const char* kSummaryHeader = "algorithm,seed,lifetime_rounds";
inline constexpr const char* kSurvivalHeader = "round,algorithm,surviving_fraction";

// Writers sort rows by (algorithm name, seed, round).
void write_rounds_csv(std::ostream& out, std::span<const BatchResult> batches);
void write_summary_csv(std::ostream& out, std::span<const BatchResult> batches);
void write_survival_csv(std::ostream& out, std::span<const BatchResult> batches);

// Runs every configured algorithm over the shared seed list. Duplicate
// algorithms are run once. Throws std::logic_error if two algorithms saw
// different deployments for the same seed.
std::vector<BatchResult> run_experiment(const ExperimentConfig& config);

// Human-readable median lifetime table with batch-means intervals.
std::string lifetime_table(std::span<const BatchResult> batches);

// Writes rounds.csv, summary.csv, survival.csv and metadata.csv into `dir`.
// On failure, removes whatever it already wrote and rethrows with the path.
void write_outputs(const ExperimentConfig& config, std::span<const BatchResult> batches,
                   const std::filesystem::path& dir);

// Command-line entry point: run | compare | print-config. Returns the exit
// status; diagnostics go to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

struct CliInvocation {
    std::string command;
    ExperimentConfig config;
};

// Parses arguments (without argv[0]). Flag values override config-file values,
// which override defaults. Throws on malformed input.
CliInvocation parse_command_line(std::vector<std::string> args);

}  // namespace ebtc
