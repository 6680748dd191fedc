#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ebtc/engine.hpp"
#include "ebtc/world.hpp"

namespace ebtc {

struct ExperimentConfig {
    WorldConfig world{};
    std::vector<Algorithm> algorithms{Algorithm::EBTC, Algorithm::WDTC, Algorithm::DLSS, Algorithm::DRNG};
    std::uint64_t seed_base = 1;
    std::uint32_t seed_count = 200;
    std::vector<std::uint64_t> seed_list;  // overrides base/count when non-empty
    std::uint32_t batch_count = 10;        // 0 disables confidence intervals
    std::string output_dir = "results";
    bool debit_control_energy = false;
    std::uint32_t threads = 0;             // 0 = hardware concurrency

    std::vector<std::uint64_t> seeds() const;

    // Throws ConfigError naming the offending field.
    void validate() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Flat "key = value" text, one key per line; '#' starts a comment. Keys not
// present keep their value from `base`. Unknown keys and malformed or
// out-of-range values throw ConfigError.
ExperimentConfig parse_config_text(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config_file(const std::filesystem::path& path, ExperimentConfig base = {});

// Inverse of parse_config_text; doubles are written in shortest round-trip form.
std::string emit_config(const ExperimentConfig& config);

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace ebtc
