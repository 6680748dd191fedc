#include "ebtc/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "ebtc/errors.hpp"

namespace ebtc {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw ConfigError(std::string(key), "cannot parse '" + std::string(text) + "'");
    }
    return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw ConfigError(std::string(key), "expected true/false, got '" + std::string(text) + "'");
}

std::vector<std::string_view> split_list(std::string_view text) {
    std::vector<std::string_view> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        if (!item.empty()) {
            out.push_back(item);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return out;
}

void apply(ExperimentConfig& config, std::string_view key, std::string_view value) {
    auto& w = config.world;
    if (key == "region_width") {
        w.region_width = parse_number<double>(key, value);
    } else if (key == "node_count") {
        w.node_count = parse_number<std::uint32_t>(key, value);
    } else if (key == "initial_energy") {
        w.initial_energy = parse_number<double>(key, value);
    } else if (key == "max_radius_fraction") {
        w.max_radius_fraction = parse_number<double>(key, value);
    } else if (key == "packet_bytes") {
        w.packet_bytes = parse_number<std::uint32_t>(key, value);
    } else if (key == "ack_bytes") {
        w.ack_bytes = parse_number<std::uint32_t>(key, value);
    } else if (key == "e_elec") {
        w.radio.e_elec = parse_number<double>(key, value);
    } else if (key == "eps_fs") {
        w.radio.eps_fs = parse_number<double>(key, value);
    } else if (key == "eps_mp") {
        w.radio.eps_mp = parse_number<double>(key, value);
    } else if (key == "algorithms") {
        config.algorithms.clear();
        for (auto name : split_list(value)) {
            try {
                config.algorithms.push_back(parse_algorithm(name));
            } catch (const std::invalid_argument& e) {
                throw ConfigError("algorithms", e.what());
            }
        }
    } else if (key == "seed_base") {
        config.seed_base = parse_number<std::uint64_t>(key, value);
    } else if (key == "seeds") {
        config.seed_count = parse_number<std::uint32_t>(key, value);
    } else if (key == "seed_list") {
        config.seed_list.clear();
        for (auto item : split_list(value)) {
            config.seed_list.push_back(parse_number<std::uint64_t>(key, item));
        }
    } else if (key == "batch_count") {
        config.batch_count = parse_number<std::uint32_t>(key, value);
    } else if (key == "out") {
        config.output_dir = std::string(value);
    } else if (key == "debit_control_energy") {
        config.debit_control_energy = parse_bool(key, value);
    } else if (key == "threads") {
        config.threads = parse_number<std::uint32_t>(key, value);
    } else {
        throw ConfigError(std::string(key), "unknown configuration key");
    }
}

}  // namespace

std::vector<std::uint64_t> ExperimentConfig::seeds() const {
    if (!seed_list.empty()) {
        return seed_list;
    }
    std::vector<std::uint64_t> out(seed_count);
    for (std::uint32_t i = 0; i < seed_count; ++i) {
        out[i] = seed_base + i;
    }
    return out;
}

void ExperimentConfig::validate() const {
    world.validate();
    if (algorithms.empty()) {
        throw ConfigError("algorithms", "at least one algorithm is required");
    }
    const auto count = seeds().size();
    if (count == 0) {
        throw ConfigError("seeds", "at least one seed is required");
    }
    if (batch_count == 1) {
        throw ConfigError("batch_count", "must be 0 (no intervals) or >= 2");
    }
    if (batch_count >= 2 && (count % batch_count != 0 || count / batch_count < 2)) {
        throw ConfigError("batch_count", std::to_string(count) + " seeds do not split into " +
                                             std::to_string(batch_count) + " equal batches of >= 2");
    }
    if (output_dir.empty()) {
        throw ConfigError("out", "must not be empty");
    }
}

ExperimentConfig parse_config_text(std::string_view text, ExperimentConfig base) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto newline = text.find('\n');
        std::string_view line = text.substr(0, newline);
        text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
        }
        apply(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    base.validate();
    return base;
}

ExperimentConfig load_config_file(const std::filesystem::path& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), std::move(base));
}

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double failed");
    }
    return std::string(buf, end);
}

std::string emit_config(const ExperimentConfig& config) {
    const auto& w = config.world;
    std::ostringstream out;
    out << "region_width = " << format_double(w.region_width) << '\n'
        << "node_count = " << w.node_count << '\n'
        << "initial_energy = " << format_double(w.initial_energy) << '\n'
        << "max_radius_fraction = " << format_double(w.max_radius_fraction) << '\n'
        << "packet_bytes = " << w.packet_bytes << '\n'
        << "ack_bytes = " << w.ack_bytes << '\n'
        << "e_elec = " << format_double(w.radio.e_elec) << '\n'
        << "eps_fs = " << format_double(w.radio.eps_fs) << '\n'
        << "eps_mp = " << format_double(w.radio.eps_mp) << '\n';
    out << "algorithms = ";
    for (std::size_t i = 0; i < config.algorithms.size(); ++i) {
        out << (i ? "," : "") << algorithm_name(config.algorithms[i]);
    }
    out << '\n'
        << "seed_base = " << config.seed_base << '\n'
        << "seeds = " << config.seed_count << '\n';
    if (!config.seed_list.empty()) {
        out << "seed_list = ";
        for (std::size_t i = 0; i < config.seed_list.size(); ++i) {
            out << (i ? "," : "") << config.seed_list[i];
        }
        out << '\n';
    }
    out << "batch_count = " << config.batch_count << '\n'
        << "out = " << config.output_dir << '\n'
        << "debit_control_energy = " << (config.debit_control_energy ? "true" : "false") << '\n'
        << "threads = " << config.threads << '\n';
    return out.str();
}

}  // namespace ebtc
