#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ebtc/errors.hpp"
#include "ebtc/experiment.hpp"

namespace ebtc {

namespace {

struct Flags {
    std::optional<std::string> config_path;
    std::optional<std::uint32_t> nodes;
    std::optional<double> width;
    std::optional<double> energy;
    std::optional<double> radius_frac;
    std::optional<std::uint32_t> packet_bytes;
    std::optional<std::uint32_t> ack_bytes;
    std::optional<std::uint32_t> seeds;
    std::optional<std::uint64_t> seed_base;
    std::optional<std::string> algorithms;
    std::optional<std::string> out;
    std::optional<std::uint32_t> batches;
    std::optional<std::uint32_t> threads;
    bool debit_control_energy = false;
};

class CommandLine {
public:
    CommandLine() : app_("Energy-balanced topology control simulator", "ebtc-sim") {
        app_.require_subcommand(1);
        app_.add_option("--config", flags_.config_path, "Key-value configuration file");
        app_.add_option("--nodes", flags_.nodes, "Number of nodes");
        app_.add_option("--width", flags_.width, "Square region width (m)");
        app_.add_option("--energy", flags_.energy, "Initial energy per node (J)");
        app_.add_option("--radius-frac", flags_.radius_frac, "Max transmission radius as a fraction of width");
        app_.add_option("--packet-bytes", flags_.packet_bytes, "Data packet size (bytes)");
        app_.add_option("--ack-bytes", flags_.ack_bytes, "ACK frame size (bytes)");
        app_.add_option("--seeds", flags_.seeds, "Number of seeds");
        app_.add_option("--seed-base", flags_.seed_base, "First seed");
        app_.add_option("--algorithms", flags_.algorithms, "Comma-separated: EBTC,WDTC,DLSS,DRNG");
        app_.add_option("--out", flags_.out, "Output directory");
        app_.add_option("--batches", flags_.batches, "Batch count for batch-means intervals (0 = off)");
        app_.add_option("--threads", flags_.threads, "Worker threads (0 = hardware)");
        app_.add_flag("--debit-control-energy", flags_.debit_control_energy,
                      "Charge control broadcasts at maximum power");
        for (const char* name : {"run", "compare", "print-config"}) {
            app_.add_subcommand(name)->fallthrough();
        }
        app_.get_subcommand("run")->description("Run a single algorithm over the seed list");
        app_.get_subcommand("compare")->description("Run all listed algorithms over the same seeds");
        app_.get_subcommand("print-config")->description("Print the effective configuration");
    }

    CliInvocation parse(std::vector<std::string> args) {
        std::reverse(args.begin(), args.end());
        app_.parse(std::move(args));

        CliInvocation inv;
        inv.command = app_.get_subcommands().front()->get_name();
        ExperimentConfig base;
        if (inv.command == "run") {
            base.algorithms = {Algorithm::EBTC};
        }

        if (flags_.config_path) {
            inv.config = load_config_file(*flags_.config_path, base);
        } else {
            inv.config = base;
        }
        auto& c = inv.config;
        if (flags_.nodes) c.world.node_count = *flags_.nodes;
        if (flags_.width) c.world.region_width = *flags_.width;
        if (flags_.energy) c.world.initial_energy = *flags_.energy;
        if (flags_.radius_frac) c.world.max_radius_fraction = *flags_.radius_frac;
        if (flags_.packet_bytes) c.world.packet_bytes = *flags_.packet_bytes;
        if (flags_.ack_bytes) c.world.ack_bytes = *flags_.ack_bytes;
        if (flags_.seeds) {
            c.seed_count = *flags_.seeds;
            c.seed_list.clear();
        }
        if (flags_.seed_base) {
            c.seed_base = *flags_.seed_base;
            c.seed_list.clear();
        }
        if (flags_.out) c.output_dir = *flags_.out;
        if (flags_.batches) c.batch_count = *flags_.batches;
        if (flags_.threads) c.threads = *flags_.threads;
        if (flags_.debit_control_energy) c.debit_control_energy = true;
        if (flags_.algorithms) {
            c = parse_config_text("algorithms = " + *flags_.algorithms, c);
        }
        c.validate();
        if (inv.command == "run" && c.algorithms.size() != 1) {
            throw ConfigError("algorithms", "'run' takes exactly one algorithm; use 'compare' for several");
        }
        return inv;
    }

    const CLI::App& app() const { return app_; }

private:
    CLI::App app_;
    Flags flags_;
};

}  // namespace

CliInvocation parse_command_line(std::vector<std::string> args) {
    CommandLine cl;
    return cl.parse(std::move(args));
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CommandLine cl;
    CliInvocation inv;
    try {
        inv = cl.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << cl.app().help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << cl.app().help();
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (inv.command == "print-config") {
        out << emit_config(inv.config);
        return 0;
    }

    try {
        out << "# ack_bytes = " << inv.config.world.ack_bytes << " (acknowledgement frame size, configurable)\n";
        const auto batches = run_experiment(inv.config);
        out << lifetime_table(batches);
        write_outputs(inv.config, batches, inv.config.output_dir);
        out << "wrote rounds.csv, summary.csv, survival.csv, metadata.csv to " << inv.config.output_dir << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace ebtc
