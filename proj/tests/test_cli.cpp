#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "ebtc/config.hpp"
#include "ebtc/errors.hpp"
#include "ebtc/experiment.hpp"

using namespace ebtc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("ebtc_" + tag + "_" + std::to_string(::getpid()))) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::string field_of(auto&& fn) {
    try {
        fn();
    } catch (const ConfigError& e) {
        return e.field();
    }
    return "<no error>";
}

int cli(std::vector<std::string> args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int rc = run_cli(std::move(args), out, err);
    if (out_text) {
        *out_text = out.str();
    }
    if (err_text) {
        *err_text = err.str();
    }
    return rc;
}

}  // namespace

TEST_CASE("empty config gives defaults") {
    const auto cfg = parse_config_text("");
    CHECK(cfg == ExperimentConfig{});
    CHECK(cfg.world.region_width == 1000.0);
    CHECK(cfg.world.node_count == 200);
    CHECK(cfg.world.initial_energy == 10.0);
    CHECK(cfg.world.max_radius_fraction == 0.2);
    CHECK(cfg.world.packet_bytes == 32);
    CHECK(cfg.seeds().size() == 200);
    CHECK(cfg.seeds().front() == 1);
}

TEST_CASE("config parsing") {
    const auto cfg = parse_config_text(
        "# small field\n"
        "node_count = 40   # trailing comment\n"
        "region_width=400\n"
        "algorithms = ebtc, DLSS\n"
        "seed_list = 9, 3, 5\n"
        "batch_count = 0\n");
    CHECK(cfg.world.node_count == 40);
    CHECK(cfg.world.region_width == 400.0);
    CHECK(cfg.algorithms == std::vector<Algorithm>{Algorithm::EBTC, Algorithm::DLSS});
    CHECK(cfg.seeds() == std::vector<std::uint64_t>{9, 3, 5});

    CHECK(field_of([] { parse_config_text("node_count = 1\n").validate(); }) == "node_count");
    CHECK(field_of([] { parse_config_text("colour = blue\n"); }) == "colour");
    CHECK(field_of([] { parse_config_text("initial_energy = -1\n").validate(); }) == "initial_energy");
    CHECK(field_of([] { parse_config_text("node_count = many\n"); }) == "node_count");
    CHECK(field_of([] { parse_config_text("algorithms = mst\n"); }) == "algorithms");
    CHECK(field_of([] { parse_config_text("node_count 5\n"); }) != "<no error>");
}

TEST_CASE("config emit/parse round trip") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        ExperimentConfig cfg;
        cfg.world.region_width = 100.0 + 2000.0 * unit(rng);
        cfg.world.node_count = 2 + static_cast<std::uint32_t>(rng() % 500);
        cfg.world.initial_energy = 0.01 + 50.0 * unit(rng);
        cfg.world.max_radius_fraction = 0.01 + 0.99 * unit(rng);
        cfg.world.packet_bytes = 1 + static_cast<std::uint32_t>(rng() % 200);
        cfg.world.ack_bytes = 1 + static_cast<std::uint32_t>(rng() % 50);
        cfg.world.radio.e_elec = 1e-8 + 1e-7 * unit(rng);
        cfg.algorithms = {Algorithm::DRNG, Algorithm::EBTC};
        cfg.seed_base = rng() % 1000;
        cfg.seed_count = 4;
        cfg.batch_count = 2;
        cfg.output_dir = "out_" + std::to_string(trial);
        cfg.debit_control_energy = trial % 2 == 0;
        cfg.threads = static_cast<std::uint32_t>(rng() % 8);
        if (trial % 3 == 0) {
            cfg.seed_list = {rng() % 100, rng() % 100 + 100, 300, 400};
        }
        CHECK(parse_config_text(emit_config(cfg)) == cfg);
    }
}

TEST_CASE("command line precedence") {
    TempDir dir("precedence");
    const auto file = dir.path / "exp.cfg";
    std::ofstream(file) << "node_count = 40\nregion_width = 400\n";

    const auto inv = parse_command_line({"compare", "--config", file.string(), "--nodes", "60"});
    CHECK(inv.command == "compare");
    CHECK(inv.config.world.node_count == 60);
    CHECK(inv.config.world.region_width == 400.0);
    CHECK(inv.config.world.initial_energy == 10.0);

    const auto run = parse_command_line({"run", "--seeds", "3", "--batches", "0"});
    CHECK(run.config.algorithms == std::vector<Algorithm>{Algorithm::EBTC});
    CHECK(run.config.seed_count == 3);

    CHECK(cli({"run", "--algorithms", "EBTC,DLSS"}) == 2);
    CHECK(cli({"compare", "--nodes", "1"}) == 2);
    CHECK(cli({"compare", "--bogus"}) == 2);
    CHECK(cli({"run", "--config", (dir.path / "missing.cfg").string()}) == 2);
}

TEST_CASE("print-config reflects overrides") {
    std::string text;
    REQUIRE(cli({"print-config", "--nodes", "77", "--algorithms", "WDTC"}, &text) == 0);
    const auto cfg = parse_config_text(text);
    CHECK(cfg.world.node_count == 77);
    CHECK(cfg.algorithms == std::vector<Algorithm>{Algorithm::WDTC});
}

TEST_CASE("help exits cleanly") {
    std::string text;
    CHECK(cli({"--help"}, &text) == 0);
    CHECK(text.find("compare") != std::string::npos);
}

TEST_CASE("CSV writers: golden output") {
    BatchResult ebtc;
    ebtc.algorithm = Algorithm::EBTC;
    RunRecord a;
    a.seed = 7;
    a.algorithm = Algorithm::EBTC;
    a.lifetime_rounds = 2;
    a.avg_tx_power = {1.5e-7, 1.25e-7};
    a.avg_path_cost = {0.001, 0.002};
    a.alive_count = {4, 3};
    RunRecord b = a;
    b.seed = 2;
    b.lifetime_rounds = 1;
    b.avg_tx_power = {2e-7};
    b.avg_path_cost = {0.5};
    b.alive_count = {3};
    ebtc.runs = {a, b};
    ebtc.survival_curve = {1.0, 0.5, 0.0};

    BatchResult dlss;
    dlss.algorithm = Algorithm::DLSS;
    RunRecord c = b;
    c.algorithm = Algorithm::DLSS;
    dlss.runs = {c};
    dlss.survival_curve = {1.0, 0.0};

    const std::vector<BatchResult> batches{ebtc, dlss};
    std::ostringstream rounds, summary, survival;
    write_rounds_csv(rounds, batches);
    write_summary_csv(summary, batches);
    write_survival_csv(survival, batches);

    CHECK(rounds.str() ==
          "algorithm,seed,round,avg_tx_power,avg_path_cost,alive_count\n"
          "DLSS,2,1,2e-07,0.5,3\n"
          "EBTC,2,1,2e-07,0.5,3\n"
          "EBTC,7,1,1.5e-07,0.001,4\n"
          "EBTC,7,2,1.25e-07,0.002,3\n");
    CHECK(summary.str() ==
          "algorithm,seed,lifetime_rounds\n"
          "DLSS,2,1\n"
          "EBTC,2,1\n"
          "EBTC,7,2\n");
    CHECK(survival.str() ==
          "round,algorithm,surviving_fraction\n"
          "0,DLSS,1\n"
          "1,DLSS,0\n"
          "0,EBTC,1\n"
          "1,EBTC,0.5\n"
          "2,EBTC,0\n");
}

TEST_CASE("compare writes one row set per algorithm and seed") {
    TempDir dir("compare");
    std::string text;
    REQUIRE(cli({"compare", "--nodes", "15", "--width", "200", "--radius-frac", "0.4", "--energy", "0.2",
                 "--seeds", "3", "--batches", "0", "--algorithms", "EBTC,DLSS,ebtc", "--out", dir.path.string()},
                &text) == 0);
    CHECK(text.find("EBTC") != std::string::npos);

    const auto summary = lines_of(read_file(dir.path / "summary.csv"));
    REQUIRE(summary.size() == 1 + 2 * 3);
    CHECK(summary[0] == kSummaryHeader);
    CHECK(summary[1].rfind("DLSS,1,", 0) == 0);
    CHECK(summary[4].rfind("EBTC,1,", 0) == 0);

    const auto rounds = lines_of(read_file(dir.path / "rounds.csv"));
    CHECK(rounds[0] == kRoundsHeader);
    std::size_t expected_rows = 0;
    for (std::size_t i = 1; i < summary.size(); ++i) {
        expected_rows += std::stoul(summary[i].substr(summary[i].rfind(',') + 1));
    }
    CHECK(rounds.size() == 1 + expected_rows);
    CHECK(lines_of(read_file(dir.path / "survival.csv"))[0] == kSurvivalHeader);
    CHECK(fs::exists(dir.path / "metadata.csv"));
}

TEST_CASE("run executes a single algorithm") {
    TempDir dir("run");
    REQUIRE(cli({"run", "--nodes", "10", "--width", "200", "--radius-frac", "0.4", "--energy", "0.1", "--seeds",
                 "2", "--batches", "0", "--algorithms", "DRNG", "--out", dir.path.string()}) == 0);
    const auto summary = lines_of(read_file(dir.path / "summary.csv"));
    REQUIRE(summary.size() == 3);
    CHECK(summary[1].rfind("DRNG,1,", 0) == 0);
}

TEST_CASE("failed output leaves no partial files") {
    TempDir dir("partial");
    fs::create_directories(dir.path / "survival.csv");
    std::string err;
    CHECK(cli({"compare", "--nodes", "10", "--width", "200", "--radius-frac", "0.4", "--energy", "0.1", "--seeds",
               "2", "--batches", "0", "--algorithms", "EBTC", "--out", dir.path.string()},
              nullptr, &err) == 1);
    CHECK(err.find("survival.csv") != std::string::npos);
    CHECK_FALSE(fs::exists(dir.path / "rounds.csv"));
    CHECK_FALSE(fs::exists(dir.path / "summary.csv"));
    CHECK_FALSE(fs::exists(dir.path / "metadata.csv"));
}
