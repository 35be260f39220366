#include <filesystem>
#include <fstream>
#include <limits>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "liquidrank/grid.hpp"
#include "liquidrank/ledger_io.hpp"
#include "liquidrank/market_sim.hpp"
#include "liquidrank/metrics.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace liquidrank;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        std::cout << content;
    else
        write_file(out_path, content);
}

struct SimulateArgs {
    SimConfig config;
    std::string system = "none";
    std::string out_dir = ".";
};

int run_simulate(SimulateArgs& args) {
    try {
        args.config.system = system_from_string(args.system);
        args.config.validate();
        World probe(args.config);  // population feasibility check up front
        (void)probe;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        SimResult result = run_simulation(args.config);
        double lts = compute_lts(result.ledger);
        double pfs;
        bool pfs_defined = true;
        try {
            pfs = compute_pfs(result.ledger);
        } catch (const std::domain_error&) {
            pfs = std::numeric_limits<double>::quiet_NaN();
            pfs_defined = false;
        }

        MetricsReport row;
        row.scam_period = args.config.scam_period_days;
        row.system = args.config.system;
        row.lts = lts;
        row.pfs = pfs;

        fs::create_directories(args.out_dir);
        write_file(fs::path(args.out_dir) / "ledger.tsv", write_ledger(result.ledger));
        write_file(fs::path(args.out_dir) / "snapshots.tsv",
                   write_snapshot_series(result.snapshots));
        write_file(fs::path(args.out_dir) / "metrics.tsv", write_metrics_table({row}));

        std::cout << "LTS\t" << lts << "\n";
        std::cout << "PFS\t" << (pfs_defined ? std::to_string(pfs) : "nan") << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

GridConfig grid_from_json(const json& j) {
    GridConfig grid;
    SimConfig& base = grid.base;
    auto get = [&](const char* key, auto& slot) {
        if (j.contains(key)) j.at(key).get_to(slot);
    };
    get("n_agents", base.n_agents);
    get("consumer_fraction", base.consumer_fraction);
    get("dishonest_supplier_fraction", base.dishonest_supplier_fraction);
    get("dishonest_consumer_fraction", base.dishonest_consumer_fraction);
    get("duration_days", base.duration_days);
    get("price", base.price);
    get("purchase_probability", base.purchase_probability);
    get("bad_service_rate", base.bad_service_rate);
    get("seed", base.seed);
    get("blend_d", base.blend_d);
    get("retention_lambda", base.retention_lambda);
    get("scam_periods", grid.scam_periods);
    get("replications", grid.replications);
    if (j.contains("systems")) {
        grid.systems.clear();
        for (const auto& name : j.at("systems"))
            grid.systems.push_back(system_from_string(name.get<std::string>()));
    }
    return grid;
}

int run_compare(const std::string& config_path, const std::string& out_path) {
    GridConfig grid;
    try {
        grid = grid_from_json(json::parse(read_file(config_path)));
        grid.validate();
        World probe(grid.base);
        (void)probe;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        emit(out_path, write_metrics_table(run_grid(grid)));
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

int run_rank(const std::string& input, const std::string& system,
             double blend_d, double retention, const std::string& out_path) {
    EngineConfig cfg;
    try {
        cfg.mode = mode_from_string(system);
        cfg.blend_d = blend_d;
        cfg.retention_lambda = retention;
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        auto events = parse_ratings_log(read_file(input));
        emit(out_path, write_snapshot_series(replay_log(events, cfg)));
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reputation engine, marketplace simulator and comparison grids"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Run one marketplace simulation");
    simulate->add_option("--agents", sim.config.n_agents, "Total number of agents");
    simulate->add_option("--days", sim.config.duration_days, "Simulation length in days");
    simulate->add_option("--scam-period", sim.config.scam_period_days,
                         "Days between identity rotations of dishonest agents");
    simulate->add_option("--system", sim.system, "none|regular|weighted|tom|som");
    simulate->add_option("--seed", sim.config.seed, "RNG seed");
    simulate->add_option("--out", sim.out_dir, "Output directory");
    simulate->add_option("--price", sim.config.price, "Price per transaction");
    simulate->add_option("--purchase-prob", sim.config.purchase_probability,
                         "Per-consumer daily purchase probability");
    simulate->add_option("--bad-rate", sim.config.bad_service_rate,
                         "Honest-supplier bad service probability");
    simulate->add_option("--blend-d", sim.config.blend_d, "Engine update weight");
    simulate->add_option("--retention", sim.config.retention_lambda,
                         "Per-day retention for unrated identities");

    std::string compare_config, compare_out;
    auto* compare = app.add_subcommand("compare", "Run a period x system comparison grid");
    compare->add_option("--config", compare_config, "Grid configuration (JSON)")->required();
    compare->add_option("--out", compare_out, "Output file (default: stdout)");

    std::string rank_input, rank_system = "regular", rank_out;
    double rank_blend = 0.5, rank_retention = 0.99;
    auto* rank = app.add_subcommand("rank", "Replay a rating log through the engine");
    rank->add_option("--input", rank_input, "Rating log (TSV)")->required();
    rank->add_option("--system", rank_system, "regular|weighted|tom|som");
    rank->add_option("--blend-d", rank_blend, "Engine update weight");
    rank->add_option("--retention", rank_retention, "Per-day retention");
    rank->add_option("--out", rank_out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (simulate->parsed()) return run_simulate(sim);
    if (compare->parsed()) return run_compare(compare_config, compare_out);
    return run_rank(rank_input, rank_system, rank_blend, rank_retention, rank_out);
}
