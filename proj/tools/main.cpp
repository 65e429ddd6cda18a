#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relinspect/commands.hpp"

namespace {

using relinspect::ConfigError;
using relinspect::RunConfig;
using relinspect::StateVector;

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;
constexpr int kExitUsageError = 4;

// Grid syntax: either "v1,v2,v3" or "start:stop:count" (inclusive linspace).
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        double start = 0.0;
        double stop = 0.0;
        long count = 0;
        char c1 = 0;
        char c2 = 0;
        std::istringstream in(text);
        if (!(in >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':' ||
            count < 1) {
            throw std::invalid_argument("grid: expected start:stop:count, got '" + text +
                                        "'");
        }
        for (long k = 0; k < count; ++k) {
            grid.push_back(count == 1 ? start
                                      : start + (stop - start) * k / (count - 1));
        }
        return grid;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        grid.push_back(std::stod(item));
    }
    return grid;
}

StateVector parse_ages(const std::string& text) {
    StateVector sv;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        sv.ages.push_back({std::stod(item)});
    }
    return sv;
}

std::vector<StateVector> load_scenarios_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open scenarios file: " + path);
    }
    std::vector<StateVector> scenarios;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        scenarios.push_back(parse_ages(line));
    }
    if (scenarios.empty()) {
        throw ConfigError("scenarios file is empty: " + path);
    }
    return scenarios;
}

struct CommonArgs {
    std::string config_path;
    std::string ages_text;
    std::string out_path;
    std::string gamma_param;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_ages) {
    cmd->add_option("--config", args.config_path, "System config JSON file")
        ->required();
    auto* ages = cmd->add_option("--ages", args.ages_text,
                                 "Initial degradation per component, comma separated");
    if (needs_ages) {
        ages->required();
    }
    cmd->add_option("--out", args.out_path, "Write CSV here instead of stdout");
    cmd->add_option("--gamma-parameterization", args.gamma_param,
                    "Override beta reading: scale | rate");
}

RunConfig load(const CommonArgs& args) {
    RunConfig config = relinspect::load_config(args.config_path);
    if (!args.gamma_param.empty()) {
        config.numerics.gamma_parameterization =
            relinspect::gamma_parameterization_from_string(args.gamma_param);
    }
    return config;
}

int run_to_stream(const CommonArgs& args, const std::function<void(std::ostream&)>& fn) {
    if (args.out_path.empty()) {
        fn(std::cout);
        return 0;
    }
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << args.out_path << "\n";
        return kExitUsageError;
    }
    fn(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Reliability and inspection-interval planning for degrading components "
        "under a shared shock process"};
    app.require_subcommand(1);

    CommonArgs rel_args;
    std::string rel_t_grid;
    auto* rel = app.add_subcommand(
        "reliability", "System and component reliability over a time grid");
    add_common(rel, rel_args, /*needs_ages=*/true);
    rel->add_option("--t-grid", rel_t_grid, "Times: list or start:stop:count")
        ->required();

    CommonArgs curve_args;
    std::string curve_tau_grid;
    auto* curve =
        app.add_subcommand("cost-curve", "Cost rate as a function of the interval tau");
    add_common(curve, curve_args, /*needs_ages=*/true);
    curve->add_option("--tau-grid", curve_tau_grid, "Intervals: list or start:stop:count")
        ->required();

    CommonArgs opt_args;
    auto* opt = app.add_subcommand("optimize",
                                   "Optimal next inspection interval for given ages");
    add_common(opt, opt_args, /*needs_ages=*/true);

    CommonArgs table_args;
    std::string scenarios_path;
    auto* table = app.add_subcommand(
        "table", "Optimal interval per scenario (config scenarios or a file)");
    add_common(table, table_args, /*needs_ages=*/false);
    table->add_option("--scenarios", scenarios_path,
                      "File with one comma-separated age vector per line");

    CommonArgs sim_args;
    std::string sim_t_grid;
    long sim_paths = 100000;
    std::uint64_t sim_seed = 0;
    double sim_tau = 0.0;
    int sim_threads = 0;
    auto* sim = app.add_subcommand(
        "simulate", "Monte Carlo cross-check of reliability and expected downtime");
    add_common(sim, sim_args, /*needs_ages=*/true);
    sim->add_option("--tau", sim_tau, "Inspection interval for the downtime estimate")
        ->required();
    sim->add_option("--paths", sim_paths, "Simulated paths");
    sim->add_option("--seed", sim_seed, "RNG seed");
    sim->add_option("--threads", sim_threads, "Worker threads (0 = all cores)");
    sim->add_option("--t-grid", sim_t_grid,
                    "Reliability comparison times (default: 10 steps up to tau)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsageError;
    }

    try {
        if (rel->parsed()) {
            const RunConfig config = load(rel_args);
            return run_to_stream(rel_args, [&](std::ostream& out) {
                cmd_reliability(config, parse_ages(rel_args.ages_text),
                                parse_grid(rel_t_grid), out);
            });
        }
        if (curve->parsed()) {
            const RunConfig config = load(curve_args);
            return run_to_stream(curve_args, [&](std::ostream& out) {
                cmd_cost_curve(config, parse_ages(curve_args.ages_text),
                               parse_grid(curve_tau_grid), out);
            });
        }
        if (opt->parsed()) {
            const RunConfig config = load(opt_args);
            return run_to_stream(opt_args, [&](std::ostream& out) {
                cmd_optimize(config, parse_ages(opt_args.ages_text), out);
            });
        }
        if (table->parsed()) {
            const RunConfig config = load(table_args);
            std::vector<StateVector> scenarios = config.scenarios;
            if (!scenarios_path.empty()) {
                scenarios = load_scenarios_file(scenarios_path);
            }
            if (scenarios.empty()) {
                std::cerr << "error: no scenarios in config and no --scenarios file\n";
                return kExitUsageError;
            }
            return run_to_stream(table_args, [&](std::ostream& out) {
                cmd_table(config, scenarios, out);
            });
        }
        if (sim->parsed()) {
            const RunConfig config = load(sim_args);
            std::vector<double> grid;
            if (!sim_t_grid.empty()) {
                grid = parse_grid(sim_t_grid);
            }
            return run_to_stream(sim_args, [&](std::ostream& out) {
                cmd_simulate(config, parse_ages(sim_args.ages_text), sim_paths, sim_seed,
                             sim_tau, sim_threads, grid, out);
            });
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const std::runtime_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumericalError;
    }
    return kExitUsageError;
}
