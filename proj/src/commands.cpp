#include "relinspect/commands.hpp"

#include <cstdio>

namespace relinspect {

std::string format_csv_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

void check_ages(const RunConfig& config, const StateVector& ages) {
    if (ages.ages.size() != config.system.components.size()) {
        throw ConfigError("ages: got " + std::to_string(ages.ages.size()) +
                          " values for a system of " +
                          std::to_string(config.system.components.size()) +
                          " components");
    }
}

void check_grid(const std::vector<double>& grid, const char* name) {
    if (grid.empty()) {
        throw std::invalid_argument(std::string(name) + ": grid is empty");
    }
    double prev = 0.0;
    for (double v : grid) {
        if (!(v > prev)) {
            throw std::invalid_argument(std::string(name) +
                                        ": grid must be strictly increasing and positive");
        }
        prev = v;
    }
}

}  // namespace

void cmd_reliability(const RunConfig& config, const StateVector& ages,
                     const std::vector<double>& t_grid, std::ostream& out) {
    check_ages(config, ages);
    check_grid(t_grid, "t-grid");
    out << "t,R_system";
    for (std::size_t i = 0; i < config.system.components.size(); ++i) {
        out << ",R_component_" << i + 1;
    }
    out << "\n";
    for (double t : t_grid) {
        out << format_csv_value(t) << ","
            << format_csv_value(
                   system_reliability(config.system, t, ages, config.numerics));
        for (std::size_t i = 0; i < config.system.components.size(); ++i) {
            out << ","
                << format_csv_value(component_reliability(
                       config.system.components[i], config.system.shock, t,
                       ages.ages[i], config.numerics));
        }
        out << "\n";
    }
}

void cmd_cost_curve(const RunConfig& config, const StateVector& ages,
                    const std::vector<double>& tau_grid, std::ostream& out) {
    check_ages(config, ages);
    check_grid(tau_grid, "tau-grid");
    out << "tau,cost_rate\n";
    for (double tau : tau_grid) {
        out << format_csv_value(tau) << ","
            << format_csv_value(
                   cost_rate(config.system, config.costs, tau, ages, config.numerics))
            << "\n";
    }
}

namespace {

void write_result_row(std::ostream& out, std::size_t index, const ScenarioResult& r) {
    out << index + 1;
    for (const auto& a : r.ages.ages) {
        out << "," << format_csv_value(a.initial_degradation);
    }
    if (!r.error.empty()) {
        out << ",,,," << "error:" << r.error << "\n";
        return;
    }
    out << "," << format_csv_value(r.tau_star) << ","
        << format_csv_value(r.cost_rate_at_star) << "," << r.evaluations << ",";
    if (r.immediate_action) {
        out << "immediate_action";
    } else if (r.boundary_minimum) {
        out << "boundary_minimum";
    }
    out << "\n";
}

void write_result_header(std::ostream& out, std::size_t n_components) {
    out << "scenario";
    for (std::size_t i = 0; i < n_components; ++i) {
        out << ",u_" << i + 1;
    }
    out << ",tau_star,cost_rate,evaluations,flags\n";
}

}  // namespace

void cmd_optimize(const RunConfig& config, const StateVector& ages, std::ostream& out) {
    check_ages(config, ages);
    const ScenarioResult r = optimal_interval(config.system, config.costs, ages,
                                              config.optimizer, config.numerics);
    write_result_header(out, config.system.components.size());
    write_result_row(out, 0, r);
}

void cmd_table(const RunConfig& config, const std::vector<StateVector>& scenarios,
               std::ostream& out) {
    for (const auto& s : scenarios) {
        check_ages(config, s);
    }
    const auto results = scenario_sweep(config.system, config.costs, scenarios,
                                        config.optimizer, config.numerics);
    write_result_header(out, config.system.components.size());
    for (std::size_t k = 0; k < results.size(); ++k) {
        write_result_row(out, k, results[k]);
    }
}

void cmd_simulate(const RunConfig& config, const StateVector& ages, long n_paths,
                  std::uint64_t seed, double tau, int threads,
                  const std::vector<double>& t_grid, std::ostream& out) {
    check_ages(config, ages);
    if (!(tau > 0.0)) {
        throw std::invalid_argument("tau: must be positive");
    }
    SimulationPlan plan;
    plan.n_paths = n_paths;
    plan.seed = seed;
    plan.threads = threads;
    if (t_grid.empty()) {
        // default: ten equal steps up to tau
        plan.time_grid.resize(10);
        for (int k = 0; k < 10; ++k) {
            plan.time_grid[k] = tau * (k + 1) / 10.0;
        }
    } else {
        check_grid(t_grid, "t-grid");
        plan.time_grid = t_grid;
    }

    const auto rel = simulate_reliability(config.system, ages, plan, config.numerics);
    out << "quantity,t,analytic,mc_estimate,mc_standard_error\n";
    for (const auto& point : rel.reliability_at) {
        out << "reliability," << format_csv_value(point.time) << ","
            << format_csv_value(system_reliability(config.system, point.time, ages,
                                                   config.numerics))
            << "," << format_csv_value(point.estimate) << ","
            << format_csv_value(point.standard_error) << "\n";
    }
    const auto down =
        simulate_expected_downtime(config.system, ages, tau, plan, config.numerics);
    out << "expected_downtime," << format_csv_value(tau) << ","
        << format_csv_value(expected_downtime(config.system, tau, ages, config.numerics))
        << "," << format_csv_value(down.expected_downtime) << ","
        << format_csv_value(down.expected_downtime_se) << "\n";
}

}  // namespace relinspect
