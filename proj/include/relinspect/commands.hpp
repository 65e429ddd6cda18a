#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "relinspect/config.hpp"
#include "relinspect/simulate.hpp"

namespace relinspect {

/// CSV formatting used by every command: 12 significant digits, fixed
/// column order, '\n' line endings. Output is byte-stable for fixed inputs.
std::string format_csv_value(double v);

/// t, R_system, then one R_component_i column per component.
void cmd_reliability(const RunConfig& config, const StateVector& ages,
                     const std::vector<double>& t_grid, std::ostream& out);

/// tau, cost_rate rows: the data behind a cost-rate curve.
void cmd_cost_curve(const RunConfig& config, const StateVector& ages,
                    const std::vector<double>& tau_grid, std::ostream& out);

/// Single-row optimum: tau_star, cost rate, evaluation count, flags.
void cmd_optimize(const RunConfig& config, const StateVector& ages, std::ostream& out);

/// One row per scenario: index, ages, tau_star, cost rate, flags. The same
/// rows serve as (u_1, ..., u_n, tau_star) surface data.
void cmd_table(const RunConfig& config, const std::vector<StateVector>& scenarios,
               std::ostream& out);

/// Analytic vs Monte Carlo: reliability at each grid time with standard
/// errors, then an expected-downtime row for the given tau.
void cmd_simulate(const RunConfig& config, const StateVector& ages, long n_paths,
                  std::uint64_t seed, double tau, int threads,
                  const std::vector<double>& t_grid, std::ostream& out);

}  // namespace relinspect
