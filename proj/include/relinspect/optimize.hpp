#pragma once

#include <string>
#include <vector>

#include "relinspect/cost.hpp"

namespace relinspect {

struct OptimizerConfig {
    double tau_min = 0.01;
    double tau_max = 20.0;
    int coarse_grid_points = 400;
    double refine_tol = 1e-4;

    void validate() const;
};

struct ScenarioResult {
    StateVector ages;
    double tau_star = 0.0;
    double cost_rate_at_star = 0.0;
    long evaluations = 0;
    // tau_star landed within refine_tol of a search bound; widen the bounds.
    bool boundary_minimum = false;
    // System already failed at interval start; tau_min returned instead of
    // the misleading analytic minimum at tau_max.
    bool immediate_action = false;
    // Set when the scenario errored during a sweep; tau_star is meaningless.
    std::string error;
};

/// Minimize the cost rate over tau: log-spaced coarse scan, then
/// golden-section refinement around the best grid point. Deterministic.
ScenarioResult optimal_interval(const SystemModel& sys, const CostParams& costs,
                                const StateVector& u, const OptimizerConfig& cfg,
                                const NumericsConfig& numerics);

/// One result per scenario, order preserved. A failing scenario records its
/// error and the sweep continues.
std::vector<ScenarioResult> scenario_sweep(const SystemModel& sys,
                                           const CostParams& costs,
                                           const std::vector<StateVector>& scenarios,
                                           const OptimizerConfig& cfg,
                                           const NumericsConfig& numerics);

}  // namespace relinspect
