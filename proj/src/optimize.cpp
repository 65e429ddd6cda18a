#include "relinspect/optimize.hpp"

#include <cmath>
#include <stdexcept>

#include "relinspect/quadrature.hpp"

namespace relinspect {

void OptimizerConfig::validate() const {
    if (!(tau_min > 0.0) || !(tau_max > tau_min)) {
        throw std::invalid_argument("optimizer: require 0 < tau_min < tau_max");
    }
    if (coarse_grid_points < 10) {
        throw std::invalid_argument("optimizer.coarse_grid_points: must be >= 10");
    }
    if (!(refine_tol > 0.0)) {
        throw std::invalid_argument("optimizer.refine_tol: must be > 0");
    }
}

ScenarioResult optimal_interval(const SystemModel& sys, const CostParams& costs,
                                const StateVector& u, const OptimizerConfig& cfg,
                                const NumericsConfig& numerics) {
    cfg.validate();
    costs.validate();
    ScenarioResult result;
    result.ages = u;

    if (system_reliability(sys, 0.0, u, numerics) == 0.0) {
        result.tau_star = cfg.tau_min;
        result.cost_rate_at_star = cost_rate(sys, costs, cfg.tau_min, u, numerics);
        result.evaluations = 1;
        result.immediate_action = true;
        return result;
    }

    long evals = 0;
    auto objective = [&](double tau) {
        ++evals;
        return cost_rate(sys, costs, tau, u, numerics);
    };

    // Log-spaced coarse scan. The downtime integral is cumulative in tau,
    // so the scan accumulates it cell by cell instead of re-integrating
    // [0, tau] at every grid point; the refinement stage below evaluates
    // the full cost_rate.
    const int n = cfg.coarse_grid_points;
    const double log_lo = std::log(cfg.tau_min);
    const double log_hi = std::log(cfg.tau_max);
    auto unavailability = [&](double t) {
        ++evals;
        return 1.0 - system_reliability(sys, t, u, numerics);
    };
    std::vector<double> grid(n), values(n);
    int best = 0;
    double cumulative_downtime = 0.0;
    double prev_tau = 0.0;
    for (int k = 0; k < n; ++k) {
        grid[k] = std::exp(log_lo + (log_hi - log_lo) * k / (n - 1));
        cumulative_downtime += gauss_legendre(unavailability, prev_tau, grid[k], 16);
        const double reliability = 1.0 - unavailability(grid[k]);
        values[k] = (costs.inspection_cost +
                     costs.replacement_cost * (1.0 - reliability) +
                     costs.downtime_cost_rate * cumulative_downtime) /
                    grid[k];
        if (values[k] < values[best]) {
            best = k;
        }
        prev_tau = grid[k];
    }

    // Golden-section refinement on the bracketing triple.
    double a = grid[best > 0 ? best - 1 : best];
    double b = grid[best < n - 1 ? best + 1 : best];
    constexpr double kInvGolden = 0.6180339887498949;
    double c = b - kInvGolden * (b - a);
    double d = a + kInvGolden * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    while (b - a > cfg.refine_tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvGolden * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvGolden * (b - a);
            fd = objective(d);
        }
    }
    double tau_star = 0.5 * (a + b);
    double value = objective(tau_star);
    const double best_grid_value = objective(grid[best]);
    if (best_grid_value < value) {
        tau_star = grid[best];
        value = best_grid_value;
    }

    result.tau_star = tau_star;
    result.cost_rate_at_star = value;
    result.evaluations = evals;
    result.boundary_minimum = tau_star <= cfg.tau_min + cfg.refine_tol ||
                              tau_star >= cfg.tau_max - cfg.refine_tol;
    return result;
}

std::vector<ScenarioResult> scenario_sweep(const SystemModel& sys,
                                           const CostParams& costs,
                                           const std::vector<StateVector>& scenarios,
                                           const OptimizerConfig& cfg,
                                           const NumericsConfig& numerics) {
    if (scenarios.empty()) {
        throw std::invalid_argument("scenario_sweep: scenario list is empty");
    }
    std::vector<ScenarioResult> results;
    results.reserve(scenarios.size());
    for (const auto& u : scenarios) {
        try {
            results.push_back(optimal_interval(sys, costs, u, cfg, numerics));
        } catch (const std::exception& e) {
            ScenarioResult failed;
            failed.ages = u;
            failed.error = e.what();
            results.push_back(std::move(failed));
        }
    }
    return results;
}

}  // namespace relinspect
