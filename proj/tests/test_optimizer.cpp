#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "relinspect/optimize.hpp"

using namespace relinspect;

namespace {

SystemModel table_series() {
    return {Topology::Series,
            {{20, 7, 3, 1, 2, 0.5, 1.5, 0.4},
             {30, 5, 2, 0.6, 2.5, 0.2, 2, 0.3},
             {35, 6, 1, 0.3, 3, 0.1, 1.2, 0.15}},
            {2.5e-3}};
}

const CostParams table_costs{5.0, 10.0, 80.0};

// Cheaper scan for unit tests; acceptance runs the defaults.
OptimizerConfig quick_config() {
    OptimizerConfig cfg;
    cfg.coarse_grid_points = 120;
    return cfg;
}

}  // namespace

TEST_CASE("optimizer config validation") {
    OptimizerConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.tau_min = 5.0;
    cfg.tau_max = 1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = OptimizerConfig{};
    cfg.coarse_grid_points = 3;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("inspection-only costs push the optimum to the right edge") {
    const NumericsConfig numerics;
    const CostParams inspection_only{5.0, 0.0, 0.0};
    const auto result = optimal_interval(table_series(), inspection_only,
                                         {{{0.0}, {0.0}, {0.0}}}, quick_config(),
                                         numerics);
    CHECK(result.boundary_minimum);
    CHECK(result.tau_star == doctest::Approx(20.0).epsilon(1e-3));
}

TEST_CASE("fresh series system optimum near 3.8") {
    const NumericsConfig numerics;
    const auto result = optimal_interval(table_series(), table_costs,
                                         {{{0.0}, {0.0}, {0.0}}}, quick_config(),
                                         numerics);
    // frozen from the independent evaluation (scale parameterization)
    CHECK(result.tau_star == doctest::Approx(3.8045).epsilon(2e-3));
    CHECK(result.cost_rate_at_star ==
          doctest::Approx(cost_rate(table_series(), table_costs, result.tau_star,
                                    {{{0.0}, {0.0}, {0.0}}}, numerics))
              .epsilon(1e-12));
    CHECK_FALSE(result.boundary_minimum);
    CHECK_FALSE(result.immediate_action);
}

TEST_CASE("already-failed system requests immediate action") {
    const NumericsConfig numerics;
    const auto result = optimal_interval(table_series(), table_costs,
                                         {{{25.0}, {0.0}, {0.0}}}, quick_config(),
                                         numerics);
    CHECK(result.immediate_action);
    CHECK(result.tau_star == quick_config().tau_min);
}

TEST_CASE("optimum beats the coarse grid") {
    const NumericsConfig numerics;
    const auto cfg = quick_config();
    const StateVector u{{{5.0}, {5.0}, {5.0}}};
    const auto result = optimal_interval(table_series(), table_costs, u, cfg, numerics);
    const double log_lo = std::log(cfg.tau_min);
    const double log_hi = std::log(cfg.tau_max);
    for (int k = 0; k < cfg.coarse_grid_points; ++k) {
        const double tau = std::exp(
            log_lo + (log_hi - log_lo) * k / (cfg.coarse_grid_points - 1));
        const double value = cost_rate(table_series(), table_costs, tau, u, numerics);
        CHECK(result.cost_rate_at_star <= value * (1.0 + 1e-9));
    }
}

TEST_CASE("optimal interval is deterministic") {
    const NumericsConfig numerics;
    const StateVector u{{{5.0}, {0.0}, {5.0}}};
    const auto a = optimal_interval(table_series(), table_costs, u, quick_config(),
                                    numerics);
    const auto b = optimal_interval(table_series(), table_costs, u, quick_config(),
                                    numerics);
    CHECK(a.tau_star == b.tau_star);
    CHECK(a.cost_rate_at_star == b.cost_rate_at_star);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("scenario sweep preserves order and isolates failures") {
    const NumericsConfig numerics;
    const std::vector<StateVector> scenarios = {
        {{{0.0}, {0.0}, {0.0}}},
        {{{5.0}, {5.0}, {5.0}}},
        {{{0.0}, {0.0}}},  // wrong length: this one errors, others survive
        {{{0.0}, {0.0}, {0.0}}},
    };
    const auto results = scenario_sweep(table_series(), table_costs, scenarios,
                                        quick_config(), numerics);
    REQUIRE(results.size() == 4);
    CHECK(results[0].error.empty());
    CHECK(results[1].error.empty());
    CHECK_FALSE(results[2].error.empty());
    CHECK(results[3].error.empty());
    // duplicates give identical results
    CHECK(results[0].tau_star == results[3].tau_star);
    // aging shrinks the interval
    CHECK(results[1].tau_star < results[0].tau_star);
    CHECK_THROWS_AS(scenario_sweep(table_series(), table_costs, {}, quick_config(),
                                   numerics),
                    std::invalid_argument);
}
