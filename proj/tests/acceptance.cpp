// Acceptance suite: end-to-end checks of the published-example
// reproductions, oracle equivalence, internal consistency, and determinism.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "relinspect/commands.hpp"
#include "relinspect/config.hpp"
#include "relinspect/optimize.hpp"
#include "relinspect/simulate.hpp"

using namespace relinspect;

namespace {

const std::string kConfigDir = RELINSPECT_CONFIG_DIR;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s: criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

// ---------------------------------------------------------------------------

// Fresh series system under the scale reading of beta: tau* within +/-20% of
// the published 3.3, in under 5 seconds. If outside tolerance the rate
// reading must be reported alongside, not hidden.
void criterion1() {
    const auto start = std::chrono::steady_clock::now();
    RunConfig config = load_config(kConfigDir + "/series3.json");
    const StateVector fresh{{{0.0}, {0.0}, {0.0}}};
    const auto result = optimal_interval(config.system, config.costs, fresh,
                                         config.optimizer, config.numerics);
    const double elapsed = seconds_since(start);
    const bool in_tolerance = std::fabs(result.tau_star - 3.3) <= 0.2 * 3.3;
    std::string detail = "series tau*(0,0,0) = " + fmt(result.tau_star) +
                         " (scale parameterization, target 3.3 +/- 20%), " +
                         fmt(elapsed) + " s";
    if (!in_tolerance) {
        NumericsConfig rate = config.numerics;
        rate.gamma_parameterization = GammaParameterization::Rate;
        const auto alt = optimal_interval(config.system, config.costs, fresh,
                                          config.optimizer, rate);
        detail += "; rate parameterization gives " + fmt(alt.tau_star);
    }
    report(1, in_tolerance && elapsed < 5.0, detail);
}

// Full 21-scenario series sweep. Run under the rate reading of beta, which
// is the reading that reproduces the published orderings (the source tables
// are ambiguous about the parameterization; see the bundled README).
// Checks: monotone pairs (1,8), (8,16), (16,17), (1,21) and scenarios 18-21
// being the four smallest, in under 60 seconds.
void criterion2() {
    const auto start = std::chrono::steady_clock::now();
    RunConfig config = load_config(kConfigDir + "/series3.json");
    config.numerics.gamma_parameterization = GammaParameterization::Rate;
    const auto results = scenario_sweep(config.system, config.costs, config.scenarios,
                                        config.optimizer, config.numerics);
    const double elapsed = seconds_since(start);

    bool ok = results.size() == 21;
    std::vector<double> tau(results.size());
    for (std::size_t k = 0; k < results.size(); ++k) {
        ok = ok && results[k].error.empty();
        tau[k] = results[k].tau_star;
    }
    std::string detail;
    if (ok) {
        const bool pairs = tau[0] >= tau[7] && tau[7] >= tau[15] &&
                           tau[15] >= tau[16] && tau[0] >= tau[20];
        auto sorted = tau;
        std::sort(sorted.begin(), sorted.end());
        const double fourth_smallest = sorted[3];
        const bool smallest = tau[17] <= fourth_smallest && tau[18] <= fourth_smallest &&
                              tau[19] <= fourth_smallest && tau[20] <= fourth_smallest;
        ok = pairs && smallest && elapsed < 60.0;
        detail = "series sweep (rate parameterization): tau*[1,8,16,17,21] = " +
                 fmt(tau[0]) + ", " + fmt(tau[7]) + ", " + fmt(tau[15]) + ", " +
                 fmt(tau[16]) + ", " + fmt(tau[20]) +
                 "; ordered pairs " + (pairs ? "ok" : "VIOLATED") +
                 "; scenarios 18-21 smallest " + (smallest ? "ok" : "VIOLATED") + "; " +
                 fmt(elapsed) + " s";
    } else {
        detail = "sweep failed to produce 21 clean results";
    }
    report(2, ok, detail);
}

// Parallel two-component sweep: scenario 1 is the maximum and lands within
// +/-20% of the published 5.23; scenario 12 is the minimum. Rate reading,
// same rationale as criterion 2.
void criterion3() {
    RunConfig config = load_config(kConfigDir + "/parallel2.json");
    config.numerics.gamma_parameterization = GammaParameterization::Rate;
    const auto results = scenario_sweep(config.system, config.costs, config.scenarios,
                                        config.optimizer, config.numerics);
    bool ok = results.size() == 12;
    std::string detail;
    if (ok) {
        std::size_t arg_max = 0;
        std::size_t arg_min = 0;
        for (std::size_t k = 0; k < results.size(); ++k) {
            ok = ok && results[k].error.empty();
            if (results[k].tau_star > results[arg_max].tau_star) arg_max = k;
            if (results[k].tau_star < results[arg_min].tau_star) arg_min = k;
        }
        const double tau1 = results[0].tau_star;
        const bool target = std::fabs(tau1 - 5.23) <= 0.2 * 5.23;
        ok = ok && arg_max == 0 && arg_min == 11 && target;
        detail = "parallel sweep (rate parameterization): tau*(0,0) = " + fmt(tau1) +
                 " (target 5.23 +/- 20%), max at scenario " +
                 std::to_string(arg_max + 1) + ", min at scenario " +
                 std::to_string(arg_min + 1) + " = " + fmt(results[arg_min].tau_star);
    } else {
        detail = "sweep failed to produce 12 clean results";
    }
    report(3, ok, detail);
}

// ---------------------------------------------------------------------------

struct OracleCase {
    std::string name;
    SystemModel system;
    NumericsConfig numerics;
};

// Five randomized-but-frozen parameter sets with shock rates high enough
// that the shock paths carry real probability mass.
std::vector<OracleCase> randomized_cases() {
    std::mt19937 gen(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<OracleCase> cases;
    for (int k = 0; k < 5; ++k) {
        const std::size_t n = 1 + static_cast<std::size_t>(3.0 * unit(gen)) % 3;
        SystemModel sys;
        sys.topology = unit(gen) < 0.5 ? Topology::Series : Topology::Parallel;
        sys.shock.rate = 0.05 + 0.25 * unit(gen);
        for (std::size_t i = 0; i < n; ++i) {
            ComponentModel c{};
            c.soft_threshold = 10.0 + 30.0 * unit(gen);
            c.gamma_shape_rate = 1.0 + 3.0 * unit(gen);
            c.gamma_scale = 0.4 + 1.2 * unit(gen);
            c.damage_mean = 1.5 + 2.0 * unit(gen);
            c.damage_sd = c.damage_mean / (6.0 + 4.0 * unit(gen));
            c.magnitude_mean = 1.0 + 1.5 * unit(gen);
            c.magnitude_sd = 0.1 + 0.3 * unit(gen);
            c.hard_threshold = c.magnitude_mean + (2.0 + 2.0 * unit(gen)) * c.magnitude_sd;
            sys.components.push_back(c);
        }
        sys.validate();
        cases.push_back({"random-" + std::to_string(k + 1), sys, NumericsConfig{}});
    }
    return cases;
}

// Oracle equivalence: analytic reliability and expected downtime against the
// Monte Carlo simulator at N = 1e5, ten time points spanning (0, 2 tau*].
// Tolerance 3 SE plus a 1e-3 absolute allowance for the analytic model's
// negative-damage-tail truncation, which the simulator does not share.
void criterion4() {
    const auto start = std::chrono::steady_clock::now();
    const CostParams costs{5.0, 10.0, 80.0};
    const long n_paths = 100000;

    std::vector<OracleCase> cases;
    {
        RunConfig series = load_config(kConfigDir + "/series3.json");
        cases.push_back({"series3", series.system, series.numerics});
        RunConfig parallel = load_config(kConfigDir + "/parallel2.json");
        cases.push_back({"parallel2", parallel.system, parallel.numerics});
    }
    for (auto& c : randomized_cases()) {
        cases.push_back(std::move(c));
    }

    bool ok = true;
    std::string worst;
    double worst_margin = -1e30;
    for (const auto& oracle_case : cases) {
        const auto& sys = oracle_case.system;
        const auto& numerics = oracle_case.numerics;
        StateVector fresh;
        fresh.ages.assign(sys.components.size(), ComponentAge{0.0});

        OptimizerConfig opt;
        const auto best = optimal_interval(sys, costs, fresh, opt, numerics);
        const double horizon = 2.0 * best.tau_star;

        SimulationPlan plan;
        plan.n_paths = n_paths;
        plan.seed = 777;
        for (int k = 1; k <= 10; ++k) {
            plan.time_grid.push_back(horizon * k / 10.0);
        }
        const auto est = simulate_reliability(sys, fresh, plan, numerics);
        for (const auto& point : est.reliability_at) {
            const double analytic = system_reliability(sys, point.time, fresh, numerics);
            const double se =
                std::max(point.standard_error,
                         std::sqrt(analytic * (1.0 - analytic) / n_paths));
            const double margin = std::fabs(point.estimate - analytic) -
                                  (3.0 * se + 1e-3);
            if (margin > worst_margin) {
                worst_margin = margin;
                worst = oracle_case.name + " R(t=" + fmt(point.time) + ")";
            }
            ok = ok && margin <= 0.0;
        }

        const double tau = best.tau_star;
        const auto down = simulate_expected_downtime(sys, fresh, tau, plan, numerics);
        const double analytic_down = expected_downtime(sys, tau, fresh, numerics);
        const double margin = std::fabs(down.expected_downtime - analytic_down) -
                              (3.0 * down.expected_downtime_se + 1e-3);
        if (margin > worst_margin) {
            worst_margin = margin;
            worst = oracle_case.name + " E[downtime](tau=" + fmt(tau) + ")";
        }
        ok = ok && margin <= 0.0;
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 120.0;
    report(4, ok,
           std::to_string(cases.size()) +
               " systems vs Monte Carlo at N=1e5; tightest margin " +
               fmt(-worst_margin) + " at " + worst + "; " + fmt(elapsed) + " s");
}

// ---------------------------------------------------------------------------

void criterion5() {
    bool ok = true;
    std::string detail;
    const NumericsConfig numerics;
    RunConfig series = load_config(kConfigDir + "/series3.json");
    RunConfig parallel = load_config(kConfigDir + "/parallel2.json");

    // identity-form vs derivative-form expected downtime, 1e-6 relative
    {
        const StateVector fresh{{{0.0}, {0.0}, {0.0}}};
        const double a = expected_downtime(series.system, 3.3, fresh, numerics);
        const double b = expected_downtime_density_form(series.system, 3.3, fresh,
                                                        numerics);
        const bool pass = std::fabs(a - b) / a < 1e-6;
        ok = ok && pass;
        if (!pass) detail += " [downtime-forms disagree]";
    }
    // lambda -> 0 reduction, 1e-10 absolute
    {
        SystemModel one{Topology::Series, {series.system.components[0]}, {1e-300}};
        bool pass = true;
        for (double t : {1.0, 3.3, 6.0}) {
            const double closed = gamma_cdf(20.0, 3.0 * t, 1.0);
            pass = pass && std::fabs(system_reliability(one, t, {{{0.0}}}, numerics) -
                                     closed) < 1e-10;
        }
        ok = ok && pass;
        if (!pass) detail += " [lambda->0 reduction]";
    }
    // n = 1: series = parallel = component, 1e-12
    {
        SystemModel s1{Topology::Series, {series.system.components[1]}, {0.3}};
        SystemModel p1{Topology::Parallel, {series.system.components[1]}, {0.3}};
        bool pass = true;
        for (double t : {0.5, 2.0, 7.0}) {
            const double rs = series_reliability(s1, t, {{{3.0}}}, numerics);
            const double rp = parallel_reliability(p1, t, {{{3.0}}}, numerics);
            const double rc = component_reliability(s1.components[0], s1.shock, t,
                                                    {3.0}, numerics);
            pass = pass && std::fabs(rs - rp) < 1e-12 && std::fabs(rs - rc) < 1e-12;
        }
        ok = ok && pass;
        if (!pass) detail += " [n=1 equality]";
    }
    // R_p >= R_s on 100 randomized 2-component systems
    {
        std::mt19937 gen(555);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        bool pass = true;
        for (int trial = 0; trial < 100; ++trial) {
            SystemModel sys;
            sys.shock.rate = 0.01 + 0.5 * unit(gen);
            for (int i = 0; i < 2; ++i) {
                ComponentModel c{};
                c.soft_threshold = 8.0 + 30.0 * unit(gen);
                c.gamma_shape_rate = 0.5 + 3.0 * unit(gen);
                c.gamma_scale = 0.3 + 1.5 * unit(gen);
                c.damage_mean = 1.5 + 2.0 * unit(gen);
                c.damage_sd = c.damage_mean / 8.0;
                c.magnitude_mean = 1.0 + unit(gen);
                c.magnitude_sd = 0.2;
                c.hard_threshold = c.magnitude_mean + (1.0 + 2.0 * unit(gen)) * 0.2;
                sys.components.push_back(c);
            }
            const double t = 0.5 + 8.0 * unit(gen);
            const StateVector u{{{0.3 * unit(gen) * sys.components[0].soft_threshold},
                                 {0.3 * unit(gen) * sys.components[1].soft_threshold}}};
            sys.topology = Topology::Series;
            const double rs = series_reliability(sys, t, u, numerics);
            sys.topology = Topology::Parallel;
            const double rp = parallel_reliability(sys, t, u, numerics);
            pass = pass && rp >= rs - 1e-12;
        }
        ok = ok && pass;
        if (!pass) detail += " [R_p >= R_s]";
    }
    // m-fold densities normalize within 1e-8 (checked in the kernel suite
    // too; repeated here because this criterion is the contract)
    {
        bool pass = true;
        for (int m = 1; m <= 10; ++m) {
            const double mean = m * 2.5;
            const double sd = std::sqrt(static_cast<double>(m)) * 0.2;
            const int n = 20000;
            const double lo = mean - 10.0 * sd;
            const double hi = mean + 10.0 * sd;
            double sum = 0.0;
            for (int k = 0; k <= n; ++k) {
                const double y = lo + (hi - lo) * k / n;
                const double f = mfold_damage_density(m, 2.5, 0.2, y);
                sum += (k == 0 || k == n) ? 0.5 * f : f;
            }
            pass = pass && std::fabs(sum * (hi - lo) / n - 1.0) < 1e-8;
        }
        ok = ok && pass;
        if (!pass) detail += " [m-fold normalization]";
    }
    // Poisson truncation tail bound
    {
        bool pass = true;
        for (double rate : {2.5e-3, 0.1, 1.0, 4.0}) {
            for (double t : {0.5, 3.3, 15.0}) {
                const int order = poisson_truncation_order(rate, t, 1e-10);
                double cum = 0.0;
                for (int m = 0; m <= order; ++m) {
                    cum += poisson_pmf(rate, t, m);
                }
                pass = pass && cum >= 1.0 - 1e-10 && order >= 2;
            }
        }
        ok = ok && pass;
        if (!pass) detail += " [poisson truncation]";
    }
    report(5, ok, detail.empty() ? "all internal-consistency identities hold" : detail);
}

// Determinism: byte-identical simulate output under a fixed seed, sweep and
// simulation results invariant to the thread count.
void criterion6() {
    bool ok = true;
    std::string detail;
    RunConfig config = load_config(kConfigDir + "/series3.json");
    const StateVector fresh{{{0.0}, {0.0}, {0.0}}};

    std::ostringstream a;
    std::ostringstream b;
    cmd_simulate(config, fresh, 20000, 1234, 3.3, 0, {}, a);
    cmd_simulate(config, fresh, 20000, 1234, 3.3, 0, {}, b);
    if (a.str() != b.str()) {
        ok = false;
        detail += " [simulate not byte-stable]";
    }

    std::ostringstream t1;
    std::ostringstream t4;
    cmd_simulate(config, fresh, 20000, 1234, 3.3, 1, {}, t1);
    cmd_simulate(config, fresh, 20000, 1234, 3.3, 4, {}, t4);
    if (t1.str() != t4.str()) {
        ok = false;
        detail += " [simulate varies with threads]";
    }

    config.optimizer.coarse_grid_points = 60;
    config.optimizer.refine_tol = 1e-3;
    const std::vector<StateVector> scenarios(config.scenarios.begin(),
                                             config.scenarios.begin() + 3);
    std::ostringstream s1;
    std::ostringstream s2;
    cmd_table(config, scenarios, s1);
    cmd_table(config, scenarios, s2);
    if (s1.str() != s2.str()) {
        ok = false;
        detail += " [sweep not deterministic]";
    }
    report(6, ok, detail.empty() ? "byte-identical output under fixed seed" : detail);
}

}  // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }
    if (g_failures != 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
