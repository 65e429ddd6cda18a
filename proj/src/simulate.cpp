#include "relinspect/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "relinspect/rng.hpp"

namespace relinspect {

void SimulationPlan::validate() const {
    if (n_paths < 1) {
        throw std::invalid_argument("plan.n_paths: must be >= 1");
    }
    if (time_grid.empty()) {
        throw std::invalid_argument("plan.time_grid: must be non-empty");
    }
    double prev = 0.0;
    for (double t : time_grid) {
        if (!(t > prev)) {
            throw std::invalid_argument(
                "plan.time_grid: must be strictly increasing and positive");
        }
        prev = t;
    }
    if (!(crossing_mesh_density > 0.0)) {
        throw std::invalid_argument("plan.crossing_mesh_density: must be > 0");
    }
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// One path of the shared-shock degradation process. Checkpoints are the
/// sorted `mesh` times plus sampled shock instants; returns the system
/// failure time, assigned to the checkpoint where failure is first seen
/// (exactly the shock instant for hard failures). +inf if the path survives.
double sample_failure_time(Sampler& rng, const SystemModel& sys, const StateVector& u,
                           const std::vector<double>& mesh,
                           const NumericsConfig& numerics) {
    const std::size_t n = sys.components.size();
    const bool series = sys.topology == Topology::Series;
    const double horizon = mesh.back();

    std::vector<double> degradation(n);
    std::vector<char> alive(n, 1);
    std::size_t alive_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        degradation[i] = u.ages[i].initial_degradation;
        alive[i] = degradation[i] < sys.components[i].soft_threshold;
        alive_count += alive[i] ? 1 : 0;
    }
    if (series ? alive_count < n : alive_count == 0) {
        return 0.0;
    }

    double t_prev = 0.0;
    double next_shock = rng.exponential(sys.shock.rate);
    std::size_t mesh_idx = 0;

    while (mesh_idx < mesh.size() || next_shock <= horizon) {
        const bool is_shock =
            next_shock <= horizon &&
            (mesh_idx >= mesh.size() || next_shock <= mesh[mesh_idx]);
        const double t_now = is_shock ? next_shock : mesh[mesh_idx];

        const double dt = t_now - t_prev;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i] || dt <= 0.0) continue;
            const auto& c = sys.components[i];
            degradation[i] += rng.gamma(
                c.gamma_shape_rate * dt,
                effective_gamma_scale(c, numerics.gamma_parameterization));
        }
        if (is_shock) {
            for (std::size_t i = 0; i < n; ++i) {
                if (!alive[i]) continue;
                const auto& c = sys.components[i];
                const double magnitude = rng.normal(c.magnitude_mean, c.magnitude_sd);
                const double damage = rng.normal(c.damage_mean, c.damage_sd);
                if (magnitude >= c.hard_threshold) {
                    alive[i] = 0;
                    --alive_count;
                } else {
                    degradation[i] += damage;  // applied as sampled, sign included
                }
            }
            next_shock = t_now + rng.exponential(sys.shock.rate);
        } else {
            ++mesh_idx;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (alive[i] && degradation[i] >= sys.components[i].soft_threshold) {
                alive[i] = 0;
                --alive_count;
            }
        }
        if (series ? alive_count < n : alive_count == 0) {
            return t_now;
        }
        t_prev = t_now;
    }
    return kInf;
}

/// Deterministic block-parallel reduction over paths: each worker claims
/// whole blocks, partial results are merged in block order afterwards.
template <typename Accum, typename PathFn>
std::vector<Accum> run_paths(long n_paths, int threads, const PathFn& per_path) {
    constexpr long kBlock = 1024;
    const long n_blocks = (n_paths + kBlock - 1) / kBlock;
    int n_threads = threads > 0 ? threads
                                : static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads < 1) n_threads = 1;
    n_threads = static_cast<int>(
        std::min<long>(n_threads, n_blocks));

    std::vector<Accum> partials(static_cast<std::size_t>(n_blocks));
    std::atomic<long> next_block{0};
    auto worker = [&] {
        for (;;) {
            const long b = next_block.fetch_add(1);
            if (b >= n_blocks) break;
            const long lo = b * kBlock;
            const long hi = std::min(lo + kBlock, n_paths);
            for (long p = lo; p < hi; ++p) {
                per_path(p, partials[static_cast<std::size_t>(b)]);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads - 1));
    for (int i = 1; i < n_threads; ++i) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& th : pool) {
        th.join();
    }
    return partials;
}

}  // namespace

SimulationEstimate simulate_reliability(const SystemModel& sys, const StateVector& u,
                                        const SimulationPlan& plan,
                                        const NumericsConfig& numerics) {
    plan.validate();
    sys.validate();
    if (u.ages.size() != sys.components.size()) {
        throw std::invalid_argument("simulate_reliability: state vector length mismatch");
    }

    struct Accum {
        std::vector<long> survived;
    };
    const std::size_t n_times = plan.time_grid.size();
    auto partials = run_paths<Accum>(
        plan.n_paths, plan.threads, [&](long p, Accum& acc) {
            if (acc.survived.empty()) acc.survived.assign(n_times, 0);
            Sampler rng = Sampler::for_path(plan.seed, static_cast<std::uint64_t>(p));
            const double T = sample_failure_time(rng, sys, u, plan.time_grid, numerics);
            for (std::size_t k = 0; k < n_times; ++k) {
                acc.survived[k] += plan.time_grid[k] < T ? 1 : 0;
            }
        });

    std::vector<long> survived(n_times, 0);
    for (const auto& acc : partials) {
        for (std::size_t k = 0; k < acc.survived.size(); ++k) {
            survived[k] += acc.survived[k];
        }
    }

    SimulationEstimate est;
    est.reliability_at.reserve(n_times);
    const double N = static_cast<double>(plan.n_paths);
    for (std::size_t k = 0; k < n_times; ++k) {
        const double phat = static_cast<double>(survived[k]) / N;
        est.reliability_at.push_back(
            {plan.time_grid[k], phat, std::sqrt(phat * (1.0 - phat) / N)});
    }
    return est;
}

SimulationEstimate simulate_expected_downtime(const SystemModel& sys,
                                              const StateVector& u, double tau,
                                              const SimulationPlan& plan,
                                              const NumericsConfig& numerics) {
    if (!(tau > 0.0)) {
        throw std::domain_error("simulate_expected_downtime: tau must be positive");
    }
    plan.validate();
    sys.validate();
    if (u.ages.size() != sys.components.size()) {
        throw std::invalid_argument(
            "simulate_expected_downtime: state vector length mismatch");
    }

    const long n_mesh =
        std::max<long>(2, static_cast<long>(std::ceil(tau * plan.crossing_mesh_density)));
    std::vector<double> mesh(static_cast<std::size_t>(n_mesh));
    for (long k = 0; k < n_mesh; ++k) {
        mesh[static_cast<std::size_t>(k)] = tau * static_cast<double>(k + 1) / n_mesh;
    }

    struct Accum {
        double sum = 0.0;
        double sum_sq = 0.0;
    };
    auto partials = run_paths<Accum>(
        plan.n_paths, plan.threads, [&](long p, Accum& acc) {
            Sampler rng = Sampler::for_path(plan.seed, static_cast<std::uint64_t>(p));
            const double T = sample_failure_time(rng, sys, u, mesh, numerics);
            const double down = T < tau ? tau - T : 0.0;
            acc.sum += down;
            acc.sum_sq += down * down;
        });

    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto& acc : partials) {
        sum += acc.sum;
        sum_sq += acc.sum_sq;
    }
    const double N = static_cast<double>(plan.n_paths);
    const double mean = sum / N;
    const double var = std::max(0.0, sum_sq / N - mean * mean);

    SimulationEstimate est;
    est.expected_downtime = mean;
    est.expected_downtime_se = plan.n_paths > 1 ? std::sqrt(var / (N - 1.0)) : 0.0;
    return est;
}

}  // namespace relinspect
