#include "relinspect/system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relinspect {

std::string to_string(Topology t) {
    return t == Topology::Series ? "series" : "parallel";
}

Topology topology_from_string(const std::string& s) {
    if (s == "series") return Topology::Series;
    if (s == "parallel") return Topology::Parallel;
    throw std::invalid_argument("topology: expected 'series' or 'parallel', got '" + s +
                                "'");
}

void SystemModel::validate() const {
    if (components.empty()) {
        throw std::invalid_argument("components: at least one component required");
    }
    if (!(shock.rate > 0.0) || !std::isfinite(shock.rate)) {
        throw std::invalid_argument("shock.rate: must be > 0 and finite");
    }
    for (std::size_t i = 0; i < components.size(); ++i) {
        try {
            components[i].validate();
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("components[" + std::to_string(i) + "]." +
                                        e.what());
        }
    }
}

namespace {

void check_state(const SystemModel& sys, const StateVector& u) {
    if (u.ages.size() != sys.components.size()) {
        throw std::invalid_argument("state vector length " +
                                    std::to_string(u.ages.size()) +
                                    " does not match component count " +
                                    std::to_string(sys.components.size()));
    }
}

bool component_alive(const ComponentModel& c, ComponentAge a) {
    return a.initial_degradation < c.soft_threshold;
}

double reliability_sum(const SystemModel& sys, double t, const StateVector& u,
                       const NumericsConfig& numerics, bool parallel) {
    const int order =
        poisson_truncation_order(sys.shock.rate, t, numerics.poisson_tail_tol);
    const std::size_t n = sys.components.size();
    std::vector<double> p_hard(n);
    std::vector<double> hard_pow(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        p_hard[i] = hard_survival_prob(sys.components[i]);
    }
    // Both topologies are summed as survival terms: the parallel per-m term
    // is 1 - prod(1 - s_i). Written this way the truncated Poisson tail
    // cancels from the series/parallel comparison, so an n = 1 system gives
    // bit-identical values under either topology.
    double sum = 0.0;
    for (int m = 0; m <= order; ++m) {
        double prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double surv =
                hard_pow[i] *
                soft_survival_given_m_shocks(sys.components[i], t, u.ages[i], m,
                                             numerics);
            prod *= parallel ? 1.0 - surv : surv;
        }
        const double term = parallel ? 1.0 - prod : prod;
        sum += term * poisson_pmf(sys.shock.rate, t, m);
        for (std::size_t i = 0; i < n; ++i) {
            hard_pow[i] *= p_hard[i];
        }
    }
    return sum;
}

}  // namespace

double series_reliability(const SystemModel& sys, double t, const StateVector& u,
                          const NumericsConfig& numerics) {
    if (sys.topology != Topology::Series) {
        throw std::invalid_argument("series_reliability: system topology is not series");
    }
    check_state(sys, u);
    if (t < 0.0) {
        throw std::domain_error("series_reliability: t must be nonnegative");
    }
    for (std::size_t i = 0; i < sys.components.size(); ++i) {
        if (!component_alive(sys.components[i], u.ages[i])) {
            return 0.0;
        }
    }
    if (t == 0.0) {
        return 1.0;
    }
    return std::clamp(reliability_sum(sys, t, u, numerics, /*parallel=*/false), 0.0, 1.0);
}

double parallel_reliability(const SystemModel& sys, double t, const StateVector& u,
                            const NumericsConfig& numerics) {
    if (sys.topology != Topology::Parallel) {
        throw std::invalid_argument(
            "parallel_reliability: system topology is not parallel");
    }
    check_state(sys, u);
    if (t < 0.0) {
        throw std::domain_error("parallel_reliability: t must be nonnegative");
    }
    bool any_alive = false;
    for (std::size_t i = 0; i < sys.components.size(); ++i) {
        any_alive = any_alive || component_alive(sys.components[i], u.ages[i]);
    }
    if (!any_alive) {
        return 0.0;
    }
    if (t == 0.0) {
        return 1.0;
    }
    return std::clamp(reliability_sum(sys, t, u, numerics, /*parallel=*/true), 0.0, 1.0);
}

double system_reliability(const SystemModel& sys, double t, const StateVector& u,
                          const NumericsConfig& numerics) {
    return sys.topology == Topology::Series
               ? series_reliability(sys, t, u, numerics)
               : parallel_reliability(sys, t, u, numerics);
}

}  // namespace relinspect
