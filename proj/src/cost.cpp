#include "relinspect/cost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relinspect/quadrature.hpp"

namespace relinspect {

namespace {
constexpr int kDowntimeQuadOrder = 32;
}

void CostParams::validate() const {
    if (inspection_cost < 0.0 || replacement_cost < 0.0 || downtime_cost_rate < 0.0) {
        throw std::invalid_argument("costs: all cost parameters must be >= 0");
    }
    if (inspection_cost == 0.0 && replacement_cost == 0.0 && downtime_cost_rate == 0.0) {
        throw std::invalid_argument("costs: at least one cost parameter must be > 0");
    }
}

double expected_downtime(const SystemModel& sys, double tau, const StateVector& u,
                         const NumericsConfig& numerics) {
    if (tau <= 0.0) {
        throw std::domain_error("expected_downtime: tau must be positive");
    }
    auto unavailability = [&](double t) {
        return 1.0 - system_reliability(sys, t, u, numerics);
    };
    const double v = composite_gauss_legendre(unavailability, 0.0, tau,
                                              kDowntimeQuadOrder,
                                              numerics.downtime_subintervals);
    return std::clamp(v, 0.0, tau);
}

double failure_time_density(const SystemModel& sys, double t, const StateVector& u,
                            const NumericsConfig& numerics) {
    if (t <= 0.0) {
        throw std::domain_error("failure_time_density: t must be positive");
    }
    const double h = std::max(numerics.derivative_rel_step * t, 1e-6);
    const double lo = std::max(t - h, 0.0);
    const double r_lo = system_reliability(sys, lo, u, numerics);
    const double r_hi = system_reliability(sys, t + h, u, numerics);
    const double density = (r_lo - r_hi) / ((t + h) - lo);
    if (density < 0.0) {
        if (density < -1e-8) {
            throw std::runtime_error(
                "failure_time_density: strongly negative density " +
                std::to_string(density) + " at t=" + std::to_string(t) +
                "; reliability evaluation is inconsistent");
        }
        return 0.0;
    }
    return density;
}

double expected_downtime_density_form(const SystemModel& sys, double tau,
                                      const StateVector& u,
                                      const NumericsConfig& numerics) {
    if (tau <= 0.0) {
        throw std::domain_error("expected_downtime_density_form: tau must be positive");
    }
    auto integrand = [&](double t) {
        return (tau - t) * failure_time_density(sys, t, u, numerics);
    };
    // Doubled subdivision: the differenced integrand is rougher than 1 - R.
    const double v = composite_gauss_legendre(integrand, 0.0, tau, kDowntimeQuadOrder,
                                              2 * numerics.downtime_subintervals);
    const double already_failed = 1.0 - system_reliability(sys, 0.0, u, numerics);
    return std::clamp(v + tau * already_failed, 0.0, tau);
}

double cost_rate(const SystemModel& sys, const CostParams& costs, double tau,
                 const StateVector& u, const NumericsConfig& numerics) {
    if (tau <= 0.0) {
        throw std::domain_error("cost_rate: tau must be positive");
    }
    const double reliability_at_tau = system_reliability(sys, tau, u, numerics);
    const double downtime = expected_downtime(sys, tau, u, numerics);
    return (costs.inspection_cost + costs.replacement_cost * (1.0 - reliability_at_tau) +
            costs.downtime_cost_rate * downtime) /
           tau;
}

}  // namespace relinspect
