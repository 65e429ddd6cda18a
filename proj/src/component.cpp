#include "relinspect/component.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relinspect/quadrature.hpp"

namespace relinspect {

std::string to_string(GammaParameterization p) {
    return p == GammaParameterization::Scale ? "scale" : "rate";
}

GammaParameterization gamma_parameterization_from_string(const std::string& s) {
    if (s == "scale") return GammaParameterization::Scale;
    if (s == "rate") return GammaParameterization::Rate;
    throw std::invalid_argument("gamma_parameterization: expected 'scale' or 'rate', got '" +
                                s + "'");
}

void ComponentModel::validate() const {
    auto require_positive = [](double v, const char* field) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string(field) + ": must be > 0 and finite");
        }
    };
    require_positive(soft_threshold, "soft_threshold");
    require_positive(hard_threshold, "hard_threshold");
    require_positive(gamma_shape_rate, "gamma_shape_rate");
    require_positive(gamma_scale, "gamma_scale");
    require_positive(damage_sd, "damage_sd");
    require_positive(magnitude_sd, "magnitude_sd");
    if (!std::isfinite(damage_mean) || !std::isfinite(magnitude_mean)) {
        throw std::invalid_argument("damage_mean/magnitude_mean: must be finite");
    }
    // The damage convolution integrates from zero; the negative tail must be
    // negligible or the closed-form survival misstates the model.
    const double p_negative = normal_cdf(0.0, damage_mean, damage_sd);
    if (p_negative >= 1e-3) {
        throw std::invalid_argument(
            "damage_mean/damage_sd: P(single damage < 0) = " + std::to_string(p_negative) +
            " >= 1e-3; model rejected");
    }
}

double effective_gamma_scale(const ComponentModel& c, GammaParameterization p) {
    return p == GammaParameterization::Scale ? c.gamma_scale : 1.0 / c.gamma_scale;
}

double hard_survival_prob(const ComponentModel& c) {
    return normal_cdf(c.hard_threshold, c.magnitude_mean, c.magnitude_sd);
}

double soft_survival_given_m_shocks(const ComponentModel& c, double t,
                                    ComponentAge u, int m,
                                    const NumericsConfig& numerics) {
    if (t <= 0.0) {
        throw std::domain_error("soft_survival_given_m_shocks: t must be positive");
    }
    const double headroom = c.soft_threshold - u.initial_degradation;
    if (headroom <= 0.0) {
        return 0.0;
    }
    const double shape = c.gamma_shape_rate * t;
    const double scale = effective_gamma_scale(c, numerics.gamma_parameterization);
    if (m == 0) {
        return gamma_cdf(headroom, shape, scale);
    }
    const double conv_mean = m * c.damage_mean;
    const double conv_sd = std::sqrt(static_cast<double>(m)) * c.damage_sd;
    const double lo = std::max(0.0, conv_mean - 8.0 * conv_sd);
    const double hi = std::min(headroom, conv_mean + 8.0 * conv_sd);
    if (lo >= hi) {
        // All damage mass lies beyond the headroom (or below zero, where the
        // written bounds carry no mass either way).
        return 0.0;
    }
    auto integrand = [&](double y) {
        return gamma_cdf(headroom - y, shape, scale) *
               mfold_damage_density(m, c.damage_mean, c.damage_sd, y);
    };
    return gauss_legendre(integrand, lo, hi, numerics.quadrature_order);
}

double component_reliability(const ComponentModel& c, const ShockProcess& shock,
                             double t, ComponentAge u,
                             const NumericsConfig& numerics) {
    if (t < 0.0) {
        throw std::domain_error("component_reliability: t must be nonnegative");
    }
    if (u.initial_degradation >= c.soft_threshold) {
        return 0.0;
    }
    if (t == 0.0) {
        return 1.0;
    }
    const int order =
        poisson_truncation_order(shock.rate, t, numerics.poisson_tail_tol);
    const double p_hard = hard_survival_prob(c);
    double sum = 0.0;
    double hard_pow = 1.0;
    for (int m = 0; m <= order; ++m) {
        sum += hard_pow * soft_survival_given_m_shocks(c, t, u, m, numerics) *
               poisson_pmf(shock.rate, t, m);
        hard_pow *= p_hard;
    }
    return std::clamp(sum, 0.0, 1.0);
}

}  // namespace relinspect
