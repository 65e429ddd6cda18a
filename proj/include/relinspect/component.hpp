#pragma once

#include "relinspect/kernels.hpp"
#include "relinspect/numerics.hpp"

namespace relinspect {

/// Per-component model: gamma-process degradation toward a soft threshold,
/// plus shock damage (added to degradation) and shock magnitude (instant
/// failure above the hard threshold).
struct ComponentModel {
    double soft_threshold;    // H
    double hard_threshold;    // D
    double gamma_shape_rate;  // shape grows as gamma_shape_rate * t
    double gamma_scale;       // beta, read per GammaParameterization
    double damage_mean;       // per-shock degradation increment, Normal mean
    double damage_sd;
    double magnitude_mean;    // per-shock stress, Normal mean
    double magnitude_sd;

    /// Throws std::invalid_argument naming the offending field. Also rejects
    /// models where a single damage goes negative with probability >= 1e-3,
    /// since the damage convolution integrates from zero.
    void validate() const;
};

/// Accumulated degradation at the start of the planning interval.
/// A value at or above the soft threshold denotes an already-failed
/// component; reliability evaluates to 0 for it rather than erroring.
struct ComponentAge {
    double initial_degradation = 0.0;
};

/// Effective gamma scale under the configured parameterization.
double effective_gamma_scale(const ComponentModel& c, GammaParameterization p);

/// Probability a single shock magnitude stays below the hard threshold.
double hard_survival_prob(const ComponentModel& c);

/// P(degradation + m-shock damage + u stays below the soft threshold by t),
/// conditional on exactly m shocks.
double soft_survival_given_m_shocks(const ComponentModel& c, double t,
                                    ComponentAge u, int m,
                                    const NumericsConfig& numerics);

/// Component survival probability over (0, t] given initial degradation u.
/// t = 0 returns 1 if u is below threshold, 0 otherwise.
double component_reliability(const ComponentModel& c, const ShockProcess& shock,
                             double t, ComponentAge u,
                             const NumericsConfig& numerics);

}  // namespace relinspect
