#pragma once

#include "relinspect/system.hpp"

namespace relinspect {

struct CostParams {
    double inspection_cost;     // charged every inspection
    double replacement_cost;    // charged on system failure within the interval
    double downtime_cost_rate;  // per unit time the system sits failed

    void validate() const;
};

/// Expected downtime within [0, tau]: integral of (1 - R(t; u)) dt, which
/// equals the (tau - t)-weighted integral of the failure-time density by
/// integration by parts. Result lies in [0, tau].
double expected_downtime(const SystemModel& sys, double tau, const StateVector& u,
                         const NumericsConfig& numerics);

/// Same quantity via the failure-time density route. Slower and noisier;
/// kept as an independent cross-check of expected_downtime.
double expected_downtime_density_form(const SystemModel& sys, double tau,
                                      const StateVector& u,
                                      const NumericsConfig& numerics);

/// Failure-time density by central differencing of 1 - R. Tiny negative
/// values from differencing noise clamp to zero; strongly negative values
/// signal a reliability bug and throw.
double failure_time_density(const SystemModel& sys, double t, const StateVector& u,
                            const NumericsConfig& numerics);

/// Expected cost per unit time for inspecting after tau.
double cost_rate(const SystemModel& sys, const CostParams& costs, double tau,
                 const StateVector& u, const NumericsConfig& numerics);

}  // namespace relinspect
