#pragma once

#include <vector>

#include "relinspect/component.hpp"

namespace relinspect {

enum class Topology { Series, Parallel };

std::string to_string(Topology t);
Topology topology_from_string(const std::string& s);

/// System of components under one shared shock process. The shared shock
/// count is what couples failures across components.
struct SystemModel {
    Topology topology;
    std::vector<ComponentModel> components;
    ShockProcess shock;

    void validate() const;
};

/// Initial degradation per component, same order as SystemModel::components.
struct StateVector {
    std::vector<ComponentAge> ages;
};

/// Series-system reliability: the single shared sum over the shock count,
/// not a product of per-component reliabilities.
double series_reliability(const SystemModel& sys, double t, const StateVector& u,
                          const NumericsConfig& numerics);

/// Parallel-system reliability, same shared-shock structure.
double parallel_reliability(const SystemModel& sys, double t, const StateVector& u,
                            const NumericsConfig& numerics);

/// Dispatch on topology.
double system_reliability(const SystemModel& sys, double t, const StateVector& u,
                          const NumericsConfig& numerics);

}  // namespace relinspect
