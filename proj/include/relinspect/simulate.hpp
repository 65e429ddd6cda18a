#pragma once

#include <cstdint>
#include <vector>

#include "relinspect/system.hpp"

namespace relinspect {

/// Controls for one simulation run. Generator: per-path mt19937_64 seeded
/// through splitmix64 substreams (see rng.hpp), so results are independent
/// of the thread count.
struct SimulationPlan {
    long n_paths = 100000;
    std::vector<double> time_grid;  // strictly increasing, all > 0
    std::uint64_t seed = 0;
    int threads = 0;  // 0 = hardware concurrency
    // Soft-crossing checkpoints per unit time for failure-time resolution
    // (downtime estimation). Crossings are assigned to the first checkpoint
    // at/above threshold; shock instants are always checkpoints.
    double crossing_mesh_density = 100.0;

    void validate() const;
};

struct ReliabilityPoint {
    double time;
    double estimate;
    double standard_error;
};

struct SimulationEstimate {
    std::vector<ReliabilityPoint> reliability_at;
    double expected_downtime = 0.0;
    double expected_downtime_se = 0.0;
};

/// Path-sampled system reliability at every grid time. Exact at grid times:
/// one shared shock sequence per path, gamma increments bridged between
/// consecutive event times, hard/soft failure checked at every shock instant
/// and grid point (the gamma path is monotone in between).
SimulationEstimate simulate_reliability(const SystemModel& sys, const StateVector& u,
                                        const SimulationPlan& plan,
                                        const NumericsConfig& numerics);

/// Path-sampled E[downtime in [0, tau]]: per path, max(0, tau - T) with T the
/// system failure time resolved on the crossing mesh.
SimulationEstimate simulate_expected_downtime(const SystemModel& sys,
                                              const StateVector& u, double tau,
                                              const SimulationPlan& plan,
                                              const NumericsConfig& numerics);

}  // namespace relinspect
