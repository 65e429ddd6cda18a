#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace relinspect {

/// Deterministic sampling built on mt19937_64. The distribution transforms
/// live here rather than in <random> because libstdc++/libc++ leave them
/// implementation-defined; these produce identical streams on any platform.
///
/// Parallel runs use one substream per path: path p of a run seeded with s
/// draws from mt19937_64 seeded with splitmix64(s ^ splitmix64(p + 1)).
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    static Sampler for_path(std::uint64_t run_seed, std::uint64_t path_index) {
        return Sampler(splitmix64(run_seed ^ splitmix64(path_index + 1)));
    }

    /// Uniform on (0, 1), 53-bit resolution, never exactly 0.
    double uniform();

    /// Standard normal via the inverse-CDF transform.
    double standard_normal();

    double normal(double mean, double sd) { return mean + sd * standard_normal(); }

    /// Gamma(shape, scale) via Marsaglia-Tsang squeeze, with the power boost
    /// for shape < 1. Valid for any shape > 0.
    double gamma(double shape, double scale);

    /// Poisson arrival count is never needed directly; exponential gaps are.
    double exponential(double rate) { return -std::log(uniform()) / rate; }

private:
    std::mt19937_64 engine_;
};

/// Inverse standard normal CDF (Acklam's rational approximation refined by
/// one Halley step; ~1e-15 absolute over (0,1)).
double standard_normal_quantile(double p);

}  // namespace relinspect
