#pragma once

#include <stdexcept>
#include <string>

namespace relinspect {

/// How a component's beta parameter is read when building gamma increments.
/// Scale: mean degradation alpha*t*beta. Rate: mean degradation alpha*t/beta.
enum class GammaParameterization { Scale, Rate };

std::string to_string(GammaParameterization p);
GammaParameterization gamma_parameterization_from_string(const std::string& s);

/// Numerical controls for everything the closed-form model leaves open.
struct NumericsConfig {
    double poisson_tail_tol = 1e-10;
    int quadrature_order = 64;        // damage-convolution integral
    int downtime_subintervals = 8;    // composite rule for expected downtime
    double derivative_rel_step = 1e-4;
    GammaParameterization gamma_parameterization = GammaParameterization::Scale;

    void validate() const {
        if (poisson_tail_tol <= 0.0 || poisson_tail_tol >= 1.0) {
            throw std::invalid_argument("numerics.poisson_tail_tol: must be in (0,1)");
        }
        if (quadrature_order < 8) {
            throw std::invalid_argument("numerics.quadrature_order: must be >= 8");
        }
        if (downtime_subintervals < 1) {
            throw std::invalid_argument("numerics.downtime_subintervals: must be >= 1");
        }
        if (derivative_rel_step <= 0.0) {
            throw std::invalid_argument("numerics.derivative_rel_step: must be > 0");
        }
    }
};

}  // namespace relinspect
