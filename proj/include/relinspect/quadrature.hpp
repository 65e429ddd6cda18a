#pragma once

#include <functional>
#include <vector>

namespace relinspect {

/// Gauss-Legendre nodes/weights on [-1, 1] for a given order.
/// Rules are computed once per order and cached for the process lifetime.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    static const GaussLegendreRule& of(int order);
};

/// Integrate f over [a, b] with a single Gauss-Legendre rule.
double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      int order);

/// Composite rule: split [a, b] into equal subintervals, same order on each.
double composite_gauss_legendre(const std::function<double(double)>& f, double a,
                                double b, int order, int subintervals);

}  // namespace relinspect
