#include "relinspect/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace relinspect {

namespace {

GaussLegendreRule build_rule(int order) {
    GaussLegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    const double n = static_cast<double>(order);
    for (int i = 1; i <= half; ++i) {
        // Newton iteration from the Chebyshev-based initial guess
        double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 1; j <= order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) < 1e-15) {
                break;
            }
        }
        rule.nodes[i - 1] = -z;
        rule.nodes[order - i] = z;
        rule.weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[order - i] = rule.weights[i - 1];
    }
    return rule;
}

}  // namespace

const GaussLegendreRule& GaussLegendreRule::of(int order) {
    if (order < 1) {
        throw std::domain_error("GaussLegendreRule: order must be >= 1");
    }
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, build_rule(order)).first;
    }
    return it->second;
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      int order) {
    const auto& rule = GaussLegendreRule::of(order);
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double sum = 0.0;
    for (int k = 0; k < order; ++k) {
        sum += rule.weights[k] * f(mid + hw * rule.nodes[k]);
    }
    return hw * sum;
}

double composite_gauss_legendre(const std::function<double(double)>& f, double a,
                                double b, int order, int subintervals) {
    if (subintervals < 1) {
        throw std::domain_error("composite_gauss_legendre: subintervals must be >= 1");
    }
    double sum = 0.0;
    const double step = (b - a) / subintervals;
    for (int s = 0; s < subintervals; ++s) {
        sum += gauss_legendre(f, a + s * step, a + (s + 1) * step, order);
    }
    return sum;
}

}  // namespace relinspect
