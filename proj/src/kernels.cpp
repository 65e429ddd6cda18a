#include "relinspect/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace relinspect {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;

// Regularized lower incomplete gamma P(a, x) by series expansion.
// Converges fast for x < a + 1.
double gammp_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by Lentz continued fraction.
// Converges fast for x > a + 1.
double gammq_cf(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / 1e-30;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) {
            break;
        }
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double poisson_pmf(double rate, double t, int m) {
    if (rate <= 0.0) {
        throw std::domain_error("poisson_pmf: rate must be positive");
    }
    if (t < 0.0) {
        throw std::domain_error("poisson_pmf: t must be nonnegative");
    }
    if (m < 0) {
        throw std::domain_error("poisson_pmf: m must be nonnegative");
    }
    const double mu = rate * t;
    if (mu == 0.0) {
        return m == 0 ? 1.0 : 0.0;
    }
    const double logp = -mu + m * std::log(mu) - std::lgamma(m + 1.0);
    return std::exp(logp);
}

int poisson_truncation_order(double rate, double t, double tail_tol) {
    if (tail_tol <= 0.0 || tail_tol >= 1.0) {
        throw std::domain_error("poisson_truncation_order: tail_tol must be in (0,1)");
    }
    double cum = 0.0;
    int m = 0;
    // pmf recurrence avoids recomputing factorials
    const double mu = rate * t;
    double pmf = std::exp(-mu);
    while (cum + pmf < 1.0 - tail_tol && m < 100000) {
        cum += pmf;
        ++m;
        pmf *= mu / m;
    }
    return m < 2 ? 2 : m;
}

double normal_cdf(double x, double mean, double sd) {
    if (sd <= 0.0) {
        throw std::domain_error("normal_cdf: sd must be positive");
    }
    const double z = (x - mean) / sd;
    return 0.5 * std::erfc(-z / kSqrt2);
}

double normal_pdf(double x, double mean, double sd) {
    if (sd <= 0.0) {
        throw std::domain_error("normal_pdf: sd must be positive");
    }
    const double z = (x - mean) / sd;
    return std::exp(-0.5 * z * z - kLogSqrt2Pi) / sd;
}

double gamma_cdf(double x, double shape, double scale) {
    if (shape <= 0.0 || scale <= 0.0) {
        throw std::domain_error("gamma_cdf: shape and scale must be positive");
    }
    if (x <= 0.0) {
        return 0.0;
    }
    const double z = x / scale;
    if (z < shape + 1.0) {
        return gammp_series(shape, z);
    }
    return 1.0 - gammq_cf(shape, z);
}

double mfold_damage_density(int m, double damage_mean, double damage_sd, double y) {
    if (damage_sd <= 0.0) {
        throw std::domain_error("mfold_damage_density: damage_sd must be positive");
    }
    if (m < 0) {
        throw std::domain_error("mfold_damage_density: m must be nonnegative");
    }
    if (m == 0) {
        throw std::domain_error(
            "mfold_damage_density: m = 0 is a point mass at zero; caller must branch");
    }
    return normal_pdf(y, m * damage_mean, std::sqrt(static_cast<double>(m)) * damage_sd);
}

}  // namespace relinspect
