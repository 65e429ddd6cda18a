#pragma once

namespace relinspect {

/// Homogeneous Poisson shock-arrival process shared by every component.
struct ShockProcess {
    double rate;  // shocks per unit time, > 0
};

/// P(N(t) = m) for a Poisson process, evaluated in log space.
double poisson_pmf(double rate, double t, int m);

/// Smallest M with cumulative Poisson mass >= 1 - tail_tol, floored at 2.
int poisson_truncation_order(double rate, double t, double tail_tol);

/// Normal CDF at x for Normal(mean, sd^2).
double normal_cdf(double x, double mean, double sd);

/// Normal density at x for Normal(mean, sd^2).
double normal_pdf(double x, double mean, double sd);

/// Regularized lower incomplete gamma P(shape, x/scale); 0 for x <= 0.
double gamma_cdf(double x, double shape, double scale);

/// Density of the sum of m i.i.d. Normal(mean, sd^2) damages at y.
/// m = 0 is a point mass at zero and is rejected; callers branch on it.
double mfold_damage_density(int m, double damage_mean, double damage_sd, double y);

}  // namespace relinspect
