#pragma once

namespace tsecon::dist {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
[[nodiscard]] double gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
[[nodiscard]] double gamma_q(double a, double x);
/// Regularized incomplete beta I_x(a, b), a, b > 0, 0 <= x <= 1.
[[nodiscard]] double beta_inc(double a, double b, double x);

[[nodiscard]] double normal_cdf(double z);
/// Upper tail 1 - Phi(z), accurate far into the tail.
[[nodiscard]] double normal_sf(double z);
/// Two-sided p-value 2 * (1 - Phi(|z|)).
[[nodiscard]] double normal_two_sided(double z);

/// Upper-tail probability of a chi-squared variable with `df` degrees of freedom.
[[nodiscard]] double chi2_sf(double x, double df);
/// Upper-tail probability of an F(d1, d2) variable.
[[nodiscard]] double f_sf(double f, double d1, double d2);

}  // namespace tsecon::dist
