#pragma once

// Scalar special functions used by the distribution layer. All functions are
// pure and thread-safe.

namespace evimm {

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
// Series expansion for x < a + 1, continued fraction otherwise; relative
// error ~1e-14 over the parameter ranges used here.
double gamma_p(double a, double x);

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

// Regularized incomplete beta I_x(a, b), by the standard continued fraction.
double inc_beta(double a, double b, double x);

// Standard normal quantile (Acklam's rational approximation polished with one
// Halley step on erfc; |error| < 1e-13 for p in (0, 1)).
double normal_quantile(double p);

// Binomial CDF P(X <= k) for X ~ Bin(n, p), via the incomplete beta.
double binomial_cdf(long long k, long long n, double p);

} // namespace evimm
