#ifndef UQ_SPECIAL_HPP
#define UQ_SPECIAL_HPP

#include <cstddef>

// Scalar special functions shared by the distribution, estimation and
// reliability code. All routines work in double precision.

namespace uq {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double euler_gamma = 0.57721566490153286061;

/// Standard normal density.
double normal_pdf(double x);

/// Standard normal CDF, accurate in both tails (erfc based).
double normal_cdf(double x);

/// Inverse standard normal CDF (Wichura AS 241, full double precision).
/// Requires p in (0,1).
double normal_quantile(double p);

/// Regularized lower incomplete gamma P(a,x), a > 0, x >= 0.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a,x) = 1 - P(a,x).
double gamma_q(double a, double x);

/// Regularized incomplete beta I_x(a,b), a,b > 0, x in [0,1].
double beta_inc(double a, double b, double x);

/// Digamma function psi(x) for x > 0.
double digamma(double x);

/// CDF of the chi distribution with d degrees of freedom: P(||N(0,I_d)|| <= r).
double chi_cdf(std::size_t d, double r);

/// Exact finite-sample Kolmogorov CDF P(D_n < d) by the
/// Marsaglia-Tsang-Wang matrix-power method.
double kolmogorov_cdf(std::size_t n, double d);

/// CDF of the bivariate standard normal with correlation rho,
/// computed by adaptive 1-D quadrature (abs tol ~1e-12).
double bivariate_normal_cdf(double a, double b, double rho);

} // namespace uq

#endif
