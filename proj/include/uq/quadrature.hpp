#ifndef UQ_QUADRATURE_HPP
#define UQ_QUADRATURE_HPP

#include <functional>
#include <utility>
#include <vector>

namespace uq {

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a,b].
/// Subdivides until the local error estimate meets
/// abs_tol + rel_tol*|integral| or max_depth is reached.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, double rel_tol = 1e-10,
                 int max_depth = 24);

/// One-dimensional Gauss rule with n nodes for the measure defined by the
/// monic three-term recurrence p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1},
/// beta_0 = total mass (Golub-Welsch).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_rule(const std::vector<double>& alpha,
                     const std::vector<double>& beta, std::size_t n);

/// Gauss-Legendre rule on [-1,1] with unit weight 2 (classical normalization).
GaussRule gauss_legendre(std::size_t n);

/// Gauss-Hermite rule for the standard normal probability measure.
GaussRule gauss_hermite(std::size_t n);

} // namespace uq

#endif
