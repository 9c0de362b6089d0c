#include "uq/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace uq {
namespace {

// 15-point Kronrod nodes/weights on [-1,1] and the embedded 7-point Gauss weights.
constexpr double kKronrodNodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898,  0.0,
     0.207784955007898,  0.405845151377397,  0.586087235467691,
     0.741531185599394,  0.864864423359769,  0.949107912342759,
     0.991455371120813};
constexpr double kKronrodWeights[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979,
    0.022935322010529};
constexpr double kGaussWeights[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870};

struct PanelResult {
    double kronrod;
    double error;
};

PanelResult panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double k = 0.0, g = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double v = f(c + h * kKronrodNodes[i]);
        k += kKronrodWeights[i] * v;
        if (i % 2 == 1) g += kGaussWeights[i / 2] * v;
    }
    k *= h;
    g *= h;
    const double diff = std::abs(k - g);
    return {k, std::pow(200.0 * diff, 1.5)};
}

double adapt(const std::function<double(double)>& f, double a, double b,
             const PanelResult& whole, double abs_tol, double rel_tol, int depth) {
    if (depth <= 0 ||
        whole.error <= abs_tol + rel_tol * std::abs(whole.kronrod)) {
        return whole.kronrod;
    }
    const double c = 0.5 * (a + b);
    const PanelResult left = panel(f, a, c);
    const PanelResult right = panel(f, c, b);
    return adapt(f, a, c, left, 0.5 * abs_tol, rel_tol, depth - 1) +
           adapt(f, c, b, right, 0.5 * abs_tol, rel_tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, double rel_tol, int max_depth) {
    if (a == b) return 0.0;
    if (a > b) return -integrate(f, b, a, abs_tol, rel_tol, max_depth);
    return adapt(f, a, b, panel(f, a, b), abs_tol, rel_tol, max_depth);
}

GaussRule gauss_rule(const std::vector<double>& alpha,
                     const std::vector<double>& beta, std::size_t n) {
    if (n == 0 || alpha.size() < n || beta.size() < n)
        throw std::invalid_argument("gauss_rule: need n recurrence coefficients");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        J(i, i) = alpha[i];
        if (i + 1 < n) {
            const double off = std::sqrt(beta[i + 1]);
            J(i, i + 1) = off;
            J(i + 1, i) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = beta[0] * v0 * v0;
    }
    return rule;
}

GaussRule gauss_legendre(std::size_t n) {
    std::vector<double> alpha(n, 0.0), beta(n, 0.0);
    beta[0] = 2.0; // total weight of the classical Legendre measure
    for (std::size_t k = 1; k < n; ++k)
        beta[k] = static_cast<double>(k * k) / (4.0 * k * k - 1.0);
    return gauss_rule(alpha, beta, n);
}

GaussRule gauss_hermite(std::size_t n) {
    std::vector<double> alpha(n, 0.0), beta(n, 0.0);
    beta[0] = 1.0; // probability measure
    for (std::size_t k = 1; k < n; ++k) beta[k] = static_cast<double>(k);
    return gauss_rule(alpha, beta, n);
}

} // namespace uq
