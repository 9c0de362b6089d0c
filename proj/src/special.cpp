#include "uq/special.hpp"

#include "uq/common.hpp"
#include "uq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace uq {

double normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * pi);
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// Wichura's algorithm AS 241 (PPND16).
double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw InvalidArgument("normal_quantile: p must lie in (0,1)");
    const double q = p - 0.5;
    double r;
    if (std::abs(q) <= 0.425) {
        r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                     6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                   1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
                 1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
               (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                     3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                   5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
                 4.2313330701600911252e1) * r + 1.0);
    }
    r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double value;
    if (r <= 5.0) {
        r -= 1.6;
        value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                      2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                    3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
                  4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
                (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                      1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                    6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
                  2.05319162663775882187e0) * r + 1.0);
    } else {
        r -= 5.0;
        value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                      1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                    2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
                  5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
                (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                      1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                    1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                  5.99832206555887937690e-1) * r + 1.0);
    }
    return q < 0.0 ? -value : value;
}

namespace {

// Lower incomplete gamma by series, valid for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw ConvergenceError("gamma_p: series did not converge");
}

// Upper incomplete gamma by Lentz continued fraction, valid for x >= a+1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw ConvergenceError("gamma_q: continued fraction did not converge");
}

} // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0)
        throw InvalidArgument("gamma_p: requires a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0)
        throw InvalidArgument("gamma_q: requires a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

namespace {

double betacf(double a, double b, double x) {
    const double tiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) return h;
    }
    throw ConvergenceError("beta_inc: continued fraction did not converge");
}

} // namespace

double beta_inc(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0)
        throw InvalidArgument("beta_inc: requires a, b > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                               a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * betacf(a, b, x) / a;
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

double digamma(double x) {
    if (x <= 0.0) throw InvalidArgument("digamma: requires x > 0");
    double result = 0.0;
    while (x < 6.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    result += std::log(x) - 0.5 * inv -
              inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 / 252.0));
    return result;
}

double chi_cdf(std::size_t d, double r) {
    if (r <= 0.0) return 0.0;
    return gamma_p(0.5 * static_cast<double>(d), 0.5 * r * r);
}

// Marsaglia, Tsang & Wang (2003), "Evaluating Kolmogorov's distribution".
double kolmogorov_cdf(std::size_t n, double d) {
    if (n == 0) throw InvalidArgument("kolmogorov_cdf: n must be positive");
    const double nd = static_cast<double>(n);
    if (d >= 1.0) return 1.0;
    if (d <= 1.0 / (2.0 * nd)) return 0.0;

    const int k = static_cast<int>(std::ceil(nd * d));
    const int m = 2 * k - 1;
    const double h = k - nd * d;

    std::vector<double> H(static_cast<std::size_t>(m) * m, 0.0);
    auto at = [&](std::vector<double>& a, int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * m + j];
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i - j + 1 >= 0) at(H, i, j) = 1.0;
    for (int i = 0; i < m; ++i) {
        at(H, i, 0) -= std::pow(h, i + 1);
        at(H, m - 1, i) -= std::pow(h, m - i);
    }
    at(H, m - 1, 0) += (2.0 * h - 1.0 > 0.0 ? std::pow(2.0 * h - 1.0, m) : 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i - j + 1 > 0)
                for (int g = 1; g <= i - j + 1; ++g) at(H, i, j) /= g;

    // H^n with decimal scaling to avoid overflow.
    std::vector<double> Q = H, tmp(H.size());
    int eQ = 0, eH = 0;
    auto matmul = [&](const std::vector<double>& A, const std::vector<double>& B,
                      std::vector<double>& C) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                double s = 0.0;
                for (int g = 0; g < m; ++g)
                    s += A[static_cast<std::size_t>(i) * m + g] *
                         B[static_cast<std::size_t>(g) * m + j];
                C[static_cast<std::size_t>(i) * m + j] = s;
            }
    };
    std::size_t remaining = n;
    // binary powering
    std::vector<double> base = H;
    bool first = true;
    std::vector<double> acc;
    int eAcc = 0;
    while (remaining > 0) {
        if (remaining & 1u) {
            if (first) {
                acc = base;
                eAcc = eH;
                first = false;
            } else {
                matmul(acc, base, tmp);
                acc.swap(tmp);
                eAcc += eH;
                if (std::abs(acc[static_cast<std::size_t>(k - 1) * m + (k - 1)]) > 1e140) {
                    for (auto& v : acc) v *= 1e-140;
                    eAcc += 140;
                }
            }
        }
        remaining >>= 1;
        if (remaining > 0) {
            matmul(base, base, tmp);
            base.swap(tmp);
            eH *= 2;
            if (std::abs(base[static_cast<std::size_t>(k - 1) * m + (k - 1)]) > 1e140) {
                for (auto& v : base) v *= 1e-140;
                eH += 140;
            }
        }
    }
    Q.swap(acc);
    eQ = eAcc;

    double s = Q[static_cast<std::size_t>(k - 1) * m + (k - 1)];
    // multiply by n!/n^n
    for (std::size_t i = 1; i <= n; ++i) {
        s *= static_cast<double>(i) / nd;
        if (s < 1e-140) {
            s *= 1e140;
            eQ -= 140;
        }
    }
    return std::clamp(s * std::pow(10.0, eQ), 0.0, 1.0);
}

double bivariate_normal_cdf(double a, double b, double rho) {
    if (rho <= -1.0 || rho >= 1.0) {
        if (rho >= 1.0) return normal_cdf(std::min(a, b));
        return std::max(0.0, normal_cdf(a) + normal_cdf(b) - 1.0);
    }
    const double lim = 8.5;
    if (a <= -lim || b <= -lim) return 0.0;
    if (a >= lim) return normal_cdf(b);
    if (b >= lim) return normal_cdf(a);
    const double s = std::sqrt(1.0 - rho * rho);
    return integrate(
        [&](double x) { return normal_pdf(x) * normal_cdf((b - rho * x) / s); },
        -lim, a, 1e-12, 1e-12);
}

} // namespace uq
