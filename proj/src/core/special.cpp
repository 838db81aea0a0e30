#include "core/special.hpp"

#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "core/error.hpp"

namespace unilattice {

double alternating_sum(const std::function<double(int)>& a, int terms) {
    double d = std::pow(3.0 + std::sqrt(8.0), terms);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d, s = 0.0;
    for (int k = 0; k < terms; ++k) {
        c = b - c;
        s += c * a(k);
        b = (k + terms) * (k - terms) * b / ((k + 0.5) * (k + 1.0));
    }
    return s / d;
}

double dirichlet_beta(double s) {
    return alternating_sum([s](int k) { return std::pow(2.0 * k + 1.0, -s); });
}

double dirichlet_eta(double s) {
    return alternating_sum([s](int k) { return std::pow(k + 1.0, -s); });
}

double zeta_int(int n) {
    if (n < 2) fail(ErrorCode::domain, "zeta_int: n must be >= 2");
    return dirichlet_eta(n) / (1.0 - std::pow(2.0, 1 - n));
}

double catalan_constant() { return dirichlet_beta(2.0); }

namespace {

using cplx = std::complex<double>;

// B_{2k} / (2k+1)! for k = 1..kTerms, from the Bernoulli recurrence in long double.
constexpr int kTerms = 22;

const std::array<double, kTerms + 1>& bernoulli_coefficients() {
    static const std::array<double, kTerms + 1> table = [] {
        constexpr int n = 2 * kTerms + 1;
        std::array<long double, n + 1> b{};
        b[0] = 1.0L;
        for (int m = 1; m <= n; ++m) {
            long double sum = 0.0L, binom = 1.0L;  // binom = C(m+1, k)
            for (int k = 0; k < m; ++k) {
                sum += binom * b[k];
                binom = binom * (m + 1 - k) / (k + 1);
            }
            b[m] = -sum / (m + 1);
        }
        std::array<double, kTerms + 1> out{};
        long double fact = 1.0L;  // (2k+1)!
        for (int k = 1; k <= kTerms; ++k) {
            fact *= (2.0L * k) * (2.0L * k + 1.0L);
            out[k] = static_cast<double>(b[2 * k] / fact);
        }
        return out;
    }();
    return table;
}

// Li2 for |z| <= 1, Re z <= 1/2, where u = -log(1 - z) has |u| < 1.8.
cplx dilog_series(cplx z) {
    const cplx u = -std::log(1.0 - z);
    const cplx u2 = u * u;
    cplx sum = u - 0.25 * u2;
    cplx p = u;  // u^(2k+1)
    const auto& c = bernoulli_coefficients();
    for (int k = 1; k <= kTerms; ++k) {
        p *= u2;
        const cplx term = c[k] * p;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

std::complex<double> dilog(std::complex<double> z) {
    constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    if (z == cplx{}) return 0.0;
    if (z == cplx{1.0, 0.0}) return pi2_6;
    // The margin keeps points on the unit circle from bouncing between z and 1/z.
    if (std::norm(z) > 1.0 + 1e-12) {
        // Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2
        const cplx l = std::log(-z);
        return -dilog(1.0 / z) - pi2_6 - 0.5 * l * l;
    }
    if (z.real() > 0.5) {
        // Li2(z) = pi^2/6 - log(z) log(1 - z) - Li2(1 - z)
        return pi2_6 - std::log(z) * std::log(1.0 - z) - dilog_series(1.0 - z);
    }
    return dilog_series(z);
}

double im_dilog(std::complex<double> z) {
    if (!(std::abs(z) <= 1.2)) fail(ErrorCode::domain, "im_dilog: |z| must be <= 1.2");
    return dilog(z).imag();
}

double clausen2(double theta) { return dilog(std::polar(1.0, theta)).imag(); }

double integrate(const std::function<double(double)>& f, double a, double b, double tol, double* error_estimate) {
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, tol, &err);
    if (error_estimate) *error_estimate = err;
    if (!std::isfinite(v)) fail(ErrorCode::numerical, "integrate: non-finite result");
    return v;
}

double integrate_piecewise(const std::function<double(double)>& f, const std::vector<double>& points, double tol) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (points[i + 1] > points[i]) sum += integrate(f, points[i], points[i + 1], tol);
    return sum;
}

double integrate_endpoint_singular(const std::function<double(double)>& f, double a, double b, double tol) {
    boost::math::quadrature::tanh_sinh<double> ts;
    const double v = ts.integrate(f, a, b, tol);
    if (!std::isfinite(v)) fail(ErrorCode::numerical, "integrate: non-finite result");
    return v;
}

}  // namespace unilattice
