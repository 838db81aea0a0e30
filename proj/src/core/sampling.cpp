#include "core/sampling.hpp"

#include <cmath>
#include <vector>

#include "core/error.hpp"

namespace unilattice {

namespace {

Quaternion gaussian_scalar(Field field, Rng& rng) {
    switch (field) {
        case Field::real: return Quaternion(rng.normal());
        case Field::complex: {
            const double a = rng.normal();
            return {a, rng.normal(), 0, 0};
        }
        case Field::quaternion: {
            const double a = rng.normal();
            const double b = rng.normal();
            const double c = rng.normal();
            return {a, b, c, rng.normal()};
        }
    }
    return {};
}

void require_beta(int beta) {
    if (beta != 1 && beta != 2 && beta != 4) fail(ErrorCode::invalid_argument, "beta must be 1, 2 or 4");
}

// Series in x = log r for beta = 2, 4: J = sum_k coef_k x^(2k+1) / (2k+1)!, from
// J = sinh(4x)/2 - 2x and J = sinh(8x)/4 - 2 sinh(4x) + 6x.
double j2_series(int beta, double x) {
    double term = x;  // x^(2k+1)/(2k+1)!
    double sum = 0.0;
    for (int k = 0; k < 30; ++k) {
        const double p = 2.0 * k + 1.0;
        const double coef = beta == 2 ? 0.5 * std::pow(4.0, p) - (k == 0 ? 2.0 : 0.0)
                                      : 0.25 * std::pow(8.0, p) - 2.0 * std::pow(4.0, p) + (k == 0 ? 6.0 : 0.0);
        sum += coef * term;
        term *= x * x / ((p + 1.0) * (p + 2.0));
        if (std::fabs(coef * term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

}  // namespace

Matrix2 sample_haar_unitary(Field field, Rng& rng) {
    for (;;) {
        const Vector2 g0{gaussian_scalar(field, rng), gaussian_scalar(field, rng)};
        const Vector2 g1{gaussian_scalar(field, rng), gaussian_scalar(field, rng)};
        const double n0 = g0.norm();
        if (n0 < 1e-12) continue;
        const Vector2 u0 = g0 * Quaternion(1.0 / n0);
        const Vector2 v = g1 - u0 * hermitian_dot(u0, g1);
        const double nv = v.norm();
        if (nv < 1e-12) continue;
        return Matrix2::from_columns(u0, v * Quaternion(1.0 / nv));
    }
}

double j2_closed(int beta, double r) {
    require_beta(beta);
    if (!(r >= 1.0)) fail(ErrorCode::domain, "j2_closed: r must be >= 1");
    const double x = std::log(r);
    if (beta == 1) {
        const double s = std::sinh(x);
        return 2.0 * s * s;
    }
    if (x < 0.05) return j2_series(beta, x);
    if (beta == 2) {
        const double r4 = r * r * r * r;
        return r4 / 4.0 - 1.0 / (4.0 * r4) - 2.0 * x;
    }
    const double r4 = r * r * r * r;
    const double r8 = r4 * r4;
    return r8 / 8.0 - r4 + 1.0 / r4 - 1.0 / (8.0 * r8) + 6.0 * x;
}

double j2_density(int beta, double r) {
    require_beta(beta);
    if (r < 1.0) return 0.0;
    return std::pow(r * r - 1.0 / (r * r), beta) / r;
}

double sigma1_from_uniform(int beta, double cutoff, double u) {
    require_beta(beta);
    if (!(cutoff > 1.0) || !std::isfinite(cutoff)) fail(ErrorCode::invalid_argument, "cutoff R must be > 1");
    if (!(u >= 0.0 && u <= 1.0)) fail(ErrorCode::invalid_argument, "u must lie in [0, 1]");
    if (u == 0.0) return 1.0;
    if (u == 1.0) return cutoff;
    const double target = u * j2_closed(beta, cutoff);
    // Work in x = log r, where J is smooth and strictly increasing on [0, log R].
    double lo = 0.0, hi = std::log(cutoff);
    const auto f = [&](double x) { return j2_closed(beta, std::exp(x)) - target; };
    for (int i = 0; i < 24; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 50; ++i) {
        const double fx = f(x);
        if (fx == 0.0) return std::exp(x);
        (fx < 0.0 ? lo : hi) = x;
        const double r = std::exp(x);
        const double dfdx = j2_density(beta, r) * r;
        double nx = x - fx / dfdx;
        if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);
        if (std::fabs(nx - x) <= 1e-14 * std::max(x, 1e-300) || hi - lo <= 1e-15 * hi) return std::exp(nx);
        x = nx;
    }
    fail(ErrorCode::numerical, "sigma1_from_uniform: root finder did not converge");
}

double sample_sigma1(Field field, double cutoff, Rng& rng) {
    return sigma1_from_uniform(beta_of(field), cutoff, rng.uniform());
}

Sl2Sample sample_sl2(Field field, double cutoff, Rng& rng) {
    Sl2Sample s;
    s.field = field;
    s.cutoff = cutoff;
    s.sigma1 = sample_sigma1(field, cutoff, rng);
    const Matrix2 u = sample_haar_unitary(field, rng);
    const Matrix2 v = sample_haar_unitary(field, rng);
    s.matrix = u * Matrix2::diagonal(s.sigma1, 1.0 / s.sigma1) * v;
    return s;
}

McEstimate jn_monte_carlo(int n, int beta, double cutoff, std::int64_t trials, Rng& rng) {
    require_beta(beta);
    if (n < 2) fail(ErrorCode::invalid_argument, "jn_monte_carlo: N must be >= 2");
    if (!(cutoff > 1.0)) fail(ErrorCode::invalid_argument, "jn_monte_carlo: cutoff must be > 1");
    if (trials < 2) fail(ErrorCode::invalid_argument, "jn_monte_carlo: need at least 2 trials");
    std::vector<double> s(static_cast<std::size_t>(n));
    double sum = 0.0, sum2 = 0.0;
    for (std::int64_t t = 0; t < trials; ++t) {
        double prod = 1.0;
        for (int l = 0; l + 1 < n; ++l) {
            s[l] = cutoff * rng.uniform_open();
            prod *= s[l];
        }
        s[n - 1] = 1.0 / prod;
        bool ordered = s[0] < cutoff;
        for (int l = 0; l + 1 < n && ordered; ++l) ordered = s[l] > s[l + 1];
        double w = 0.0;
        if (ordered) {
            w = 1.0 / prod;
            for (int l = 0; l < n; ++l) w *= std::pow(s[l], beta - 1);
            for (int j = 0; j < n; ++j)
                for (int k = j + 1; k < n; ++k) w *= std::pow(s[j] * s[j] - s[k] * s[k], beta);
        }
        sum += w;
        sum2 += w * w;
    }
    const double scale = std::pow(cutoff, n - 1);
    const double mean = sum / static_cast<double>(trials);
    const double var = std::max(0.0, sum2 / static_cast<double>(trials) - mean * mean);
    return {scale * mean, scale * std::sqrt(var / static_cast<double>(trials - 1)), trials};
}

}  // namespace unilattice
