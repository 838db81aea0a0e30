#include "core/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "core/error.hpp"
#include "core/special.hpp"

namespace unilattice {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double sqrt3 = std::numbers::sqrt3;

double t_43() { return std::pow(4.0 / 3.0, 0.25); }
double t_2() { return std::pow(2.0, 0.25); }
double t_32() { return std::pow(1.5, 0.25); }

}  // namespace

const SpecialConstants& special_constants() {
    static const SpecialConstants k = [] {
        SpecialConstants c{};
        c.catalan = catalan_constant();
        c.zeta2 = zeta_int(2);
        c.zeta3 = zeta_int(3);
        c.zeta4 = zeta_int(4);
        c.dedekind_zi_2 = pi * pi / 6.0 * c.catalan;
        c.im_dilog_a = im_dilog({0.5, -sqrt3 / 6.0});
        c.im_dilog_b = im_dilog({0.75, sqrt3 / 4.0});
        c.im_dilog_c = im_dilog({0.5, sqrt3 / 2.0});
        c.vol_gamma_hat = 2.0 * pi * pi / 3.0 * c.catalan;
        c.vol_gamma_hat_h = pi / 2.0 * std::log(2.0) - 3.0 * pi / 8.0 * std::log(3.0) +
                            1.5 * (c.im_dilog_a + c.im_dilog_b);
        c.vol_gamma_hat_h_conjectured = 0.25 * c.im_dilog_c;
        c.gamma_4h = 7.0 * c.zeta3 / 80.0;
        return c;
    }();
    return k;
}

double v2_overlap(double a) {
    if (!(a >= 0.0)) fail(ErrorCode::domain, "v2_overlap: a must be >= 0");
    if (a <= 1.0 / std::numbers::sqrt2) return 4.0 * a * a;
    if (a < 1.0) return 4.0 * a * std::sqrt(1.0 - a * a) + 4.0 * std::asin(a) - pi;
    return pi;
}

double hex_overlap(double a) {
    if (!(a >= 0.0)) fail(ErrorCode::domain, "hex_overlap: a must be >= 0");
    if (a <= 0.5) return pi * a * a;
    if (a < 1.0 / sqrt3) {
        const double s = std::sqrt(4.0 * a * a - 1.0);
        return pi * a * a - 6.0 * a * a * std::atan(s) + 1.5 * s;
    }
    return sqrt3 / 2.0;
}

double pdf_shortest_gaussian(double t) {
    const double k = 3.0 / special_constants().catalan;
    if (t <= 0.0 || t >= t_2()) return 0.0;
    const double t3 = t * t * t;
    if (t <= 1.0) return k * t3;
    if (t <= t_43()) return k * t * (t * t - pi * (t * t - 1.0 / (t * t)));
    // With s = sqrt(3 - 4/t^4), asin(t / (2 rho)) = pi/2 - atan(s); this keeps the breakpoint free of
    // the square-root cancellation.
    const double s = std::sqrt(3.0 - 4.0 / (t * t * t * t));
    return k * (t3 - t3 * s - pi * (t3 - 1.0 / t) + 4.0 * (t3 - 1.0 / t) * std::atan(s));
}

double pdf_shortest_gaussian_from_overlap(double t) {
    const double k = 3.0 / special_constants().catalan;
    if (t <= 0.0 || t >= t_2()) return 0.0;
    if (t <= 1.0) return k * t * t * t;
    const double rho2 = t * t - 1.0 / (t * t);
    return k * t * (t * t - rho2 * v2_overlap(t / (2.0 * std::sqrt(rho2))));
}

double pdf_shortest_eisenstein(double t) {
    const double norm = special_constants().vol_gamma_hat_h;
    if (t <= 0.0 || t >= t_32()) return 0.0;
    const double t3 = t * t * t;
    if (t <= 1.0) return t3 * sqrt3 / 2.0 / norm;
    const double u = 1.0 - 1.0 / (t * t * t * t);
    if (t <= t_43()) return t3 * (sqrt3 / 2.0 - pi * u) / norm;
    const double s = std::sqrt(3.0 - 4.0 / (t * t * t * t));
    return t3 * (sqrt3 / 2.0 - pi * u + 6.0 * u * std::atan(s) - 1.5 * s) / norm;
}

double pdf_shortest_eisenstein_from_overlap(double t) {
    const double norm = special_constants().vol_gamma_hat_h;
    if (t <= 0.0 || t >= t_32()) return 0.0;
    const double t3 = t * t * t;
    if (t <= 1.0) return t3 * sqrt3 / 2.0 / norm;
    return t3 * (sqrt3 / 2.0 - hex_overlap(std::sqrt(1.0 - 1.0 / (t * t * t * t)))) / norm;
}

double pdf_shortest_hurwitz(double t) {
    if (t <= 0.0) return 0.0;
    if (t <= 1.0) return std::pow(t, 7) / (2.0 * special_constants().gamma_4h);
    if (t <= t_2()) fail(ErrorCode::domain, "Hurwitz shortest-vector density is unspecified for 1 < t <= 2^(1/4)");
    return 0.0;
}

double pdf_shortest(Ring ring, double t) {
    switch (ring) {
        case Ring::gaussian: return pdf_shortest_gaussian(t);
        case Ring::eisenstein: return pdf_shortest_eisenstein(t);
        case Ring::hurwitz: return pdf_shortest_hurwitz(t);
        default:
            fail(ErrorCode::unsupported,
                 "no analytic shortest-vector law for ring " + std::string(ring_name(ring)));
    }
}

double pdf_second_gaussian(double r) {
    const double k = 3.0 / special_constants().catalan;
    if (r <= 1.0) return 0.0;
    const double r4 = r * r * r * r;
    if (r <= t_43()) return k * pi * (r4 - 1.0) / r;
    if (r <= t_2()) {
        const double s = std::sqrt(3.0 * r4 - 4.0);
        // (r^2 s - 2 r^4 + 2) / (r^4 - 2) rewritten so that r^4 = 2 is no longer 0/0.
        const double ratio = -(r4 - 2.0) / (r * r * s + 2.0 * r4 - 2.0);
        return k * (2.0 * r * s + 4.0 * (r4 - 1.0) / r * (std::atan(r * r / s) + std::atan(ratio) - pi / 2.0));
    }
    const double q = std::sqrt(r4 - 2.0);
    if (r < 3.0) {
        // r^2 - q = 2 / (r^2 + q), and atan(x) - pi/2 = -atan(1/x) for x > 0.
        const double p = r * r + q;
        return k * (4.0 * r / p - 4.0 * (r4 - 1.0) / r * std::atan(2.0 / (p * p)));
    }
    // The two terms cancel to O(r^-5); expand in t = r^-4 instead.
    static constexpr double g[8] = {1.0,         2.0 / 3.0,  7.0 / 12.0,   3.0 / 5.0,
                                    83.0 / 120.0, 73.0 / 84.0, 523.0 / 448.0, 119.0 / 72.0};
    const double t = 1.0 / r4;
    double sum = 0.0;
    for (int i = 7; i >= 0; --i) sum = sum * t + g[i];
    return k * t * sum / r;
}

double pdf_xi(Ring ring, double xi_r, double xi_i) {
    const double rho2 = xi_r * xi_r + xi_i * xi_i;
    if (ring == Ring::gaussian) {
        const double m = std::max(xi_r * xi_r, xi_i * xi_i);
        if (m > 0.25) return 0.0;
        if (m == 0.0) return std::numeric_limits<double>::infinity();
        return -(3.0 / special_constants().catalan) * std::log(4.0 * m) / (4.0 * (1.0 - rho2) * (1.0 - rho2));
    }
    if (ring == Ring::eisenstein) {
        // Gauge of the hexagon; the support is h <= 1.
        const double h = std::max(2.0 * std::fabs(xi_r), std::fabs(xi_r) + sqrt3 * std::fabs(xi_i));
        if (h > 1.0) return 0.0;
        if (h == 0.0) return std::numeric_limits<double>::infinity();
        return -std::log(h * h) / (4.0 * (1.0 - rho2) * (1.0 - rho2) * special_constants().vol_gamma_hat_h);
    }
    fail(ErrorCode::unsupported, "no analytic xi law for ring " + std::string(ring_name(ring)));
}

double pdf_xi_modulus(double xi) {
    const double c = special_constants().catalan;
    if (xi <= 0.0 || xi >= 1.0 / std::numbers::sqrt2) return 0.0;
    const double pre = -6.0 * xi / (c * (1.0 - xi * xi) * (1.0 - xi * xi));
    if (xi <= 0.5) return pre * (pi / 2.0 * std::log(xi) + c);
    // Integral of log(4 xi^2 cos^2 theta) over (theta0, pi/4), using
    // int_0^x log(2 cos theta) dtheta = Cl2(pi - 2x)/2 and Cl2(pi/2) = C.
    const double theta0 = std::acos(1.0 / (2.0 * xi));
    const double integral = (pi / 4.0 - theta0) * 2.0 * std::log(xi) + c - clausen2(pi - 2.0 * theta0);
    return pre * integral;
}

double pdf_shortest_real(double s) {
    if (s >= 1.0) fail(ErrorCode::domain, "real shortest-vector density is only specified for s < 1");
    if (s <= 0.0) return 0.0;
    return 6.0 * s / pi;
}

double vol_unitary_group(int n, int beta) {
    if (n < 1) fail(ErrorCode::invalid_argument, "vol_unitary_group: N must be >= 1");
    double log_v = n * std::log(2.0);
    for (int k = 1; k <= n; ++k) log_v += beta * k / 2.0 * std::log(pi) - std::lgamma(beta * k / 2.0);
    const double v = std::exp(log_v);
    if (!std::isfinite(v)) fail(ErrorCode::numerical, "vol_unitary_group: overflow");
    return v;
}

double volume_prefactor(int n, int beta) {
    const double sphere = 2.0 * std::pow(pi, beta / 2.0) / std::tgamma(beta / 2.0);
    const double vu = vol_unitary_group(n, beta);
    return std::pow(sphere, -(n + 1)) * vu * vu;
}

AsymptoticConstants asymptotic_constants(int n, int beta) {
    if (n < 2) fail(ErrorCode::invalid_argument, "asymptotic_constants: N must be >= 2");
    if (beta != 1 && beta != 2 && beta != 4) fail(ErrorCode::invalid_argument, "beta must be 1, 2 or 4");
    const double b = beta;
    const double N = n;
    const auto lg = [](double x) { return std::lgamma(x); };

    double log_c = std::log(2.0) + N * std::log(b) - 2.0 * N * std::log(2.0) - lg(N * b / 2.0);
    for (int j = 0; j < n; ++j)
        log_c += lg(1.0 + j * b / 2.0) + 2.0 * lg((j + 1.0) * b / 2.0) - lg(1.0 + b / 2.0) -
                 lg(1.0 + (N + j - 1.0) * b / 2.0);

    double log_vop = b * N * N / 2.0 * std::log(pi) + lg(b / 2.0) - lg(N * b / 2.0) - b / 2.0 * std::log(pi);
    for (int j = 0; j < n; ++j) log_vop += lg(1.0 + j * b / 2.0) - lg(1.0 + (N + j - 1.0) * b / 2.0);

    double log_chat = std::log(2.0) - N * std::log(2.0) - lg(b * N * (N - 1.0) / 2.0 + 1.0) - lg(b * N / 2.0);
    for (int j = 1; j <= n; ++j) log_chat += 2.0 * lg(b * j / 2.0) - lg(b / 2.0);

    const double log_v2 = b * (N * N - 1.0) / 2.0 * std::log(pi) + lg(b / 2.0) - lg(b * N / 2.0) -
                          lg(b * N * (N - 1.0) / 2.0 + 1.0);

    AsymptoticConstants a{std::exp(log_c), std::exp(log_vop), std::exp(log_chat), std::exp(log_v2),
                          vol_unitary_group(n, beta)};
    for (double v : {a.c_n_beta, a.vol_op_coeff, a.chat_n_beta, a.vol_2norm_coeff})
        if (!std::isfinite(v) || v == 0.0) fail(ErrorCode::numerical, "asymptotic_constants: out of floating-point range");
    return a;
}

McEstimate gamma4h_monte_carlo(std::int64_t trials, Rng& rng) {
    if (trials < 2) fail(ErrorCode::invalid_argument, "gamma4h_monte_carlo: need at least 2 trials");
    // u = t^4 on (0, 2) and x_l = X_l u^(1/4) on (0, 2^(1/4)/2). The box has volume 1/4 and the
    // symmetry factor is 4, so the estimate is the acceptance fraction.
    const double xmax = std::pow(2.0, 0.25) / 2.0;
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < trials; ++i) {
        const double u = 2.0 * rng.uniform();
        double x[4], sum = 0.0, sum2 = 0.0;
        for (double& v : x) {
            v = xmax * rng.uniform();
            sum += v;
            sum2 += v * v;
        }
        const double q = std::pow(u, 0.25);
        const double su = std::sqrt(u);
        if (su - 1.0 / su > sum2) continue;
        if (sum > q) continue;
        bool ok = true;
        for (double v : x) ok = ok && v <= q / 2.0;
        if (ok) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(trials);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(trials)), trials};
}

const std::vector<AnalyticLaw>& analytic_laws() {
    static const std::vector<AnalyticLaw> laws = [] {
        const double inf = std::numeric_limits<double>::infinity();
        std::vector<AnalyticLaw> v;
        v.push_back({"shortest-gaussian", "density of |alpha|, Gaussian integers", true, 0.0, t_2(),
                     {0.0, 1.0, t_43(), t_2()}, pdf_shortest_gaussian});
        v.push_back({"shortest-eisenstein", "density of |alpha|, Eisenstein integers", true, 0.0, t_32(),
                     {0.0, 1.0, t_43(), t_32()}, pdf_shortest_eisenstein});
        v.push_back({"shortest-hurwitz", "density of |alpha| on 0 < t < 1, Hurwitz integers", true, 0.0, 1.0,
                     {0.0, 1.0}, pdf_shortest_hurwitz});
        v.push_back({"second-gaussian", "density of |beta|, Gaussian integers", true, 1.0, inf,
                     {1.0, t_43(), t_2(), inf}, pdf_second_gaussian});
        v.push_back({"xi-modulus-gaussian", "density of |xi|, Gaussian integers", true, 0.0,
                     1.0 / std::numbers::sqrt2, {0.0, 0.5, 1.0 / std::numbers::sqrt2}, pdf_xi_modulus});
        v.push_back({"shortest-real", "density of |alpha| on 0 < s < 1, real lattices", true, 0.0, 1.0, {0.0, 1.0},
                     pdf_shortest_real});
        v.push_back({"v2-overlap", "area of unit disk and square of half-side a", false, 0.0, inf,
                     {0.0, 1.0 / std::numbers::sqrt2, 1.0}, v2_overlap});
        v.push_back({"hex-overlap", "area of the Eisenstein hexagon and disk of radius a", false, 0.0, inf,
                     {0.0, 0.5, 1.0 / sqrt3}, hex_overlap});
        for (int beta : {1, 2, 4})
            v.push_back({"j2-beta" + std::to_string(beta), "singular-value integral J_2(r)", false, 1.0, inf, {1.0},
                         [beta](double r) { return j2_closed(beta, r); }});
        return v;
    }();
    return laws;
}

const AnalyticLaw& analytic_law(std::string_view name) {
    for (const auto& l : analytic_laws())
        if (l.name == name) return l;
    std::string names;
    for (const auto& l : analytic_laws()) names += (names.empty() ? "" : ", ") + l.name;
    fail(ErrorCode::invalid_argument, "unknown law '" + std::string(name) + "' (expected one of: " + names + ")");
}

}  // namespace unilattice
