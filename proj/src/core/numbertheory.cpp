#include "core/numbertheory.hpp"

#include <cmath>
#include <numbers>

#include "core/analytic.hpp"
#include "core/error.hpp"
#include "core/special.hpp"

namespace unilattice {

namespace {

constexpr double pi = std::numbers::pi;

// Elements per unit of ball volume.
double covolume(Ring ring) { return voronoi_spec(ring).covolume; }

// Leading term of #{x != 0 : |x|^2 <= p}: the ball volume over the covolume.
double leading_count(Ring ring, double p) {
    const double v = covolume(ring);
    switch (ring_field(ring)) {
        case Field::real: return 2.0 * std::sqrt(p) / v;
        case Field::complex: return pi * p / v;
        case Field::quaternion: return 0.5 * pi * pi * p * p / v;
    }
    return 0.0;
}

}  // namespace

std::int64_t NormCountTable::cumulative(std::int64_t p) const {
    if (p < 0) return 0;
    if (p > pmax()) fail(ErrorCode::invalid_argument, "cumulative: p beyond table");
    std::int64_t sum = 0;
    for (std::int64_t k = 0; k <= p; ++k) sum += counts[static_cast<std::size_t>(k)];
    return sum;
}

NormCountTable norm_counts(Ring ring, std::int64_t pmax) {
    if (pmax < 1) fail(ErrorCode::invalid_argument, "norm_counts: pmax must be >= 1");
    if (leading_count(ring, static_cast<double>(pmax)) > 40.0 * static_cast<double>(enumeration_cap))
        fail(ErrorCode::cap_exceeded, "norm_counts: pmax too large");
    NormCountTable t{ring, std::vector<std::int64_t>(static_cast<std::size_t>(pmax) + 1, 0)};
    for_each_near(ring, Quaternion{}, std::sqrt(static_cast<double>(pmax)) + 1e-9, [&](const RingElement& e) {
        const std::int64_t n = norm(e);
        if (n <= pmax) ++t.counts[static_cast<std::size_t>(n)];
    });
    return t;
}

std::int64_t divisors_mod4(std::int64_t n, int r) {
    if (n <= 0) fail(ErrorCode::invalid_argument, "divisors_mod4: n must be positive");
    std::int64_t count = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        if (d % 4 == r) ++count;
        const std::int64_t e = n / d;
        if (e != d && e % 4 == r) ++count;
    }
    return count;
}

double norm_zeta_sum(const NormCountTable& table, int s) {
    const std::int64_t P = table.pmax();
    if (P < 1) fail(ErrorCode::invalid_argument, "norm_zeta_sum: pmax must be >= 1");
    const int dim = static_cast<int>(ring_field(table.ring));
    // The partial-summation tail needs the counting exponent dim/2 below s.
    if (2 * s <= dim) fail(ErrorCode::domain, "norm_zeta_sum: series diverges");
    long double sum = 0.0L;
    std::int64_t below = 0;
    for (std::int64_t p = 1; p <= P; ++p) {
        const std::int64_t m = table.counts[static_cast<std::size_t>(p)];
        below += m;
        if (m != 0) sum += static_cast<long double>(m) / std::pow(static_cast<long double>(p), s);
    }
    // sum_{p > P} M(p) p^-s = -N(P) P^-s + s int_P^inf N(x) x^-(s+1) dx with N(x) = c x^(dim/2) - 1.
    const double Pd = static_cast<double>(P);
    const double e = 0.5 * dim;
    const double c = leading_count(table.ring, 1.0);
    const double tail = -static_cast<double>(below) * std::pow(Pd, -s) + s * c * std::pow(Pd, e - s) / (s - e) -
                        std::pow(Pd, -s);
    return static_cast<double>(sum) + tail;
}

double dedekind_zi(int s, std::int64_t pmax) {
    if (s < 2) fail(ErrorCode::domain, "dedekind_zi: s must be >= 2");
    return 0.25 * norm_zeta_sum(norm_counts(Ring::gaussian, pmax), s);
}

double dedekind_zi_factorized(int s) { return zeta_int(s) * dirichlet_beta(s); }

SiegelCheck siegel_omega_check(Ring ring, std::int64_t pmax) {
    SiegelCheck out{ring};
    const auto& k = special_constants();
    switch (ring) {
        case Ring::gaussian: {
            out.pmax = pmax > 0 ? pmax : 200'000;
            const double s = norm_zeta_sum(norm_counts(ring, out.pmax), 2);
            out.series_value = 3.0 / (4.0 * k.catalan) * s;
            out.predicted = 0.5 * pi * pi;
            break;
        }
        case Ring::eisenstein: {
            out.pmax = pmax > 0 ? pmax : 200'000;
            const double s = norm_zeta_sum(norm_counts(ring, out.pmax), 2);
            out.raw_value = std::sqrt(3.0) / 8.0 * s / k.vol_gamma_hat_h;
            out.raw_factor = out.raw_value / (0.5 * pi * pi);
            out.series_value = 0.75 * out.raw_value;
            out.predicted = 0.5 * pi * pi;
            break;
        }
        case Ring::hurwitz: {
            out.pmax = pmax > 0 ? pmax : 400;
            out.eighth_power_sum = norm_zeta_sum(norm_counts(ring, out.pmax), 4);
            out.series_value = out.eighth_power_sum;
            out.predicted = 21.0 * k.zeta3 * k.zeta4;
            out.implied_gamma_4h = 3.0 * out.eighth_power_sum / (8.0 * std::pow(pi, 4));
            break;
        }
        default:
            fail(ErrorCode::unsupported, "siegel-check: supported rings are gaussian, eisenstein, hurwitz");
    }
    out.relative_gap = std::abs(out.series_value - out.predicted) / out.predicted;
    return out;
}

namespace {

struct Bezout {
    RingElement g, x, y;  // a x + b y = g
};

Bezout extended_gcd(RingElement a, RingElement b) {
    const Ring ring = a.ring;
    RingElement x0 = RingElement::one(ring), y0 = RingElement::zero(ring);
    RingElement x1 = RingElement::zero(ring), y1 = RingElement::one(ring);
    while (!b.is_zero()) {
        const DivResult d = euclid_div(a, b);
        a = b;
        b = d.r;
        const RingElement x2 = x0 - d.q * x1, y2 = y0 - d.q * y1;
        x0 = x1;
        y0 = y1;
        x1 = x2;
        y1 = y2;
    }
    return {a, x0, y0};
}

}  // namespace

std::int64_t count_sl2_gaussian(double radius) {
    if (!(radius >= 1.0 && radius <= 4.0)) fail(ErrorCode::domain, "count-sl2: radius must lie in [1, 4]");
    // For det 1, sigma1^2 = (S + sqrt(S^2 - 4)) / 2 with S the squared Frobenius norm, so the cutoff is
    // S <= R^2 + R^-2 and both rows have squared length at most that.
    const double smax = radius * radius + 1.0 / (radius * radius);
    const auto fits = [&](std::int64_t s) { return static_cast<double>(s) <= smax * (1.0 + 1e-14); };
    const Ring ring = Ring::gaussian;
    const auto elems = enumerate_ball(ring, std::sqrt(smax) + 1e-9);
    std::int64_t total = 0;
    for (const auto& a : elems) {
        for (const auto& b : elems) {
            const std::int64_t row = norm(a) + norm(b);
            if (row == 0 || !fits(row + 1)) continue;
            const Bezout z = extended_gcd(a, b);
            if (norm(z.g) != 1) continue;
            // a d - b c = 1: (c, d) = (c0, d0) + t (a, b).
            const RingElement ginv = conj(z.g);
            const RingElement d0 = z.x * ginv, c0 = -(z.y * ginv);
            const Complex ua = embed(a).complex_part(), ub = embed(b).complex_part();
            const Complex uc = embed(c0).complex_part(), ud = embed(d0).complex_part();
            const double u2 = static_cast<double>(row);
            const Complex proj = (std::conj(ua) * uc + std::conj(ub) * ud) / u2;
            const double perp2 = std::norm(uc - ua * proj) + std::norm(ud - ub * proj);
            const double rem = smax - u2 - perp2;
            if (rem < -1e-9) continue;
            const double rad = std::sqrt(std::max(0.0, rem) / u2) + 1e-9;
            for_each_near(ring, Quaternion{-proj.real(), -proj.imag(), 0, 0}, rad, [&](const RingElement& t) {
                const RingElement c = c0 + t * a, d = d0 + t * b;
                if (fits(row + norm(c) + norm(d))) ++total;
            });
        }
    }
    return total;
}

double sl2_count_prediction() { return 0.5 * pi * pi * pi / special_constants().dedekind_zi_2; }

}  // namespace unilattice
