#include "core/rings.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "core/error.hpp"

namespace unilattice {

namespace {

constexpr Ring all_rings[] = {Ring::integers, Ring::gaussian, Ring::d2, Ring::eisenstein,
                              Ring::d7,       Ring::d11,      Ring::hurwitz};

std::int64_t to_int(double x) {
    if (!std::isfinite(x) || std::fabs(x) > 9.0e15) fail(ErrorCode::numerical, "coordinate out of exact integer range");
    return static_cast<std::int64_t>(x);
}

double sqrt_abs_d(Ring r) { return std::sqrt(static_cast<double>(-ring_discriminant(r))); }

// Distance squared between a ring element and z, in the components the ring actually uses.
double dist2(const RingElement& e, const Quaternion& z) {
    const Quaternion d = embed(e) - z;
    switch (ring_field(e.ring)) {
        case Field::real: return d.a0 * d.a0;
        case Field::complex: return d.a0 * d.a0 + d.a1 * d.a1;
        case Field::quaternion: return d.norm2();
    }
    return d.norm2();
}

}  // namespace

std::string_view ring_name(Ring r) {
    switch (r) {
        case Ring::integers: return "integers";
        case Ring::gaussian: return "gaussian";
        case Ring::d2: return "d2";
        case Ring::eisenstein: return "eisenstein";
        case Ring::d7: return "d7";
        case Ring::d11: return "d11";
        case Ring::hurwitz: return "hurwitz";
    }
    return "?";
}

Ring ring_from_name(std::string_view name) {
    for (Ring r : all_rings)
        if (ring_name(r) == name) return r;
    fail(ErrorCode::invalid_argument, "unknown ring '" + std::string(name) +
                                          "' (expected integers, gaussian, d2, eisenstein, d7, d11, hurwitz)");
}

Field ring_field(Ring r) {
    if (r == Ring::integers) return Field::real;
    if (r == Ring::hurwitz) return Field::quaternion;
    return Field::complex;
}

int ring_discriminant(Ring r) {
    switch (r) {
        case Ring::gaussian: return -1;
        case Ring::d2: return -2;
        case Ring::eisenstein: return -3;
        case Ring::d7: return -7;
        case Ring::d11: return -11;
        default: return 0;
    }
}

bool ring_uses_half_generator(Ring r) { return r == Ring::eisenstein || r == Ring::d7 || r == Ring::d11; }

RingElement RingElement::one(Ring r) { return from_int(r, 1); }

RingElement RingElement::from_int(Ring r, std::int64_t n) {
    RingElement e = zero(r);
    if (r == Ring::hurwitz)
        e.c[0] = 2 * n;
    else
        e.c[0] = n;
    return e;
}

static void require_same_ring(const RingElement& a, const RingElement& b) {
    if (a.ring != b.ring) fail(ErrorCode::invalid_argument, "ring mismatch in ring arithmetic");
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    RingElement r = a;
    for (int i = 0; i < 4; ++i) r.c[i] += b.c[i];
    return r;
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    RingElement r = a;
    for (int i = 0; i < 4; ++i) r.c[i] -= b.c[i];
    return r;
}

RingElement operator-(const RingElement& a) { return RingElement::zero(a.ring) - a; }

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    RingElement r = RingElement::zero(a.ring);
    const auto& x = a.c;
    const auto& y = b.c;
    switch (a.ring) {
        case Ring::integers: r.c[0] = x[0] * y[0]; break;
        case Ring::gaussian:
        case Ring::d2: {
            const std::int64_t d = ring_discriminant(a.ring);
            r.c[0] = x[0] * y[0] + d * x[1] * y[1];
            r.c[1] = x[0] * y[1] + x[1] * y[0];
            break;
        }
        case Ring::eisenstein:
        case Ring::d7:
        case Ring::d11: {
            // w^2 = w + (D - 1)/4
            const std::int64_t k = (ring_discriminant(a.ring) - 1) / 4;
            r.c[0] = x[0] * y[0] + k * x[1] * y[1];
            r.c[1] = x[0] * y[1] + x[1] * y[0] + x[1] * y[1];
            break;
        }
        case Ring::hurwitz: {
            // Doubled coordinates: (x/2)(y/2) = H(x, y)/4, which is H(x, y)/2 in doubled form.
            const std::int64_t p[4] = {
                x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
                x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
                x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
                x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0],
            };
            for (int i = 0; i < 4; ++i) {
                if (p[i] % 2 != 0) fail(ErrorCode::internal, "Hurwitz product left the order");
                r.c[i] = p[i] / 2;
            }
            break;
        }
    }
    return r;
}

RingElement conj(const RingElement& a) {
    RingElement r = a;
    switch (a.ring) {
        case Ring::integers: break;
        case Ring::gaussian:
        case Ring::d2: r.c[1] = -a.c[1]; break;
        case Ring::eisenstein:
        case Ring::d7:
        case Ring::d11:
            // conj(w) = 1 - w
            r.c[0] = a.c[0] + a.c[1];
            r.c[1] = -a.c[1];
            break;
        case Ring::hurwitz:
            r.c[1] = -a.c[1];
            r.c[2] = -a.c[2];
            r.c[3] = -a.c[3];
            break;
    }
    return r;
}

std::int64_t norm(const RingElement& a) {
    const auto& x = a.c;
    switch (a.ring) {
        case Ring::integers: return x[0] * x[0];
        case Ring::gaussian:
        case Ring::d2: return x[0] * x[0] - ring_discriminant(a.ring) * x[1] * x[1];
        case Ring::eisenstein:
        case Ring::d7:
        case Ring::d11: {
            const std::int64_t k = (1 - ring_discriminant(a.ring)) / 4;
            return x[0] * x[0] + x[0] * x[1] + k * x[1] * x[1];
        }
        case Ring::hurwitz: return (x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]) / 4;
    }
    return 0;
}

Quaternion embed(const RingElement& a) {
    const auto& x = a.c;
    switch (a.ring) {
        case Ring::integers: return Quaternion(static_cast<double>(x[0]));
        case Ring::gaussian:
        case Ring::d2: return {static_cast<double>(x[0]), static_cast<double>(x[1]) * sqrt_abs_d(a.ring), 0, 0};
        case Ring::eisenstein:
        case Ring::d7:
        case Ring::d11:
            return {static_cast<double>(x[0]) + 0.5 * static_cast<double>(x[1]),
                    0.5 * static_cast<double>(x[1]) * sqrt_abs_d(a.ring), 0, 0};
        case Ring::hurwitz:
            return {0.5 * static_cast<double>(x[0]), 0.5 * static_cast<double>(x[1]), 0.5 * static_cast<double>(x[2]),
                    0.5 * static_cast<double>(x[3])};
    }
    return {};
}

bool is_valid(const RingElement& a) {
    const auto& x = a.c;
    switch (a.ring) {
        case Ring::integers: return x[1] == 0 && x[2] == 0 && x[3] == 0;
        case Ring::hurwitz: {
            const auto parity = [](std::int64_t v) { return v & 1; };
            return parity(x[0]) == parity(x[1]) && parity(x[1]) == parity(x[2]) && parity(x[2]) == parity(x[3]);
        }
        default: return x[2] == 0 && x[3] == 0;
    }
}

std::string to_string(const RingElement& a) {
    std::ostringstream os;
    os << ring_name(a.ring) << '(';
    const int n = a.ring == Ring::integers ? 1 : (a.ring == Ring::hurwitz ? 4 : 2);
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << a.c[i];
    os << ')';
    return os.str();
}

double round_half_to_zero(double x) {
    const double f = std::floor(x);
    const double d = x - f;
    if (d > 0.5) return f + 1.0;
    if (d < 0.5) return f;
    return x > 0.0 ? f : f + 1.0;
}

RingElement quantize(Ring ring, const Quaternion& z) {
    RingElement e = RingElement::zero(ring);
    switch (ring) {
        case Ring::integers: e.c[0] = to_int(round_half_to_zero(z.a0)); return e;
        case Ring::gaussian:
        case Ring::d2:
            e.c[0] = to_int(round_half_to_zero(z.a0));
            e.c[1] = to_int(round_half_to_zero(z.a1 / sqrt_abs_d(ring)));
            return e;
        case Ring::eisenstein:
        case Ring::d7:
        case Ring::d11: {
            // The ring is the union of the rectangular lattice Z + i s Z (even w-coefficient) and
            // its translate by w (odd w-coefficient), where s = sqrt|D|.
            const double s = sqrt_abs_d(ring);
            const double a1 = round_half_to_zero(z.a0);
            const double b1 = round_half_to_zero(z.a1 / s);
            RingElement l1 = e;
            l1.c[0] = to_int(a1 - b1);
            l1.c[1] = to_int(2.0 * b1);
            const double a2 = round_half_to_zero(z.a0 - 0.5);
            const double b2 = round_half_to_zero(z.a1 / s - 0.5);
            RingElement l2 = e;
            l2.c[0] = to_int(a2 - b2);
            l2.c[1] = to_int(2.0 * b2 + 1.0);
            return dist2(l2, z) < dist2(l1, z) ? l2 : l1;
        }
        case Ring::hurwitz: {
            RingElement h1 = e, h2 = e;
            const double x[4] = {z.a0, z.a1, z.a2, z.a3};
            for (int l = 0; l < 4; ++l) {
                h1.c[l] = 2 * to_int(round_half_to_zero(x[l]));
                h2.c[l] = 2 * to_int(round_half_to_zero(x[l] - 0.5)) + 1;
            }
            return dist2(h2, z) < dist2(h1, z) ? h2 : h1;
        }
    }
    return e;
}

VoronoiSpec voronoi_spec(Ring ring) {
    const double s = sqrt_abs_d(ring);
    switch (ring) {
        case Ring::integers: return {ring, "|X| < 1/2", 1.0};
        case Ring::gaussian: return {ring, "|X| < 1/2, |Y| < 1/2", 1.0};
        case Ring::d2: return {ring, "|X| < 1/2, |Y| < sqrt(2)/2", std::numbers::sqrt2};
        case Ring::eisenstein: return {ring, "|X| < 1/2, sqrt(3)|Y| + |X| < 1", s / 2.0};
        case Ring::d7:
        case Ring::d11:
            return {ring, "|Re(z conj v)| < |v|^2/2 for v in {1, w, w - 1}", s / 2.0};
        case Ring::hurwitz: return {ring, "|X_l| < 1/2 (l = 0..3), sum |X_l| < 1", 0.5};
    }
    return {ring, "", 0.0};
}

bool in_voronoi(Ring ring, const Quaternion& z) { return quantize(ring, z).is_zero(); }

bool in_voronoi_inequalities(Ring ring, const Quaternion& z) {
    const double x = std::fabs(z.a0);
    const double y = std::fabs(z.a1);
    switch (ring) {
        case Ring::integers: return x < 0.5;
        case Ring::gaussian: return x < 0.5 && y < 0.5;
        case Ring::d2: return x < 0.5 && y < std::numbers::sqrt2 / 2.0;
        case Ring::eisenstein: return x < 0.5 && std::numbers::sqrt3 * y + x < 1.0;
        case Ring::d7:
        case Ring::d11: {
            const double s = sqrt_abs_d(ring);
            const Complex zz{z.a0, z.a1};
            const Complex w{0.5, 0.5 * s};
            for (Complex v : {Complex{1.0, 0.0}, w, w - 1.0})
                if (std::fabs((zz * std::conj(v)).real()) >= 0.5 * std::norm(v)) return false;
            return true;
        }
        case Ring::hurwitz: {
            const double a[4] = {std::fabs(z.a0), std::fabs(z.a1), std::fabs(z.a2), std::fabs(z.a3)};
            double sum = 0.0;
            for (double v : a) {
                if (v >= 0.5) return false;
                sum += v;
            }
            return sum < 1.0;
        }
    }
    return false;
}

DivResult euclid_div(const RingElement& n1, const RingElement& n2) {
    require_same_ring(n1, n2);
    if (n2.is_zero()) fail(ErrorCode::invalid_argument, "euclid_div: division by zero");
    const std::int64_t d = norm(n2);
    const Quaternion target = embed(n1 * conj(n2)) / static_cast<double>(d);
    DivResult out;
    out.q = quantize(n1.ring, target);
    out.r = n1 - out.q * n2;
    if (norm(out.r) >= d) fail(ErrorCode::internal, "euclid_div: remainder not smaller than divisor");
    return out;
}

namespace {

// Inclusive integer range of n with lo <= n * step + offset <= hi.
std::pair<std::int64_t, std::int64_t> index_range(double lo, double hi, double step, double offset) {
    constexpr double slack = 1e-9;
    return {to_int(std::ceil((lo - offset) / step - slack)), to_int(std::floor((hi - offset) / step + slack))};
}

}  // namespace

void for_each_near(Ring ring, const Quaternion& center, double radius,
                   const std::function<void(const RingElement&)>& visit) {
    if (!(radius >= 0.0) || !std::isfinite(radius)) fail(ErrorCode::invalid_argument, "for_each_near: bad radius");
    const double r2 = radius * radius * (1.0 + 1e-12) + 1e-300;
    const auto accept = [&](const RingElement& e) {
        if (dist2(e, center) <= r2) visit(e);
    };
    RingElement e = RingElement::zero(ring);
    switch (ring) {
        case Ring::integers: {
            const auto [lo, hi] = index_range(center.a0 - radius, center.a0 + radius, 1.0, 0.0);
            for (std::int64_t n = lo; n <= hi; ++n) {
                e.c[0] = n;
                accept(e);
            }
            return;
        }
        case Ring::gaussian:
        case Ring::d2:
        case Ring::eisenstein:
        case Ring::d7:
        case Ring::d11: {
            const bool half = ring_uses_half_generator(ring);
            const double im_step = half ? sqrt_abs_d(ring) / 2.0 : sqrt_abs_d(ring);
            const auto [lo2, hi2] = index_range(center.a1 - radius, center.a1 + radius, im_step, 0.0);
            for (std::int64_t n2 = lo2; n2 <= hi2; ++n2) {
                const double dy = static_cast<double>(n2) * im_step - center.a1;
                const double h = std::sqrt(std::max(0.0, radius * radius - dy * dy));
                const double shift = half ? 0.5 * static_cast<double>(n2) : 0.0;
                const auto [lo1, hi1] = index_range(center.a0 - h, center.a0 + h, 1.0, shift);
                for (std::int64_t n1 = lo1; n1 <= hi1; ++n1) {
                    e.c[0] = n1;
                    e.c[1] = n2;
                    accept(e);
                }
            }
            return;
        }
        case Ring::hurwitz: {
            // Doubled coordinates: |c_l/2 - x_l| bounded by the remaining radius at each level.
            const double x[4] = {center.a0, center.a1, center.a2, center.a3};
            const auto [lo0, hi0] = index_range(x[0] - radius, x[0] + radius, 0.5, 0.0);
            for (std::int64_t c0 = lo0; c0 <= hi0; ++c0) {
                const double d0 = 0.5 * static_cast<double>(c0) - x[0];
                const double r1 = std::sqrt(std::max(0.0, radius * radius - d0 * d0));
                auto [lo1, hi1] = index_range(x[1] - r1, x[1] + r1, 0.5, 0.0);
                if (((lo1 - c0) & 1) != 0) ++lo1;
                for (std::int64_t c1 = lo1; c1 <= hi1; c1 += 2) {
                    const double d1 = 0.5 * static_cast<double>(c1) - x[1];
                    const double r2l = std::sqrt(std::max(0.0, r1 * r1 - d1 * d1));
                    auto [lo2, hi2] = index_range(x[2] - r2l, x[2] + r2l, 0.5, 0.0);
                    if (((lo2 - c0) & 1) != 0) ++lo2;
                    for (std::int64_t c2 = lo2; c2 <= hi2; c2 += 2) {
                        const double d2 = 0.5 * static_cast<double>(c2) - x[2];
                        const double r3 = std::sqrt(std::max(0.0, r2l * r2l - d2 * d2));
                        auto [lo3, hi3] = index_range(x[3] - r3, x[3] + r3, 0.5, 0.0);
                        if (((lo3 - c0) & 1) != 0) ++lo3;
                        for (std::int64_t c3 = lo3; c3 <= hi3; c3 += 2) {
                            e.c = {c0, c1, c2, c3};
                            accept(e);
                        }
                    }
                }
            }
            return;
        }
    }
}

std::vector<RingElement> enumerate_ball(Ring ring, double radius) {
    if (!(radius >= 0.0) || !std::isfinite(radius)) fail(ErrorCode::invalid_argument, "enumerate_ball: bad radius");
    const VoronoiSpec v = voronoi_spec(ring);
    double volume = 0.0;
    switch (ring_field(ring)) {
        case Field::real: volume = 2.0 * radius; break;
        case Field::complex: volume = std::numbers::pi * radius * radius; break;
        case Field::quaternion: volume = 0.5 * std::numbers::pi * std::numbers::pi * std::pow(radius, 4); break;
    }
    if (volume / v.covolume > 1.2 * static_cast<double>(enumeration_cap))
        fail(ErrorCode::cap_exceeded, "enumerate_ball: radius exceeds the enumeration cap");

    const double limit = radius * radius;
    std::vector<RingElement> out;
    for_each_near(ring, Quaternion{}, radius, [&](const RingElement& e) {
        if (static_cast<double>(norm(e)) > limit * (1.0 + 1e-12)) return;
        if (out.size() >= enumeration_cap) fail(ErrorCode::cap_exceeded, "enumerate_ball: enumeration cap exceeded");
        out.push_back(e);
    });
    std::sort(out.begin(), out.end(), [](const RingElement& a, const RingElement& b) {
        const auto na = norm(a), nb = norm(b);
        return na != nb ? na < nb : a.c < b.c;
    });
    return out;
}

}  // namespace unilattice
