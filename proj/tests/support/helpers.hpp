#pragma once

#include <cmath>

#include "core/algebra.hpp"
#include "core/reduction.hpp"
#include "core/rings.hpp"
#include "core/rng.hpp"
#include "core/sampling.hpp"

namespace testing {

using namespace unilattice;

/// Gaussian entries in the components the field allows.
inline Quaternion random_scalar(Field f, Rng& rng, double scale = 1.0) {
    Quaternion q{scale * rng.normal(), 0, 0, 0};
    if (f != Field::real) q.a1 = scale * rng.normal();
    if (f == Field::quaternion) {
        q.a2 = scale * rng.normal();
        q.a3 = scale * rng.normal();
    }
    return q;
}

inline Vector2 random_vector(Field f, Rng& rng, double scale = 1.0) {
    return {random_scalar(f, rng, scale), random_scalar(f, rng, scale)};
}

inline Matrix2 random_matrix(Field f, Rng& rng) {
    return Matrix2::from_columns(random_vector(f, rng), random_vector(f, rng));
}

/// A unit-covolume basis for `ring`, drawn the way the experiments draw it.
inline Basis2 random_basis(Ring ring, Rng& rng, double cutoff = 40.0) {
    const Field f = ring_field(ring);
    const Sl2Sample s = sample_sl2(f, cutoff, rng);
    return {f, ring, s.matrix.column(0), s.matrix.column(1)};
}

inline double qdist(const Quaternion& a, const Quaternion& b) { return (a - b).abs(); }

inline double vdist(const Vector2& a, const Vector2& b) { return (a - b).norm(); }

// Closest lattice distance from an independent coordinate scan; does not touch quantize.
inline double brute_nearest_distance(Ring ring, const Quaternion& z) {
    double best = INFINITY;
    if (ring == Ring::integers) {
        for (long n = std::lround(z.a0) - 2; n <= std::lround(z.a0) + 2; ++n)
            best = std::min(best, std::fabs(z.a0 - static_cast<double>(n)));
        return best;
    }
    if (ring == Ring::hurwitz) {
        const double x[4] = {z.a0, z.a1, z.a2, z.a3};
        long lo[4];
        for (int l = 0; l < 4; ++l) lo[l] = std::lround(2.0 * x[l]) - 3;
        for (long a = lo[0]; a <= lo[0] + 6; ++a)
            for (long b = lo[1]; b <= lo[1] + 6; ++b)
                for (long c = lo[2]; c <= lo[2] + 6; ++c)
                    for (long d = lo[3]; d <= lo[3] + 6; ++d) {
                        const long p = a & 1;
                        if ((b & 1) != p || (c & 1) != p || (d & 1) != p) continue;
                        const Quaternion v{a / 2.0, b / 2.0, c / 2.0, d / 2.0};
                        best = std::min(best, (z - v).abs());
                    }
        return best;
    }
    const double s = std::sqrt(static_cast<double>(-ring_discriminant(ring)));
    const bool half = ring_uses_half_generator(ring);
    const double wr = half ? 0.5 : 0.0, wi = half ? s / 2.0 : s;
    const long n2c = std::lround(z.a1 / wi);
    for (long n2 = n2c - 3; n2 <= n2c + 3; ++n2) {
        const long n1c = std::lround(z.a0 - static_cast<double>(n2) * wr);
        for (long n1 = n1c - 3; n1 <= n1c + 3; ++n1) {
            const double dx = z.a0 - (static_cast<double>(n1) + static_cast<double>(n2) * wr);
            const double dy = z.a1 - static_cast<double>(n2) * wi;
            best = std::min(best, std::hypot(dx, dy));
        }
    }
    return best;
}

inline Quaternion random_point(Ring ring, Rng& rng, double half_width) {
    Quaternion z{half_width * (2.0 * rng.uniform() - 1.0), 0, 0, 0};
    if (ring != Ring::integers) z.a1 = half_width * (2.0 * rng.uniform() - 1.0);
    if (ring == Ring::hurwitz) {
        z.a2 = half_width * (2.0 * rng.uniform() - 1.0);
        z.a3 = half_width * (2.0 * rng.uniform() - 1.0);
    }
    return z;
}

inline RingElement random_element(Ring ring, Rng& rng, int span) {
    const auto draw = [&] { return static_cast<std::int64_t>(rng.uniform() * (2 * span + 1)) - span; };
    RingElement e = RingElement::zero(ring);
    if (ring == Ring::integers) {
        e.c[0] = draw();
    } else if (ring == Ring::hurwitz) {
        const std::int64_t parity = rng.uniform() < 0.5 ? 0 : 1;
        for (auto& c : e.c) c = 2 * draw() + parity;
    } else {
        e.c[0] = draw();
        e.c[1] = draw();
    }
    return e;
}

}  // namespace testing
