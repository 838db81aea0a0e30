#include "core/reduction.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace unilattice {

RingMatrix ring_identity(Ring ring) {
    RingMatrix m{{{RingElement::one(ring), RingElement::zero(ring)}, {RingElement::zero(ring), RingElement::one(ring)}}};
    return m;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    RingMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Matrix2 apply_transform(const Matrix2& b, const RingMatrix& m) {
    Matrix2 e;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e.m[i][j] = embed(m[i][j]);
    return b * e;
}

namespace {

bool entries_in_field(const Vector2& v, Field f) {
    for (const Quaternion& q : {v.x, v.y}) {
        if (!std::isfinite(q.a0) || !std::isfinite(q.a1) || !std::isfinite(q.a2) || !std::isfinite(q.a3)) return false;
        if (f == Field::real && (q.a1 != 0.0 || q.a2 != 0.0 || q.a3 != 0.0)) return false;
        if (f == Field::complex && (q.a2 != 0.0 || q.a3 != 0.0)) return false;
    }
    return true;
}

// Step matrix for [prev, cur] -> [cur, prev - cur m], and its inverse.
RingMatrix step_matrix(const RingElement& m) {
    const Ring r = m.ring;
    return {{{RingElement::zero(r), RingElement::one(r)}, {RingElement::one(r), -m}}};
}

RingMatrix step_inverse(const RingElement& m) {
    const Ring r = m.ring;
    return {{{m, RingElement::one(r)}, {RingElement::one(r), RingElement::zero(r)}}};
}

}  // namespace

void validate_basis(const Basis2& basis, const Tolerances& tol) {
    if (ring_field(basis.ring) != basis.field)
        fail(ErrorCode::invalid_argument, "ring " + std::string(ring_name(basis.ring)) + " does not match the field");
    if (!entries_in_field(basis.b0, basis.field) || !entries_in_field(basis.b1, basis.field))
        fail(ErrorCode::invalid_argument, "basis entries are not finite elements of the field");
    if (basis.b0.norm2() == 0.0 || basis.b1.norm2() == 0.0) fail(ErrorCode::domain, "degenerate basis: zero vector");
    const double d = det2(Matrix2::from_columns(basis.b0, basis.b1));
    if (!(std::fabs(d - 1.0) <= tol.structural))
        fail(ErrorCode::domain, "basis does not have unit covolume (|det| = " + std::to_string(d) + ")");
}

ReducedBasis reduce(const Basis2& basis, const ReduceOptions& options) {
    validate_basis(basis, options.tol);
    const Ring ring = basis.ring;

    Vector2 prev = basis.b0, cur = basis.b1;
    RingMatrix coef = ring_identity(ring);  // columns: coefficients of prev, cur
    RingMatrix coef_inv = ring_identity(ring);
    if (cur.norm2() > prev.norm2()) {
        std::swap(prev, cur);
        const RingMatrix swap{{{RingElement::zero(ring), RingElement::one(ring)},
                               {RingElement::one(ring), RingElement::zero(ring)}}};
        coef = swap;
        coef_inv = swap;
    }

    ReducedBasis out;
    for (int step = 0;; ++step) {
        if (step >= options.max_iterations) fail(ErrorCode::numerical, "reduce: iteration cap exceeded");
        const double cur2 = cur.norm2();
        if (!(cur2 > 0.0)) fail(ErrorCode::domain, "degenerate basis: vector collapsed to zero");
        const RingElement m = quantize(ring, hermitian_dot(cur, prev) / cur2);
        out.coefficients.push_back(m);
        if (options.check_invariants && step > 0 && !m.is_zero() && !(cur2 < prev.norm2()))
            fail(ErrorCode::internal, "reduce: nonzero coefficient without strict decrease");

        const Vector2 next = prev - cur * embed(m);
        coef = coef * step_matrix(m);
        coef_inv = step_inverse(m) * coef_inv;
        if (!m.is_zero()) ++out.iterations;

        if (next.norm2() >= cur2) {
            out.alpha = cur;
            out.beta = next;
            break;
        }
        prev = cur;
        cur = next;
    }

    out.len_alpha = out.alpha.norm();
    out.len_beta = out.beta.norm();
    out.xi = hermitian_dot(out.alpha, out.beta) / (out.len_alpha * out.len_beta);
    out.transform = coef;
    out.inverse_transform = coef_inv;

    if (options.check_invariants) {
        if (!is_greedy(out.alpha, out.beta, ring, options.tol.structural))
            fail(ErrorCode::internal, "reduce: output is not greedy");
        const RingElement m_next = quantize(ring, hermitian_dot(out.beta, out.alpha) / out.beta.norm2());
        if (!m_next.is_zero() && out.beta.norm2() > out.alpha.norm2() * (1.0 + options.tol.structural))
            fail(ErrorCode::internal, "reduce: terminal coefficient is nonzero");
        if (!is_unimodular(out.transform, out.inverse_transform))
            fail(ErrorCode::internal, "reduce: transform is not unimodular");
    }
    return out;
}

bool is_greedy(const Vector2& alpha, const Vector2& beta, Ring ring, double tol) {
    const double a2 = alpha.norm2();
    const double b2 = beta.norm2();
    if (!(a2 > 0.0) || !(b2 > 0.0)) fail(ErrorCode::invalid_argument, "is_greedy: zero vector");
    if (std::sqrt(a2) > std::sqrt(b2) * (1.0 + tol)) return false;
    return quantize(ring, hermitian_dot(alpha, beta) / a2).is_zero();
}

std::int64_t exact_det_norm(const RingMatrix& m) {
    const Ring ring = m[0][0].ring;
    if (ring != Ring::hurwitz) return norm(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    // |a|^2 |d|^2 + |b|^2 |c|^2 - 2 Re(conj(d) c conj(a) b) for [[a, b], [c, d]].
    const RingElement& a = m[0][0];
    const RingElement& b = m[0][1];
    const RingElement& c = m[1][0];
    const RingElement& d = m[1][1];
    const RingElement cross = conj(d) * c * conj(a) * b;
    return norm(a) * norm(d) + norm(b) * norm(c) - cross.c[0];  // 2 Re(x) = c0 in doubled coordinates
}

bool is_unimodular(const RingMatrix& m, const RingMatrix& inverse) {
    const Ring ring = m[0][0].ring;
    const RingMatrix id = ring_identity(ring);
    return m * inverse == id && inverse * m == id && exact_det_norm(m) == 1;
}

ShortestVector shortest_oracle(const Basis2& basis, double coeff_radius) {
    if (!(coeff_radius >= 1.0)) fail(ErrorCode::invalid_argument, "shortest_oracle: coeff_radius must be >= 1");
    validate_basis(basis);
    const Ring ring = basis.ring;
    const Vector2& b0 = basis.b0;
    const Vector2& b1 = basis.b1;
    const double n0 = b0.norm2();
    const Quaternion c = hermitian_dot(b0, b1) / n0;
    const double nstar = (b1 - b0 * c).norm2();

    ShortestVector best;
    best.length = std::numeric_limits<double>::infinity();
    const auto consider = [&](const RingElement& m0, const RingElement& m1) {
        if (m0.is_zero() && m1.is_zero()) return;
        const Vector2 v = b0 * embed(m0) + b1 * embed(m1);
        const double len = v.norm();
        if (len < best.length) best = {v, len, m0, m1};
    };
    consider(RingElement::one(ring), RingElement::zero(ring));
    consider(RingElement::zero(ring), RingElement::one(ring));

    // Any improvement has |v| <= bound, which limits |m1| and then m0 around -c m1.
    const double bound2 = best.length * best.length * (1.0 + 1e-12);
    const double r1 = std::min(coeff_radius, std::sqrt(bound2 / nstar));
    std::size_t visited = 0;
    for_each_near(ring, Quaternion{}, r1, [&](const RingElement& m1) {
        const Quaternion e1 = embed(m1);
        const double rest = bound2 - nstar * e1.norm2();
        if (rest < 0.0) return;
        const double r0 = std::sqrt(rest / n0);
        for_each_near(ring, -(c * e1), r0, [&](const RingElement& m0) {
            if (++visited > enumeration_cap) fail(ErrorCode::cap_exceeded, "shortest_oracle: enumeration cap exceeded");
            if (static_cast<double>(norm(m0)) > coeff_radius * coeff_radius * (1.0 + 1e-12)) return;
            consider(m0, m1);
        });
    });
    return best;
}

double complete_coeff_radius(const Basis2& basis) {
    const double n0 = basis.b0.norm2();
    const Quaternion c = hermitian_dot(basis.b0, basis.b1) / n0;
    const double nstar = (basis.b1 - basis.b0 * c).norm2();
    const double len = std::sqrt(std::min(n0, basis.b1.norm2()));
    const double m1 = len / std::sqrt(nstar);
    const double m0 = len / std::sqrt(n0) + c.abs() * m1;
    return std::max({1.0, m0, m1}) * (1.0 + 1e-9);
}

Complex scalar_step_real(Complex z) {
    if (z == Complex{}) fail(ErrorCode::invalid_argument, "scalar_step_real: z = 0");
    const Complex inv = 1.0 / z;
    return inv - round_half_to_zero(inv.real());
}

ScalarStep scalar_step_complex(const Quaternion& q, Ring ring) {
    if (q.norm2() == 0.0) fail(ErrorCode::invalid_argument, "scalar_step_complex: Q = 0");
    if (ring_field(ring) != Field::complex) fail(ErrorCode::invalid_argument, "scalar_step_complex: needs a quadratic ring");
    const Quaternion inv = q.inverse();
    const RingElement m = quantize(ring, Quaternion(inv.complex_part()));
    return {inv - embed(m), m};
}

Quaternion vector_to_quaternion(const Vector2& b) { return from_complex_pair(b.x.complex_part(), b.y.complex_part()); }

namespace {

std::pair<Vector2, Vector2> ordered(const Basis2& basis) {
    validate_basis(basis);
    if (basis.b1.norm2() > basis.b0.norm2()) return {basis.b1, basis.b0};
    return {basis.b0, basis.b1};
}

}  // namespace

std::vector<RingElement> scalar_sequence_real(const Basis2& basis) {
    if (basis.field != Field::real) fail(ErrorCode::invalid_argument, "scalar_sequence_real: needs a real basis");
    const auto [b0, b1] = ordered(basis);
    // Identify (x, y) in R^2 with x + i y.
    Complex z = Complex{b1.x.a0, b1.y.a0} / Complex{b0.x.a0, b0.y.a0};
    std::vector<RingElement> seq;
    for (int step = 0;; ++step) {
        if (step >= 10'000) fail(ErrorCode::numerical, "scalar_sequence_real: iteration cap exceeded");
        const Complex inv = 1.0 / z;
        seq.push_back(RingElement::from_int(Ring::integers, static_cast<std::int64_t>(round_half_to_zero(inv.real()))));
        z = scalar_step_real(z);
        if (std::abs(z) >= 1.0) break;
    }
    return seq;
}

std::vector<RingElement> scalar_sequence_complex(const Basis2& basis) {
    if (basis.field != Field::complex) fail(ErrorCode::invalid_argument, "scalar_sequence_complex: needs a complex basis");
    const auto [b0, b1] = ordered(basis);
    Quaternion q = vector_to_quaternion(b0).inverse() * vector_to_quaternion(b1);
    std::vector<RingElement> seq;
    for (int step = 0;; ++step) {
        if (step >= 10'000) fail(ErrorCode::numerical, "scalar_sequence_complex: iteration cap exceeded");
        const ScalarStep s = scalar_step_complex(q, basis.ring);
        seq.push_back(s.m);
        q = s.next;
        if (q.norm2() >= 1.0) break;
    }
    return seq;
}

}  // namespace unilattice
