#include "core/algebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "core/error.hpp"

namespace unilattice {

std::string_view field_name(Field f) {
    switch (f) {
        case Field::real: return "real";
        case Field::complex: return "complex";
        case Field::quaternion: return "quaternion";
    }
    return "unknown";
}

Field field_from_name(std::string_view name) {
    for (Field f : {Field::real, Field::complex, Field::quaternion})
        if (field_name(f) == name) return f;
    fail(ErrorCode::invalid_argument, "unknown field '" + std::string(name) + "' (expected real, complex or quaternion)");
}

double Quaternion::abs() const { return std::sqrt(norm2()); }

Quaternion Quaternion::inverse() const {
    const double n = norm2();
    if (n == 0.0) fail(ErrorCode::domain, "inverse of zero scalar");
    return conj() / n;
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
    a0 += o.a0;
    a1 += o.a1;
    a2 += o.a2;
    a3 += o.a3;
    return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
    a0 -= o.a0;
    a1 -= o.a1;
    a2 -= o.a2;
    a3 -= o.a3;
    return *this;
}

Quaternion& Quaternion::operator*=(double s) {
    a0 *= s;
    a1 *= s;
    a2 *= s;
    a3 *= s;
    return *this;
}

Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
Quaternion operator-(const Quaternion& q) { return {-q.a0, -q.a1, -q.a2, -q.a3}; }
Quaternion operator*(Quaternion q, double s) { return q *= s; }
Quaternion operator*(double s, Quaternion q) { return q *= s; }
Quaternion operator/(Quaternion q, double s) { return q *= 1.0 / s; }

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {
        p.a0 * q.a0 - p.a1 * q.a1 - p.a2 * q.a2 - p.a3 * q.a3,
        p.a0 * q.a1 + p.a1 * q.a0 + p.a2 * q.a3 - p.a3 * q.a2,
        p.a0 * q.a2 - p.a1 * q.a3 + p.a2 * q.a0 + p.a3 * q.a1,
        p.a0 * q.a3 + p.a1 * q.a2 - p.a2 * q.a1 + p.a3 * q.a0,
    };
}

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

Quaternion from_complex_pair(Complex a, Complex b) {
    return {a.real(), a.imag(), b.real(), -b.imag()};
}

void to_complex_pair(const Quaternion& q, Complex& a, Complex& b) {
    a = {q.a0, q.a1};
    b = {q.a2, -q.a3};
}

Quaternion cayley_dickson_mul(Complex a, Complex b, Complex c, Complex d) {
    return from_complex_pair(a * c - d * std::conj(b), std::conj(a) * d + c * b);
}

double Vector2::norm() const { return std::sqrt(norm2()); }

Vector2 operator+(const Vector2& u, const Vector2& v) { return {u.x + v.x, u.y + v.y}; }
Vector2 operator-(const Vector2& u, const Vector2& v) { return {u.x - v.x, u.y - v.y}; }
Vector2 operator*(const Vector2& v, const Quaternion& s) { return {v.x * s, v.y * s}; }

Quaternion hermitian_dot(const Vector2& u, const Vector2& v) {
    return u.x.conj() * v.x + u.y.conj() * v.y;
}

Matrix2 Matrix2::identity() { return diagonal(1.0, 1.0); }

Matrix2 Matrix2::from_columns(const Vector2& c0, const Vector2& c1) {
    Matrix2 r;
    r.m[0][0] = c0.x;
    r.m[1][0] = c0.y;
    r.m[0][1] = c1.x;
    r.m[1][1] = c1.y;
    return r;
}

Matrix2 Matrix2::diagonal(const Quaternion& d0, const Quaternion& d1) {
    Matrix2 r;
    r.m[0][0] = d0;
    r.m[1][1] = d1;
    return r;
}

Matrix2 Matrix2::adjoint() const {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = m[j][i].conj();
    return r;
}

bool Matrix2::is_complex() const {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_complex()) return false;
    return true;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return r;
}

Vector2 operator*(const Matrix2& a, const Vector2& v) {
    return {a.m[0][0] * v.x + a.m[0][1] * v.y, a.m[1][0] * v.x + a.m[1][1] * v.y};
}

double frobenius2(const Matrix2& a) {
    double s = 0.0;
    for (const auto& row : a.m)
        for (const auto& e : row) s += e.norm2();
    return s;
}

double max_abs_diff(const Matrix2& a, const Matrix2& b) {
    double d = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d = std::max(d, (a.m[i][j] - b.m[i][j]).abs());
    return d;
}

namespace {

// Complex 2x2 block [[z, w], [-conj(w), conj(z)]] of a quaternion.
void embed_block(const Quaternion& q, std::array<std::array<Complex, 4>, 4>& a, int r, int c) {
    const Complex z{q.a0, q.a1};
    const Complex w{q.a2, q.a3};
    a[r][c] = z;
    a[r][c + 1] = w;
    a[r + 1][c] = -std::conj(w);
    a[r + 1][c + 1] = std::conj(z);
}

Complex det4(std::array<std::array<Complex, 4>, 4> a) {
    Complex det = 1.0;
    for (int k = 0; k < 4; ++k) {
        int piv = k;
        for (int i = k + 1; i < 4; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        if (a[piv][k] == Complex{}) return 0.0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (int i = k + 1; i < 4; ++i) {
            const Complex f = a[i][k] / a[k][k];
            for (int j = k; j < 4; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

}  // namespace

double det2(const Matrix2& m) {
    if (m.is_complex()) {
        const Complex d = m.m[0][0].complex_part() * m.m[1][1].complex_part() -
                          m.m[0][1].complex_part() * m.m[1][0].complex_part();
        return std::abs(d);
    }
    std::array<std::array<Complex, 4>, 4> a{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) embed_block(m.m[i][j], a, 2 * i, 2 * j);
    // The representation's determinant is real and nonnegative; clamp rounding noise.
    return std::sqrt(std::max(0.0, det4(a).real()));
}

GramSchmidt gram_schmidt(const Matrix2& m) {
    const Vector2 v0 = m.column(0);
    const Vector2 v1 = m.column(1);
    const double t11 = v0.norm();
    if (!(t11 > 0.0) || !std::isfinite(t11)) fail(ErrorCode::domain, "gram_schmidt: first column is zero");
    const Vector2 u0 = v0 * Quaternion(1.0 / t11);
    const Quaternion t12 = hermitian_dot(u0, v1);
    const Vector2 rest = v1 - u0 * t12;
    const double t22 = rest.norm();
    if (!(t22 > 0.0)) fail(ErrorCode::domain, "gram_schmidt: columns are dependent");
    const Vector2 u1 = rest * Quaternion(1.0 / t22);

    GramSchmidt gs;
    gs.unitary = Matrix2::from_columns(u0, u1);
    gs.upper.m[0][0] = t11;
    gs.upper.m[0][1] = t12;
    gs.upper.m[1][1] = t22;
    return gs;
}

double operator_norm(const Matrix2& m) {
    const Vector2 c0 = m.column(0);
    const Vector2 c1 = m.column(1);
    const double p = c0.norm2();
    const double r = c1.norm2();
    const double s2 = hermitian_dot(c0, c1).norm2();
    const double h = 0.5 * (p - r);
    return std::sqrt(0.5 * (p + r) + std::sqrt(h * h + s2));
}

}  // namespace unilattice
