#pragma once

#include <complex>
#include <string_view>

namespace unilattice {

using Complex = std::complex<double>;

/// Scalar field of a lattice; the enumerator value is beta.
enum class Field { real = 1, complex = 2, quaternion = 4 };

inline int beta_of(Field f) { return static_cast<int>(f); }

/// "real", "complex", "quaternion".
std::string_view field_name(Field f);
Field field_from_name(std::string_view name);

/// a0 + a1 i + a2 j + a3 k. Reals and complex numbers are the special cases a2 = a3 = 0.
struct Quaternion {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double r) : a0(r) {}
    constexpr Quaternion(double r, double i, double j, double k) : a0(r), a1(i), a2(j), a3(k) {}
    Quaternion(Complex z) : a0(z.real()), a1(z.imag()) {}

    Quaternion conj() const { return {a0, -a1, -a2, -a3}; }
    double norm2() const { return a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3; }
    double abs() const;
    Quaternion inverse() const;
    /// The (Re + i Im_i) projection.
    Complex complex_part() const { return {a0, a1}; }
    bool is_complex() const { return a2 == 0.0 && a3 == 0.0; }

    Quaternion& operator+=(const Quaternion& o);
    Quaternion& operator-=(const Quaternion& o);
    Quaternion& operator*=(double s);

    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion operator+(Quaternion p, const Quaternion& q);
Quaternion operator-(Quaternion p, const Quaternion& q);
Quaternion operator-(const Quaternion& q);
Quaternion operator*(Quaternion q, double s);
Quaternion operator*(double s, Quaternion q);
Quaternion operator/(Quaternion q, double s);
/// Hamilton product.
Quaternion operator*(const Quaternion& p, const Quaternion& q);

Quaternion quat_mul(const Quaternion& p, const Quaternion& q);

/// The complex pair (a, b) stands for a + j b, so the coordinates are (Re a, Im a, Re b, -Im b).
Quaternion from_complex_pair(Complex a, Complex b);
void to_complex_pair(const Quaternion& q, Complex& a, Complex& b);

/// Product of (a + j b)(c + j d) computed by the doubling formula, without quaternion arithmetic.
Quaternion cayley_dickson_mul(Complex a, Complex b, Complex c, Complex d);

struct Vector2 {
    Quaternion x, y;

    double norm2() const { return x.norm2() + y.norm2(); }
    double norm() const;

    friend bool operator==(const Vector2&, const Vector2&) = default;
};

Vector2 operator+(const Vector2& u, const Vector2& v);
Vector2 operator-(const Vector2& u, const Vector2& v);
/// Right scalar multiplication v * s (coordinates multiplied on the right).
Vector2 operator*(const Vector2& v, const Quaternion& s);

/// <u, v> = conj(u1) v1 + conj(u2) v2, conjugate-linear in u.
Quaternion hermitian_dot(const Vector2& u, const Vector2& v);

/// 2x2 matrix stored row-major; columns are lattice vectors.
struct Matrix2 {
    Quaternion m[2][2];

    static Matrix2 identity();
    static Matrix2 from_columns(const Vector2& c0, const Vector2& c1);
    static Matrix2 diagonal(const Quaternion& d0, const Quaternion& d1);

    Vector2 column(int c) const { return {m[0][c], m[1][c]}; }
    Matrix2 adjoint() const;
    bool is_complex() const;
};

Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Vector2 operator*(const Matrix2& a, const Vector2& v);
double frobenius2(const Matrix2& a);
double max_abs_diff(const Matrix2& a, const Matrix2& b);

/// |det m|. Complex entries use ad - bc; quaternion entries go through the 4x4 complex
/// representation, whose determinant equals |det|^2.
double det2(const Matrix2& m);

struct GramSchmidt {
    Matrix2 unitary;
    Matrix2 upper;
};

/// m = U T with U unitary and T upper triangular with positive real diagonal.
GramSchmidt gram_schmidt(const Matrix2& m);

/// Largest singular value, from the larger eigenvalue of m^dagger m.
double operator_norm(const Matrix2& m);

}  // namespace unilattice
