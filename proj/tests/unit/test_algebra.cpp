#include <cmath>

#include "core/algebra.hpp"
#include "core/error.hpp"
#include "core/rng.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace unilattice;
using testing::qdist;
using testing::random_matrix;
using testing::random_scalar;

namespace {

const Quaternion qi{0, 1, 0, 0}, qj{0, 0, 1, 0}, qk{0, 0, 0, 1};

// Largest singular value by power iteration on M^dagger M, starting from a fixed vector.
double power_iteration_norm(const Matrix2& m) {
    const Matrix2 g = m.adjoint() * m;
    Vector2 v{Quaternion{1.0, 0.3, 0.2, 0.1}, Quaternion{0.7, -0.4, 0.5, 0.2}};
    double lambda = 0.0;
    for (int it = 0; it < 2000; ++it) {
        const Vector2 w = g * v;
        const double n = w.norm();
        lambda = n / v.norm();
        v = w * Quaternion(1.0 / n);
    }
    return std::sqrt(lambda);
}

}  // namespace

TEST_CASE("Hamilton product on the units") {
    CHECK(qi * qj == qk);
    CHECK(qj * qi == -qk);
    CHECK(qj * qk == qi);
    CHECK(qk * qi == qj);
    CHECK(qi * qi == Quaternion(-1.0));
    CHECK(qi * qj * qk == Quaternion(-1.0));
    CHECK(Quaternion{1, 1, 0, 0} * Quaternion{1, -1, 0, 0} == Quaternion(2.0));
}

TEST_CASE("norm is multiplicative and q conj(q) = |q|^2") {
    Rng rng(11);
    double worst = 0.0;
    for (int t = 0; t < 100'000; ++t) {
        const Quaternion p = random_scalar(Field::quaternion, rng), q = random_scalar(Field::quaternion, rng);
        worst = std::max(worst, std::abs((p * q).abs() - p.abs() * q.abs()) / (p.abs() * q.abs()));
        const Quaternion n = p * p.conj();
        CHECK(qdist(n, Quaternion(p.norm2())) <= 1e-12 * p.norm2());
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("inverse of zero is a domain error") {
    CHECK_THROWS_AS((void)Quaternion{}.inverse(), Error);
    Rng rng(3);
    const Quaternion q = random_scalar(Field::quaternion, rng);
    CHECK(qdist(q * q.inverse(), Quaternion(1.0)) < 1e-14);
    CHECK(qdist(q.inverse() * q, Quaternion(1.0)) < 1e-14);
}

TEST_CASE("Cayley-Dickson doubling agrees with the Hamilton product") {
    CHECK(cayley_dickson_mul(1.0, 0.0, Complex(2, 3), Complex(-1, 4)) == from_complex_pair(Complex(2, 3), Complex(-1, 4)));
    CHECK(qdist(cayley_dickson_mul(0.0, 1.0, 0.0, 1.0), Quaternion(-1.0)) == 0.0);
    Rng rng(5);
    double worst = 0.0;
    for (int t = 0; t < 100'000; ++t) {
        const Complex a(rng.normal(), rng.normal()), b(rng.normal(), rng.normal());
        const Complex c(rng.normal(), rng.normal()), d(rng.normal(), rng.normal());
        const Quaternion h = quat_mul(from_complex_pair(a, b), from_complex_pair(c, d));
        worst = std::max(worst, qdist(h, cayley_dickson_mul(a, b, c, d)));
    }
    CHECK(worst < 1e-14 * 10);
}

TEST_CASE("complex pair places j on the left") {
    // a + j b with b = i gives j i = -k.
    CHECK(from_complex_pair(0.0, Complex(0, 1)) == -qk);
    CHECK(from_complex_pair(0.0, 1.0) == qj);
    Complex a, b;
    to_complex_pair(Quaternion{1, 2, 3, 4}, a, b);
    CHECK(from_complex_pair(a, b) == Quaternion{1, 2, 3, 4});
}

TEST_CASE("hermitian dot") {
    CHECK(hermitian_dot({1.0, 0.0}, {0.0, 1.0}) == Quaternion{});
    CHECK(hermitian_dot({qi, 0.0}, {1.0, 0.0}) == -qi);
    CHECK(hermitian_dot({1.0, 1.0}, {1.0, 1.0}) == Quaternion(2.0));
    Rng rng(8);
    const Vector2 u = testing::random_vector(Field::quaternion, rng), v = testing::random_vector(Field::quaternion, rng);
    const Quaternion s = random_scalar(Field::quaternion, rng);
    // Conjugate-linear on the left: <u s, v> = conj(s) <u, v>.
    CHECK(qdist(hermitian_dot(u * s, v), s.conj() * hermitian_dot(u, v)) < 1e-12);
    const Quaternion self = hermitian_dot(u, u);
    CHECK(self.is_complex());
    CHECK(self.a1 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(self.a0 == doctest::Approx(u.norm2()).epsilon(1e-14));
}

TEST_CASE("det2 modulus") {
    CHECK(det2(Matrix2::identity()) == doctest::Approx(1.0));
    CHECK(det2(Matrix2::diagonal(2.0, 0.5)) == doctest::Approx(1.0));
    Rng rng(9);
    for (Field f : {Field::real, Field::complex, Field::quaternion}) {
        const Matrix2 m = random_matrix(f, rng);
        const Matrix2 swapped = Matrix2::from_columns(m.column(1), m.column(0));
        CHECK(det2(swapped) == doctest::Approx(det2(m)).epsilon(1e-12));
    }
    // Quaternion determinant modulus is multiplicative.
    for (int t = 0; t < 200; ++t) {
        const Matrix2 a = random_matrix(Field::quaternion, rng), b = random_matrix(Field::quaternion, rng);
        CHECK(det2(a * b) == doctest::Approx(det2(a) * det2(b)).epsilon(1e-9));
    }
    // Diagonal quaternion matrix: |det| = |d0| |d1|.
    CHECK(det2(Matrix2::diagonal(Quaternion{1, 1, 1, 1}, Quaternion{0, 0, 3, 0})) == doctest::Approx(6.0));
}

TEST_CASE("Gram-Schmidt factorization") {
    const Matrix2 d = Matrix2::diagonal(2.0, 0.5);
    const GramSchmidt g0 = gram_schmidt(d);
    CHECK(max_abs_diff(g0.unitary, Matrix2::identity()) < 1e-15);
    CHECK(max_abs_diff(g0.upper, d) < 1e-15);
    Rng rng(10);
    for (Field f : {Field::real, Field::complex, Field::quaternion}) {
        for (int t = 0; t < 1000; ++t) {
            const Matrix2 m = random_matrix(f, rng);
            const GramSchmidt g = gram_schmidt(m);
            CHECK(max_abs_diff(g.unitary * g.upper, m) < 1e-10 * std::sqrt(frobenius2(m)));
            CHECK(max_abs_diff(g.unitary.adjoint() * g.unitary, Matrix2::identity()) < 1e-12);
            CHECK(g.upper.m[1][0] == Quaternion{});
            CHECK(g.upper.m[0][0].a0 > 0.0);
            CHECK(g.upper.m[1][1].a0 > 0.0);
            CHECK(g.upper.m[0][0].is_complex());
            CHECK(g.upper.m[0][0].a1 == 0.0);
        }
    }
    // A unitary input has T = I.
    const Matrix2 u = gram_schmidt(random_matrix(Field::quaternion, rng)).unitary;
    CHECK(max_abs_diff(gram_schmidt(u).upper, Matrix2::identity()) < 1e-12);
    // SL2 sample: t22 = 1 / t11.
    const Sl2Sample s = sample_sl2(Field::complex, 40.0, rng);
    const GramSchmidt g = gram_schmidt(s.matrix);
    CHECK(g.upper.m[0][0].a0 * g.upper.m[1][1].a0 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(max_abs_diff(g.unitary * g.upper, s.matrix) < 1e-10 * s.sigma1);
    CHECK_THROWS_AS(gram_schmidt(Matrix2::from_columns({0.0, 0.0}, {1.0, 0.0})), Error);
}

TEST_CASE("operator norm") {
    CHECK(operator_norm(Matrix2::identity()) == doctest::Approx(1.0));
    CHECK(operator_norm(Matrix2::diagonal(7.5, 1.0 / 7.5)) == doctest::Approx(7.5).epsilon(1e-14));
    Rng rng(12);
    for (Field f : {Field::real, Field::complex, Field::quaternion})
        for (int t = 0; t < 300; ++t) {
            const Matrix2 m = random_matrix(f, rng);
            CHECK(operator_norm(m) == doctest::Approx(power_iteration_norm(m)).epsilon(1e-10));
        }
}

TEST_CASE("SL2 samples have sigma1 sigma2 = 1") {
    Rng rng(13);
    for (Field f : {Field::real, Field::complex, Field::quaternion})
        for (int t = 0; t < 500; ++t) {
            // R = 10 keeps the Frobenius subtraction below well conditioned.
            const Sl2Sample s = sample_sl2(f, 10.0, rng);
            const double s1 = operator_norm(s.matrix);
            CHECK(s1 == doctest::Approx(s.sigma1).epsilon(1e-8));
            const double s2 = std::sqrt(std::max(0.0, frobenius2(s.matrix) - s1 * s1));
            CHECK(s1 * s2 == doctest::Approx(1.0).epsilon(1e-9));
        }
}

TEST_CASE("field names round-trip") {
    for (Field f : {Field::real, Field::complex, Field::quaternion}) CHECK(field_from_name(field_name(f)) == f);
    CHECK_THROWS_AS(field_from_name("octonion"), Error);
}
