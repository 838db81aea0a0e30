#include <cmath>
#include <vector>

#include "core/error.hpp"
#include "core/sampling.hpp"
#include "core/special.hpp"
#include "core/stats.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace unilattice;

namespace {

// True when every entry has zero components outside the field.
bool entries_in(const Matrix2& m, Field f) {
    for (const auto& row : m.m)
        for (const Quaternion& q : row) {
            if (f == Field::real && q.a1 != 0.0) return false;
            if (f != Field::quaternion && (q.a2 != 0.0 || q.a3 != 0.0)) return false;
        }
    return true;
}

// Direct quadrature of the singular-value integral with sigma2 = 1/sigma1.
double j2_quadrature(int beta, double r) {
    return integrate([beta](double s) { return std::pow(s * s - 1.0 / (s * s), beta) / s; }, 1.0, r, 1e-14);
}

}  // namespace

TEST_CASE("Haar unitaries are unitary") {
    Rng rng(41);
    for (Field f : {Field::real, Field::complex, Field::quaternion})
        for (int t = 0; t < 1000; ++t) {
            const Matrix2 u = sample_haar_unitary(f, rng);
            CHECK(max_abs_diff(u.adjoint() * u, Matrix2::identity()) < 1e-12);
            CHECK(max_abs_diff(u * u.adjoint(), Matrix2::identity()) < 1e-12);
            CHECK(entries_in(u, f));
        }
}

TEST_CASE("j2 closed forms") {
    CHECK(j2_closed(2, 1.0) == 0.0);
    CHECK(j2_closed(4, 1.0) == 0.0);
    CHECK(j2_closed(2, 2.0) == doctest::Approx(4.0 - 1.0 / 64.0 - 2.0 * std::log(2.0)).epsilon(1e-14));
    CHECK(j2_closed(2, 2.0) == doctest::Approx(2.598081).epsilon(1e-6));
    CHECK_THROWS_AS(j2_closed(3, 2.0), Error);
    CHECK_THROWS_AS(j2_closed(2, 0.5), Error);

    for (int i = 0; i < 20; ++i) {
        const double r = 1.0 + 0.25 * (i + 1);
        const double printed = std::pow(r, 8) / 8 - std::pow(r, 4) + std::pow(r, -4) - std::pow(r, -8) / 8 + 6 * std::log(r);
        CHECK(j2_closed(4, r) == doctest::Approx(printed).epsilon(1e-12));
    }
    for (int beta : {1, 2, 4})
        for (double r : {1.0001, 1.01, 1.1, 1.5, 2.0, 3.0, 7.0, 40.0}) {
            INFO("beta " << beta << " r " << r);
            CHECK(j2_closed(beta, r) == doctest::Approx(j2_quadrature(beta, r)).epsilon(1e-10));
            const double h = 1e-5 * r;
            const double slope = (j2_closed(beta, r + h) - j2_closed(beta, r - h)) / (2.0 * h);
            CHECK(j2_density(beta, r) == doctest::Approx(slope).epsilon(1e-6));
        }
}

TEST_CASE("j2 closed forms agree with the Monte Carlo integral") {
    Rng rng(42);
    for (int beta : {2, 4})
        for (double r : {1.5, 2.0, 3.0}) {
            const McEstimate mc = jn_monte_carlo(2, beta, r, 400'000, rng);
            INFO("beta " << beta << " r " << r << " mc " << mc.value << " +- " << mc.std_error);
            CHECK(std::fabs(mc.value - j2_closed(beta, r)) < 3.0 * mc.std_error);
        }
}

TEST_CASE("inverse CDF endpoints and monotonicity") {
    for (int beta : {1, 2, 4}) {
        CHECK(sigma1_from_uniform(beta, 40.0, 0.0) == doctest::Approx(1.0));
        CHECK(sigma1_from_uniform(beta, 40.0, 1.0) == doctest::Approx(40.0));
        double prev = 1.0;
        for (int i = 1; i <= 1000; ++i) {
            const double s = sigma1_from_uniform(beta, 40.0, i / 1000.0);
            CHECK(s >= prev);
            prev = s;
            if (i % 97 == 0)
                CHECK(j2_closed(beta, s) / j2_closed(beta, 40.0) == doctest::Approx(i / 1000.0).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(sigma1_from_uniform(2, 1.0, 0.5), Error);
}

TEST_CASE("sigma1 draws follow the truncated law") {
    Rng rng(43);
    for (Field f : {Field::complex, Field::quaternion}) {
        const int beta = beta_of(f);
        std::vector<double> xs(50'000);
        for (double& x : xs) x = sample_sigma1(f, 40.0, rng);
        const double jr = j2_closed(beta, 40.0);
        const double d = ks_statistic(xs, [&](double s) { return j2_closed(beta, s) / jr; });
        CHECK(d < 0.01);
        CHECK(ks_p_value(d, static_cast<double>(xs.size())) > 0.001);
    }
}

TEST_CASE("SL2 samples") {
    Rng rng(44);
    for (Field f : {Field::real, Field::complex, Field::quaternion})
        for (int t = 0; t < 500; ++t) {
            const Sl2Sample s = sample_sl2(f, 40.0, rng);
            CHECK(s.sigma1 >= 1.0);
            CHECK(s.sigma1 <= 40.0);
            CHECK(det2(s.matrix) == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(entries_in(s.matrix, f));
        }
}

TEST_CASE("column statistic is invariant under a fixed left rotation") {
    Rng rng(45);
    const Matrix2 fixed = sample_haar_unitary(Field::complex, rng);
    std::vector<double> plain, rotated;
    for (int t = 0; t < 100'000; ++t) {
        plain.push_back(sample_sl2(Field::complex, 40.0, rng).matrix.m[0][0].abs());
        rotated.push_back((fixed * sample_sl2(Field::complex, 40.0, rng).matrix).m[0][0].abs());
    }
    const double d = ks_two_sample(plain, rotated);
    CHECK(ks_p_value(d, 50'000.0) > 0.001);
}
