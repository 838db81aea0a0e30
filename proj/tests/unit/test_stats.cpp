#include <cmath>
#include <vector>

#include "core/rng.hpp"
#include "core/stats.hpp"
#include "doctest.h"

using namespace unilattice;
using doctest::Approx;

TEST_CASE("chi-square tail") {
    CHECK(chi_square_p_value(3.841458820694124, 1) == Approx(0.05).epsilon(1e-9));
    CHECK(chi_square_p_value(18.307038053275146, 10) == Approx(0.05).epsilon(1e-9));
    CHECK(chi_square_p_value(0.0, 5) == 1.0);
    // Two degrees of freedom: exp(-x/2).
    CHECK(chi_square_p_value(4.0, 2) == Approx(std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("Kolmogorov distribution") {
    CHECK(kolmogorov_q(0.1) == 1.0);
    CHECK(kolmogorov_q(1.3580986393225507) == Approx(0.05).epsilon(1e-6));
    CHECK(kolmogorov_q(1.6276236115189537) == Approx(0.01).epsilon(1e-6));
    double prev = 1.0;
    for (double l = 0.2; l < 3.0; l += 0.05) {
        CHECK(kolmogorov_q(l) <= prev);
        prev = kolmogorov_q(l);
    }
}

TEST_CASE("KS statistics") {
    std::vector<double> one{0.5};
    CHECK(ks_statistic(one, [](double x) { return x; }) == Approx(0.5));
    std::vector<double> grid;
    for (int i = 0; i < 10; ++i) grid.push_back((i + 0.5) / 10.0);
    CHECK(ks_statistic(grid, [](double x) { return x; }) == Approx(0.05));

    std::vector<double> a{1, 2, 3}, b{1, 2, 3}, c{4, 5};
    CHECK(ks_two_sample(a, b) == 0.0);
    CHECK(ks_two_sample(a, c) == 1.0);

    Rng rng(61);
    std::vector<double> u(20'000);
    for (double& x : u) x = rng.uniform();
    const double d = ks_statistic(u, [](double x) { return x; });
    CHECK(ks_p_value(d, 20'000.0) > 0.001);
    // A shifted law is rejected.
    const double shifted = ks_statistic(u, [](double x) { return std::min(1.0, x * 1.05); });
    CHECK(ks_p_value(shifted, 20'000.0) < 1e-6);
}
