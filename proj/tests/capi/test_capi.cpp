// Exercises the shared library through its public header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "unilattice/unilattice.h"

using doctest::Approx;

namespace {

ul_quat q(double a0, double a1 = 0, double a2 = 0, double a3 = 0) { return ul_quat{{a0, a1, a2, a3}}; }

ul_experiment_config small_config(ul_ring ring, ul_statistic stat) {
    ul_experiment_config c;
    ul_experiment_config_default(&c);
    c.ring = ring;
    REQUIRE(ul_ring_field(ring, &c.field) == UL_OK);
    c.statistic = stat;
    c.trials = 5000;
    c.seed = 3;
    c.workers = 2;
    return c;
}

}  // namespace

TEST_CASE("status names and errors") {
    CHECK(std::strcmp(ul_status_name(UL_OK), "ok") == 0);
    CHECK(std::strlen(ul_version()) > 0);
    ul_ring r;
    CHECK(ul_ring_from_name("d5", &r) == UL_ERR_INVALID_ARGUMENT);
    CHECK(std::strstr(ul_last_error(), "d5") != nullptr);
    CHECK(ul_ring_from_name("eisenstein", &r) == UL_OK);
    CHECK(r == UL_RING_EISENSTEIN);
    CHECK(std::strcmp(ul_ring_name(UL_RING_HURWITZ), "hurwitz") == 0);
    ul_field f;
    CHECK(ul_field_from_name("quaternion", &f) == UL_OK);
    CHECK(f == UL_FIELD_QUATERNION);
    CHECK(ul_ring_from_name(nullptr, &r) == UL_ERR_INVALID_ARGUMENT);
    CHECK(ul_ring_field(static_cast<ul_ring>(42), &f) == UL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("ring elements and quantizer") {
    ul_ring_element e{};
    const ul_quat z = q(0.4, 0.4, 0.4, 0.4);
    REQUIRE(ul_quantize(UL_RING_HURWITZ, &z, &e) == UL_OK);
    CHECK(e.c[0] == 1);
    CHECK(e.c[3] == 1);
    ul_quat v;
    REQUIRE(ul_ring_element_value(UL_RING_HURWITZ, &e, &v) == UL_OK);
    CHECK(v.a[2] == 0.5);
    const ul_ring_element bad{{1, 0, 0, 0}};
    CHECK(ul_ring_element_value(UL_RING_HURWITZ, &bad, &v) == UL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("reduction through the C API") {
    ul_basis b{};
    b.field = UL_FIELD_COMPLEX;
    b.ring = UL_RING_GAUSSIAN;
    b.b0 = {q(3, 2), q(1)};
    b.b1 = {q(1), q(0)};
    ul_reduced r{};
    REQUIRE(ul_reduce(&b, 1, &r) == UL_OK);
    CHECK(r.len_alpha == Approx(1.0));
    CHECK(r.len_beta == Approx(1.0));
    CHECK(r.iterations == 1);
    CHECK(r.alpha.x.a[0] == Approx(1.0));
    double len = 0;
    ul_vec2 sv;
    REQUIRE(ul_shortest(&b, 6.0, &sv, &len) == UL_OK);
    CHECK(len == Approx(1.0));

    b.b0 = {q(2), q(0)};
    CHECK(ul_reduce(&b, 0, &r) == UL_ERR_DOMAIN);
    CHECK(ul_reduce(nullptr, 0, &r) == UL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("rng and sampling") {
    ul_rng* a = nullptr;
    ul_rng* b = nullptr;
    REQUIRE(ul_rng_create(11, 0, &a) == UL_OK);
    REQUIRE(ul_rng_create(11, 0, &b) == UL_OK);
    for (int i = 0; i < 100; ++i) {
        double x, y;
        ul_rng_normal(a, &x);
        ul_rng_normal(b, &y);
        CHECK(x == y);
    }
    ul_sl2_sample s;
    REQUIRE(ul_sample_sl2(a, UL_FIELD_QUATERNION, 40.0, &s) == UL_OK);
    CHECK(s.sigma1 >= 1.0);
    CHECK(ul_sample_sl2(a, UL_FIELD_COMPLEX, 0.5, &s) == UL_ERR_INVALID_ARGUMENT);
    double v, se;
    REQUIRE(ul_gamma4h_monte_carlo(a, 100'000, &v, &se) == UL_OK);
    CHECK(std::fabs(v - 0.10518) < 5 * se);
    ul_rng_destroy(a);
    ul_rng_destroy(b);
    ul_rng_destroy(nullptr);

    double j;
    REQUIRE(ul_j2_closed(2, 2.0, &j) == UL_OK);
    CHECK(j == Approx(4.0 - 1.0 / 64.0 - 2.0 * std::log(2.0)));
    CHECK(ul_j2_closed(2, 0.5, &j) == UL_ERR_DOMAIN);
    uint64_t seed;
    CHECK(ul_seed_from_entropy(&seed) == UL_OK);
}

TEST_CASE("laws, constants and number theory") {
    REQUIRE(ul_law_count() > 5);
    ul_law_info info;
    REQUIRE(ul_law_get_info(0, &info) == UL_OK);
    CHECK(std::strlen(info.name) > 0);
    CHECK(ul_law_get_info(ul_law_count(), &info) == UL_ERR_INVALID_ARGUMENT);
    double d;
    REQUIRE(ul_law_eval("shortest-gaussian", 0.5, &d) == UL_OK);
    CHECK(d == Approx(0.40940).epsilon(1e-5));
    CHECK(ul_law_eval("shortest-hurwitz", 1.1, &d) == UL_ERR_DOMAIN);
    CHECK(ul_law_eval("nope", 0.5, &d) == UL_ERR_INVALID_ARGUMENT);

    ul_constants k;
    REQUIRE(ul_constants_get(&k) == UL_OK);
    CHECK(k.catalan == Approx(0.915965594177219));
    CHECK(k.gamma_4h == Approx(0.1051799).epsilon(1e-6));

    ul_asymptotic a;
    REQUIRE(ul_asymptotic_constants(2, 2, &a) == UL_OK);
    CHECK(a.c_n_beta == Approx(0.25));
    CHECK(ul_asymptotic_constants(1, 2, &a) == UL_ERR_INVALID_ARGUMENT);

    ul_siegel s;
    REQUIRE(ul_siegel_check(UL_RING_GAUSSIAN, 20'000, &s) == UL_OK);
    CHECK(s.relative_gap < 1e-4);
    CHECK(ul_siegel_check(UL_RING_D7, 0, &s) == UL_ERR_UNSUPPORTED);
    int64_t n;
    REQUIRE(ul_count_sl2_gaussian(1.0, &n) == UL_OK);
    CHECK(n == 8);
    CHECK(ul_count_sl2_gaussian(0.5, &n) == UL_ERR_DOMAIN);
}

TEST_CASE("experiments and reports") {
    ul_experiment_config c = small_config(UL_RING_GAUSSIAN, UL_STAT_SHORTEST);
    ul_report* rep = nullptr;
    REQUIRE(ul_experiment_run(&c, &rep) == UL_OK);
    ul_report_summary sum;
    REQUIRE(ul_report_summary_get(rep, &sum) == UL_OK);
    CHECK(sum.overlay == UL_OVERLAY_FULL);
    CHECK(sum.max_len_alpha <= std::pow(2.0, 0.25) + 1e-9);
    CHECK(std::string(ul_report_law(rep)) == "shortest-gaussian");

    size_t needed = 0;
    CHECK(ul_report_csv(rep, nullptr, 0, &needed) == UL_OK);
    REQUIRE(needed > 100);
    char tiny[8];
    CHECK(ul_report_csv(rep, tiny, sizeof tiny, &needed) == UL_ERR_INVALID_ARGUMENT);
    std::vector<char> buf(needed);
    REQUIRE(ul_report_csv(rep, buf.data(), buf.size(), &needed) == UL_OK);
    CHECK(std::string(buf.data()).find("# seed: 3\n") != std::string::npos);

    CHECK(ul_report_write_csv(rep, "/nonexistent-dir/out.csv") == UL_ERR_IO);
    ul_report_destroy(rep);

    c.trials = 0;
    CHECK(ul_experiment_run(&c, &rep) == UL_ERR_INVALID_ARGUMENT);

    ul_experiment_config d7 = small_config(UL_RING_D7, UL_STAT_SHORTEST);
    REQUIRE(ul_experiment_run(&d7, &rep) == UL_OK);
    REQUIRE(ul_report_summary_get(rep, &sum) == UL_OK);
    CHECK(sum.overlay == UL_OVERLAY_ABSENT);
    CHECK(std::string(ul_report_law(rep)).empty());
    ul_report_destroy(rep);

    ul_statistic st;
    CHECK(ul_statistic_from_name("xi_joint", &st) == UL_OK);
    CHECK(st == UL_STAT_XI_JOINT);
}
