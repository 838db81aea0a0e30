#include <algorithm>
#include <cmath>
#include <set>

#include "core/error.hpp"
#include "core/rings.hpp"
#include "core/rng.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace unilattice;
using testing::brute_nearest_distance;
using testing::random_element;
using testing::random_point;

namespace {

constexpr Ring all_rings[] = {Ring::integers, Ring::gaussian,   Ring::d2,     Ring::eisenstein,
                              Ring::d7,       Ring::d11,        Ring::hurwitz};

}  // namespace

TEST_CASE("ring names and fields") {
    for (Ring r : all_rings) CHECK(ring_from_name(ring_name(r)) == r);
    CHECK_THROWS_AS(ring_from_name("d5"), Error);
    CHECK(ring_field(Ring::integers) == Field::real);
    CHECK(ring_field(Ring::d11) == Field::complex);
    CHECK(ring_field(Ring::hurwitz) == Field::quaternion);
    CHECK(ring_discriminant(Ring::eisenstein) == -3);
    CHECK(ring_uses_half_generator(Ring::d7));
    CHECK_FALSE(ring_uses_half_generator(Ring::d2));
}

TEST_CASE("rounding sends halves toward zero") {
    CHECK(round_half_to_zero(0.5) == 0.0);
    CHECK(round_half_to_zero(-0.5) == 0.0);
    CHECK(round_half_to_zero(1.5) == 1.0);
    CHECK(round_half_to_zero(-2.5) == -2.0);
    CHECK(round_half_to_zero(0.51) == 1.0);
    CHECK(round_half_to_zero(-0.49) == 0.0);
}

TEST_CASE("exact arithmetic matches the embedding") {
    Rng rng(21);
    for (Ring r : all_rings)
        for (int t = 0; t < 2000; ++t) {
            const RingElement a = random_element(r, rng, 20), b = random_element(r, rng, 20);
            REQUIRE(is_valid(a));
            const RingElement p = a * b;
            CHECK(is_valid(p));
            CHECK(testing::qdist(embed(p), embed(a) * embed(b)) < 1e-9);
            CHECK(testing::qdist(embed(a + b), embed(a) + embed(b)) < 1e-12);
            CHECK(testing::qdist(embed(conj(a)), embed(a).conj()) < 1e-12);
            CHECK(norm(p) == norm(a) * norm(b));
            CHECK(static_cast<double>(norm(a)) == doctest::Approx(embed(a).norm2()).epsilon(1e-12));
        }
    RingElement mixed = RingElement::zero(Ring::hurwitz);
    mixed.c = {1, 0, 1, 1};
    CHECK_FALSE(is_valid(mixed));
    CHECK(embed(RingElement::from_int(Ring::hurwitz, 2)) == Quaternion(2.0));
}

TEST_CASE("quantize examples") {
    const RingElement i = {Ring::gaussian, {0, 1, 0, 0}};
    CHECK(quantize(Ring::gaussian, Quaternion{0.4, 0.6, 0, 0}) == i);
    CHECK(quantize(Ring::gaussian, Quaternion{0.5, 0.0, 0, 0}).is_zero());
    CHECK(quantize(Ring::gaussian, Quaternion{2.7, -1.2, 0, 0}) == RingElement{Ring::gaussian, {3, -1, 0, 0}});
    CHECK(quantize(Ring::eisenstein, Quaternion{0.5, 0.3, 0, 0}) == RingElement{Ring::eisenstein, {0, 1, 0, 0}});
    CHECK(quantize(Ring::hurwitz, Quaternion{0.4, 0.4, 0.4, 0.4}) == RingElement{Ring::hurwitz, {1, 1, 1, 1}});
    CHECK(quantize(Ring::hurwitz, Quaternion{0.9, 0.1, -0.1, 0.0}) == RingElement::one(Ring::hurwitz));
    CHECK(quantize(Ring::integers, Quaternion{-1.7, 5, 5, 5}) == RingElement::from_int(Ring::integers, -2));
}

TEST_CASE("quantize is optimal against a brute-force scan") {
    Rng rng(22);
    for (Ring r : all_rings) {
        double worst = 0.0;
        for (int t = 0; t < 10'000; ++t) {
            const Quaternion z = random_point(r, rng, 2.0);
            const RingElement q = quantize(r, z);
            CHECK(is_valid(q));
            worst = std::max(worst, (z - embed(q)).abs() - brute_nearest_distance(r, z));
        }
        INFO(ring_name(r));
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("quantize fixes ring elements") {
    for (Ring r : all_rings)
        for (const RingElement& e : enumerate_ball(r, r == Ring::hurwitz ? 6.0 : 10.0)) {
            if (quantize(r, embed(e)) != e) {
                FAIL_CHECK("not idempotent at " << to_string(e));
                break;
            }
        }
}

TEST_CASE("Voronoi cell membership") {
    CHECK(in_voronoi(Ring::hurwitz, Quaternion{0.4, 0, 0, 0}));
    CHECK_FALSE(in_voronoi(Ring::hurwitz, Quaternion{0.3, 0.3, 0.3, 0.3}));
    CHECK(in_voronoi(Ring::eisenstein, Quaternion{0.49, 0, 0, 0}));
    CHECK_FALSE(in_voronoi(Ring::eisenstein, Quaternion{0.3, 0.45, 0, 0}));
    Rng rng(23);
    for (Ring r : all_rings) {
        int disagreements = 0;
        for (int t = 0; t < 20'000; ++t) {
            const Quaternion z = random_point(r, rng, 1.0);
            if (in_voronoi(r, z) != in_voronoi_inequalities(r, z)) ++disagreements;
        }
        INFO(ring_name(r));
        CHECK(disagreements == 0);
    }
    CHECK(voronoi_spec(Ring::gaussian).covolume == doctest::Approx(1.0));
    CHECK(voronoi_spec(Ring::eisenstein).covolume == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK(voronoi_spec(Ring::d7).covolume == doctest::Approx(std::sqrt(7.0) / 2.0));
    CHECK(voronoi_spec(Ring::hurwitz).covolume == doctest::Approx(0.5));
}

TEST_CASE("Hurwitz covering radius") {
    Rng rng(24);
    double worst = 0.0;
    for (int t = 0; t < 100'000; ++t) {
        const Quaternion z = random_point(Ring::hurwitz, rng, 3.0);
        worst = std::max(worst, (z - embed(quantize(Ring::hurwitz, z))).abs());
    }
    CHECK(worst <= 1.0 / std::sqrt(2.0) + 1e-12);
    // The deep hole (1/2, 1/2, 0, 0) sits exactly at the covering radius.
    const Quaternion hole{0.5, 0.5, 0, 0};
    CHECK((hole - embed(quantize(Ring::hurwitz, hole))).abs() == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("Euclidean division") {
    const RingElement five = RingElement::from_int(Ring::gaussian, 5);
    const RingElement one_i{Ring::gaussian, {1, 1, 0, 0}};
    const DivResult g = euclid_div(five, one_i);
    CHECK(g.q == RingElement{Ring::gaussian, {2, -2, 0, 0}});
    CHECK(g.r == RingElement::one(Ring::gaussian));

    const RingElement h{Ring::hurwitz, {2, 2, 2, 2}};
    const DivResult hd = euclid_div(h, RingElement::from_int(Ring::hurwitz, 2));
    CHECK(hd.q == RingElement{Ring::hurwitz, {1, 1, 1, 1}});
    CHECK(hd.r.is_zero());

    CHECK_THROWS_AS(euclid_div(five, RingElement::zero(Ring::gaussian)), Error);
    CHECK_THROWS_AS(euclid_div(five, RingElement::one(Ring::eisenstein)), Error);

    Rng rng(25);
    for (Ring r : all_rings)
        for (int t = 0; t < 10'000; ++t) {
            const RingElement a = random_element(r, rng, 1000);
            RingElement b = random_element(r, rng, 50);
            if (b.is_zero()) b = RingElement::one(r);
            const DivResult d = euclid_div(a, b);
            CHECK(d.q * b + d.r == a);
            CHECK(norm(d.r) < norm(b));
        }
}

TEST_CASE("ball enumeration") {
    CHECK(enumerate_ball(Ring::gaussian, 1.0).size() == 5);
    CHECK(enumerate_ball(Ring::eisenstein, 1.0).size() == 7);
    CHECK(enumerate_ball(Ring::hurwitz, 1.0).size() == 25);
    CHECK(enumerate_ball(Ring::integers, 2.5).size() == 5);
    CHECK(enumerate_ball(Ring::gaussian, 0.5).size() == 1);

    for (Ring r : all_rings) {
        const auto ball = enumerate_ball(r, 4.0);
        CHECK(std::is_sorted(ball.begin(), ball.end(),
                             [](const RingElement& a, const RingElement& b) { return norm(a) < norm(b); }));
        std::set<std::array<std::int64_t, 4>> seen;
        for (const RingElement& e : ball) {
            CHECK(embed(e).abs() <= 4.0 + 1e-12);
            seen.insert(e.c);
        }
        CHECK(seen.size() == ball.size());
    }
    CHECK_THROWS_AS(enumerate_ball(Ring::hurwitz, 200.0), Error);
}
