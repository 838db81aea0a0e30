#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "core/algebra.hpp"

namespace unilattice {

/// Rings of integers usable as lattice coefficients. `integers` serves the real field.
enum class Ring { integers, gaussian, d2, eisenstein, d7, d11, hurwitz };

std::string_view ring_name(Ring r);
Ring ring_from_name(std::string_view name);
/// Field the ring lives in: real for integers, quaternion for Hurwitz, complex otherwise.
Field ring_field(Ring r);
/// D in Q(sqrt D) for the quadratic rings; 0 for integers and Hurwitz.
int ring_discriminant(Ring r);
/// True for D = -3, -7, -11 where the generator is w = (1 + sqrt D)/2.
bool ring_uses_half_generator(Ring r);

/// Exact element. Quadratic rings: value c[0] + c[1] w. Hurwitz: value (c0 + c1 i + c2 j + c3 k)/2
/// with all c of equal parity. Integers: value c[0].
struct RingElement {
    Ring ring = Ring::gaussian;
    std::array<std::int64_t, 4> c{};

    static RingElement zero(Ring r) { return {r, {}}; }
    static RingElement one(Ring r);
    static RingElement from_int(Ring r, std::int64_t n);

    bool is_zero() const { return c == std::array<std::int64_t, 4>{}; }
    friend bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement operator+(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a);
RingElement operator*(const RingElement& a, const RingElement& b);
RingElement conj(const RingElement& a);
/// Squared absolute value; an integer in every supported ring.
std::int64_t norm(const RingElement& a);
Quaternion embed(const RingElement& a);
bool is_valid(const RingElement& a);
std::string to_string(const RingElement& a);

/// Half-way cases go toward zero, so round_half_to_zero(0.5) == 0.
double round_half_to_zero(double x);

/// Nearest ring element to z. Quadratic rings read only the complex part of z; integers read a0.
RingElement quantize(Ring ring, const Quaternion& z);

struct VoronoiSpec {
    Ring ring;
    std::string inequalities;
    double covolume;
};

VoronoiSpec voronoi_spec(Ring ring);
/// quantize(ring, z) == 0.
bool in_voronoi(Ring ring, const Quaternion& z);
/// The explicit inequality description of the origin's cell (strict inequalities).
bool in_voronoi_inequalities(Ring ring, const Quaternion& z);

struct DivResult {
    RingElement q, r;
};

/// n1 = q n2 + r with |r| < |n2|. For Hurwitz the quotient is q = D(n1 n2^{-1}), i.e. q sits on the
/// left of n2.
DivResult euclid_div(const RingElement& n1, const RingElement& n2);

inline constexpr std::size_t enumeration_cap = 10'000'000;

/// Calls `visit` once for each ring element within `radius` of `center` (no ordering).
void for_each_near(Ring ring, const Quaternion& center, double radius,
                   const std::function<void(const RingElement&)>& visit);

/// All elements with |x| <= radius, sorted by norm then coordinates. Throws past `enumeration_cap`.
std::vector<RingElement> enumerate_ball(Ring ring, double radius);

}  // namespace unilattice
