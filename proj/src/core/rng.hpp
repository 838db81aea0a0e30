#pragma once

#include <array>
#include <cstdint>

namespace unilattice {

/// xoshiro256** seeded by four splitmix64 outputs of the user seed.
///
/// Stream k of a seed is the base generator advanced by k jumps of 2^128 draws, so streams never
/// overlap for fewer than 2^128 draws each. Uniforms use the top 53 bits; normals use Marsaglia's
/// polar method and cache the second value of each accepted pair.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0);

    static Rng stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();
    /// Uniform on [0, 1).
    double uniform();
    /// Uniform on (0, 1).
    double uniform_open();
    double normal();
    /// Advance by 2^128 draws.
    void jump();

    const std::array<std::uint64_t, 4>& state() const { return s_; }

private:
    std::array<std::uint64_t, 4> s_{};
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace unilattice
