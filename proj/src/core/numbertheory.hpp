#pragma once

#include <cstdint>
#include <vector>

#include "core/rings.hpp"

namespace unilattice {

/// counts[p] = number of ring elements with squared absolute value exactly p, for 0 <= p <= pmax.
struct NormCountTable {
    Ring ring;
    std::vector<std::int64_t> counts;

    std::int64_t pmax() const { return static_cast<std::int64_t>(counts.size()) - 1; }
    /// Elements with norm <= p, zero included.
    std::int64_t cumulative(std::int64_t p) const;
};

NormCountTable norm_counts(Ring ring, std::int64_t pmax);

/// Number of divisors of n congruent to r mod 4.
std::int64_t divisors_mod4(std::int64_t n, int r);

/// Sum over nonzero elements of |x|^(-2s), truncated at norm pmax, plus the tail obtained by partial
/// summation against the leading lattice-point count.
double norm_zeta_sum(const NormCountTable& table, int s);

/// (1/4) sum over nonzero Gaussian integers of |x|^(-2s).
double dedekind_zi(int s, std::int64_t pmax = 200'000);
/// zeta(s) * beta(s).
double dedekind_zi_factorized(int s);

struct SiegelCheck {
    Ring ring;
    std::int64_t pmax = 0;
    /// Expected-count coefficient of R^(2 dim) computed from the lattice series.
    double series_value = 0.0;
    /// The mean-value prediction for the same coefficient.
    double predicted = 0.0;
    double relative_gap = 0.0;
    /// Eisenstein only: the series before the covolume correction, and its ratio to pi^2/2.
    double raw_value = 0.0;
    double raw_factor = 0.0;
    /// Hurwitz only: the eighth-power sum and the normalization it implies.
    double eighth_power_sum = 0.0;
    double implied_gamma_4h = 0.0;
};

/// Rings gaussian, eisenstein, hurwitz. pmax = 0 picks a default that meets a 1e-6 gap.
SiegelCheck siegel_omega_check(Ring ring, std::int64_t pmax = 0);

/// #{g in SL2(Z[i]) : |g|_op <= R} for 1 <= R <= 4.
std::int64_t count_sl2_gaussian(double radius);

/// (pi^3/2) / zeta_{Z[i]}(2): the conjectured limit of count_sl2_gaussian(R) / R^4.
double sl2_count_prediction();

}  // namespace unilattice
