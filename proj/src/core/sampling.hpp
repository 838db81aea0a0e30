#pragma once

#include <cstdint>

#include "core/algebra.hpp"
#include "core/rng.hpp"

namespace unilattice {

/// Haar-distributed 2x2 unitary: Gram-Schmidt applied to two standard Gaussian vectors of the field.
Matrix2 sample_haar_unitary(Field field, Rng& rng);

/// Integral over 1 < s < r of (s^2 - s^-2)^beta / s, the N = 2 singular-value integral with the
/// determinant constraint resolved. beta in {1, 2, 4}:
///   beta = 1: r^2/2 + 1/(2 r^2) - 1
///   beta = 2: r^4/4 - 1/(4 r^4) - 2 log r
///   beta = 4: r^8/8 - r^4 + 1/r^4 - 1/(8 r^8) + 6 log r
/// Near r = 1 an equivalent series in log r avoids cancellation.
double j2_closed(int beta, double r);
/// d/dr of j2_closed.
double j2_density(int beta, double r);

/// The sigma1 with J(sigma1) = u J(R), by bisection followed by safeguarded Newton steps.
double sigma1_from_uniform(int beta, double cutoff, double u);
double sample_sigma1(Field field, double cutoff, Rng& rng);

struct Sl2Sample {
    Matrix2 matrix;
    double sigma1 = 1.0;
    Field field = Field::complex;
    double cutoff = 40.0;
};

/// U diag(sigma1, 1/sigma1) V with independent Haar U, V. The determinant phase is left as is.
Sl2Sample sample_sl2(Field field, double cutoff, Rng& rng);

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t trials = 0;
};

/// Monte Carlo estimate of the ordered singular-value integral J_N(R) for general N: draw
/// sigma_1..sigma_{N-1} uniformly on (0, R), fix sigma_N by the product constraint (Jacobian
/// 1/(sigma_1...sigma_{N-1})), and keep ordered draws.
McEstimate jn_monte_carlo(int n, int beta, double cutoff, std::int64_t trials, Rng& rng);

}  // namespace unilattice
