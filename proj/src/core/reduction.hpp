#pragma once

#include <array>
#include <vector>

#include "core/algebra.hpp"
#include "core/error.hpp"
#include "core/rings.hpp"

namespace unilattice {

/// Lattice {b0 m0 + b1 m1 : m0, m1 in ring}. Coefficients act on the right, which only matters
/// for Hurwitz.
struct Basis2 {
    Field field = Field::complex;
    Ring ring = Ring::gaussian;
    Vector2 b0, b1;
};

using RingMatrix = std::array<std::array<RingElement, 2>, 2>;

RingMatrix ring_identity(Ring ring);
RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
/// Numeric B * M for a basis matrix B and ring matrix M.
Matrix2 apply_transform(const Matrix2& b, const RingMatrix& m);

struct ReducedBasis {
    Vector2 alpha, beta;
    double len_alpha = 0.0, len_beta = 0.0;
    /// <alpha, beta> / (|alpha| |beta|)
    Quaternion xi;
    /// [alpha beta] = [b0 b1] * transform, with b0, b1 in the caller's order.
    RingMatrix transform;
    RingMatrix inverse_transform;
    /// Number of nonzero quantized coefficients applied.
    int iterations = 0;
    /// Every quantized coefficient, including the final one (zero when the input was already reduced).
    std::vector<RingElement> coefficients;
};

struct ReduceOptions {
    int max_iterations = 10'000;
    /// Assert the monotonicity lemma at every step and the greedy conditions at exit.
    bool check_invariants = false;
    Tolerances tol{};
};

/// Lagrange-Gauss reduction: b_{j+1} = b_{j-1} - b_j D(<b_j, b_{j-1}> / |b_j|^2), with the
/// quantized coefficient multiplied on the right of b_j. Stops once |b_{j+1}| >= |b_j| and returns
/// alpha = b_j, beta = b_{j+1}.
ReducedBasis reduce(const Basis2& basis, const ReduceOptions& options = {});

void validate_basis(const Basis2& basis, const Tolerances& tol = {});

bool is_greedy(const Vector2& alpha, const Vector2& beta, Ring ring, double tol = default_tolerances.structural);

/// Exact unimodularity of a ring matrix: the product with `inverse` is the identity and the
/// determinant (Study determinant for Hurwitz) has norm 1.
bool is_unimodular(const RingMatrix& m, const RingMatrix& inverse);
/// |det| of a ring matrix squared, exactly: the norm of ad - bc, or the Study determinant for Hurwitz.
std::int64_t exact_det_norm(const RingMatrix& m);

struct ShortestVector {
    Vector2 vector;
    double length = 0.0;
    RingElement m0, m1;
};

/// Minimizes |b0 m0 + b1 m1| over nonzero pairs with |m0|, |m1| <= coeff_radius. Uses the
/// Gram-Schmidt split of |v|^2 to skip pairs that cannot beat the shorter column; the result is the
/// same as checking every pair in the window.
ShortestVector shortest_oracle(const Basis2& basis, double coeff_radius = 6.0);

/// A coefficient radius guaranteed to contain a shortest vector of the lattice.
double complete_coeff_radius(const Basis2& basis);

/// 1/z - round(Re(1/z)).
Complex scalar_step_real(Complex z);

struct ScalarStep {
    Quaternion next;
    RingElement m;
};

/// One step of the quaternion-valued recurrence for complex lattices:
/// Q' = 1/Q - D((Re + i Im_i)(1/Q)).
ScalarStep scalar_step_complex(const Quaternion& q, Ring ring);

/// q = w + j z for b = (w, z).
Quaternion vector_to_quaternion(const Vector2& b);

/// Coefficient sequences produced by the scalar recurrences, in the same order as
/// ReducedBasis::coefficients.
std::vector<RingElement> scalar_sequence_real(const Basis2& basis);
std::vector<RingElement> scalar_sequence_complex(const Basis2& basis);

}  // namespace unilattice
