#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "core/rings.hpp"
#include "core/rng.hpp"
#include "core/sampling.hpp"

namespace unilattice {

struct SpecialConstants {
    double catalan;
    double zeta2, zeta3, zeta4;
    /// (pi^2/6) C
    double dedekind_zi_2;
    /// Im Li2 at (3 - i sqrt3)/6, (3 + i sqrt3)/4 and (1 + i sqrt3)/2.
    double im_dilog_a, im_dilog_b, im_dilog_c;
    /// (2 pi^2 / 3) C
    double vol_gamma_hat;
    /// Eisenstein normalization from the two-dilogarithm expression.
    double vol_gamma_hat_h;
    /// The single-dilogarithm form, Im Li2((1 + i sqrt3)/2) / 4. Reported, never used.
    double vol_gamma_hat_h_conjectured;
    /// 7 zeta(3) / 80
    double gamma_4h;
};

/// Computed on first use, immutable afterwards.
const SpecialConstants& special_constants();

/// Area of the unit disk intersected with the origin-centred square of half-side a.
double v2_overlap(double a);
/// Area of the hexagon |X| < 1/2, sqrt3 |Y| + |X| < 1 intersected with the disk of radius a.
double hex_overlap(double a);

/// Density of |alpha|; rings gaussian, eisenstein, hurwitz. For Hurwitz only 0 <= t <= 1 is known
/// and 1 < t <= 2^(1/4) throws ErrorCode::domain.
double pdf_shortest(Ring ring, double t);
double pdf_shortest_gaussian(double t);
double pdf_shortest_eisenstein(double t);
double pdf_shortest_hurwitz(double t);
/// The same Gaussian law computed from the disk/square overlap instead of the expanded closed form.
double pdf_shortest_gaussian_from_overlap(double t);
/// The Eisenstein law from the disk/hexagon overlap.
double pdf_shortest_eisenstein_from_overlap(double t);

double pdf_second_gaussian(double r);
/// Joint density of (Re xi, Im xi); rings gaussian and eisenstein.
double pdf_xi(Ring ring, double xi_r, double xi_i);
/// Density of |xi| for the Gaussian integers.
double pdf_xi_modulus(double xi);
/// 6 s / pi on [0, 1); throws for s >= 1.
double pdf_shortest_real(double s);

struct AsymptoticConstants {
    /// Leading coefficient of J_N(R) under the operator-norm cutoff.
    double c_n_beta;
    /// Leading coefficient of vol D_R, operator norm.
    double vol_op_coeff;
    /// Leading coefficient of the 2-norm singular-value integral.
    double chat_n_beta;
    /// Leading coefficient of vol D_R, 2-norm.
    double vol_2norm_coeff;
    double vol_unitary;
};

AsymptoticConstants asymptotic_constants(int n, int beta);
double vol_unitary_group(int n, int beta);
/// (2 pi^(beta/2) / Gamma(beta/2))^-(N+1) (vol U_N)^2, the factor turning J_N into a volume.
double volume_prefactor(int n, int beta);

/// Rejection estimate of the Hurwitz normalization from its four-dimensional integral.
McEstimate gamma4h_monte_carlo(std::int64_t trials, Rng& rng);

/// A named one-dimensional function for grid evaluation and histogram overlays.
struct AnalyticLaw {
    std::string name;
    std::string description;
    bool is_density;
    double lo, hi;
    /// Kinks and the end of the known region, used to split quadratures.
    std::vector<double> breakpoints;
    std::function<double(double)> eval;
};

const std::vector<AnalyticLaw>& analytic_laws();
const AnalyticLaw& analytic_law(std::string_view name);

}  // namespace unilattice
