#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace unilattice {

/// Sum_{k>=0} (-1)^k a(k), via the Cohen-Rodriguez Villegas-Zagier acceleration with `terms`
/// terms (error about 5.8^-terms for completely monotone a).
double alternating_sum(const std::function<double(int)>& a, int terms = 40);

/// Dirichlet beta: sum (-1)^k / (2k+1)^s.
double dirichlet_beta(double s);
/// Dirichlet eta: sum (-1)^k / (k+1)^s.
double dirichlet_eta(double s);
double zeta_int(int n);
/// Catalan's constant, beta(2).
double catalan_constant();

std::complex<double> dilog(std::complex<double> z);
/// Im Li2(z) for |z| <= 1.2.
double im_dilog(std::complex<double> z);
/// Cl2(theta) = Im Li2(exp(i theta)).
double clausen2(double theta);

/// Adaptive Gauss-Kronrod (61 point) integral of f over [a, b]; b may be +infinity.
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-13,
                 double* error_estimate = nullptr);
/// Sum of integrals over consecutive points, so kinks at the points cost nothing.
double integrate_piecewise(const std::function<double(double)>& f, const std::vector<double>& points,
                           double tol = 1e-13);
/// Tanh-sinh quadrature, for integrands with endpoint singularities.
double integrate_endpoint_singular(const std::function<double(double)>& f, double a, double b, double tol = 1e-13);

}  // namespace unilattice
