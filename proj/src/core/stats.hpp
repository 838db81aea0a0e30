#pragma once

#include <functional>
#include <vector>

namespace unilattice {

/// Upper tail of the chi-square distribution with `dof` degrees of freedom.
double chi_square_p_value(double statistic, int dof);

/// Asymptotic Kolmogorov survival function Q(lambda) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2).
double kolmogorov_q(double lambda);

/// sup |F_n - F| of a sample against a continuous cdf. The sample is sorted in place.
double ks_statistic(std::vector<double>& sample, const std::function<double(double)>& cdf);
/// sup |F_n - G_m| of two samples; both are sorted in place.
double ks_two_sample(std::vector<double>& a, std::vector<double>& b);
/// p-value for statistic d with effective size n, using Stephens' small-sample correction.
double ks_p_value(double d, double n);

}  // namespace unilattice
