#include "core/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "core/error.hpp"

namespace unilattice {

double chi_square_p_value(double statistic, int dof) {
    if (dof < 1) fail(ErrorCode::invalid_argument, "chi-square: dof must be >= 1");
    if (!(statistic >= 0.0)) fail(ErrorCode::invalid_argument, "chi-square: statistic must be >= 0");
    return boost::math::cdf(boost::math::complement(boost::math::chi_squared(dof), statistic));
}

double kolmogorov_q(double lambda) {
    if (lambda < 0.2) return 1.0;
    double sum = 0.0, sign = 1.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        if (term < 1e-17) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_statistic(std::vector<double>& sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) fail(ErrorCode::invalid_argument, "ks: empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return d;
}

double ks_two_sample(std::vector<double>& a, std::vector<double>& b) {
    if (a.empty() || b.empty()) fail(ErrorCode::invalid_argument, "ks: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == x) ++i;
        while (j < b.size() && b[j] == x) ++j;
        d = std::max(d, std::abs(i / na - j / nb));
    }
    return d;
}

double ks_p_value(double d, double n) {
    if (!(n > 0.0)) fail(ErrorCode::invalid_argument, "ks: n must be positive");
    const double s = std::sqrt(n);
    return kolmogorov_q((s + 0.12 + 0.11 / s) * d);
}

}  // namespace unilattice
