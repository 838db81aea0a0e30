#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/algebra.hpp"
#include "core/rings.hpp"

namespace unilattice {

enum class Statistic { shortest, second, xi_modulus, xi_joint };

std::string_view statistic_name(Statistic s);
Statistic statistic_from_name(std::string_view name);

struct ExperimentConfig {
    Field field = Field::complex;
    Ring ring = Ring::gaussian;
    double cutoff = 40.0;
    std::int64_t trials = 1'000'000;
    int bins = 100;
    std::uint64_t seed = 0;
    Statistic statistic = Statistic::shortest;
    /// 0 means one per hardware thread.
    unsigned workers = 0;
    /// Run the reduction with its invariant checks and assert the support bounds per trial.
    bool check_invariants = false;
};

void validate_config(const ExperimentConfig& cfg);

/// Trials are split into chunks of this size; chunk k draws from Rng::stream(seed, k).
inline constexpr std::int64_t trials_per_chunk = 4096;

struct TrialRecord {
    double len_alpha = 0.0;
    double len_beta = 0.0;
    Quaternion xi;
    int iterations = 0;
};

/// One record per trial, in trial order; identical for every worker count.
std::vector<TrialRecord> simulate(const ExperimentConfig& cfg);

/// The histogrammed quantity: |alpha|, |beta| or |xi|. For xi_joint this is Re xi.
double statistic_value(Statistic s, const TrialRecord& r);

struct Histogram {
    std::vector<double> edges;
    std::vector<std::int64_t> counts;
    std::vector<double> densities;
    std::int64_t total = 0;

    std::size_t bins() const { return counts.size(); }
    double center(std::size_t i) const { return 0.5 * (edges[i] + edges[i + 1]); }
    double width(std::size_t i) const { return edges[i + 1] - edges[i]; }
};

/// Uniform bins on [lo, hi]. Values past an edge by at most 1e-9 (relative) go to the end bin;
/// anything further out throws ErrorCode::internal.
Histogram make_histogram(const std::vector<double>& values, double lo, double hi, int bins);

/// Sum |d1 - d2| * width over two histograms with identical edges.
double l1_distance(const Histogram& a, const Histogram& b);

/// Cells are row-major: index = ix * y_bins + iy.
struct Histogram2D {
    std::vector<double> x_edges, y_edges;
    std::vector<std::int64_t> counts;
    std::vector<double> densities;
    std::int64_t total = 0;
};

Histogram2D make_histogram_2d(const std::vector<double>& xs, const std::vector<double>& ys, double x_lo,
                              double x_hi, double y_lo, double y_hi, int bins);

enum class Overlay { absent, full, partial };

std::string_view overlay_name(Overlay o);

struct ComparisonReport {
    ExperimentConfig config;
    Overlay overlay = Overlay::absent;
    std::string law;
    Histogram histogram;
    std::optional<Histogram2D> histogram_2d;
    /// Analytic density at each bin (or cell) centre; NaN where the law is unknown.
    std::vector<double> analytic;
    /// Analytic probability of each bin (or cell); NaN where unknown.
    std::vector<double> analytic_mass;
    /// Between the empirical density and the bin-averaged analytic density, over bins with a value.
    double sup_distance = 0.0;
    double l1_distance = 0.0;
    double chi_square = 0.0;
    int chi_square_dof = 0;
    double chi_square_p = 1.0;
    std::int64_t reduction_failures = 0;
    double max_len_alpha = 0.0;
    double max_len_beta = 0.0;
    double mean_iterations = 0.0;
};

/// Histogram and analytic comparison of already simulated records. `hi_override` fixes the upper
/// bin edge for one-dimensional statistics (used to share bins between runs).
ComparisonReport compare(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records,
                         std::optional<double> hi_override = std::nullopt);

ComparisonReport run_experiment(const ExperimentConfig& cfg);

/// Default bin range of a one-dimensional statistic, given the largest observed value.
std::pair<double, double> default_range(const ExperimentConfig& cfg, double observed_max);

std::string format_csv(const ComparisonReport& report);
void emit_csv(const ComparisonReport& report, const std::string& path);

/// Shortest, round-trip exact decimal form.
std::string format_double(double v);

}  // namespace unilattice
