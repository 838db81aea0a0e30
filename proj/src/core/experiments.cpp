#include "core/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "core/analytic.hpp"
#include "core/error.hpp"
#include "core/reduction.hpp"
#include "core/rng.hpp"
#include "core/sampling.hpp"
#include "core/special.hpp"
#include "core/stats.hpp"

namespace unilattice {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
const double fourth_root_2 = std::pow(2.0, 0.25);

// Hermite's bound lambda^2 <= gamma_n covol^(2/n) gives at most 2^(1/4) for these rings: gamma_4 = sqrt2 with
// covolume 1 for Z[i], gamma_8 = 2 with covolume 1/4 for Hurwitz, and smaller values for Z and Eisenstein.
bool has_fourth_root_bound(Ring r) {
    return r == Ring::integers || r == Ring::gaussian || r == Ring::eisenstein || r == Ring::hurwitz;
}

}  // namespace

std::string_view statistic_name(Statistic s) {
    switch (s) {
        case Statistic::shortest: return "shortest";
        case Statistic::second: return "second";
        case Statistic::xi_modulus: return "xi_modulus";
        case Statistic::xi_joint: return "xi_joint";
    }
    return "unknown";
}

Statistic statistic_from_name(std::string_view name) {
    for (Statistic s : {Statistic::shortest, Statistic::second, Statistic::xi_modulus, Statistic::xi_joint})
        if (statistic_name(s) == name) return s;
    fail(ErrorCode::invalid_argument,
         "unknown statistic '" + std::string(name) + "' (expected shortest, second, xi_modulus or xi_joint)");
}

std::string_view overlay_name(Overlay o) {
    switch (o) {
        case Overlay::absent: return "absent";
        case Overlay::full: return "full";
        case Overlay::partial: return "partial";
    }
    return "unknown";
}

void validate_config(const ExperimentConfig& cfg) {
    if (!(cfg.cutoff > 1.0) || !std::isfinite(cfg.cutoff))
        fail(ErrorCode::invalid_argument, "experiment: cutoff R must be a finite number > 1");
    if (cfg.trials < 1) fail(ErrorCode::invalid_argument, "experiment: trials must be >= 1");
    if (cfg.bins < 10) fail(ErrorCode::invalid_argument, "experiment: bins must be >= 10");
    if (cfg.bins > 100'000) fail(ErrorCode::invalid_argument, "experiment: bins must be <= 100000");
    if (ring_field(cfg.ring) != cfg.field)
        fail(ErrorCode::invalid_argument, "experiment: ring " + std::string(ring_name(cfg.ring)) +
                                              " does not live in the " + std::string(field_name(cfg.field)) +
                                              " field");
}

namespace {

TrialRecord run_trial(const ExperimentConfig& cfg, Rng& rng, const ReduceOptions& opts) {
    const Sl2Sample s = sample_sl2(cfg.field, cfg.cutoff, rng);
    Basis2 basis{cfg.field, cfg.ring, s.matrix.column(0), s.matrix.column(1)};
    if (basis.b1.norm2() > basis.b0.norm2()) std::swap(basis.b0, basis.b1);
    const ReducedBasis red = reduce(basis, opts);
    if (cfg.check_invariants) {
        if (has_fourth_root_bound(cfg.ring) && red.len_alpha > fourth_root_2 + 1e-9)
            fail(ErrorCode::internal, "experiment: |alpha| exceeds 2^(1/4)");
        if (red.len_alpha > red.len_beta * (1.0 + 1e-12))
            fail(ErrorCode::internal, "experiment: |alpha| > |beta| after reduction");
        if (!(red.len_alpha * red.len_beta >= 1.0 - 1e-9))
            fail(ErrorCode::internal, "experiment: |alpha| |beta| below the covolume");
    }
    return {red.len_alpha, red.len_beta, red.xi, red.iterations};
}

}  // namespace

std::vector<TrialRecord> simulate(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const std::int64_t chunks = (cfg.trials + trials_per_chunk - 1) / trials_per_chunk;
    unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::int64_t>(workers, chunks));

    std::vector<TrialRecord> out(static_cast<std::size_t>(cfg.trials));
    std::atomic<std::int64_t> next{0};
    std::mutex error_mutex;
    std::int64_t error_chunk = chunks;
    std::exception_ptr error;

    ReduceOptions opts;
    opts.check_invariants = cfg.check_invariants;

    const auto work = [&] {
        for (;;) {
            const std::int64_t c = next.fetch_add(1);
            if (c >= chunks) return;
            const std::int64_t begin = c * trials_per_chunk;
            const std::int64_t end = std::min(cfg.trials, begin + trials_per_chunk);
            std::int64_t t = begin;
            try {
                Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(c));
                for (; t < end; ++t) out[static_cast<std::size_t>(t)] = run_trial(cfg, rng, opts);
            } catch (const Error& e) {
                // Keep the lowest failing chunk so the reported error does not depend on scheduling.
                std::lock_guard lock(error_mutex);
                if (c < error_chunk) {
                    error_chunk = c;
                    error = std::make_exception_ptr(
                        Error(e.code(), "experiment aborted at trial " + std::to_string(t) + ": " + e.what()));
                }
                next.store(chunks);
                return;
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);
    return out;
}

double statistic_value(Statistic s, const TrialRecord& r) {
    switch (s) {
        case Statistic::shortest: return r.len_alpha;
        case Statistic::second: return r.len_beta;
        case Statistic::xi_modulus: return r.xi.abs();
        case Statistic::xi_joint: return r.xi.a0;
    }
    return nan;
}

namespace {

std::size_t bin_index(double v, double lo, double hi, int bins) {
    const double slack = 1e-9 * std::max(1.0, std::abs(hi - lo));
    if (!(v >= lo - slack && v <= hi + slack))
        fail(ErrorCode::internal, "histogram: value " + format_double(v) + " outside [" + format_double(lo) + ", " +
                                      format_double(hi) + "]");
    const double pos = (v - lo) / (hi - lo) * bins;
    return static_cast<std::size_t>(std::clamp(static_cast<long long>(std::floor(pos)), 0LL,
                                               static_cast<long long>(bins) - 1));
}

std::vector<double> uniform_edges(double lo, double hi, int bins) {
    std::vector<double> e(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i) e[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / bins;
    e.back() = hi;
    return e;
}

}  // namespace

Histogram make_histogram(const std::vector<double>& values, double lo, double hi, int bins) {
    if (!(hi > lo) || bins < 1) fail(ErrorCode::invalid_argument, "histogram: need hi > lo and bins >= 1");
    Histogram h;
    h.edges = uniform_edges(lo, hi, bins);
    h.counts.assign(static_cast<std::size_t>(bins), 0);
    for (double v : values) ++h.counts[bin_index(v, lo, hi, bins)];
    h.total = static_cast<std::int64_t>(values.size());
    h.densities.assign(h.counts.size(), 0.0);
    if (h.total > 0)
        for (std::size_t i = 0; i < h.counts.size(); ++i)
            h.densities[i] = static_cast<double>(h.counts[i]) / (static_cast<double>(h.total) * h.width(i));
    return h;
}

double l1_distance(const Histogram& a, const Histogram& b) {
    if (a.edges != b.edges) fail(ErrorCode::invalid_argument, "l1_distance: histograms have different bins");
    double s = 0.0;
    for (std::size_t i = 0; i < a.bins(); ++i) s += std::abs(a.densities[i] - b.densities[i]) * a.width(i);
    return s;
}

Histogram2D make_histogram_2d(const std::vector<double>& xs, const std::vector<double>& ys, double x_lo,
                              double x_hi, double y_lo, double y_hi, int bins) {
    if (xs.size() != ys.size()) fail(ErrorCode::invalid_argument, "histogram: coordinate count mismatch");
    if (!(x_hi > x_lo) || !(y_hi > y_lo) || bins < 1)
        fail(ErrorCode::invalid_argument, "histogram: need hi > lo and bins >= 1");
    Histogram2D h;
    h.x_edges = uniform_edges(x_lo, x_hi, bins);
    h.y_edges = uniform_edges(y_lo, y_hi, bins);
    const auto n = static_cast<std::size_t>(bins);
    h.counts.assign(n * n, 0);
    for (std::size_t k = 0; k < xs.size(); ++k)
        ++h.counts[bin_index(xs[k], x_lo, x_hi, bins) * n + bin_index(ys[k], y_lo, y_hi, bins)];
    h.total = static_cast<std::int64_t>(xs.size());
    const double area = (x_hi - x_lo) * (y_hi - y_lo) / static_cast<double>(n * n);
    h.densities.assign(h.counts.size(), 0.0);
    if (h.total > 0)
        for (std::size_t k = 0; k < h.counts.size(); ++k)
            h.densities[k] = static_cast<double>(h.counts[k]) / (static_cast<double>(h.total) * area);
    return h;
}

std::pair<double, double> default_range(const ExperimentConfig& cfg, double observed_max) {
    const double pad = observed_max * (1.0 + 1e-9);
    switch (cfg.statistic) {
        case Statistic::shortest:
            // Z[sqrt-2], D = -7 and D = -11 have larger covolume and a larger bound, so their range follows
            // the data.
            if (has_fourth_root_bound(cfg.ring)) return {0.0, fourth_root_2};
            return {0.0, std::max(fourth_root_2, pad)};
        case Statistic::second: return {1.0, std::max(pad, 1.0 + 1e-6)};
        case Statistic::xi_modulus:
            switch (cfg.ring) {
                case Ring::integers: return {0.0, 0.5};
                case Ring::gaussian:
                case Ring::hurwitz: return {0.0, 1.0 / std::numbers::sqrt2};
                case Ring::eisenstein: return {0.0, 1.0 / std::sqrt(3.0)};
                default: return {0.0, 1.0};
            }
        case Statistic::xi_joint: break;
    }
    fail(ErrorCode::invalid_argument, "default_range: xi_joint is two-dimensional");
}

namespace {

struct OverlayChoice {
    Overlay kind = Overlay::absent;
    const AnalyticLaw* law = nullptr;
};

OverlayChoice overlay_for(Ring ring, Statistic s) {
    const auto pick = [](const char* name, Overlay kind) { return OverlayChoice{kind, &analytic_law(name)}; };
    switch (s) {
        case Statistic::shortest:
            if (ring == Ring::gaussian) return pick("shortest-gaussian", Overlay::full);
            if (ring == Ring::eisenstein) return pick("shortest-eisenstein", Overlay::full);
            if (ring == Ring::hurwitz) return pick("shortest-hurwitz", Overlay::partial);
            if (ring == Ring::integers) return pick("shortest-real", Overlay::partial);
            break;
        case Statistic::second:
            if (ring == Ring::gaussian) return pick("second-gaussian", Overlay::full);
            break;
        case Statistic::xi_modulus:
            if (ring == Ring::gaussian) return pick("xi-modulus-gaussian", Overlay::full);
            break;
        case Statistic::xi_joint:
            if (ring == Ring::gaussian || ring == Ring::eisenstein) return {Overlay::full, nullptr};
            break;
    }
    return {};
}

double bin_mass(const AnalyticLaw& law, double a, double b) {
    std::vector<double> pts{a};
    for (double p : law.breakpoints)
        if (p > a && p < b) pts.push_back(p);
    pts.push_back(b);
    return integrate_piecewise(law.eval, pts, 1e-11);
}

// Cell integral of the xi density: 4 x 4 sub-cells with 3-point Gauss-Legendre each, since the
// density has log singularities and support edges crossing the cells.
double cell_mass(Ring ring, double x0, double x1, double y0, double y1) {
    static const double node[3] = {-std::sqrt(0.6), 0.0, std::sqrt(0.6)};
    static const double weight[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
    constexpr int sub = 4;
    const double hx = (x1 - x0) / sub, hy = (y1 - y0) / sub;
    double s = 0.0;
    for (int i = 0; i < sub; ++i)
        for (int j = 0; j < sub; ++j) {
            const double cx = x0 + (i + 0.5) * hx, cy = y0 + (j + 0.5) * hy;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    s += weight[a] * weight[b] * pdf_xi(ring, cx + 0.5 * hx * node[a], cy + 0.5 * hy * node[b]);
        }
    return s * 0.25 * hx * hy;
}

// Fills distances and chi-square from counts, bin widths (or areas) and analytic masses.
void score(ComparisonReport& rep, const std::vector<std::int64_t>& counts, const std::vector<double>& densities,
           const std::vector<double>& sizes, std::int64_t total) {
    const double n = static_cast<double>(total);
    double sup = 0.0, l1 = 0.0, chi = 0.0;
    int qualifying = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double mass = rep.analytic_mass[i];
        if (std::isnan(mass)) continue;
        const double diff = std::abs(densities[i] - mass / sizes[i]);
        sup = std::max(sup, diff);
        l1 += diff * sizes[i];
        const double expected = n * mass;
        if (expected >= 10.0) {
            const double d = static_cast<double>(counts[i]) - expected;
            chi += d * d / expected;
            ++qualifying;
        }
    }
    rep.sup_distance = sup;
    rep.l1_distance = l1;
    rep.chi_square = chi;
    rep.chi_square_dof = std::max(0, qualifying - 1);
    rep.chi_square_p = rep.chi_square_dof >= 1 ? chi_square_p_value(chi, rep.chi_square_dof) : nan;
}

}  // namespace

ComparisonReport compare(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records,
                         std::optional<double> hi_override) {
    validate_config(cfg);
    if (records.empty()) fail(ErrorCode::invalid_argument, "compare: no records");
    ComparisonReport rep;
    rep.config = cfg;
    double iters = 0.0;
    for (const auto& r : records) {
        rep.max_len_alpha = std::max(rep.max_len_alpha, r.len_alpha);
        rep.max_len_beta = std::max(rep.max_len_beta, r.len_beta);
        iters += r.iterations;
    }
    rep.mean_iterations = iters / static_cast<double>(records.size());

    const OverlayChoice choice = overlay_for(cfg.ring, cfg.statistic);
    rep.overlay = choice.kind;
    if (choice.law) rep.law = choice.law->name;

    if (cfg.statistic == Statistic::xi_joint) {
        std::vector<double> xs, ys;
        xs.reserve(records.size());
        ys.reserve(records.size());
        for (const auto& r : records) {
            xs.push_back(r.xi.a0);
            ys.push_back(r.xi.a1);
        }
        double ax = 1.0, ay = 1.0;
        if (cfg.ring == Ring::gaussian || cfg.ring == Ring::integers) ax = ay = 0.5;
        if (cfg.ring == Ring::eisenstein) ax = 0.5, ay = 1.0 / std::sqrt(3.0);
        if (cfg.ring == Ring::hurwitz) ax = ay = 1.0 / std::numbers::sqrt2;
        rep.histogram_2d = make_histogram_2d(xs, ys, -ax, ax, -ay, ay, cfg.bins);
        const auto& h = *rep.histogram_2d;
        const auto n = static_cast<std::size_t>(cfg.bins);
        rep.analytic.assign(n * n, nan);
        rep.analytic_mass.assign(n * n, nan);
        const double area = (h.x_edges[1] - h.x_edges[0]) * (h.y_edges[1] - h.y_edges[0]);
        if (rep.overlay != Overlay::absent) {
            rep.law = "xi-joint-" + std::string(ring_name(cfg.ring));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const double m = cell_mass(cfg.ring, h.x_edges[i], h.x_edges[i + 1], h.y_edges[j], h.y_edges[j + 1]);
                    rep.analytic_mass[i * n + j] = m;
                    const double c = pdf_xi(cfg.ring, 0.5 * (h.x_edges[i] + h.x_edges[i + 1]),
                                            0.5 * (h.y_edges[j] + h.y_edges[j + 1]));
                    rep.analytic[i * n + j] = std::isfinite(c) ? c : m / area;
                }
            score(rep, h.counts, h.densities, std::vector<double>(n * n, area), h.total);
        }
        return rep;
    }

    std::vector<double> values;
    values.reserve(records.size());
    double vmax = 0.0;
    for (const auto& r : records) {
        values.push_back(statistic_value(cfg.statistic, r));
        vmax = std::max(vmax, values.back());
    }
    auto [lo, hi] = default_range(cfg, vmax);
    if (hi_override) hi = *hi_override;
    rep.histogram = make_histogram(values, lo, hi, cfg.bins);
    const auto& h = rep.histogram;
    rep.analytic.assign(h.bins(), nan);
    rep.analytic_mass.assign(h.bins(), nan);
    if (choice.law) {
        const auto& law = *choice.law;
        for (std::size_t i = 0; i < h.bins(); ++i) {
            const double a = h.edges[i], b = h.edges[i + 1];
            if (a < law.lo - 1e-12 || b > law.hi + 1e-12) continue;
            rep.analytic_mass[i] = bin_mass(law, a, b);
            const double c = law.eval(h.center(i));
            rep.analytic[i] = std::isfinite(c) ? c : rep.analytic_mass[i] / h.width(i);
        }
        std::vector<double> widths(h.bins());
        for (std::size_t i = 0; i < h.bins(); ++i) widths[i] = h.width(i);
        score(rep, h.counts, h.densities, widths, h.total);
    }
    return rep;
}

ComparisonReport run_experiment(const ExperimentConfig& cfg) { return compare(cfg, simulate(cfg)); }

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_csv(const ComparisonReport& rep) {
    const auto& cfg = rep.config;
    std::ostringstream os;
    os << "# format_version: 1\n"
       << "# seed: " << cfg.seed << "\n"
       << "# field: " << field_name(cfg.field) << "\n"
       << "# ring: " << ring_name(cfg.ring) << "\n"
       << "# statistic: " << statistic_name(cfg.statistic) << "\n"
       << "# cutoff: " << format_double(cfg.cutoff) << "\n"
       << "# trials: " << cfg.trials << "\n"
       << "# bins: " << cfg.bins << "\n"
       << "# analytic_overlay: " << overlay_name(rep.overlay) << "\n";
    if (rep.overlay != Overlay::absent) {
        os << "# law: " << rep.law << "\n"
           << "# sup_distance: " << format_double(rep.sup_distance) << "\n"
           << "# l1_distance: " << format_double(rep.l1_distance) << "\n"
           << "# chi_square: " << format_double(rep.chi_square) << "\n"
           << "# chi_square_dof: " << rep.chi_square_dof << "\n"
           << "# chi_square_p: " << format_double(rep.chi_square_p) << "\n";
    }
    const auto cell = [](double v) { return std::isnan(v) ? std::string() : format_double(v); };
    if (rep.histogram_2d) {
        const auto& h = *rep.histogram_2d;
        const std::size_t n = h.x_edges.size() - 1;
        os << "xi_r_center,xi_i_center,empirical_density,analytic_density\n";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t k = i * n + j;
                os << format_double(0.5 * (h.x_edges[i] + h.x_edges[i + 1])) << ','
                   << format_double(0.5 * (h.y_edges[j] + h.y_edges[j + 1])) << ',' << format_double(h.densities[k])
                   << ',' << cell(rep.analytic[k]) << '\n';
            }
    } else {
        const auto& h = rep.histogram;
        os << "bin_center,empirical_density,analytic_density\n";
        for (std::size_t i = 0; i < h.bins(); ++i)
            os << format_double(h.center(i)) << ',' << format_double(h.densities[i]) << ',' << cell(rep.analytic[i])
               << '\n';
    }
    return os.str();
}

void emit_csv(const ComparisonReport& rep, const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) fail(ErrorCode::io, "cannot open '" + path + "' for writing");
    f << format_csv(rep);
    f.close();
    if (!f) fail(ErrorCode::io, "write to '" + path + "' failed");
}

}  // namespace unilattice
