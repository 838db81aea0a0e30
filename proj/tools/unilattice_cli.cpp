// Command-line front end. Talks to the library only through unilattice.h.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "unilattice/unilattice.h"

namespace {

// Bad flag values: exit 2 like parse errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Library failures: exit 1.
struct RuntimeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(ul_status s) {
    if (s != UL_OK) throw RuntimeFailure(std::string(ul_status_name(s)) + ": " + ul_last_error());
}

void check_usage(ul_status s) {
    if (s != UL_OK) throw UsageError(ul_last_error());
}

/// Shortest round-trip form by default, otherwise `digits` significant digits. Never prints -0.
std::string num(double v, int digits = 0) {
    if (std::isnan(v)) return "nan";
    v += 0.0;
    if (digits == 0) {
        char buf[64];
        return std::string(buf, std::to_chars(buf, buf + sizeof buf, v).ptr);
    }
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

// Writes to --out when given, otherwise to stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw RuntimeFailure("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    void finish(const std::string& path) {
        if (file_.is_open()) {
            file_.close();
            if (!file_) throw RuntimeFailure("write to '" + path + "' failed");
        }
    }

private:
    std::ofstream file_;
};

struct RngHandle {
    ul_rng* p = nullptr;
    RngHandle(uint64_t seed, uint64_t stream) { check(ul_rng_create(seed, stream, &p)); }
    ~RngHandle() { ul_rng_destroy(p); }
    RngHandle(const RngHandle&) = delete;
    RngHandle& operator=(const RngHandle&) = delete;
};

uint64_t resolve_seed(const std::optional<uint64_t>& seed) {
    if (seed) return *seed;
    uint64_t s = 0;
    check(ul_seed_from_entropy(&s));
    std::cerr << "seed: " << s << " (drawn from entropy; pass --seed " << s << " to reproduce)\n";
    return s;
}

ul_ring parse_ring(const std::string& name) {
    ul_ring r;
    check_usage(ul_ring_from_name(name.c_str(), &r));
    return r;
}

ul_field parse_field(const std::string& name) {
    ul_field f;
    check_usage(ul_field_from_name(name.c_str(), &f));
    return f;
}

ul_field ring_field(ul_ring r) {
    ul_field f;
    check(ul_ring_field(r, &f));
    return f;
}

// Field from --field and --ring: either may be given; they must agree.
ul_field resolve_field(const std::string& field, const std::string& ring) {
    if (ring.empty()) return parse_field(field.empty() ? "complex" : field);
    const ul_field rf = ring_field(parse_ring(ring));
    if (!field.empty() && parse_field(field) != rf)
        throw UsageError("--field " + field + " does not match --ring " + ring + " (which needs " +
                         ul_field_name(rf) + ")");
    return rf;
}

const char* component_suffix[4] = {"re", "i", "j", "k"};

void write_components(std::ostream& os, const ul_quat& q, int dim) {
    for (int c = 0; c < dim; ++c) os << ',' << num(q.a[c]);
}

// ---- sample --------------------------------------------------------------------------------

struct SampleArgs {
    std::string field = "complex";
    double radius = 40.0;
    int64_t count = 1'000'000;
    std::optional<uint64_t> seed;
    std::string out;
};

void run_sample(const SampleArgs& a) {
    const ul_field field = parse_field(a.field);
    const int dim = static_cast<int>(field);
    RngHandle rng(resolve_seed(a.seed), 0);
    Output out(a.out);
    auto& os = out.stream();
    os << "field,R,sigma1";
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int k = 0; k < dim; ++k) os << ",m" << r << c << '_' << component_suffix[k];
    os << '\n';
    for (int64_t t = 0; t < a.count; ++t) {
        ul_sl2_sample s;
        check(ul_sample_sl2(rng.p, field, a.radius, &s));
        os << ul_field_name(field) << ',' << num(a.radius) << ',' << num(s.sigma1);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) write_components(os, s.m[r][c], dim);
        os << '\n';
    }
    out.finish(a.out);
}

// ---- reduce --------------------------------------------------------------------------------

struct ReduceArgs {
    std::string ring = "gaussian";
    std::string input;
    double radius = 40.0;
    int64_t count = 10;
    std::optional<uint64_t> seed;
    std::string out;
};

ul_quat parse_scalar(const std::string& tok, int dim, int line) {
    std::vector<double> parts;
    std::stringstream ss(tok);
    std::string p;
    while (std::getline(ss, p, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(p, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != p.size())
            throw UsageError("line " + std::to_string(line) + ": bad number '" + p + "'");
        parts.push_back(v);
    }
    if (parts.empty() || static_cast<int>(parts.size()) > dim)
        throw UsageError("line " + std::to_string(line) + ": scalar '" + tok + "' needs 1 to " +
                         std::to_string(dim) + " comma-separated components");
    ul_quat q{};
    for (std::size_t i = 0; i < parts.size(); ++i) q.a[i] = parts[i];
    return q;
}

std::vector<ul_basis> read_bases(const std::string& path, ul_ring ring, ul_field field) {
    std::ifstream in(path);
    if (!in) throw RuntimeFailure("cannot open '" + path + "'");
    std::vector<ul_basis> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks.size() != 4)
            throw UsageError("line " + std::to_string(lineno) + ": expected 4 scalars (b0.x b0.y b1.x b1.y), got " +
                             std::to_string(toks.size()));
        const int dim = static_cast<int>(field);
        ul_basis b{field, ring, {parse_scalar(toks[0], dim, lineno), parse_scalar(toks[1], dim, lineno)},
                   {parse_scalar(toks[2], dim, lineno), parse_scalar(toks[3], dim, lineno)}};
        out.push_back(b);
    }
    return out;
}

void run_reduce(const ReduceArgs& a) {
    const ul_ring ring = parse_ring(a.ring);
    const ul_field field = ring_field(ring);
    const int dim = static_cast<int>(field);
    std::vector<ul_basis> bases;
    if (!a.input.empty()) {
        bases = read_bases(a.input, ring, field);
    } else {
        RngHandle rng(resolve_seed(a.seed), 0);
        for (int64_t t = 0; t < a.count; ++t) {
            ul_sl2_sample s;
            check(ul_sample_sl2(rng.p, field, a.radius, &s));
            bases.push_back({field, ring, {s.m[0][0], s.m[1][0]}, {s.m[0][1], s.m[1][1]}});
        }
    }
    Output out(a.out);
    auto& os = out.stream();
    os << "index,len_alpha,len_beta,iterations";
    for (const char* v : {"alpha", "beta"})
        for (const char* coord : {"x", "y"})
            for (int k = 0; k < dim; ++k) os << ',' << v << '_' << coord << '_' << component_suffix[k];
    for (int k = 0; k < dim; ++k) os << ",xi_" << component_suffix[k];
    os << '\n';
    for (std::size_t i = 0; i < bases.size(); ++i) {
        ul_reduced r;
        const ul_status s = ul_reduce(&bases[i], 1, &r);
        if (s != UL_OK)
            throw RuntimeFailure("basis " + std::to_string(i) + ": " + ul_status_name(s) + ": " + ul_last_error());
        os << i << ',' << num(r.len_alpha) << ',' << num(r.len_beta) << ',' << r.iterations;
        for (const ul_vec2* v : {&r.alpha, &r.beta}) {
            write_components(os, v->x, dim);
            write_components(os, v->y, dim);
        }
        write_components(os, r.xi, dim);
        os << '\n';
    }
    out.finish(a.out);
}

// ---- experiment ----------------------------------------------------------------------------

struct ExperimentArgs {
    std::string field;
    std::string ring = "gaussian";
    std::string stat = "shortest";
    double radius = 40.0;
    int64_t count = 1'000'000;
    int bins = 100;
    std::optional<uint64_t> seed;
    unsigned workers = 0;
    std::string out;
};

void run_experiment(const ExperimentArgs& a) {
    ul_experiment_config cfg;
    ul_experiment_config_default(&cfg);
    cfg.ring = parse_ring(a.ring);
    cfg.field = resolve_field(a.field, a.ring);
    check_usage(ul_statistic_from_name(a.stat.c_str(), &cfg.statistic));
    cfg.cutoff = a.radius;
    cfg.trials = a.count;
    cfg.bins = a.bins;
    cfg.workers = a.workers;
    cfg.seed = resolve_seed(a.seed);
    ul_report* raw = nullptr;
    check(ul_experiment_run(&cfg, &raw));
    std::unique_ptr<ul_report, decltype(&ul_report_destroy)> report(raw, ul_report_destroy);
    if (!a.out.empty()) check(ul_report_write_csv(report.get(), a.out.c_str()));
    ul_report_summary s;
    check(ul_report_summary_get(report.get(), &s));
    std::cout << "seed: " << cfg.seed << "\n"
              << "field: " << ul_field_name(cfg.field) << "\n"
              << "ring: " << ul_ring_name(cfg.ring) << "\n"
              << "statistic: " << ul_statistic_name(cfg.statistic) << "\n"
              << "cutoff: " << num(cfg.cutoff) << "\n"
              << "trials: " << cfg.trials << "\n"
              << "max_len_alpha: " << num(s.max_len_alpha, 12) << "\n"
              << "max_len_beta: " << num(s.max_len_beta, 12) << "\n"
              << "mean_iterations: " << num(s.mean_iterations, 6) << "\n";
    const char* overlay = s.overlay == UL_OVERLAY_FULL ? "full" : s.overlay == UL_OVERLAY_PARTIAL ? "partial" : "absent";
    std::cout << "analytic_overlay: " << overlay << "\n";
    if (s.overlay == UL_OVERLAY_ABSENT) {
        std::cout << "note: no analytic law is known for this ring and statistic; histogram only\n";
    } else {
        std::cout << "law: " << ul_report_law(report.get()) << "\n"
                  << "sup_distance: " << num(s.sup_distance, 6) << "\n"
                  << "l1_distance: " << num(s.l1_distance, 6) << "\n"
                  << "chi_square: " << num(s.chi_square, 6) << "\n"
                  << "chi_square_dof: " << s.chi_square_dof << "\n"
                  << "chi_square_p: " << num(s.chi_square_p, 6) << "\n";
    }
    if (!a.out.empty()) std::cout << "csv: " << a.out << "\n";
}

// ---- analytic ------------------------------------------------------------------------------

struct AnalyticArgs {
    std::string which;
    double from = 0.0, to = 1.0, step = 0.01;
    std::string out;
};

void run_analytic(const AnalyticArgs& a) {
    std::optional<ul_law_info> info;
    std::string names;
    for (size_t i = 0; i < ul_law_count(); ++i) {
        ul_law_info li;
        check(ul_law_get_info(i, &li));
        names += std::string(names.empty() ? "" : ", ") + li.name;
        if (a.which == li.name) info = li;
    }
    if (!info) throw UsageError("unknown law '" + a.which + "' (expected one of: " + names + ")");
    if (!(a.step > 0.0)) throw UsageError("--step must be positive");
    if (!(a.to >= a.from)) throw UsageError("--to must be >= --from");
    const double span = (a.to - a.from) / a.step;
    if (span > 1e7) throw UsageError("grid has more than 10^7 points");
    const auto n = static_cast<int64_t>(std::floor(span * (1.0 + 1e-12))) + 1;
    Output out(a.out);
    auto& os = out.stream();
    os << "x," << (info->is_density ? "density" : "value") << '\n';
    for (int64_t i = 0; i < n; ++i) {
        const double x = a.from + static_cast<double>(i) * a.step;
        double v = 0.0;
        const ul_status s = ul_law_eval(info->name, x, &v);
        os << num(x) << ',';
        if (s == UL_OK) os << num(v);
        else if (s != UL_ERR_DOMAIN) check(s);
        os << '\n';
    }
    out.finish(a.out);
}

// ---- constants -----------------------------------------------------------------------------

struct ConstantsArgs {
    int64_t trials = 0;
    std::optional<uint64_t> seed;
};

void run_constants(const ConstantsArgs& a) {
    ul_constants k;
    check(ul_constants_get(&k));
    const auto line = [](const char* name, double v) { std::cout << name << " = " << num(v, 12) << "\n"; };
    line("catalan", k.catalan);
    line("zeta(2)", k.zeta2);
    line("zeta(3)", k.zeta3);
    line("zeta(4)", k.zeta4);
    line("zeta_Z[i](2)", k.dedekind_zi_2);
    line("vol_gamma_hat", k.vol_gamma_hat);
    line("vol_gamma_hat_H", k.vol_gamma_hat_h);
    line("vol_gamma_hat_H_single_dilog", k.vol_gamma_hat_h_conjectured);
    line("gamma_4H", k.gamma_4h);
    if (a.trials > 0) {
        RngHandle rng(resolve_seed(a.seed), 0);
        double v = 0.0, se = 0.0;
        check(ul_gamma4h_monte_carlo(rng.p, a.trials, &v, &se));
        std::cout << "gamma_4H_monte_carlo = " << num(v, 12) << " +- " << num(se, 3) << " (" << a.trials
                  << " trials)\n";
    }
}

// ---- siegel-check --------------------------------------------------------------------------

struct SiegelArgs {
    std::string ring;
    int64_t pmax = 0;
};

void run_siegel(const SiegelArgs& a) {
    std::vector<ul_ring> rings;
    if (a.ring.empty()) rings = {UL_RING_GAUSSIAN, UL_RING_EISENSTEIN, UL_RING_HURWITZ};
    else rings = {parse_ring(a.ring)};
    if (a.pmax < 0) throw UsageError("--pmax must be >= 0");
    for (ul_ring r : rings) {
        ul_siegel s;
        check(ul_siegel_check(r, a.pmax, &s));
        std::cout << "ring: " << ul_ring_name(r) << "\n"
                  << "  pmax: " << s.pmax << "\n"
                  << "  series_value: " << num(s.series_value, 15) << "\n"
                  << "  predicted: " << num(s.predicted, 15) << "\n"
                  << "  relative_gap: " << num(s.relative_gap, 3) << "\n";
        if (r == UL_RING_EISENSTEIN)
            std::cout << "  uncorrected_value: " << num(s.raw_value, 15) << "\n"
                      << "  uncorrected_over_pi2_2: " << num(s.raw_factor, 15) << "\n";
        if (r == UL_RING_HURWITZ)
            std::cout << "  sum_q^-8: " << num(s.eighth_power_sum, 15) << "\n"
                      << "  implied_gamma_4H: " << num(s.implied_gamma_4h, 15) << "\n";
    }
}

// ---- count-sl2 -----------------------------------------------------------------------------

struct CountArgs {
    double radius = 2.0;
};

void run_count(const CountArgs& a) {
    int64_t n = 0;
    check(ul_count_sl2_gaussian(a.radius, &n));
    std::cout << "radius: " << num(a.radius) << "\n"
              << "count: " << n << "\n"
              << "count_over_R4: " << num(static_cast<double>(n) / std::pow(a.radius, 4), 12) << "\n"
              << "limit_prediction: " << num(ul_sl2_count_prediction(), 12) << "\n"
              << "note: the ratio converges slowly; no agreement is expected at R <= 4\n";
}

// ---- volume --------------------------------------------------------------------------------

struct VolumeArgs {
    int beta = 2;
    int n = 2;
    double radius = 40.0;
    int64_t trials = 1'000'000;
    std::optional<uint64_t> seed;
};

void run_volume(const VolumeArgs& a) {
    ul_asymptotic k;
    check(ul_asymptotic_constants(a.n, a.beta, &k));
    const double R = a.radius;
    const int exponent = a.beta * a.n * (a.n - 1);
    std::cout << "beta: " << a.beta << "\n"
              << "n: " << a.n << "\n"
              << "radius: " << num(R) << "\n";
    double j = 0.0;
    if (a.n == 2) {
        check(ul_j2_closed(a.beta, R, &j));
        std::cout << "J_2(R): " << num(j, 15) << " (closed form)\n";
    } else {
        RngHandle rng(resolve_seed(a.seed), 0);
        double se = 0.0;
        check(ul_jn_monte_carlo(rng.p, a.n, a.beta, R, a.trials, &j, &se));
        std::cout << "J_N(R): " << num(j, 12) << " +- " << num(se, 3) << " (Monte Carlo, " << a.trials
                  << " trials)\n";
    }
    std::cout << "asymptotic_J: " << num(k.c_n_beta * std::pow(R, exponent), 12) << " (c = " << num(k.c_n_beta, 12)
              << ", exponent " << exponent << ")\n"
              << "ratio: " << num(j / (k.c_n_beta * std::pow(R, exponent)), 12) << "\n"
              << "volume_prefactor: " << num(k.prefactor, 12) << "\n"
              << "volume: " << num(k.prefactor * j, 12) << "\n"
              << "asymptotic_volume_opnorm: " << num(k.vol_op_coeff * std::pow(R, exponent), 12) << "\n"
              << "asymptotic_volume_2norm_coeff: " << num(k.vol_2norm_coeff, 12) << "\n"
              << "vol_U_N: " << num(k.vol_unitary, 12) << "\n";
    if (a.n == 2 && a.beta == 2)
        std::cout << "note: the expanded form R^4 - R^-4 - 8 log R equals 4 J_2(R); the value above is the "
                     "integral itself\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice reduction over Z, Z[i], Eisenstein, Z[sqrt-2], D=-7, D=-11 and Hurwitz integers"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    app.get_formatter()->column_width(34);

    const auto seed_opt = [](CLI::App* sub, std::optional<uint64_t>& seed) {
        sub->add_option("--seed", seed, "64-bit seed; drawn from entropy and printed when omitted");
    };

    SampleArgs sample;
    auto* s_sample = app.add_subcommand("sample", "Draw random SL2 matrices; CSV to --out or stdout");
    s_sample->add_option("--field", sample.field, "real, complex or quaternion")->capture_default_str();
    s_sample->add_option("--radius", sample.radius, "Operator-norm cutoff R > 1")
        ->capture_default_str()
        ->check(CLI::Range(1.0 + 1e-12, 1e6));
    s_sample->add_option("--count", sample.count, "Number of matrices")->capture_default_str()->check(CLI::Range(int64_t{1}, int64_t{1'000'000'000}));
    seed_opt(s_sample, sample.seed);
    s_sample->add_option("--out", sample.out, "Output CSV path (default stdout)");

    ReduceArgs reduce;
    auto* s_reduce = app.add_subcommand("reduce", "Reduce bases from --input, or random SL2 bases");
    s_reduce->add_option("--ring", reduce.ring, "integers, gaussian, d2, eisenstein, d7, d11, hurwitz")
        ->capture_default_str();
    s_reduce->add_option("--input", reduce.input, "Basis file: one basis per line, 4 scalars b0.x b0.y b1.x b1.y")
        ->check(CLI::ExistingFile);
    s_reduce->add_option("--radius", reduce.radius, "Cutoff for random bases")->capture_default_str()->check(CLI::Range(1.0 + 1e-12, 1e6));
    s_reduce->add_option("--count", reduce.count, "Number of random bases")->capture_default_str()->check(CLI::Range(int64_t{1}, int64_t{100'000'000}));
    seed_opt(s_reduce, reduce.seed);
    s_reduce->add_option("--out", reduce.out, "Output CSV path (default stdout)");

    ExperimentArgs exp;
    auto* s_exp = app.add_subcommand("experiment", "Monte Carlo histogram of a reduced-basis statistic");
    s_exp->add_option("--field", exp.field, "real, complex or quaternion (default: the ring's field)");
    s_exp->add_option("--ring", exp.ring, "integers, gaussian, d2, eisenstein, d7, d11, hurwitz")->capture_default_str();
    s_exp->add_option("--stat", exp.stat, "shortest, second, xi_modulus, xi_joint")->capture_default_str();
    s_exp->add_option("--radius", exp.radius, "Operator-norm cutoff R > 1")->capture_default_str()->check(CLI::Range(1.0 + 1e-12, 1e6));
    s_exp->add_option("--count", exp.count, "Number of trials")->capture_default_str()->check(CLI::Range(int64_t{1}, int64_t{1'000'000'000}));
    s_exp->add_option("--bins", exp.bins, "Histogram bins (per axis for xi_joint)")->capture_default_str()->check(CLI::Range(10, 100'000));
    seed_opt(s_exp, exp.seed);
    s_exp->add_option("--workers", exp.workers, "Worker threads, 0 for all cores; output does not depend on it")
        ->capture_default_str()
        ->check(CLI::Range(0u, 1024u));
    s_exp->add_option("--out", exp.out, "Histogram CSV path");

    AnalyticArgs an;
    auto* s_an = app.add_subcommand("analytic", "Evaluate an analytic law on a grid; CSV to --out or stdout");
    s_an->add_option("--which", an.which, "Law name, e.g. shortest-gaussian")->required();
    s_an->add_option("--from", an.from, "First grid point")->capture_default_str();
    s_an->add_option("--to", an.to, "Last grid point")->capture_default_str();
    s_an->add_option("--step", an.step, "Grid spacing")->capture_default_str();
    s_an->add_option("--out", an.out, "Output CSV path (default stdout)");

    ConstantsArgs cons;
    auto* s_cons = app.add_subcommand("constants", "Print the special constants to 12 digits");
    s_cons->add_option("--trials", cons.trials, "Also estimate gamma_4H by Monte Carlo with this many trials")
        ->capture_default_str()
        ->check(CLI::Range(int64_t{0}, int64_t{1'000'000'000}));
    seed_opt(s_cons, cons.seed);

    SiegelArgs sg;
    auto* s_sg = app.add_subcommand("siegel-check", "Compare lattice sums with their mean-value predictions");
    s_sg->add_option("--ring", sg.ring, "gaussian, eisenstein or hurwitz (default: all three)");
    s_sg->add_option("--pmax", sg.pmax, "Largest norm summed exactly; 0 picks a default")->capture_default_str();

    CountArgs cnt;
    auto* s_cnt = app.add_subcommand("count-sl2", "Count SL2(Z[i]) elements of operator norm <= R");
    s_cnt->add_option("--radius", cnt.radius, "R in [1, 4]")->capture_default_str()->check(CLI::Range(1.0, 4.0));

    VolumeArgs vol;
    auto* s_vol = app.add_subcommand("volume", "Singular-value integral and volume of the norm ball in SL_N");
    s_vol->add_option("--beta", vol.beta, "1, 2 or 4")->capture_default_str()->check(CLI::IsMember({1, 2, 4}));
    s_vol->add_option("--n", vol.n, "Matrix size N; 2 is exact, 3 uses Monte Carlo")->capture_default_str()->check(CLI::Range(2, 3));
    s_vol->add_option("--radius", vol.radius, "Cutoff R > 1")->capture_default_str()->check(CLI::Range(1.0 + 1e-12, 1e6));
    s_vol->add_option("--trials", vol.trials, "Monte Carlo trials for N = 3")->capture_default_str()->check(CLI::Range(int64_t{1}, int64_t{1'000'000'000}));
    seed_opt(s_vol, vol.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (s_sample->parsed()) run_sample(sample);
        else if (s_reduce->parsed()) run_reduce(reduce);
        else if (s_exp->parsed()) run_experiment(exp);
        else if (s_an->parsed()) run_analytic(an);
        else if (s_cons->parsed()) run_constants(cons);
        else if (s_sg->parsed()) run_siegel(sg);
        else if (s_cnt->parsed()) run_count(cnt);
        else if (s_vol->parsed()) run_volume(vol);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
