#include "unilattice/unilattice.h"

#include <cstring>
#include <exception>
#include <new>
#include <random>
#include <string>

#include "core/analytic.hpp"
#include "core/error.hpp"
#include "core/experiments.hpp"
#include "core/numbertheory.hpp"
#include "core/reduction.hpp"
#include "core/rng.hpp"
#include "core/sampling.hpp"

namespace ul = unilattice;

struct ul_rng {
    ul::Rng rng;
};

struct ul_report {
    ul::ComparisonReport report;
};

namespace {

thread_local std::string last_error;

ul_status status_of(ul::ErrorCode c) {
    switch (c) {
        case ul::ErrorCode::invalid_argument: return UL_ERR_INVALID_ARGUMENT;
        case ul::ErrorCode::domain: return UL_ERR_DOMAIN;
        case ul::ErrorCode::numerical: return UL_ERR_NUMERICAL;
        case ul::ErrorCode::cap_exceeded: return UL_ERR_CAP_EXCEEDED;
        case ul::ErrorCode::io: return UL_ERR_IO;
        case ul::ErrorCode::unsupported: return UL_ERR_UNSUPPORTED;
        case ul::ErrorCode::internal: return UL_ERR_INTERNAL;
    }
    return UL_ERR_INTERNAL;
}

ul_status set_error(ul_status s, std::string msg) {
    last_error = std::move(msg);
    return s;
}

// Runs f and converts exceptions into status codes.
template <class F>
ul_status guarded(F&& f) {
    try {
        f();
        return UL_OK;
    } catch (const ul::Error& e) {
        return set_error(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(UL_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(UL_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(UL_ERR_INTERNAL, "unknown error");
    }
}

#define UL_REQUIRE(ptr) \
    if (!(ptr)) return set_error(UL_ERR_INVALID_ARGUMENT, std::string(__func__) + ": null " #ptr)

ul::Field to_field(ul_field f) {
    switch (f) {
        case UL_FIELD_REAL: return ul::Field::real;
        case UL_FIELD_COMPLEX: return ul::Field::complex;
        case UL_FIELD_QUATERNION: return ul::Field::quaternion;
    }
    ul::fail(ul::ErrorCode::invalid_argument, "invalid field value " + std::to_string(static_cast<int>(f)));
}

ul::Ring to_ring(ul_ring r) {
    if (r < UL_RING_INTEGERS || r > UL_RING_HURWITZ)
        ul::fail(ul::ErrorCode::invalid_argument, "invalid ring value " + std::to_string(static_cast<int>(r)));
    return static_cast<ul::Ring>(r);
}

ul::Statistic to_statistic(ul_statistic s) {
    if (s < UL_STAT_SHORTEST || s > UL_STAT_XI_JOINT)
        ul::fail(ul::ErrorCode::invalid_argument, "invalid statistic value " + std::to_string(static_cast<int>(s)));
    return static_cast<ul::Statistic>(s);
}

ul::Quaternion to_quat(const ul_quat& q) { return {q.a[0], q.a[1], q.a[2], q.a[3]}; }
ul_quat from_quat(const ul::Quaternion& q) { return {{q.a0, q.a1, q.a2, q.a3}}; }
ul::Vector2 to_vec(const ul_vec2& v) { return {to_quat(v.x), to_quat(v.y)}; }
ul_vec2 from_vec(const ul::Vector2& v) { return {from_quat(v.x), from_quat(v.y)}; }

ul_ring_element from_element(const ul::RingElement& e) { return {{e.c[0], e.c[1], e.c[2], e.c[3]}}; }

ul::RingElement to_element(ul::Ring r, const ul_ring_element& e) {
    ul::RingElement out{r, {e.c[0], e.c[1], e.c[2], e.c[3]}};
    if (!ul::is_valid(out)) ul::fail(ul::ErrorCode::invalid_argument, "invalid coordinates for ring element");
    return out;
}

ul::Basis2 to_basis(const ul_basis& b) { return {to_field(b.field), to_ring(b.ring), to_vec(b.b0), to_vec(b.b1)}; }

int check_beta(int beta) {
    if (beta != 1 && beta != 2 && beta != 4)
        ul::fail(ul::ErrorCode::invalid_argument, "beta must be 1, 2 or 4");
    return beta;
}

}  // namespace

extern "C" {

const char* ul_version(void) { return "1.0.0"; }

const char* ul_status_name(ul_status s) {
    switch (s) {
        case UL_OK: return "ok";
        case UL_ERR_INVALID_ARGUMENT: return "invalid argument";
        case UL_ERR_DOMAIN: return "domain error";
        case UL_ERR_NUMERICAL: return "numerical failure";
        case UL_ERR_CAP_EXCEEDED: return "cap exceeded";
        case UL_ERR_IO: return "i/o error";
        case UL_ERR_UNSUPPORTED: return "unsupported";
        case UL_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* ul_last_error(void) { return last_error.c_str(); }

ul_status ul_field_from_name(const char* name, ul_field* out) {
    UL_REQUIRE(name);
    UL_REQUIRE(out);
    return guarded([&] { *out = static_cast<ul_field>(ul::field_from_name(name)); });
}

const char* ul_field_name(ul_field f) {
    switch (f) {
        case UL_FIELD_REAL: return "real";
        case UL_FIELD_COMPLEX: return "complex";
        case UL_FIELD_QUATERNION: return "quaternion";
    }
    return "unknown";
}

ul_status ul_ring_from_name(const char* name, ul_ring* out) {
    UL_REQUIRE(name);
    UL_REQUIRE(out);
    return guarded([&] { *out = static_cast<ul_ring>(ul::ring_from_name(name)); });
}

const char* ul_ring_name(ul_ring r) {
    if (r < UL_RING_INTEGERS || r > UL_RING_HURWITZ) return "unknown";
    // ring_name views string literals, so data() is NUL-terminated.
    return ul::ring_name(static_cast<ul::Ring>(r)).data();
}

ul_status ul_ring_field(ul_ring r, ul_field* out) {
    UL_REQUIRE(out);
    return guarded([&] { *out = static_cast<ul_field>(ul::ring_field(to_ring(r))); });
}

ul_status ul_ring_element_value(ul_ring r, const ul_ring_element* e, ul_quat* out) {
    UL_REQUIRE(e);
    UL_REQUIRE(out);
    return guarded([&] { *out = from_quat(ul::embed(to_element(to_ring(r), *e))); });
}

ul_status ul_quantize(ul_ring r, const ul_quat* z, ul_ring_element* out) {
    UL_REQUIRE(z);
    UL_REQUIRE(out);
    return guarded([&] { *out = from_element(ul::quantize(to_ring(r), to_quat(*z))); });
}

ul_status ul_reduce(const ul_basis* basis, int check_invariants, ul_reduced* out) {
    UL_REQUIRE(basis);
    UL_REQUIRE(out);
    return guarded([&] {
        ul::ReduceOptions opts;
        opts.check_invariants = check_invariants != 0;
        const ul::ReducedBasis r = ul::reduce(to_basis(*basis), opts);
        ul_reduced o{};
        o.alpha = from_vec(r.alpha);
        o.beta = from_vec(r.beta);
        o.len_alpha = r.len_alpha;
        o.len_beta = r.len_beta;
        o.xi = from_quat(r.xi);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                o.transform[i][j] = from_element(r.transform[i][j]);
                o.inverse_transform[i][j] = from_element(r.inverse_transform[i][j]);
            }
        o.iterations = r.iterations;
        *out = o;
    });
}

ul_status ul_shortest(const ul_basis* basis, double coeff_radius, ul_vec2* vector, double* length) {
    UL_REQUIRE(basis);
    UL_REQUIRE(vector);
    UL_REQUIRE(length);
    return guarded([&] {
        const ul::ShortestVector s = ul::shortest_oracle(to_basis(*basis), coeff_radius);
        *vector = from_vec(s.vector);
        *length = s.length;
    });
}

ul_status ul_rng_create(uint64_t seed, uint64_t stream, ul_rng** out) {
    UL_REQUIRE(out);
    return guarded([&] { *out = new ul_rng{ul::Rng::stream(seed, stream)}; });
}

void ul_rng_destroy(ul_rng* rng) { delete rng; }

ul_status ul_rng_uniform(ul_rng* rng, double* out) {
    UL_REQUIRE(rng);
    UL_REQUIRE(out);
    *out = rng->rng.uniform();
    return UL_OK;
}

ul_status ul_rng_normal(ul_rng* rng, double* out) {
    UL_REQUIRE(rng);
    UL_REQUIRE(out);
    *out = rng->rng.normal();
    return UL_OK;
}

ul_status ul_seed_from_entropy(uint64_t* out) {
    UL_REQUIRE(out);
    return guarded([&] {
        std::random_device rd;
        *out = (static_cast<uint64_t>(rd()) << 32) ^ static_cast<uint64_t>(rd());
    });
}

ul_status ul_sample_sl2(ul_rng* rng, ul_field field, double cutoff, ul_sl2_sample* out) {
    UL_REQUIRE(rng);
    UL_REQUIRE(out);
    return guarded([&] {
        const ul::Sl2Sample s = ul::sample_sl2(to_field(field), cutoff, rng->rng);
        ul_sl2_sample o{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) o.m[i][j] = from_quat(s.matrix.m[i][j]);
        o.sigma1 = s.sigma1;
        *out = o;
    });
}

ul_status ul_j2_closed(int beta, double r, double* out) {
    UL_REQUIRE(out);
    return guarded([&] { *out = ul::j2_closed(check_beta(beta), r); });
}

ul_status ul_sigma1_from_uniform(int beta, double cutoff, double u, double* out) {
    UL_REQUIRE(out);
    return guarded([&] { *out = ul::sigma1_from_uniform(check_beta(beta), cutoff, u); });
}

ul_status ul_jn_monte_carlo(ul_rng* rng, int n, int beta, double cutoff, int64_t trials, double* value,
                            double* std_error) {
    UL_REQUIRE(rng);
    UL_REQUIRE(value);
    UL_REQUIRE(std_error);
    return guarded([&] {
        const ul::McEstimate e = ul::jn_monte_carlo(n, check_beta(beta), cutoff, trials, rng->rng);
        *value = e.value;
        *std_error = e.std_error;
    });
}

size_t ul_law_count(void) { return ul::analytic_laws().size(); }

ul_status ul_law_get_info(size_t index, ul_law_info* out) {
    UL_REQUIRE(out);
    const auto& laws = ul::analytic_laws();
    if (index >= laws.size()) return set_error(UL_ERR_INVALID_ARGUMENT, "ul_law_get_info: index out of range");
    const auto& l = laws[index];
    *out = {l.name.c_str(), l.description.c_str(), l.is_density ? 1 : 0, l.lo, l.hi};
    return UL_OK;
}

ul_status ul_law_eval(const char* name, double x, double* out) {
    UL_REQUIRE(name);
    UL_REQUIRE(out);
    return guarded([&] { *out = ul::analytic_law(name).eval(x); });
}

ul_status ul_constants_get(ul_constants* out) {
    UL_REQUIRE(out);
    return guarded([&] {
        const auto& k = ul::special_constants();
        *out = {k.catalan,       k.zeta2,         k.zeta3,           k.zeta4,    k.dedekind_zi_2,
                k.vol_gamma_hat, k.vol_gamma_hat_h, k.vol_gamma_hat_h_conjectured, k.gamma_4h};
    });
}

ul_status ul_asymptotic_constants(int n, int beta, ul_asymptotic* out) {
    UL_REQUIRE(out);
    return guarded([&] {
        const auto a = ul::asymptotic_constants(n, check_beta(beta));
        *out = {a.c_n_beta, a.vol_op_coeff, a.chat_n_beta, a.vol_2norm_coeff, a.vol_unitary,
                ul::volume_prefactor(n, beta)};
    });
}

ul_status ul_gamma4h_monte_carlo(ul_rng* rng, int64_t trials, double* value, double* std_error) {
    UL_REQUIRE(rng);
    UL_REQUIRE(value);
    UL_REQUIRE(std_error);
    return guarded([&] {
        const ul::McEstimate e = ul::gamma4h_monte_carlo(trials, rng->rng);
        *value = e.value;
        *std_error = e.std_error;
    });
}

ul_status ul_siegel_check(ul_ring ring, int64_t pmax, ul_siegel* out) {
    UL_REQUIRE(out);
    return guarded([&] {
        const ul::SiegelCheck s = ul::siegel_omega_check(to_ring(ring), pmax);
        *out = {s.pmax,      s.series_value,     s.predicted, s.relative_gap, s.raw_value,
                s.raw_factor, s.eighth_power_sum, s.implied_gamma_4h};
    });
}

ul_status ul_count_sl2_gaussian(double radius, int64_t* out) {
    UL_REQUIRE(out);
    return guarded([&] { *out = ul::count_sl2_gaussian(radius); });
}

double ul_sl2_count_prediction(void) { return ul::sl2_count_prediction(); }

ul_status ul_statistic_from_name(const char* name, ul_statistic* out) {
    UL_REQUIRE(name);
    UL_REQUIRE(out);
    return guarded([&] { *out = static_cast<ul_statistic>(ul::statistic_from_name(name)); });
}

const char* ul_statistic_name(ul_statistic s) {
    if (s < UL_STAT_SHORTEST || s > UL_STAT_XI_JOINT) return "unknown";
    return ul::statistic_name(static_cast<ul::Statistic>(s)).data();
}

void ul_experiment_config_default(ul_experiment_config* cfg) {
    if (!cfg) return;
    const ul::ExperimentConfig d;
    *cfg = {static_cast<ul_field>(d.field), static_cast<ul_ring>(d.ring), d.cutoff, d.trials, d.bins, d.seed,
            static_cast<ul_statistic>(d.statistic), d.workers, d.check_invariants ? 1 : 0};
}

ul_status ul_experiment_run(const ul_experiment_config* cfg, ul_report** out) {
    UL_REQUIRE(cfg);
    UL_REQUIRE(out);
    return guarded([&] {
        ul::ExperimentConfig c;
        c.field = to_field(cfg->field);
        c.ring = to_ring(cfg->ring);
        c.cutoff = cfg->cutoff;
        c.trials = cfg->trials;
        c.bins = cfg->bins;
        c.seed = cfg->seed;
        c.statistic = to_statistic(cfg->statistic);
        c.workers = cfg->workers;
        c.check_invariants = cfg->check_invariants != 0;
        *out = new ul_report{ul::run_experiment(c)};
    });
}

void ul_report_destroy(ul_report* report) { delete report; }

ul_status ul_report_summary_get(const ul_report* report, ul_report_summary* out) {
    UL_REQUIRE(report);
    UL_REQUIRE(out);
    const auto& r = report->report;
    *out = {static_cast<ul_overlay>(r.overlay), r.sup_distance, r.l1_distance, r.chi_square, r.chi_square_dof,
            r.chi_square_p, r.max_len_alpha, r.max_len_beta, r.mean_iterations};
    return UL_OK;
}

const char* ul_report_law(const ul_report* report) { return report ? report->report.law.c_str() : ""; }

ul_status ul_report_write_csv(const ul_report* report, const char* path) {
    UL_REQUIRE(report);
    UL_REQUIRE(path);
    return guarded([&] { ul::emit_csv(report->report, path); });
}

ul_status ul_report_csv(const ul_report* report, char* buf, size_t capacity, size_t* needed) {
    UL_REQUIRE(report);
    UL_REQUIRE(needed);
    return guarded([&] {
        const std::string s = ul::format_csv(report->report);
        *needed = s.size() + 1;
        if (buf && capacity >= s.size() + 1) std::memcpy(buf, s.c_str(), s.size() + 1);
        else if (buf) ul::fail(ul::ErrorCode::invalid_argument, "ul_report_csv: buffer too small");
    });
}

}  // extern "C"
