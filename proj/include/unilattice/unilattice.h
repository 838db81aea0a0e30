/* Lattice reduction over real, complex and quaternion rings, random SL2 sampling, and the analytic
 * laws of the reduced basis. Plain C interface over the C++ core.
 *
 * Every fallible call returns ul_status; on failure ul_last_error() holds a message for the calling
 * thread until its next failing call. Output parameters are written only on UL_OK.
 */
#ifndef UNILATTICE_H
#define UNILATTICE_H

#include <stddef.h>
#include <stdint.h>

#if defined(UNILATTICE_BUILDING)
#define UL_API __attribute__((visibility("default")))
#else
#define UL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ul_status {
    UL_OK = 0,
    UL_ERR_INVALID_ARGUMENT = 1,
    UL_ERR_DOMAIN = 2,
    UL_ERR_NUMERICAL = 3,
    UL_ERR_CAP_EXCEEDED = 4,
    UL_ERR_IO = 5,
    UL_ERR_UNSUPPORTED = 6,
    UL_ERR_INTERNAL = 7
} ul_status;

UL_API const char* ul_version(void);
UL_API const char* ul_status_name(ul_status s);
/* Message of the last failure on this thread; "" if none. */
UL_API const char* ul_last_error(void);

/* ---- fields and rings ---------------------------------------------------------------------- */

/* Values equal beta. */
typedef enum ul_field { UL_FIELD_REAL = 1, UL_FIELD_COMPLEX = 2, UL_FIELD_QUATERNION = 4 } ul_field;

typedef enum ul_ring {
    UL_RING_INTEGERS = 0,
    UL_RING_GAUSSIAN = 1,
    UL_RING_D2 = 2,
    UL_RING_EISENSTEIN = 3,
    UL_RING_D7 = 4,
    UL_RING_D11 = 5,
    UL_RING_HURWITZ = 6
} ul_ring;

UL_API ul_status ul_field_from_name(const char* name, ul_field* out);
UL_API const char* ul_field_name(ul_field f);
UL_API ul_status ul_ring_from_name(const char* name, ul_ring* out);
UL_API const char* ul_ring_name(ul_ring r);
UL_API ul_status ul_ring_field(ul_ring r, ul_field* out);

/* a[0] + a[1] i + a[2] j + a[3] k */
typedef struct ul_quat {
    double a[4];
} ul_quat;

typedef struct ul_vec2 {
    ul_quat x, y;
} ul_vec2;

/* Quadratic rings: c[0] + c[1] w. Hurwitz: (c[0] + c[1] i + c[2] j + c[3] k) / 2. Integers: c[0]. */
typedef struct ul_ring_element {
    int64_t c[4];
} ul_ring_element;

UL_API ul_status ul_ring_element_value(ul_ring r, const ul_ring_element* e, ul_quat* out);
/* Nearest ring element to z. */
UL_API ul_status ul_quantize(ul_ring r, const ul_quat* z, ul_ring_element* out);

/* ---- reduction ----------------------------------------------------------------------------- */

/* Lattice {b0 m0 + b1 m1}; coefficients multiply on the right. |det [b0 b1]| must be 1. */
typedef struct ul_basis {
    ul_field field;
    ul_ring ring;
    ul_vec2 b0, b1;
} ul_basis;

typedef struct ul_reduced {
    ul_vec2 alpha, beta;
    double len_alpha, len_beta;
    /* <alpha, beta> / (|alpha| |beta|) */
    ul_quat xi;
    /* [alpha beta] = [b0 b1] transform */
    ul_ring_element transform[2][2];
    ul_ring_element inverse_transform[2][2];
    int iterations;
} ul_reduced;

UL_API ul_status ul_reduce(const ul_basis* basis, int check_invariants, ul_reduced* out);
/* Shortest nonzero vector with both coefficients of absolute value <= coeff_radius. */
UL_API ul_status ul_shortest(const ul_basis* basis, double coeff_radius, ul_vec2* vector, double* length);

/* ---- random numbers ------------------------------------------------------------------------ */

typedef struct ul_rng ul_rng;

/* Stream `stream` of `seed`: the seeded generator advanced by `stream` jumps of 2^128 draws. */
UL_API ul_status ul_rng_create(uint64_t seed, uint64_t stream, ul_rng** out);
UL_API void ul_rng_destroy(ul_rng* rng);
UL_API ul_status ul_rng_uniform(ul_rng* rng, double* out);
UL_API ul_status ul_rng_normal(ul_rng* rng, double* out);
/* 64 bits from the operating system's entropy source. */
UL_API ul_status ul_seed_from_entropy(uint64_t* out);

/* ---- sampling ------------------------------------------------------------------------------ */

typedef struct ul_sl2_sample {
    ul_quat m[2][2];
    double sigma1;
} ul_sl2_sample;

/* U diag(s, 1/s) V with Haar U, V and s drawn from the singular-value law cut off at `cutoff`. */
UL_API ul_status ul_sample_sl2(ul_rng* rng, ul_field field, double cutoff, ul_sl2_sample* out);
/* Integral over 1 < s < r of (s^2 - s^-2)^beta / s; beta in {1, 2, 4}. */
UL_API ul_status ul_j2_closed(int beta, double r, double* out);
UL_API ul_status ul_sigma1_from_uniform(int beta, double cutoff, double u, double* out);
UL_API ul_status ul_jn_monte_carlo(ul_rng* rng, int n, int beta, double cutoff, int64_t trials, double* value,
                                   double* std_error);

/* ---- analytic laws and constants ----------------------------------------------------------- */

UL_API size_t ul_law_count(void);
typedef struct ul_law_info {
    const char* name;
    const char* description;
    int is_density;
    double lo, hi;
} ul_law_info;
UL_API ul_status ul_law_get_info(size_t index, ul_law_info* out);
UL_API ul_status ul_law_eval(const char* name, double x, double* out);

typedef struct ul_constants {
    double catalan;
    double zeta2, zeta3, zeta4;
    double dedekind_zi_2;
    double vol_gamma_hat;
    double vol_gamma_hat_h;
    double vol_gamma_hat_h_conjectured;
    double gamma_4h;
} ul_constants;

UL_API ul_status ul_constants_get(ul_constants* out);

typedef struct ul_asymptotic {
    double c_n_beta;
    double vol_op_coeff;
    double chat_n_beta;
    double vol_2norm_coeff;
    double vol_unitary;
    double prefactor;
} ul_asymptotic;

UL_API ul_status ul_asymptotic_constants(int n, int beta, ul_asymptotic* out);
UL_API ul_status ul_gamma4h_monte_carlo(ul_rng* rng, int64_t trials, double* value, double* std_error);

/* ---- number theory ------------------------------------------------------------------------- */

typedef struct ul_siegel {
    int64_t pmax;
    double series_value;
    double predicted;
    double relative_gap;
    double raw_value;
    double raw_factor;
    double eighth_power_sum;
    double implied_gamma_4h;
} ul_siegel;

/* Rings gaussian, eisenstein, hurwitz; pmax = 0 picks a default. */
UL_API ul_status ul_siegel_check(ul_ring ring, int64_t pmax, ul_siegel* out);
/* #{g in SL2(Z[i]) : |g|_op <= radius}, 1 <= radius <= 4. */
UL_API ul_status ul_count_sl2_gaussian(double radius, int64_t* out);
UL_API double ul_sl2_count_prediction(void);

/* ---- experiments --------------------------------------------------------------------------- */

typedef enum ul_statistic {
    UL_STAT_SHORTEST = 0,
    UL_STAT_SECOND = 1,
    UL_STAT_XI_MODULUS = 2,
    UL_STAT_XI_JOINT = 3
} ul_statistic;

UL_API ul_status ul_statistic_from_name(const char* name, ul_statistic* out);
UL_API const char* ul_statistic_name(ul_statistic s);

typedef struct ul_experiment_config {
    ul_field field;
    ul_ring ring;
    double cutoff;
    int64_t trials;
    int bins;
    uint64_t seed;
    ul_statistic statistic;
    /* 0: one per hardware thread. Results do not depend on it. */
    unsigned workers;
    int check_invariants;
} ul_experiment_config;

/* Complex field, Gaussian ring, cutoff 40, 10^6 trials, 100 bins, seed 0, shortest. */
UL_API void ul_experiment_config_default(ul_experiment_config* cfg);

typedef enum ul_overlay { UL_OVERLAY_ABSENT = 0, UL_OVERLAY_FULL = 1, UL_OVERLAY_PARTIAL = 2 } ul_overlay;

typedef struct ul_report_summary {
    ul_overlay overlay;
    double sup_distance;
    double l1_distance;
    double chi_square;
    int chi_square_dof;
    double chi_square_p;
    double max_len_alpha;
    double max_len_beta;
    double mean_iterations;
} ul_report_summary;

typedef struct ul_report ul_report;

UL_API ul_status ul_experiment_run(const ul_experiment_config* cfg, ul_report** out);
UL_API void ul_report_destroy(ul_report* report);
UL_API ul_status ul_report_summary_get(const ul_report* report, ul_report_summary* out);
/* Name of the overlaid law, "" when absent. Valid while the report lives. */
UL_API const char* ul_report_law(const ul_report* report);
UL_API ul_status ul_report_write_csv(const ul_report* report, const char* path);
/* Copies the CSV text into buf (NUL-terminated) if it fits; *needed receives its size plus one. */
UL_API ul_status ul_report_csv(const ul_report* report, char* buf, size_t capacity, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif
