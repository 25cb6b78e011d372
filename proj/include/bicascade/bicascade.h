#ifndef BICASCADE_H
#define BICASCADE_H

/*
 * C interface to the bicascade library.
 *
 * Every handle is opaque and owned by the caller once returned; release it
 * with the matching *_free function (NULL is accepted). Functions return a
 * bic_status; on failure bic_last_error() describes the problem for the
 * calling thread. Output parameters are only written on BIC_OK.
 *
 * Text outputs use a two-call pattern: pass buf = NULL to learn the size
 * (including the terminating NUL) through `needed`, then call again with a
 * buffer of that size.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BICASCADE_BUILDING)
#define BIC_API __declspec(dllexport)
#else
#define BIC_API __declspec(dllimport)
#endif
#else
#define BIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bic_graph bic_graph;
typedef struct bic_result bic_result;
typedef struct bic_instance bic_instance;
typedef struct bic_threshold_dist bic_threshold_dist;

typedef enum bic_status {
    BIC_OK = 0,
    BIC_ERR_INVALID_ARGUMENT = 1,
    BIC_ERR_CAPACITY = 2,
    BIC_ERR_INFEASIBLE = 3,
    BIC_ERR_PARSE = 4,
    BIC_ERR_IO = 5,
    BIC_ERR_BUFFER_TOO_SMALL = 6,
    BIC_ERR_INTERNAL = 99
} bic_status;

typedef enum bic_functional {
    BIC_FUNC_ESCAPE_WEIGHT = 0,
    BIC_FUNC_ISOLATED_COUNT = 1,
    BIC_FUNC_SUSCEPTIBILITY = 2,
    BIC_FUNC_SUM_SQ_SIZES = 3,
    BIC_FUNC_SUM_SQ_EDGES = 4
} bic_functional;

typedef enum bic_phase_winner { BIC_PHASE_KDD = 0, BIC_PHASE_KDN = 1, BIC_PHASE_TIE = 2 } bic_phase_winner;

typedef struct bic_options {
    size_t exact_edge_limit; /* per connected component; default 24 */
    unsigned threads;        /* 0 = hardware concurrency */
} bic_options;

typedef struct bic_estimate {
    double mean;
    double std_error;
    uint64_t samples; /* 0 when exact */
    int exact;
} bic_estimate;

typedef struct bic_conjecture_report {
    int kdd_feasible;
    int kdd_optimal;
    int kdn_optimal;
    int kdn_two_feasible;
    int kdn_two_optimal;
} bic_conjecture_report;

BIC_API const char* bic_version(void);
BIC_API const char* bic_last_error(void);
BIC_API const char* bic_status_name(bic_status status);
BIC_API void bic_options_init(bic_options* opts);

/* ---- graphs ---- */

/* `pairs` holds n_edges (l, r) pairs flattened as l0, r0, l1, r1, ... */
BIC_API bic_status bic_graph_create(size_t n_left, size_t n_right, const uint32_t* pairs, size_t n_edges, bic_graph** out);
/* "matching:n", "star:k", "kdd:n:d", "kdn:n:d" */
BIC_API bic_status bic_graph_from_spec(const char* spec, bic_graph** out);
BIC_API bic_status bic_graph_parse(const char* text, bic_graph** out);
BIC_API bic_status bic_graph_read_file(const char* path, bic_graph** out);
BIC_API bic_status bic_graph_write_file(const bic_graph* g, const char* path);
BIC_API bic_status bic_graph_format(const bic_graph* g, char* buf, size_t cap, size_t* needed);
BIC_API void bic_graph_free(bic_graph* g);

BIC_API size_t bic_graph_n_left(const bic_graph* g);
BIC_API size_t bic_graph_n_right(const bic_graph* g);
BIC_API size_t bic_graph_edge_count(const bic_graph* g);
BIC_API bic_status bic_graph_edge(const bic_graph* g, size_t index, uint32_t* l, uint32_t* r);
BIC_API bic_status bic_graph_validate(const bic_graph* g, size_t d, int* ok);
BIC_API bic_status bic_graph_isomorphic(const bic_graph* a, const bic_graph* b, int* same);
BIC_API bic_status bic_graph_canonical(const bic_graph* g, bic_graph** out);
/* Comma-separated names among matching, star, kdd, kdn; empty when none apply. */
BIC_API bic_status bic_graph_classify(const bic_graph* g, char* buf, size_t cap, size_t* needed);
BIC_API bic_status bic_graph_isolated_left(const bic_graph* g, size_t* count);
/* Component sizes and edge counts (arrays of `cap` entries, may be NULL when cap is 0). */
BIC_API bic_status bic_graph_components(const bic_graph* g, size_t* sizes, size_t* edge_counts, size_t cap, size_t* count,
                                        size_t* isolated);

/* ---- percolation and infection ---- */

BIC_API bic_status bic_exact_expectation(const bic_graph* g, double p, bic_functional f, double mu, const bic_options* opts,
                                         double* out);
BIC_API bic_status bic_mc_expectation(const bic_graph* g, double p, bic_functional f, double mu, uint64_t samples, uint64_t seed,
                                      const bic_options* opts, bic_estimate* out);
BIC_API bic_status bic_infected_fraction_exact(const bic_graph* g, double mu, double p, const bic_options* opts, double* out);
BIC_API bic_status bic_infected_fraction_mc(const bic_graph* g, double mu, double p, uint64_t samples, uint64_t seed,
                                            const bic_options* opts, bic_estimate* out);
/* Writes one flag per vertex (left vertices first) into `infected`, which must hold n_left + n_right entries. */
BIC_API bic_status bic_cascade_sample(const bic_graph* g, double mu, double p, uint64_t seed, uint8_t* infected, size_t cap);

BIC_API bic_status bic_l_prob(size_t j, double mu, double p, double* out);
BIC_API bic_status bic_r_prob(size_t j, double mu, double p, double* out);
BIC_API bic_status bic_star_expected_fraction(size_t k, double mu, double p, double* out);
BIC_API bic_status bic_star_limit(double mu, double p, double* out);
BIC_API bic_status bic_delta_diagnostics(size_t k, double mu, double p, double* d, double* delta1, double* delta2);
BIC_API bic_status bic_kdd_exact(size_t d, double mu, double p, const bic_options* opts, double* out);
BIC_API bic_status bic_kdn_limit(size_t d, double mu, double p, double* out);

/* ---- threshold model ---- */

/* Literal like "0:.6,1:.001,3:.399"; optional "inf:x" residual, otherwise 1 - sum. */
BIC_API bic_status bic_threshold_parse(const char* literal, bic_threshold_dist** out);
BIC_API bic_status bic_threshold_create(const double* probs, size_t count, double residual, bic_threshold_dist** out);
BIC_API bic_status bic_threshold_from_cascade(double mu, double p, size_t cutoff, bic_threshold_dist** out);
BIC_API void bic_threshold_free(bic_threshold_dist* dist);
BIC_API bic_status bic_threshold_fraction_mc(const bic_graph* g, const bic_threshold_dist* dist, uint64_t samples, uint64_t seed,
                                             const bic_options* opts, bic_estimate* out);
BIC_API bic_status bic_star_threshold_exact(size_t j, const bic_threshold_dist* dist, double* out);

/* ---- extremal search and phase diagrams ---- */

BIC_API bic_status bic_search_half_regular(size_t n, size_t d, double mu, double p, const bic_options* opts, bic_result** out);
BIC_API bic_status bic_conjecture(size_t n, size_t d, double mu, double p, const bic_options* opts, bic_conjecture_report* report,
                                  bic_result** search);
BIC_API double bic_result_value(const bic_result* r);
BIC_API size_t bic_result_evaluated(const bic_result* r);
BIC_API size_t bic_result_minimizer_count(const bic_result* r);
/* Returns a new handle the caller frees. */
BIC_API bic_status bic_result_minimizer(const bic_result* r, size_t index, bic_graph** out);
BIC_API void bic_result_free(bic_result* r);

/* finite_n = 0 compares K_{d,d} against the large-n K_{d,n} limit. */
BIC_API bic_status bic_phase_cell(size_t d, double mu, double p, double tie_tol, size_t finite_n, const bic_options* opts,
                                  bic_phase_winner* winner, double* delta);
/* Smallest mu where K_{d,n} (limit) is no longer worse; *found = 0 if none. */
BIC_API bic_status bic_phase_boundary(size_t d, double p, const bic_options* opts, double* mu_star, int* found);

/* ---- subnetworks and reductions ---- */

BIC_API bic_status bic_instance_create(const bic_graph* g, size_t d, bic_instance** out);
/* Graph file with optional "# d=" and "# certificate=" comments. */
BIC_API bic_status bic_instance_read_file(const char* path, size_t default_d, bic_instance** out);
BIC_API bic_status bic_instance_format(const bic_instance* inst, char* buf, size_t cap, size_t* needed);
BIC_API bic_status bic_instance_graph(const bic_instance* inst, bic_graph** out);
BIC_API size_t bic_instance_d(const bic_instance* inst);
BIC_API void bic_instance_set_d(bic_instance* inst, size_t d);
/* Returns 1 and writes *out when a certificate is present, else 0. */
BIC_API int bic_instance_certificate(const bic_instance* inst, size_t* out);
BIC_API int bic_instance_feasible(const bic_instance* inst);
BIC_API void bic_instance_free(bic_instance* inst);

BIC_API bic_status bic_subnet_exact(const bic_instance* inst, double mu, double p, const bic_options* opts, bic_result** out);
BIC_API bic_status bic_subnet_local(const bic_instance* inst, double mu, double p, size_t iterations, uint64_t seed,
                                    size_t mc_samples, const bic_options* opts, bic_result** out);
BIC_API bic_status bic_subnet_greedy(const bic_instance* inst, bic_graph** out);

/* Exact-cover file: "|U| k" then one set per line. */
BIC_API bic_status bic_reduce_exact_cover_file(const char* path, bic_instance** out);
/* Simple graph file: "n_vertices" then one "u v" pair per line. */
BIC_API bic_status bic_reduce_clique_file(const char* path, size_t d, bic_instance** out);
BIC_API bic_status bic_kdd_decomposition_exists(const bic_graph* g, size_t d, int* exists);

#ifdef __cplusplus
}
#endif

#endif /* BICASCADE_H */
