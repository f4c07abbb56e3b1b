/* C interface to the first-passage-percolation toolkit: opaque handles and
 * status codes over the C++ core. Every function returns FPP_OK on success;
 * on failure fpp_last_error() carries a thread-local message. Handles are
 * destroyed with their matching *_destroy call. */
#ifndef FPP_H
#define FPP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fpp_status {
    FPP_OK = 0,
    FPP_ERROR_INVALID = 1, /* bad argument or violated precondition */
    FPP_ERROR_DOMAIN = 2,  /* quantity undefined in this regime */
    FPP_ERROR_LIMIT = 3,   /* resource budget exceeded */
    FPP_ERROR_RUNTIME = 4, /* io, parse, convergence or diagnostic failure */
    FPP_ERROR_INTERNAL = 5
} fpp_status;

const char* fpp_version(void);
const char* fpp_last_error(void);

typedef struct fpp_rng fpp_rng;
typedef struct fpp_weight_law fpp_weight_law;
typedef struct fpp_degree_law fpp_degree_law;
typedef struct fpp_graph fpp_graph;
typedef struct fpp_tree fpp_tree;
typedef struct fpp_pool fpp_pool;

/* --- reproducible streams ------------------------------------------- */
fpp_status fpp_rng_create(uint64_t seed, uint64_t stream_id, fpp_rng** out);
void fpp_rng_destroy(fpp_rng* rng);
fpp_status fpp_rng_uniform(fpp_rng* rng, double* out);
fpp_status fpp_rng_exponential(fpp_rng* rng, double* out);
fpp_status fpp_rng_gumbel(fpp_rng* rng, double* out);
/* ordered points (E_1+...+E_i)^s, i = 1..count */
fpp_status fpp_ppp_prefix(double s, int64_t count, fpp_rng* rng, double* out);

/* --- laws ------------------------------------------------------------ */
/* weight specs: "exponential" | "powexp:<s>" | "uniform" | "constant" */
fpp_status fpp_weight_law_parse(const char* spec, fpp_weight_law** out);
void fpp_weight_law_destroy(fpp_weight_law* law);
fpp_status fpp_weight_law_sample(const fpp_weight_law* law, fpp_rng* rng,
                                 int64_t n, double* out);
fpp_status fpp_weight_law_laplace(const fpp_weight_law* law, double lambda,
                                  double* out);

/* degree specs: "fixed:<r>" | "powerlaw:<tau>:<dmin>[:<kmax>]" | "file:<path>" */
fpp_status fpp_degree_law_parse(const char* spec, fpp_degree_law** out);
void fpp_degree_law_destroy(fpp_degree_law* law);
fpp_status fpp_degree_law_sample(const fpp_degree_law* law, fpp_rng* rng,
                                 int64_t n, int64_t* out);
fpp_status fpp_degree_law_pmf(const fpp_degree_law* law, int64_t k, double* out);
fpp_status fpp_degree_law_mean(const fpp_degree_law* law, double* out);
/* nu = E[D(D-1)]/E[D]; +inf when the moment diverges */
fpp_status fpp_degree_law_nu(const fpp_degree_law* law, double* out);
fpp_status fpp_degree_law_size_biased(const fpp_degree_law* law,
                                      fpp_degree_law** out);
fpp_status fpp_degree_law_infinite_mean(const fpp_degree_law* law, int* out);
/* probability mass folded into k_max by the power-law truncation */
fpp_status fpp_degree_law_truncation_mass(const fpp_degree_law* law, double* out);

/* --- graphs ----------------------------------------------------------- */
/* configuration model on n i.i.d. degrees (parity-fixed); weights all 1
 * until fpp_graph_attach_weights */
fpp_status fpp_graph_configuration_model(const fpp_degree_law* law, int64_t n,
                                         fpp_rng* rng, fpp_graph** out);
/* complete graph with i.i.d. E^s weights; dense_cap <= 0 uses the default */
fpp_status fpp_graph_complete(int64_t n, double s, fpp_rng* rng,
                              int64_t dense_cap, fpp_graph** out);
fpp_status fpp_graph_attach_weights(fpp_graph* g, const fpp_weight_law* law,
                                    fpp_rng* rng);
fpp_status fpp_graph_read(const char* path, fpp_graph** out);
fpp_status fpp_graph_write(const fpp_graph* g, const char* path);
void fpp_graph_destroy(fpp_graph* g);
fpp_status fpp_graph_order(const fpp_graph* g, int64_t* n, int64_t* m);
fpp_status fpp_graph_degree(const fpp_graph* g, int64_t v, int64_t* out);
fpp_status fpp_graph_flags(const fpp_graph* g, int* has_self_loops,
                           int* has_multi_edges);
/* one degree per line */
fpp_status fpp_graph_write_degrees(const fpp_graph* g, const char* path);

/* --- trees ------------------------------------------------------------ */
fpp_status fpp_tree_shortest_paths(const fpp_graph* g, int64_t source,
                                   fpp_tree** out);
/* hop-count tree with uniformly random tie-breaking */
fpp_status fpp_tree_bfst(const fpp_graph* g, int64_t source, fpp_rng* rng,
                         fpp_tree** out);
void fpp_tree_destroy(fpp_tree* t);
fpp_status fpp_tree_reached(const fpp_tree* t, int64_t* out);
fpp_status fpp_tree_mean_degree(const fpp_tree* t, double* out);
/* caller provides an array of n entries */
fpp_status fpp_tree_degrees(const fpp_tree* t, int32_t* out);
fpp_status fpp_tree_dist(const fpp_tree* t, double* out);
/* "v parent dist hops tree_degree" rows */
fpp_status fpp_tree_write(const fpp_tree* t, const char* path);
/* degree of target from source-to-neighbor distances with target excised;
 * *skipped is set when the excision cut all neighbors off */
fpp_status fpp_excision_degree(const fpp_graph* g, int64_t source,
                               int64_t target, int64_t* degree, int* skipped);

/* --- fixed-point pools ------------------------------------------------ */
fpp_status fpp_pool_w_cm(const fpp_degree_law* law, const fpp_weight_law* w,
                         int64_t size, int64_t max_sweeps, fpp_rng* rng,
                         fpp_pool** out);
fpp_status fpp_pool_w_complete(double s, int64_t size, int64_t max_sweeps,
                               fpp_rng* rng, fpp_pool** out);
fpp_status fpp_pool_v_minrec(const fpp_degree_law* law, int64_t size,
                             int64_t max_sweeps, fpp_rng* rng, fpp_pool** out);
fpp_status fpp_pool_v_series(const fpp_degree_law* law, int64_t size,
                             double tail_epsilon, fpp_rng* rng, fpp_pool** out);
fpp_status fpp_pool_save(const fpp_pool* pool, const char* path);
fpp_status fpp_pool_load(const char* path, fpp_pool** out);
void fpp_pool_destroy(fpp_pool* pool);
fpp_status fpp_pool_stats(const fpp_pool* pool, int64_t* size, double* mean,
                          int64_t* sweeps, double* last_sweep_ks);
fpp_status fpp_pool_lambda(const fpp_pool* pool, double* out);
fpp_status fpp_pool_laplace(const fpp_pool* pool, double u, double* out);

/* --- limit parameters -------------------------------------------------- */
fpp_status fpp_lambda_s(double s, double* out);
fpp_status fpp_malthusian(double nu, const fpp_weight_law* w, double* out);

/* --- limiting degree samplers ------------------------------------------ */
/* n draws each; degrees must hold n entries, scores may be NULL (otherwise
 * receives the deciding extremal score per draw) */
fpp_status fpp_sample_hatd_complete(double s, const fpp_pool* w_pool,
                                    double margin, fpp_rng* rng, int64_t n,
                                    int64_t* degrees, double* scores);
fpp_status fpp_sample_hatd_cm(const fpp_degree_law* law, const fpp_pool* w_pool,
                              double lambda, const fpp_weight_law* w,
                              fpp_rng* rng, int64_t n, int64_t* degrees,
                              double* scores);
fpp_status fpp_sample_hatd_cm_k(int64_t k, const fpp_pool* w_pool, double lambda,
                                const fpp_weight_law* w, fpp_rng* rng, int64_t n,
                                int64_t* degrees, double* scores);
fpp_status fpp_sample_hatd_cm_infinite(const fpp_degree_law* law,
                                       const fpp_pool* v_pool, fpp_rng* rng,
                                       int64_t n, int64_t* degrees,
                                       double* scores);
fpp_status fpp_sample_hatd_cm_infinite_k(int64_t k, const fpp_pool* v_pool,
                                         fpp_rng* rng, int64_t n,
                                         int64_t* degrees, double* scores);

/* --- exact limit laws ---------------------------------------------------- */
/* unit-weight tree limit pmf on the r-regular graph; out holds r entries */
fpp_status fpp_bfst_limit_pmf(int64_t r, double* out);
fpp_status fpp_gf_hatd_unit_weight(const fpp_degree_law* law, double z,
                                   double* out);

/* --- analysis ------------------------------------------------------------ */
fpp_status fpp_tv_from_samples(const int64_t* a, int64_t na, const int64_t* b,
                               int64_t nb, double* out);
/* against Geometric(p) on {1,2,...} */
fpp_status fpp_tv_vs_geometric(const int64_t* a, int64_t na, double p,
                               double* out);
fpp_status fpp_ks_two_sample(const double* a, int64_t na, const double* b,
                             int64_t nb, double* out);
fpp_status fpp_tail_exponent(const int64_t* degrees, int64_t n, int64_t k_min,
                             int64_t k_max, double* tau_hat, double* stderr_out,
                             double* curvature);
fpp_status fpp_hill_exponent(const int64_t* degrees, int64_t n, int64_t k_min,
                             double* tau_hat, double* stderr_out);
fpp_status fpp_rate_fit(const double* ks, const double* deficits, int64_t n,
                        double* alpha, double* alpha_stderr,
                        int* log_model_wins);

/* --- experiment driver ----------------------------------------------------
 * config: key=value lines; overrides are "key=value" strings applied last.
 * Artifacts are written under the config's out directory. */
fpp_status fpp_run_experiment_file(const char* config_path,
                                   const char* const* overrides,
                                   int64_t n_overrides);
fpp_status fpp_run_experiment_text(const char* config_text,
                                   const char* const* overrides,
                                   int64_t n_overrides);

#ifdef __cplusplus
}
#endif

#endif /* FPP_H */
