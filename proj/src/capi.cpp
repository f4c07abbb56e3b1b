#include "fpp.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpp/experiments.hpp"
#include "fpp/graph.hpp"
#include "fpp/laws.hpp"
#include "fpp/limit_samplers.hpp"
#include "fpp/pools.hpp"
#include "fpp/rng.hpp"
#include "fpp/spt.hpp"
#include "fpp/stats.hpp"

struct fpp_rng {
    fpp::RngStream impl;
};
struct fpp_weight_law {
    fpp::WeightLaw impl;
};
struct fpp_degree_law {
    fpp::DegreeLaw impl;
};
struct fpp_graph {
    fpp::WeightedMultiGraph impl;
};
struct fpp_tree {
    fpp::ShortestPathTree impl;
};
struct fpp_pool {
    fpp::SamplePool impl;
};

namespace {

thread_local std::string g_last_error;

fpp_status fail(fpp_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <class Fn>
fpp_status guarded(Fn&& fn) {
    try {
        fn();
        return FPP_OK;
    } catch (const fpp::ConfigError& e) {
        return fail(FPP_ERROR_INVALID, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(FPP_ERROR_INVALID, e.what());
    } catch (const std::domain_error& e) {
        return fail(FPP_ERROR_DOMAIN, e.what());
    } catch (const std::length_error& e) {
        return fail(FPP_ERROR_LIMIT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(FPP_ERROR_LIMIT, "out of memory");
    } catch (const std::exception& e) {
        return fail(FPP_ERROR_RUNTIME, e.what());
    } catch (...) {
        return fail(FPP_ERROR_INTERNAL, "unknown failure");
    }
}

fpp_status need(bool ok, const char* what) {
    return ok ? FPP_OK : fail(FPP_ERROR_INVALID, what);
}

fpp::DegreeDistribution dist_of(const int64_t* a, int64_t n) {
    std::vector<std::int64_t> v(a, a + n);
    return fpp::DegreeDistribution::from_samples(v);
}

fpp::DegreeDistribution geometric_dist(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("geometric parameter must be in (0,1)");
    std::vector<std::pair<std::int64_t, double>> pmf;
    double q = 1.0;
    std::int64_t k = 1;
    while (q > 1e-14 && k < 400) {
        pmf.emplace_back(k, q * p);
        q *= 1.0 - p;
        ++k;
    }
    pmf.emplace_back(k, q);
    return fpp::DegreeDistribution::from_pmf(pmf);
}

template <class Sampler>
void drain_sampler(Sampler& s, fpp::RngStream& rng, int64_t n, int64_t* degrees,
                   double* scores) {
    for (int64_t i = 0; i < n; ++i) {
        const fpp::HatDraw h = s.draw(rng);
        degrees[i] = h.degree;
        if (scores) scores[i] = h.score_max;
    }
}

}  // namespace

extern "C" {

const char* fpp_version(void) { return fpp::kVersion; }
const char* fpp_last_error(void) { return g_last_error.c_str(); }

/* --- rng ---------------------------------------------------------------- */

fpp_status fpp_rng_create(uint64_t seed, uint64_t stream_id, fpp_rng** out) {
    if (auto st = need(out != nullptr, "out is null")) return st;
    return guarded([&] { *out = new fpp_rng{fpp::RngStream(seed, stream_id)}; });
}

void fpp_rng_destroy(fpp_rng* rng) { delete rng; }

fpp_status fpp_rng_uniform(fpp_rng* rng, double* out) {
    if (auto st = need(rng && out, "null argument")) return st;
    return guarded([&] { *out = rng->impl.u01(); });
}

fpp_status fpp_rng_exponential(fpp_rng* rng, double* out) {
    if (auto st = need(rng && out, "null argument")) return st;
    return guarded([&] { *out = rng->impl.exponential(); });
}

fpp_status fpp_rng_gumbel(fpp_rng* rng, double* out) {
    if (auto st = need(rng && out, "null argument")) return st;
    return guarded([&] { *out = rng->impl.gumbel(); });
}

fpp_status fpp_ppp_prefix(double s, int64_t count, fpp_rng* rng, double* out) {
    if (auto st = need(rng && out, "null argument")) return st;
    return guarded([&] {
        const auto pts = fpp::sample_ppp_prefix(s, count, rng->impl);
        std::memcpy(out, pts.data(), pts.size() * sizeof(double));
    });
}

/* --- laws ----------------------------------------------------------------- */

fpp_status fpp_weight_law_parse(const char* spec, fpp_weight_law** out) {
    if (auto st = need(spec && out, "null argument")) return st;
    return guarded([&] { *out = new fpp_weight_law{fpp::WeightLaw::parse(spec)}; });
}

void fpp_weight_law_destroy(fpp_weight_law* law) { delete law; }

fpp_status fpp_weight_law_sample(const fpp_weight_law* law, fpp_rng* rng,
                                 int64_t n, double* out) {
    if (auto st = need(law && rng && out && n >= 0, "null or negative argument"))
        return st;
    return guarded([&] {
        for (int64_t i = 0; i < n; ++i) out[i] = law->impl.sample(rng->impl);
    });
}

fpp_status fpp_weight_law_laplace(const fpp_weight_law* law, double lambda,
                                  double* out) {
    if (auto st = need(law && out, "null argument")) return st;
    return guarded([&] { *out = law->impl.laplace(lambda); });
}

fpp_status fpp_degree_law_parse(const char* spec, fpp_degree_law** out) {
    if (auto st = need(spec && out, "null argument")) return st;
    return guarded([&] { *out = new fpp_degree_law{fpp::DegreeLaw::parse(spec)}; });
}

void fpp_degree_law_destroy(fpp_degree_law* law) { delete law; }

fpp_status fpp_degree_law_sample(const fpp_degree_law* law, fpp_rng* rng,
                                 int64_t n, int64_t* out) {
    if (auto st = need(law && rng && out && n >= 0, "null or negative argument"))
        return st;
    return guarded([&] {
        for (int64_t i = 0; i < n; ++i) out[i] = law->impl.sample(rng->impl);
    });
}

fpp_status fpp_degree_law_pmf(const fpp_degree_law* law, int64_t k, double* out) {
    if (auto st = need(law && out, "null argument")) return st;
    return guarded([&] { *out = law->impl.pmf(k); });
}

fpp_status fpp_degree_law_mean(const fpp_degree_law* law, double* out) {
    if (auto st = need(law && out, "null argument")) return st;
    return guarded([&] { *out = law->impl.mean(); });
}

fpp_status fpp_degree_law_nu(const fpp_degree_law* law, double* out) {
    if (auto st = need(law && out, "null argument")) return st;
    return guarded([&] { *out = law->impl.nu(); });
}

fpp_status fpp_degree_law_size_biased(const fpp_degree_law* law,
                                      fpp_degree_law** out) {
    if (auto st = need(law && out, "null argument")) return st;
    return guarded([&] { *out = new fpp_degree_law{fpp::size_biased(law->impl)}; });
}

fpp_status fpp_degree_law_infinite_mean(const fpp_degree_law* law, int* out) {
    if (auto st = need(law && out, "null argument")) return st;
    return guarded([&] { *out = law->impl.infinite_mean() ? 1 : 0; });
}

fpp_status fpp_degree_law_truncation_mass(const fpp_degree_law* law,
                                          double* out) {
    if (auto st = need(law && out, "null argument")) return st;
    return guarded([&] { *out = law->impl.truncation_mass(); });
}

/* --- graphs ----------------------------------------------------------------- */

fpp_status fpp_graph_configuration_model(const fpp_degree_law* law, int64_t n,
                                         fpp_rng* rng, fpp_graph** out) {
    if (auto st = need(law && rng && out, "null argument")) return st;
    return guarded([&] {
        const fpp::DegreeSequence seq =
            fpp::draw_degree_sequence(law->impl, n, rng->impl);
        *out = new fpp_graph{
            fpp::WeightedMultiGraph::configuration_model(seq, rng->impl)};
    });
}

fpp_status fpp_graph_complete(int64_t n, double s, fpp_rng* rng,
                              int64_t dense_cap, fpp_graph** out) {
    if (auto st = need(rng && out, "null argument")) return st;
    return guarded([&] {
        const int64_t cap =
            dense_cap > 0 ? dense_cap : fpp::WeightedMultiGraph::kDefaultDenseCap;
        *out = new fpp_graph{fpp::WeightedMultiGraph::complete(n, s, rng->impl, cap)};
    });
}

fpp_status fpp_graph_attach_weights(fpp_graph* g, const fpp_weight_law* law,
                                    fpp_rng* rng) {
    if (auto st = need(g && law && rng, "null argument")) return st;
    return guarded([&] { g->impl.attach_weights(law->impl, rng->impl); });
}

fpp_status fpp_graph_read(const char* path, fpp_graph** out) {
    if (auto st = need(path && out, "null argument")) return st;
    return guarded(
        [&] { *out = new fpp_graph{fpp::WeightedMultiGraph::read_edge_list(path)}; });
}

fpp_status fpp_graph_write(const fpp_graph* g, const char* path) {
    if (auto st = need(g && path, "null argument")) return st;
    return guarded([&] { g->impl.write_edge_list(path); });
}

void fpp_graph_destroy(fpp_graph* g) { delete g; }

fpp_status fpp_graph_order(const fpp_graph* g, int64_t* n, int64_t* m) {
    if (auto st = need(g && n && m, "null argument")) return st;
    *n = g->impl.vertex_count();
    *m = g->impl.edge_count();
    return FPP_OK;
}

fpp_status fpp_graph_degree(const fpp_graph* g, int64_t v, int64_t* out) {
    if (auto st = need(g && out, "null argument")) return st;
    if (auto st = need(v >= 0 && v < g->impl.vertex_count(), "vertex out of range"))
        return st;
    *out = g->impl.degree(v);
    return FPP_OK;
}

fpp_status fpp_graph_flags(const fpp_graph* g, int* has_self_loops,
                           int* has_multi_edges) {
    if (auto st = need(g != nullptr, "null graph")) return st;
    if (has_self_loops) *has_self_loops = g->impl.has_self_loops() ? 1 : 0;
    if (has_multi_edges) *has_multi_edges = g->impl.has_multi_edges() ? 1 : 0;
    return FPP_OK;
}

fpp_status fpp_graph_write_degrees(const fpp_graph* g, const char* path) {
    if (auto st = need(g && path, "null argument")) return st;
    return guarded([&] {
        fpp::DegreeSequence seq;
        seq.degrees.reserve(g->impl.vertex_count());
        for (int64_t v = 0; v < g->impl.vertex_count(); ++v)
            seq.degrees.push_back(g->impl.degree(v));
        seq.write(path);
    });
}

/* --- trees ----------------------------------------------------------------- */

fpp_status fpp_tree_shortest_paths(const fpp_graph* g, int64_t source,
                                   fpp_tree** out) {
    if (auto st = need(g && out, "null argument")) return st;
    return guarded(
        [&] { *out = new fpp_tree{fpp::shortest_path_tree(g->impl, source)}; });
}

fpp_status fpp_tree_bfst(const fpp_graph* g, int64_t source, fpp_rng* rng,
                         fpp_tree** out) {
    if (auto st = need(g && rng && out, "null argument")) return st;
    return guarded([&] { *out = new fpp_tree{fpp::bfst(g->impl, source, rng->impl)}; });
}

void fpp_tree_destroy(fpp_tree* t) { delete t; }

fpp_status fpp_tree_reached(const fpp_tree* t, int64_t* out) {
    if (auto st = need(t && out, "null argument")) return st;
    *out = t->impl.reached;
    return FPP_OK;
}

fpp_status fpp_tree_mean_degree(const fpp_tree* t, double* out) {
    if (auto st = need(t && out, "null argument")) return st;
    *out = fpp::mean_tree_degree(t->impl);
    return FPP_OK;
}

fpp_status fpp_tree_degrees(const fpp_tree* t, int32_t* out) {
    if (auto st = need(t && out, "null argument")) return st;
    std::memcpy(out, t->impl.tree_degree.data(),
                t->impl.tree_degree.size() * sizeof(int32_t));
    return FPP_OK;
}

fpp_status fpp_tree_dist(const fpp_tree* t, double* out) {
    if (auto st = need(t && out, "null argument")) return st;
    std::memcpy(out, t->impl.dist.data(), t->impl.dist.size() * sizeof(double));
    return FPP_OK;
}

fpp_status fpp_tree_write(const fpp_tree* t, const char* path) {
    if (auto st = need(t && path, "null argument")) return st;
    return guarded([&] { t->impl.write_table(path); });
}

fpp_status fpp_excision_degree(const fpp_graph* g, int64_t source,
                               int64_t target, int64_t* degree, int* skipped) {
    if (auto st = need(g && degree, "null argument")) return st;
    return guarded([&] {
        const fpp::ExcisionDegree r =
            fpp::degree_via_excision(g->impl, source, target);
        *degree = r.degree;
        if (skipped) *skipped = r.skipped ? 1 : 0;
    });
}

/* --- pools ----------------------------------------------------------------- */

namespace {

fpp::PoolOptions pool_options(int64_t size, int64_t max_sweeps) {
    fpp::PoolOptions opt;
    if (size > 0) opt.size = size;
    if (max_sweeps > 0) opt.max_sweeps = max_sweeps;
    return opt;
}

}  // namespace

fpp_status fpp_pool_w_cm(const fpp_degree_law* law, const fpp_weight_law* w,
                         int64_t size, int64_t max_sweeps, fpp_rng* rng,
                         fpp_pool** out) {
    if (auto st = need(law && w && rng && out, "null argument")) return st;
    return guarded([&] {
        const double lambda = fpp::solve_malthusian(law->impl.nu(), w->impl);
        *out = new fpp_pool{fpp::solve_w_cm(law->impl, w->impl, lambda,
                                            pool_options(size, max_sweeps),
                                            rng->impl)};
    });
}

fpp_status fpp_pool_w_complete(double s, int64_t size, int64_t max_sweeps,
                               fpp_rng* rng, fpp_pool** out) {
    if (auto st = need(rng && out, "null argument")) return st;
    return guarded([&] {
        *out = new fpp_pool{
            fpp::solve_w_complete(s, pool_options(size, max_sweeps), rng->impl)};
    });
}

fpp_status fpp_pool_v_minrec(const fpp_degree_law* law, int64_t size,
                             int64_t max_sweeps, fpp_rng* rng, fpp_pool** out) {
    if (auto st = need(law && rng && out, "null argument")) return st;
    return guarded([&] {
        *out = new fpp_pool{fpp::solve_v_minrec(
            law->impl, pool_options(size, max_sweeps), rng->impl)};
    });
}

fpp_status fpp_pool_v_series(const fpp_degree_law* law, int64_t size,
                             double tail_epsilon, fpp_rng* rng, fpp_pool** out) {
    if (auto st = need(law && rng && out, "null argument")) return st;
    return guarded([&] {
        *out = new fpp_pool{fpp::solve_v_series(
            law->impl, size > 0 ? size : 100'000, rng->impl,
            tail_epsilon > 0 ? tail_epsilon : 1e-6)};
    });
}

fpp_status fpp_pool_save(const fpp_pool* pool, const char* path) {
    if (auto st = need(pool && path, "null argument")) return st;
    return guarded([&] { pool->impl.save(path); });
}

fpp_status fpp_pool_load(const char* path, fpp_pool** out) {
    if (auto st = need(path && out, "null argument")) return st;
    return guarded([&] { *out = new fpp_pool{fpp::SamplePool::load(path)}; });
}

void fpp_pool_destroy(fpp_pool* pool) { delete pool; }

fpp_status fpp_pool_stats(const fpp_pool* pool, int64_t* size, double* mean,
                          int64_t* sweeps, double* last_sweep_ks) {
    if (auto st = need(pool != nullptr, "null pool")) return st;
    if (size) *size = static_cast<int64_t>(pool->impl.samples.size());
    if (mean) *mean = pool->impl.mean();
    if (sweeps) *sweeps = pool->impl.sweeps;
    if (last_sweep_ks) *last_sweep_ks = pool->impl.last_sweep_ks;
    return FPP_OK;
}

fpp_status fpp_pool_lambda(const fpp_pool* pool, double* out) {
    if (auto st = need(pool && out, "null argument")) return st;
    *out = pool->impl.lambda;
    return FPP_OK;
}

fpp_status fpp_pool_laplace(const fpp_pool* pool, double u, double* out) {
    if (auto st = need(pool && out, "null argument")) return st;
    return guarded([&] { *out = pool->impl.laplace(u); });
}

/* --- limit parameters -------------------------------------------------------- */

fpp_status fpp_lambda_s(double s, double* out) {
    if (auto st = need(out != nullptr, "null out")) return st;
    return guarded([&] { *out = fpp::lambda_s(s); });
}

fpp_status fpp_malthusian(double nu, const fpp_weight_law* w, double* out) {
    if (auto st = need(w && out, "null argument")) return st;
    return guarded([&] { *out = fpp::solve_malthusian(nu, w->impl); });
}

/* --- samplers ------------------------------------------------------------------ */

fpp_status fpp_sample_hatd_complete(double s, const fpp_pool* w_pool,
                                    double margin, fpp_rng* rng, int64_t n,
                                    int64_t* degrees, double* scores) {
    if (auto st = need(w_pool && rng && degrees && n >= 0, "null argument"))
        return st;
    return guarded([&] {
        fpp::WPoolView view(w_pool->impl);
        fpp::CompleteSampler sampler(s, view, margin > 0 ? margin : 30.0);
        drain_sampler(sampler, rng->impl, n, degrees, scores);
    });
}

fpp_status fpp_sample_hatd_cm(const fpp_degree_law* law, const fpp_pool* w_pool,
                              double lambda, const fpp_weight_law* w,
                              fpp_rng* rng, int64_t n, int64_t* degrees,
                              double* scores) {
    if (auto st = need(law && w_pool && w && rng && degrees, "null argument"))
        return st;
    return guarded([&] {
        fpp::WPoolView view(w_pool->impl);
        fpp::CmFiniteSampler sampler(law->impl, view, lambda, w->impl);
        drain_sampler(sampler, rng->impl, n, degrees, scores);
    });
}

fpp_status fpp_sample_hatd_cm_k(int64_t k, const fpp_pool* w_pool, double lambda,
                                const fpp_weight_law* w, fpp_rng* rng, int64_t n,
                                int64_t* degrees, double* scores) {
    if (auto st = need(w_pool && w && rng && degrees, "null argument")) return st;
    return guarded([&] {
        fpp::WPoolView view(w_pool->impl);
        const fpp::DegreeLaw dummy = fpp::DegreeLaw::fixed(std::max<int64_t>(k, 1));
        fpp::CmFiniteSampler sampler(dummy, view, lambda, w->impl);
        for (int64_t i = 0; i < n; ++i) {
            const fpp::HatDraw h = sampler.draw_k(k, rng->impl);
            degrees[i] = h.degree;
            if (scores) scores[i] = h.score_max;
        }
    });
}

fpp_status fpp_sample_hatd_cm_infinite(const fpp_degree_law* law,
                                       const fpp_pool* v_pool, fpp_rng* rng,
                                       int64_t n, int64_t* degrees,
                                       double* scores) {
    if (auto st = need(law && v_pool && rng && degrees, "null argument")) return st;
    return guarded([&] {
        fpp::CmInfiniteSampler sampler(law->impl, v_pool->impl);
        drain_sampler(sampler, rng->impl, n, degrees, scores);
    });
}

fpp_status fpp_sample_hatd_cm_infinite_k(int64_t k, const fpp_pool* v_pool,
                                         fpp_rng* rng, int64_t n,
                                         int64_t* degrees, double* scores) {
    if (auto st = need(v_pool && rng && degrees, "null argument")) return st;
    return guarded([&] {
        const fpp::DegreeLaw dummy = fpp::DegreeLaw::fixed(std::max<int64_t>(k, 1));
        fpp::CmInfiniteSampler sampler(dummy, v_pool->impl);
        for (int64_t i = 0; i < n; ++i) {
            const fpp::HatDraw h = sampler.draw_k(k, rng->impl);
            degrees[i] = h.degree;
            if (scores) scores[i] = h.score_max;
        }
    });
}

/* --- exact laws ------------------------------------------------------------------- */

fpp_status fpp_bfst_limit_pmf(int64_t r, double* out) {
    if (auto st = need(out != nullptr, "null out")) return st;
    return guarded([&] {
        const auto pmf = fpp::bfst_limit_pmf(r);
        std::memcpy(out, pmf.data(), pmf.size() * sizeof(double));
    });
}

fpp_status fpp_gf_hatd_unit_weight(const fpp_degree_law* law, double z,
                                   double* out) {
    if (auto st = need(law && out, "null argument")) return st;
    return guarded([&] { *out = fpp::gf_hatd_unit_weight(law->impl, z); });
}

/* --- analysis ---------------------------------------------------------------------- */

fpp_status fpp_tv_from_samples(const int64_t* a, int64_t na, const int64_t* b,
                               int64_t nb, double* out) {
    if (auto st = need(a && b && out && na > 0 && nb > 0, "empty input")) return st;
    return guarded([&] { *out = fpp::tv_distance(dist_of(a, na), dist_of(b, nb)); });
}

fpp_status fpp_tv_vs_geometric(const int64_t* a, int64_t na, double p,
                               double* out) {
    if (auto st = need(a && out && na > 0, "empty input")) return st;
    return guarded([&] { *out = fpp::tv_distance(dist_of(a, na), geometric_dist(p)); });
}

fpp_status fpp_ks_two_sample(const double* a, int64_t na, const double* b,
                             int64_t nb, double* out) {
    if (auto st = need(a && b && out && na > 0 && nb > 0, "empty input")) return st;
    return guarded([&] {
        *out = fpp::ks_statistic(std::vector<double>(a, a + na),
                                 std::vector<double>(b, b + nb));
    });
}

fpp_status fpp_tail_exponent(const int64_t* degrees, int64_t n, int64_t k_min,
                             int64_t k_max, double* tau_hat, double* stderr_out,
                             double* curvature) {
    if (auto st = need(degrees && tau_hat && n > 0, "empty input")) return st;
    return guarded([&] {
        const fpp::TailFit fit =
            fpp::estimate_tail_exponent(dist_of(degrees, n), k_min, k_max);
        *tau_hat = fit.tau_hat;
        if (stderr_out) *stderr_out = fit.stderr_slope;
        if (curvature) *curvature = fit.curvature;
    });
}

fpp_status fpp_hill_exponent(const int64_t* degrees, int64_t n, int64_t k_min,
                             double* tau_hat, double* stderr_out) {
    if (auto st = need(degrees && tau_hat && n > 0, "empty input")) return st;
    return guarded([&] {
        const fpp::TailFit fit =
            fpp::hill_tail_exponent(dist_of(degrees, n), k_min);
        *tau_hat = fit.tau_hat;
        if (stderr_out) *stderr_out = fit.stderr_slope;
    });
}

fpp_status fpp_rate_fit(const double* ks, const double* deficits, int64_t n,
                        double* alpha, double* alpha_stderr,
                        int* log_model_wins) {
    if (auto st = need(ks && deficits && alpha && n > 0, "empty input")) return st;
    return guarded([&] {
        const fpp::RateFit fit = fpp::rate_of_convergence_fit(
            std::vector<double>(ks, ks + n),
            std::vector<double>(deficits, deficits + n));
        *alpha = fit.alpha;
        if (alpha_stderr) *alpha_stderr = fit.alpha_stderr;
        if (log_model_wins) *log_model_wins = fit.log_model_wins ? 1 : 0;
    });
}

/* --- experiments -------------------------------------------------------------------- */

namespace {

fpp_status run_config(fpp::ExperimentConfig cfg, const char* const* overrides,
                      int64_t n_overrides) {
    return guarded([&] {
        for (int64_t i = 0; i < n_overrides; ++i) {
            const std::string kv = overrides[i] ? overrides[i] : "";
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw fpp::ConfigError("override '" + kv + "' is not key=value");
            cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
        }
        fpp::run_experiment(cfg);
    });
}

}  // namespace

fpp_status fpp_run_experiment_file(const char* config_path,
                                   const char* const* overrides,
                                   int64_t n_overrides) {
    if (auto st = need(config_path != nullptr, "null config path")) return st;
    fpp::ExperimentConfig cfg;
    if (auto st = guarded(
            [&] { cfg = fpp::ExperimentConfig::from_file(config_path); }))
        return st;
    return run_config(std::move(cfg), overrides, n_overrides);
}

fpp_status fpp_run_experiment_text(const char* config_text,
                                   const char* const* overrides,
                                   int64_t n_overrides) {
    if (auto st = need(config_text != nullptr, "null config text")) return st;
    fpp::ExperimentConfig cfg;
    if (auto st = guarded(
            [&] { cfg = fpp::ExperimentConfig::from_text(config_text); }))
        return st;
    return run_config(std::move(cfg), overrides, n_overrides);
}

}  // extern "C"
