// Command-line driver over the shared-library C interface (fpp.h): graph and
// tree generation, fixed-point pools, limit-law samplers, analysis helpers,
// and the declarative experiment runner. Exit codes: 0 ok, 2 usage/config
// error, 3 resource cap exceeded, 1 anything else.
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fpp.h"

namespace {

int exit_code_for(fpp_status st) {
    switch (st) {
        case FPP_OK: return 0;
        case FPP_ERROR_INVALID:
        case FPP_ERROR_DOMAIN: return 2;
        case FPP_ERROR_LIMIT: return 3;
        default: return 1;
    }
}

[[noreturn]] void die(fpp_status st) {
    std::fprintf(stderr, "fpp: error: %s\n", fpp_last_error());
    std::exit(exit_code_for(st));
}

void check(fpp_status st) {
    if (st != FPP_OK) die(st);
}

template <class T, void (*Destroy)(T*)>
struct Handle {
    T* ptr = nullptr;
    ~Handle() {
        if (ptr) Destroy(ptr);
    }
    T** out() { return &ptr; }
    T* get() const { return ptr; }
};

using RngH = Handle<fpp_rng, fpp_rng_destroy>;
using GraphH = Handle<fpp_graph, fpp_graph_destroy>;
using TreeH = Handle<fpp_tree, fpp_tree_destroy>;
using PoolH = Handle<fpp_pool, fpp_pool_destroy>;
using DegreeLawH = Handle<fpp_degree_law, fpp_degree_law_destroy>;
using WeightLawH = Handle<fpp_weight_law, fpp_weight_law_destroy>;

void write_int_samples(const std::string& path, const std::vector<int64_t>& xs,
                       uint64_t seed) {
    std::ofstream out(path);
    if (!out) {
        std::fprintf(stderr, "fpp: cannot open '%s'\n", path.c_str());
        std::exit(1);
    }
    out << "# fpp " << fpp_version() << " samples seed=" << seed << "\n";
    for (auto x : xs) out << x << "\n";
}

void write_real_samples(const std::string& path, const std::vector<double>& xs,
                        uint64_t seed) {
    std::ofstream out(path);
    if (!out) {
        std::fprintf(stderr, "fpp: cannot open '%s'\n", path.c_str());
        std::exit(1);
    }
    char buf[40];
    out << "# fpp " << fpp_version() << " samples seed=" << seed << "\n";
    for (auto x : xs) {
        std::snprintf(buf, sizeof buf, "%.17g\n", x);
        out << buf;
    }
}

void write_pmf_csv(const std::string& path, const std::vector<int64_t>& xs,
                   uint64_t seed) {
    std::map<int64_t, int64_t> counts;
    for (auto x : xs) ++counts[x];
    std::ofstream out(path);
    if (!out) {
        std::fprintf(stderr, "fpp: cannot open '%s'\n", path.c_str());
        std::exit(1);
    }
    out << "# fpp " << fpp_version() << " seed=" << seed << "\n";
    out << "k,p_k,q_k\n";
    const double n = static_cast<double>(xs.size());
    double q = 1.0;
    char buf[80];
    for (const auto& [k, c] : counts) {
        const double p = static_cast<double>(c) / n;
        std::snprintf(buf, sizeof buf, "%" PRId64 ",%.17g,%.17g\n", k, p, q);
        out << buf;
        q -= p;
    }
}

std::vector<double> read_real_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::fprintf(stderr, "fpp: cannot open '%s'\n", path.c_str());
        std::exit(1);
    }
    std::vector<double> xs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        xs.push_back(std::stod(line));
    }
    return xs;
}

std::vector<int64_t> read_int_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::fprintf(stderr, "fpp: cannot open '%s'\n", path.c_str());
        std::exit(1);
    }
    std::vector<int64_t> xs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        xs.push_back(std::stoll(line));
    }
    return xs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"first-passage percolation toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fpp_version()));

    uint64_t seed = 1, stream = 0;
    app.add_option("--seed", seed, "base seed")->capture_default_str();
    app.add_option("--stream", stream, "stream id")->capture_default_str();

    // ---- generate -------------------------------------------------------
    auto* gen = app.add_subcommand("generate", "build a random weighted graph");
    std::string g_model = "cm", g_degree = "fixed:3", g_weights = "exponential";
    std::string g_out = "graph.edges", g_degrees_out;
    int64_t g_n = 1000, g_cap = 0, g_dmin = 1;
    double g_s = 1.0, g_tau = 0.0;
    bool g_cm = false, g_complete = false;
    gen->add_option("--model", g_model, "cm | complete")->capture_default_str();
    gen->add_flag("--cm", g_cm, "shorthand for --model cm");
    gen->add_flag("--complete", g_complete, "shorthand for --model complete");
    gen->add_option("--degree", g_degree, "fixed:r | powerlaw:tau:dmin[:kmax] | file:path");
    gen->add_option("--powerlaw", g_tau, "power-law exponent (pairs with --dmin)");
    gen->add_option("--dmin", g_dmin, "power-law minimum degree");
    gen->add_option("-n,--n", g_n, "vertex count")->capture_default_str();
    gen->add_option("--weights", g_weights, "exponential | powexp:s | uniform | constant");
    gen->add_option("--s", g_s, "disorder power for --model complete");
    gen->add_option("--dense-cap", g_cap, "vertex cap for dense storage");
    gen->add_option("--out", g_out, "edge list output")->capture_default_str();
    gen->add_option("--degrees-out", g_degrees_out, "write realized degrees");

    // ---- spt / bfst -----------------------------------------------------
    auto* spt = app.add_subcommand("spt", "single-source shortest path tree");
    auto* bfs = app.add_subcommand("bfst", "breadth-first tree, random tie-breaks");
    std::string t_graph, t_out = "tree.tsv", t_degrees_csv, t_degrees_csv_all;
    std::string t_source_spec = "random";
    int64_t t_verify = 0;
    for (auto* cmd : {spt, bfs}) {
        cmd->add_option("--graph", t_graph, "edge list file")->required();
        cmd->add_option("--source", t_source_spec,
                        "source vertex id, or 'random'")->capture_default_str();
        cmd->add_option("--out", t_out, "tree table output")->capture_default_str();
        cmd->add_option("--degrees-csv", t_degrees_csv,
                        "tree-degree pmf over reached vertices");
        cmd->add_option("--degrees-csv-all", t_degrees_csv_all,
                        "tree-degree pmf over all vertices (unreached as 0)");
    }
    spt->add_option("--verify-excision", t_verify,
                    "check this many random targets against the excision route");

    // ---- pool -----------------------------------------------------------
    auto* pool_cmd = app.add_subcommand("pool", "build a fixed-point sample pool");
    std::string p_target = "w-complete", p_degree, p_weights = "exponential";
    std::string p_out = "pool.txt";
    int64_t p_size = 100000, p_sweeps = 200;
    double p_s = 1.0, p_tail = 1e-6;
    pool_cmd->add_option("--target", p_target,
                         "w-complete | w-cm | v-minrec | v-series")
        ->capture_default_str();
    pool_cmd->add_option("--degree", p_degree, "degree law (w-cm, v-*)");
    pool_cmd->add_option("--weights", p_weights, "weight law (w-cm)");
    pool_cmd->add_option("--s", p_s, "disorder power (w-complete)");
    pool_cmd->add_option("--size", p_size, "pool size")->capture_default_str();
    pool_cmd->add_option("--sweeps", p_sweeps, "max refresh sweeps");
    pool_cmd->add_option("--tail-eps", p_tail, "series tail target (v-series)");
    pool_cmd->add_option("--out", p_out, "pool file")->capture_default_str();

    // ---- sample ---------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "draw from the limit-law samplers");
    bool s_hatd_complete = false, s_hatd_cm = false, s_hatdk_cm = false;
    bool s_hatd_inf = false, s_hatdk_inf = false, s_hatd_y1 = false;
    bool s_m_complete = false, s_gumbel = false, s_degree_draws = false;
    std::string s_pool, s_degree = "fixed:4", s_weights = "exponential";
    std::string s_out = "samples.txt", s_pmf_out, s_scores_out;
    int64_t s_n = 1000000, s_k = 0, s_pool_size = 100000;
    double s_s = 1.0, s_margin = 30.0;
    sample->add_flag("--hatd-complete", s_hatd_complete, "weak-disorder limit degree");
    sample->add_flag("--hatd-cm", s_hatd_cm, "finite-variance limit degree");
    sample->add_flag("--hatdk-cm", s_hatdk_cm, "finite-variance, conditioned on k");
    sample->add_flag("--hatd-cm-inf", s_hatd_inf, "infinite-variance limit degree");
    sample->add_flag("--hatdk-cm-inf", s_hatdk_inf, "infinite-variance, conditioned");
    sample->add_flag("--hatd-y1", s_hatd_y1, "unit-weight (breadth-first) limit");
    sample->add_flag("--m-complete", s_m_complete, "extremal score M draws");
    sample->add_flag("--gumbel", s_gumbel, "standard Gumbel draws");
    sample->add_flag("--degree-draws", s_degree_draws, "draws from a degree law");
    sample->add_option("--pool", s_pool, "pool file (built on the fly if absent)");
    sample->add_option("--pool-size", s_pool_size, "size for on-the-fly pools");
    sample->add_option("--degree", s_degree, "degree law");
    sample->add_option("--weights", s_weights, "weight law");
    sample->add_option("--s", s_s, "disorder power");
    sample->add_option("--k", s_k, "conditioning degree");
    sample->add_option("--margin", s_margin, "stopping margin (complete)");
    sample->add_option("-n,--n", s_n, "number of draws")->capture_default_str();
    sample->add_option("--out", s_out, "samples output")->capture_default_str();
    sample->add_option("--pmf-out", s_pmf_out, "empirical pmf csv");
    sample->add_option("--scores-out", s_scores_out, "extremal scores output");

    // ---- analyze ---------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "distances and tail fits");
    bool a_tv = false, a_ks = false, a_tail = false, a_hill = false;
    std::string a_samples, a_against, a_a, a_b, a_csv_out;
    int64_t a_kmin = 0, a_kmax = 0;
    analyze->add_flag("--tv", a_tv, "total variation vs --against");
    analyze->add_flag("--ks", a_ks, "two-sample KS between --a and --b");
    analyze->add_flag("--tail", a_tail, "ccdf-regression tail exponent");
    analyze->add_flag("--hill", a_hill, "Hill tail exponent");
    analyze->add_option("--samples", a_samples, "integer sample file");
    analyze->add_option("--against", a_against, "geometric:p | samples:path");
    analyze->add_option("--a", a_a, "real sample file");
    analyze->add_option("--b", a_b, "real sample file");
    analyze->add_option("--kmin", a_kmin, "tail fit window start");
    analyze->add_option("--kmax", a_kmax, "tail fit window end");
    analyze->add_option("--csv-out", a_csv_out, "append stats as csv");

    // ---- run --------------------------------------------------------------
    auto* run = app.add_subcommand("run", "run a declarative experiment");
    std::string r_config;
    std::vector<std::string> r_sets;
    std::string r_out, r_threads, r_seed;
    run->add_option("--config", r_config, "key=value config file")->required();
    run->add_option("--set", r_sets, "override key=value (repeatable)");
    run->add_option("--out", r_out, "output directory override");
    run->add_option("--threads", r_threads, "worker threads override");
    run->add_option("--seed-override", r_seed, "seed override");

    CLI11_PARSE(app, argc, argv);

    RngH rng;
    check(fpp_rng_create(seed, stream, rng.out()));

    if (*gen) {
        if (g_cm) g_model = "cm";
        if (g_complete) g_model = "complete";
        if (g_tau > 0.0) {
            std::ostringstream os;
            os << "powerlaw:" << g_tau << ":" << g_dmin;
            g_degree = os.str();
        }
        GraphH g;
        if (g_model == "cm") {
            DegreeLawH law;
            check(fpp_degree_law_parse(g_degree.c_str(), law.out()));
            check(fpp_graph_configuration_model(law.get(), g_n, rng.get(), g.out()));
            WeightLawH w;
            check(fpp_weight_law_parse(g_weights.c_str(), w.out()));
            check(fpp_graph_attach_weights(g.get(), w.get(), rng.get()));
        } else if (g_model == "complete") {
            check(fpp_graph_complete(g_n, g_s, rng.get(), g_cap, g.out()));
        } else {
            std::fprintf(stderr, "fpp: unknown model '%s'\n", g_model.c_str());
            return 2;
        }
        check(fpp_graph_write(g.get(), g_out.c_str()));
        if (!g_degrees_out.empty())
            check(fpp_graph_write_degrees(g.get(), g_degrees_out.c_str()));
        int64_t n = 0, m = 0;
        check(fpp_graph_order(g.get(), &n, &m));
        std::printf("wrote %s: n=%" PRId64 " m=%" PRId64 "\n", g_out.c_str(), n, m);
        return 0;
    }

    if (*spt || *bfs) {
        GraphH g;
        check(fpp_graph_read(t_graph.c_str(), g.out()));
        int64_t n = 0, m = 0;
        check(fpp_graph_order(g.get(), &n, &m));
        int64_t t_source;
        if (t_source_spec == "random") {
            double u = 0;
            check(fpp_rng_uniform(rng.get(), &u));
            t_source = static_cast<int64_t>(u * static_cast<double>(n));
        } else {
            try {
                t_source = std::stoll(t_source_spec);
            } catch (const std::exception&) {
                std::fprintf(stderr, "fpp: bad --source '%s'\n",
                             t_source_spec.c_str());
                return 2;
            }
        }
        TreeH t;
        if (*spt)
            check(fpp_tree_shortest_paths(g.get(), t_source, t.out()));
        else
            check(fpp_tree_bfst(g.get(), t_source, rng.get(), t.out()));
        check(fpp_tree_write(t.get(), t_out.c_str()));

        std::vector<int32_t> deg(n);
        check(fpp_tree_degrees(t.get(), deg.data()));
        int64_t reached = 0;
        check(fpp_tree_reached(t.get(), &reached));
        double mean_deg = 0;
        check(fpp_tree_mean_degree(t.get(), &mean_deg));
        std::printf("source=%" PRId64 " reached=%" PRId64 " mean_tree_degree=%.6f\n",
                    t_source, reached, mean_deg);

        std::vector<double> dist(n);
        check(fpp_tree_dist(t.get(), dist.data()));
        if (!t_degrees_csv.empty()) {
            std::vector<int64_t> cond;
            for (int64_t v = 0; v < n; ++v)
                if (std::isfinite(dist[v])) cond.push_back(deg[v]);
            write_pmf_csv(t_degrees_csv, cond, seed);
        }
        if (!t_degrees_csv_all.empty()) {
            std::vector<int64_t> all(deg.begin(), deg.end());
            write_pmf_csv(t_degrees_csv_all, all, seed);
        }
        if (*spt && t_verify > 0) {
            int64_t mismatches = 0, checked = 0;
            for (int64_t i = 0; checked < t_verify && i < 100 * t_verify; ++i) {
                double u = 0;
                check(fpp_rng_uniform(rng.get(), &u));
                const int64_t target = static_cast<int64_t>(u * static_cast<double>(n));
                if (target == t_source) continue;
                int64_t d = 0;
                int skipped = 0;
                check(fpp_excision_degree(g.get(), t_source, target, &d, &skipped));
                if (skipped) continue;
                ++checked;
                if (d != deg[target]) ++mismatches;
            }
            std::printf("excision check: %" PRId64 " targets, %" PRId64 " mismatches\n",
                        checked, mismatches);
            if (mismatches > 0) return 1;
        }
        return 0;
    }

    if (*pool_cmd) {
        PoolH pool;
        if (p_target == "w-complete") {
            check(fpp_pool_w_complete(p_s, p_size, p_sweeps, rng.get(), pool.out()));
        } else if (p_target == "w-cm") {
            if (p_degree.empty()) {
                std::fprintf(stderr, "fpp: pool --target w-cm needs --degree\n");
                return 2;
            }
            DegreeLawH law;
            check(fpp_degree_law_parse(p_degree.c_str(), law.out()));
            WeightLawH w;
            check(fpp_weight_law_parse(p_weights.c_str(), w.out()));
            check(fpp_pool_w_cm(law.get(), w.get(), p_size, p_sweeps, rng.get(),
                                pool.out()));
        } else if (p_target == "v-minrec" || p_target == "v-series") {
            if (p_degree.empty()) {
                std::fprintf(stderr, "fpp: pool --target v-* needs --degree\n");
                return 2;
            }
            DegreeLawH law;
            check(fpp_degree_law_parse(p_degree.c_str(), law.out()));
            if (p_target == "v-minrec")
                check(fpp_pool_v_minrec(law.get(), p_size, p_sweeps, rng.get(),
                                        pool.out()));
            else
                check(fpp_pool_v_series(law.get(), p_size, p_tail, rng.get(),
                                        pool.out()));
        } else {
            std::fprintf(stderr, "fpp: unknown pool target '%s'\n", p_target.c_str());
            return 2;
        }
        check(fpp_pool_save(pool.get(), p_out.c_str()));
        int64_t size = 0, sweeps = 0;
        double mean = 0, ks = 0;
        check(fpp_pool_stats(pool.get(), &size, &mean, &sweeps, &ks));
        std::printf("wrote %s: size=%" PRId64 " mean=%.6f sweeps=%" PRId64
                    " last_sweep_ks=%.5f\n",
                    p_out.c_str(), size, mean, sweeps, ks);
        return 0;
    }

    if (*sample) {
        const int kinds = s_hatd_complete + s_hatd_cm + s_hatdk_cm + s_hatd_inf +
                          s_hatdk_inf + s_hatd_y1 + s_m_complete + s_gumbel +
                          s_degree_draws;
        if (kinds != 1) {
            std::fprintf(stderr, "fpp: sample needs exactly one sampler flag\n");
            return 2;
        }
        std::vector<int64_t> degrees;
        std::vector<double> scores, reals;

        auto load_or_build_w_complete = [&](PoolH& pool) {
            if (!s_pool.empty())
                check(fpp_pool_load(s_pool.c_str(), pool.out()));
            else {
                RngH prng;
                check(fpp_rng_create(seed, stream + 500, prng.out()));
                check(fpp_pool_w_complete(s_s, s_pool_size, 0, prng.get(), pool.out()));
            }
        };

        if (s_gumbel) {
            reals.resize(s_n);
            for (auto& x : reals) check(fpp_rng_gumbel(rng.get(), &x));
        } else if (s_degree_draws) {
            DegreeLawH law;
            check(fpp_degree_law_parse(s_degree.c_str(), law.out()));
            degrees.resize(s_n);
            check(fpp_degree_law_sample(law.get(), rng.get(), s_n, degrees.data()));
        } else if (s_hatd_complete || s_m_complete) {
            PoolH pool;
            load_or_build_w_complete(pool);
            degrees.resize(s_n);
            scores.resize(s_n);
            check(fpp_sample_hatd_complete(s_s, pool.get(), s_margin, rng.get(),
                                           s_n, degrees.data(), scores.data()));
            if (s_m_complete) {
                reals = scores;
                degrees.clear();
            }
        } else if (s_hatd_cm || s_hatdk_cm || s_hatd_y1) {
            DegreeLawH law;
            check(fpp_degree_law_parse(s_degree.c_str(), law.out()));
            if (s_hatd_y1) s_weights = "constant";
            WeightLawH w;
            check(fpp_weight_law_parse(s_weights.c_str(), w.out()));
            PoolH pool;
            if (!s_pool.empty())
                check(fpp_pool_load(s_pool.c_str(), pool.out()));
            else {
                RngH prng;
                check(fpp_rng_create(seed, stream + 500, prng.out()));
                check(fpp_pool_w_cm(law.get(), w.get(), s_pool_size, 0, prng.get(),
                                    pool.out()));
            }
            double lambda = 0;
            check(fpp_pool_lambda(pool.get(), &lambda));
            if (lambda <= 0) {
                double nu = 0;
                check(fpp_degree_law_nu(law.get(), &nu));
                check(fpp_malthusian(nu, w.get(), &lambda));
            }
            degrees.resize(s_n);
            scores.resize(s_n);
            if (s_hatdk_cm) {
                if (s_k < 1) {
                    std::fprintf(stderr, "fpp: --hatdk-cm needs --k >= 1\n");
                    return 2;
                }
                check(fpp_sample_hatd_cm_k(s_k, pool.get(), lambda, w.get(),
                                           rng.get(), s_n, degrees.data(),
                                           scores.data()));
            } else {
                check(fpp_sample_hatd_cm(law.get(), pool.get(), lambda, w.get(),
                                         rng.get(), s_n, degrees.data(),
                                         scores.data()));
            }
        } else {  // infinite-variance kinds
            DegreeLawH law;
            check(fpp_degree_law_parse(s_degree.c_str(), law.out()));
            PoolH pool;
            if (!s_pool.empty())
                check(fpp_pool_load(s_pool.c_str(), pool.out()));
            else {
                RngH prng;
                check(fpp_rng_create(seed, stream + 500, prng.out()));
                check(fpp_pool_v_minrec(law.get(), s_pool_size, 0, prng.get(),
                                        pool.out()));
            }
            degrees.resize(s_n);
            scores.resize(s_n);
            if (s_hatdk_inf) {
                if (s_k < 1) {
                    std::fprintf(stderr, "fpp: --hatdk-cm-inf needs --k >= 1\n");
                    return 2;
                }
                check(fpp_sample_hatd_cm_infinite_k(s_k, pool.get(), rng.get(), s_n,
                                                    degrees.data(), scores.data()));
            } else {
                check(fpp_sample_hatd_cm_infinite(law.get(), pool.get(), rng.get(),
                                                  s_n, degrees.data(),
                                                  scores.data()));
            }
        }

        if (!degrees.empty()) {
            write_int_samples(s_out, degrees, seed);
            if (!s_pmf_out.empty()) write_pmf_csv(s_pmf_out, degrees, seed);
            double mean = 0;
            for (auto d : degrees) mean += static_cast<double>(d);
            mean /= static_cast<double>(degrees.size());
            std::printf("wrote %s: n=%zu mean=%.6f\n", s_out.c_str(),
                        degrees.size(), mean);
        } else {
            write_real_samples(s_out, reals, seed);
            std::printf("wrote %s: n=%zu\n", s_out.c_str(), reals.size());
        }
        if (!s_scores_out.empty() && !scores.empty())
            write_real_samples(s_scores_out, scores, seed);
        return 0;
    }

    if (*analyze) {
        std::vector<std::string> csv_rows;
        auto emit = [&](const std::string& name, double v) {
            std::printf("%s = %.10g\n", name.c_str(), v);
            char buf[128];
            std::snprintf(buf, sizeof buf, "analyze,%llu,%s,%.17g,0",
                          static_cast<unsigned long long>(seed), name.c_str(), v);
            csv_rows.push_back(buf);
        };
        if (a_tv) {
            if (a_samples.empty() || a_against.empty()) {
                std::fprintf(stderr, "fpp: --tv needs --samples and --against\n");
                return 2;
            }
            const auto xs = read_int_samples(a_samples);
            double tv = 0;
            if (a_against.rfind("geometric:", 0) == 0) {
                const double p = std::stod(a_against.substr(10));
                check(fpp_tv_vs_geometric(xs.data(), xs.size(), p, &tv));
            } else if (a_against.rfind("samples:", 0) == 0) {
                const auto ys = read_int_samples(a_against.substr(8));
                check(fpp_tv_from_samples(xs.data(), xs.size(), ys.data(),
                                          ys.size(), &tv));
            } else {
                std::fprintf(stderr, "fpp: bad --against '%s'\n", a_against.c_str());
                return 2;
            }
            emit("tv", tv);
        }
        if (a_ks) {
            if (a_a.empty() || a_b.empty()) {
                std::fprintf(stderr, "fpp: --ks needs --a and --b\n");
                return 2;
            }
            const auto xs = read_real_samples(a_a);
            const auto ys = read_real_samples(a_b);
            double ks = 0;
            check(fpp_ks_two_sample(xs.data(), xs.size(), ys.data(), ys.size(), &ks));
            emit("ks", ks);
        }
        if (a_tail || a_hill) {
            if (a_samples.empty()) {
                std::fprintf(stderr, "fpp: tail fits need --samples\n");
                return 2;
            }
            const auto xs = read_int_samples(a_samples);
            if (a_tail) {
                double tau = 0, se = 0, curv = 0;
                check(fpp_tail_exponent(xs.data(), xs.size(), a_kmin, a_kmax, &tau,
                                        &se, &curv));
                emit("tau_ccdf", tau);
                emit("tau_ccdf_stderr", se);
                emit("curvature", curv);
            }
            if (a_hill) {
                double tau = 0, se = 0;
                check(fpp_hill_exponent(xs.data(), xs.size(), a_kmin, &tau, &se));
                emit("tau_hill", tau);
                emit("tau_hill_stderr", se);
            }
        }
        if (!a_csv_out.empty()) {
            std::ofstream out(a_csv_out, std::ios::app);
            if (!out.tellp()) out << "experiment,seed,statistic,value,stderr\n";
            for (const auto& r : csv_rows) out << r << "\n";
        }
        return 0;
    }

    if (*run) {
        std::vector<std::string> sets = r_sets;
        if (!r_out.empty()) sets.push_back("out=" + r_out);
        if (!r_threads.empty()) sets.push_back("threads=" + r_threads);
        if (!r_seed.empty()) sets.push_back("seed=" + r_seed);
        std::vector<const char*> ptrs;
        for (const auto& s2 : sets) ptrs.push_back(s2.c_str());
        const fpp_status st = fpp_run_experiment_file(
            r_config.c_str(), ptrs.empty() ? nullptr : ptrs.data(),
            static_cast<int64_t>(ptrs.size()));
        if (st != FPP_OK) die(st);
        std::printf("experiment finished\n");
        return 0;
    }

    return 2;
}
