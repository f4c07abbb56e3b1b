#include "fpp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "fpp/graph.hpp"
#include "fpp/laws.hpp"
#include "fpp/limit_samplers.hpp"
#include "fpp/parallel.hpp"
#include "fpp/pools.hpp"
#include "fpp/spt.hpp"
#include "fpp/stats.hpp"

namespace fpp {

namespace {


std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str(), path);
}

ExperimentConfig ExperimentConfig::from_text(const std::string& text,
                                             const std::string& origin) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') continue;  // section
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": empty key");
        cfg.kv_[key] = value;
    }
    return cfg;
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
    kv_[trim(key)] = trim(value);
}

std::string ExperimentConfig::get(const std::string& key,
                                  const std::string& fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

std::string ExperimentConfig::require(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("missing config key '" + key + "'");
    return it->second;
}

std::int64_t ExperimentConfig::get_int(const std::string& key,
                                       std::int64_t fallback) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    try {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected integer, got '" +
                          it->second + "'");
    }
}

double ExperimentConfig::get_real(const std::string& key, double fallback) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected real, got '" +
                          it->second + "'");
    }
}

std::vector<double> ExperimentConfig::get_reals(const std::string& key,
                                                const std::string& fallback) const {
    std::istringstream is(get(key, fallback));
    std::vector<double> out;
    std::string tok;
    while (std::getline(is, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ConfigError("config key '" + key + "': bad real '" + tok + "'");
        }
    }
    if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
    return out;
}

std::vector<std::int64_t> ExperimentConfig::get_ints(
    const std::string& key, const std::string& fallback) const {
    std::vector<std::int64_t> out;
    for (double x : get_reals(key, fallback))
        out.push_back(static_cast<std::int64_t>(x));
    return out;
}

std::uint64_t ExperimentConfig::seed() const {
    return static_cast<std::uint64_t>(get_int("seed", 1));
}

std::string ExperimentConfig::resolved_text() const {
    // out and threads place the execution but do not define the experiment;
    // leaving them out keeps artifacts byte-identical across directories and
    // worker counts
    std::ostringstream os;
    for (const auto& [k, v] : kv_)
        if (k != "out" && k != "threads") os << k << " = " << v << "\n";
    return os.str();
}

std::uint64_t ExperimentConfig::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : resolved_text()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

// ---------------------------------------------------------------------
// shared run machinery

struct Ctx {
    explicit Ctx(const ExperimentConfig& c) : cfg(c), seed(c.seed()) {
        out = c.out_dir();
        std::filesystem::create_directories(out);
        char hex[32];
        std::snprintf(hex, sizeof hex, "%016llx",
                      static_cast<unsigned long long>(cfg.hash()));
        header.push_back(std::string("version=") + kVersion);
        header.push_back(std::string("config_hash=") + hex);
        header.push_back("seed=" + std::to_string(seed));
        std::istringstream lines(cfg.resolved_text());
        std::string line;
        while (std::getline(lines, line)) header.push_back("cfg " + line);
    }

    void stat(const std::string& name, double v, double se = 0.0) {
        stats.push_back({cfg.experiment(), seed, name, v, se});
    }
    std::string path(const std::string& f) const { return out + "/" + f; }
    void finish() const { write_stats_csv(path("stats.csv"), header, stats); }

    const ExperimentConfig& cfg;
    std::uint64_t seed;
    std::string out;
    std::vector<std::string> header;
    std::vector<StatRow> stats;
};

struct TreeDegreeCounts {
    std::map<std::int64_t, std::int64_t> cond, uncond;
    std::int64_t n_cond = 0, n_uncond = 0;

    void add(const ShortestPathTree& t) {
        for (std::size_t v = 0; v < t.tree_degree.size(); ++v) {
            ++uncond[t.tree_degree[v]];
            ++n_uncond;
            if (t.is_reached(static_cast<std::int64_t>(v))) {
                ++cond[t.tree_degree[v]];
                ++n_cond;
            }
        }
    }
    void merge(const TreeDegreeCounts& o) {
        for (const auto& [k, c] : o.cond) cond[k] += c;
        for (const auto& [k, c] : o.uncond) uncond[k] += c;
        n_cond += o.n_cond;
        n_uncond += o.n_uncond;
    }
};

DegreeDistribution to_dist(const std::map<std::int64_t, std::int64_t>& counts,
                           std::int64_t total) {
    std::vector<std::pair<std::int64_t, double>> pmf;
    pmf.reserve(counts.size());
    for (const auto& [k, c] : counts)
        pmf.emplace_back(k, static_cast<double>(c) / static_cast<double>(total));
    return DegreeDistribution::from_pmf(pmf, total);
}

DegreeDistribution degree_dist_of_graph(const WeightedMultiGraph& g) {
    std::map<std::int64_t, std::int64_t> counts;
    for (std::int64_t v = 0; v < g.vertex_count(); ++v) ++counts[g.degree(v)];
    return to_dist(counts, g.vertex_count());
}

// Geometric(p) on {1,2,...}, tail mass folded into the last table entry.
DegreeDistribution geometric_pmf(double p) {
    std::vector<std::pair<std::int64_t, double>> pmf;
    double q = 1.0;
    std::int64_t k = 1;
    while (q > 1e-14 && k < 200) {
        pmf.emplace_back(k, q * p);
        q *= 1.0 - p;
        ++k;
    }
    pmf.emplace_back(k, q);
    return DegreeDistribution::from_pmf(pmf);
}

DegreeDistribution pmf_from_values(const std::vector<double>& a_k) {
    std::vector<std::pair<std::int64_t, double>> pmf;
    for (std::size_t i = 0; i < a_k.size(); ++i)
        pmf.emplace_back(static_cast<std::int64_t>(i) + 1, a_k[i]);
    return DegreeDistribution::from_pmf(pmf);
}

// replicated single-source trees on a shared graph, merged by index
TreeDegreeCounts pooled_tree_degrees(const WeightedMultiGraph& g,
                                     std::int64_t replications, bool use_bfst,
                                     std::uint64_t seed, int threads) {
    std::vector<TreeDegreeCounts> slots(replications);
    parallel_for(replications, threads, [&](std::int64_t r) {
        RngStream rng(seed, 10 + static_cast<std::uint64_t>(r));
        const std::int64_t source = rng.index(g.vertex_count());
        const ShortestPathTree t =
            use_bfst ? bfst(g, source, rng) : shortest_path_tree(g, source);
        slots[r].add(t);
    });
    TreeDegreeCounts total;
    for (const auto& s : slots) total.merge(s);
    return total;
}

WeightedMultiGraph build_cm(const ExperimentConfig& cfg, const DegreeLaw& law,
                            std::int64_t n, std::uint64_t seed) {
    RngStream seq_rng(seed, 1), pair_rng(seed, 2), w_rng(seed, 3);
    const DegreeSequence seq = draw_degree_sequence(law, n, seq_rng);
    WeightedMultiGraph g = WeightedMultiGraph::configuration_model(seq, pair_rng);
    g.attach_weights(WeightLaw::parse(cfg.get("weights", "exponential")), w_rng);
    return g;
}

void write_samples(const std::string& path,
                   const std::vector<std::string>& header,
                   const std::vector<double>& xs) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    for (const auto& h : header) std::fprintf(f, "# %s\n", h.c_str());
    for (double x : xs) std::fprintf(f, "%.17g\n", x);
    if (std::fclose(f) != 0)
        throw std::runtime_error("write failed for '" + path + "'");
}

// ---------------------------------------------------------------------
// experiments

void run_fig1_powerlaw(Ctx& ctx) {
    const std::int64_t n = ctx.cfg.get_int("n", 100'000);
    const double tau = ctx.cfg.get_real("tau", 3.5);
    const std::int64_t dmin = ctx.cfg.get_int("dmin", 5);
    const std::int64_t kmax = ctx.cfg.get_int("kmax", DegreeLaw::kDefaultKmax);
    const std::int64_t reps = ctx.cfg.get_int("replications", 4);
    const DegreeLaw law = DegreeLaw::powerlaw(tau, dmin, kmax);

    const WeightedMultiGraph g = build_cm(ctx.cfg, law, n, ctx.seed);
    const DegreeDistribution truth = degree_dist_of_graph(g);
    const TreeDegreeCounts counts =
        pooled_tree_degrees(g, reps, false, ctx.seed, ctx.cfg.threads());
    const DegreeDistribution tree = to_dist(counts.cond, counts.n_cond);
    const DegreeDistribution tree_uncond = to_dist(counts.uncond, counts.n_uncond);

    truth.write_csv(ctx.path("truth.csv"), ctx.header);
    tree.write_csv(ctx.path("tree.csv"), ctx.header);
    tree_uncond.write_csv(ctx.path("tree-unconditioned.csv"), ctx.header);

    const TailFit ft = estimate_tail_exponent(truth);
    const TailFit fb = estimate_tail_exponent(tree, ft.k_min, ft.k_max);
    const TailFit ht = hill_tail_exponent(truth, ft.k_min);
    const TailFit hb = hill_tail_exponent(tree, ft.k_min);
    ctx.stat("tau_graph_ccdf", ft.tau_hat, ft.stderr_slope);
    ctx.stat("tau_tree_ccdf", fb.tau_hat, fb.stderr_slope);
    ctx.stat("tau_gap_ccdf", std::fabs(ft.tau_hat - fb.tau_hat));
    ctx.stat("tau_graph_hill", ht.tau_hat, ht.stderr_slope);
    ctx.stat("tau_tree_hill", hb.tau_hat, hb.stderr_slope);
    ctx.stat("curvature_graph", ft.curvature);
    ctx.stat("curvature_tree", fb.curvature);
    ctx.stat("fit_k_min", static_cast<double>(ft.k_min));
    ctx.stat("fit_k_max", static_cast<double>(ft.k_max));
}

void run_fig2_regular(Ctx& ctx) {
    const std::int64_t n = ctx.cfg.get_int("n", 100'000);
    const std::int64_t r = ctx.cfg.get_int("r", 100);
    const std::int64_t reps = ctx.cfg.get_int("replications", 4);
    const DegreeLaw law = DegreeLaw::fixed(r);

    const WeightedMultiGraph g = build_cm(ctx.cfg, law, n, ctx.seed);
    const TreeDegreeCounts counts =
        pooled_tree_degrees(g, reps, false, ctx.seed, ctx.cfg.threads());
    const DegreeDistribution tree = to_dist(counts.cond, counts.n_cond);
    tree.write_csv(ctx.path("tree.csv"), ctx.header);

    // strict tail P(deg > k) against 2^-k, the Geometric(1/2) reference
    double worst = 0.0;
    for (std::int64_t k = 1; k <= 12; ++k) {
        const double q = tree.ccdf(k + 1);
        const double ref = std::pow(2.0, -static_cast<double>(k));
        ctx.stat("tail_gt_" + std::to_string(k), q);
        worst = std::max(worst, std::fabs(q / ref - 1.0));
    }
    ctx.stat("tail_worst_rel_err", worst);
    ctx.stat("tv_vs_geometric_half", tv_distance(tree, geometric_pmf(0.5)));
}

void run_complete_s_grid(Ctx& ctx) {
    const std::vector<double> s_grid = ctx.cfg.get_reals("s_grid", "0.5,1,2");
    const std::int64_t pool_size = ctx.cfg.get_int("pool_size", 100'000);
    const std::int64_t draws = ctx.cfg.get_int("draws", 1'000'000);
    const double margin = ctx.cfg.get_real("margin", 30.0);

    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        const double s = s_grid[i];
        RngStream pool_rng(ctx.seed, 500 + i);
        PoolOptions opt;
        opt.size = pool_size;
        const SamplePool pool = solve_w_complete(s, opt, pool_rng);
        ctx.stat("pool_mean_s" + std::to_string(s), pool.mean());

        WPoolView view(pool);
        CompleteSampler sampler(s, view, margin);
        RngStream rng(ctx.seed, 2000 + i);
        std::vector<std::int64_t> degrees;
        degrees.reserve(draws);
        double mean = 0.0;
        std::vector<double> m_draws;
        for (std::int64_t d = 0; d < draws; ++d) {
            const HatDraw h = sampler.draw(rng);
            degrees.push_back(h.degree);
            mean += static_cast<double>(h.degree);
            if (d < 200'000) m_draws.push_back(h.score_max);
        }
        mean /= static_cast<double>(draws);
        ctx.stat("mean_hatd_s" + std::to_string(s), mean);

        const DegreeDistribution pmf = DegreeDistribution::from_samples(degrees);
        std::ostringstream name;
        name << "oracle-s" << s << ".csv";
        pmf.write_csv(ctx.path(name.str()), ctx.header);

        // score maximum against an independent Gumbel + log W route
        std::vector<double> glw;
        glw.reserve(m_draws.size());
        for (std::size_t d = 0; d < m_draws.size(); ++d)
            glw.push_back(rng.gumbel() + std::log(view.pick(rng)));
        ctx.stat("ks_m_vs_gumbel_logw_s" + std::to_string(s),
                 ks_statistic(m_draws, glw));

        if (s == 1.0) {
            ctx.stat("tv_vs_geometric_half", tv_distance(pmf, geometric_pmf(0.5)));
            for (double m : {-1.0, 0.0, 1.0}) {
                double ge = 0.0;
                for (double x : m_draws) ge += x >= m ? 1.0 : 0.0;
                ge /= static_cast<double>(m_draws.size());
                ctx.stat("p_m_ge_" + std::to_string(m), ge);
                ctx.stat("p_m_ge_closed_" + std::to_string(m),
                         closed_form::p_m_at_least(m));
            }
        }
    }
}

void run_oracle_vs_sim(Ctx& ctx) {
    const std::int64_t n = ctx.cfg.get_int("n", 50'000);
    const std::int64_t reps = ctx.cfg.get_int("replications", 20);
    const std::int64_t pool_size = ctx.cfg.get_int("pool_size", 100'000);
    const std::int64_t draws = ctx.cfg.get_int("draws", 1'000'000);
    const DegreeLaw law = DegreeLaw::parse(ctx.cfg.get("degree", "fixed:4"));
    const WeightLaw weights = WeightLaw::parse(ctx.cfg.get("weights", "exponential"));

    const WeightedMultiGraph g = build_cm(ctx.cfg, law, n, ctx.seed);
    const TreeDegreeCounts counts =
        pooled_tree_degrees(g, reps, false, ctx.seed, ctx.cfg.threads());
    const DegreeDistribution sim = to_dist(counts.cond, counts.n_cond);
    sim.write_csv(ctx.path("sim.csv"), ctx.header);

    const double lambda = limit_params_cm(law, weights).lambda;
    ctx.stat("lambda", lambda);
    RngStream pool_rng(ctx.seed, 500);
    PoolOptions opt;
    opt.size = pool_size;
    const SamplePool pool = solve_w_cm(law, weights, lambda, opt, pool_rng);
    ctx.stat("pool_mean", pool.mean());

    WPoolView view(pool);
    CmFiniteSampler sampler(law, view, lambda, weights);
    RngStream rng(ctx.seed, 2000);
    std::vector<std::int64_t> degrees;
    degrees.reserve(draws);
    for (std::int64_t d = 0; d < draws; ++d)
        degrees.push_back(sampler.draw(rng).degree);
    const DegreeDistribution oracle = DegreeDistribution::from_samples(degrees);
    oracle.write_csv(ctx.path("oracle.csv"), ctx.header);

    ctx.stat("tv_sim_vs_oracle", tv_distance(sim, oracle));
    ctx.stat("sim_mean_degree", sim.mean());
    ctx.stat("oracle_mean_degree", oracle.mean());
}

void run_rate_of_conv(Ctx& ctx) {
    const DegreeLaw law = DegreeLaw::parse(ctx.cfg.get("degree", "fixed:4"));
    const WeightLaw weights = WeightLaw::parse(ctx.cfg.get("weights", "exponential"));
    const std::int64_t pool_size = ctx.cfg.get_int("pool_size", 100'000);
    const std::int64_t draws_per_k = ctx.cfg.get_int("draws_per_k", 10'000);
    const std::vector<std::int64_t> k_grid =
        ctx.cfg.get_ints("k_grid", "64,128,256,512,1024,2048,4096,8192,16384");

    const double lambda = limit_params_cm(law, weights).lambda;
    ctx.stat("lambda", lambda);
    RngStream pool_rng(ctx.seed, 500);
    PoolOptions opt;
    opt.size = pool_size;
    const SamplePool pool = solve_w_cm(law, weights, lambda, opt, pool_rng);
    WPoolView view(pool);
    CmFiniteSampler sampler(law, view, lambda, weights);

    std::vector<double> ks, deficits;
    std::FILE* f = std::fopen(ctx.path("deficits.csv").c_str(), "w");
    if (!f) throw std::runtime_error("cannot open deficits.csv");
    for (const auto& h : ctx.header) std::fprintf(f, "# %s\n", h.c_str());
    std::fprintf(f, "k,mean_deficit,median_m_minus_logk\n");
    RngStream rng(ctx.seed, 2000);
    for (std::int64_t k : k_grid) {
        double deficit = 0.0;
        std::vector<double> m_shift;
        m_shift.reserve(draws_per_k);
        for (std::int64_t d = 0; d < draws_per_k; ++d) {
            const HatDraw h = sampler.draw_k(k, rng);
            deficit += static_cast<double>(k - h.degree);
            m_shift.push_back(h.score_max - std::log(static_cast<double>(k)));
        }
        deficit /= static_cast<double>(draws_per_k);
        std::nth_element(m_shift.begin(), m_shift.begin() + m_shift.size() / 2,
                         m_shift.end());
        const double med = m_shift[m_shift.size() / 2];
        std::fprintf(f, "%lld,%.17g,%.17g\n", static_cast<long long>(k), deficit,
                     med);
        ks.push_back(static_cast<double>(k));
        deficits.push_back(deficit);
        ctx.stat("median_m_shift_k" + std::to_string(k), med);
        ctx.stat("deficit_k" + std::to_string(k), deficit);
    }
    if (std::fclose(f) != 0) throw std::runtime_error("write failed");

    const RateFit fit = rate_of_convergence_fit(ks, deficits);
    ctx.stat("alpha_hat", fit.alpha, fit.alpha_stderr);
    ctx.stat("log_model_wins", fit.log_model_wins ? 1.0 : 0.0);
    ctx.stat("max_deficit", *std::max_element(deficits.begin(), deficits.end()));
}

void run_bfst_identity(Ctx& ctx) {
    const std::int64_t r = ctx.cfg.get_int("r", 3);
    const std::int64_t n = ctx.cfg.get_int("n", 100'000);
    const std::int64_t reps = ctx.cfg.get_int("replications", 4);
    const std::int64_t pool_size = ctx.cfg.get_int("pool_size", 100'000);
    const std::int64_t draws = ctx.cfg.get_int("draws", 1'000'000);
    const std::vector<double> z_grid = ctx.cfg.get_reals("z_grid", "0.25,0.5,0.75");

    const std::vector<double> a_k = bfst_limit_pmf(r);
    double sum = 0.0;
    for (double a : a_k) sum += a;
    ctx.stat("a_sum", sum);
    const DegreeDistribution limit = pmf_from_values(a_k);
    limit.write_csv(ctx.path("limit.csv"), ctx.header);

    const DegreeLaw law = DegreeLaw::fixed(r);
    const WeightLaw unit = WeightLaw::constant_one();
    const double lambda = limit_params_cm(law, unit).lambda;
    RngStream pool_rng(ctx.seed, 500);
    PoolOptions opt;
    opt.size = pool_size;
    const SamplePool pool = solve_w_cm(law, unit, lambda, opt, pool_rng);
    WPoolView view(pool);
    CmFiniteSampler sampler(law, view, lambda, unit);
    RngStream rng(ctx.seed, 2000);
    std::vector<std::int64_t> degrees;
    degrees.reserve(draws);
    for (std::int64_t d = 0; d < draws; ++d)
        degrees.push_back(sampler.draw(rng).degree);
    const DegreeDistribution mc = DegreeDistribution::from_samples(degrees);
    mc.write_csv(ctx.path("unit-weight-mc.csv"), ctx.header);
    ctx.stat("tv_mc_vs_limit", tv_distance(mc, limit));

    for (double z : z_grid) {
        const double quad = gf_hatd_unit_weight(law, z);
        double direct = 0.0, mc_gf = 0.0;
        for (std::size_t k = 1; k <= a_k.size(); ++k)
            direct += a_k[k - 1] * std::pow(z, static_cast<double>(k));
        for (std::int64_t d : degrees) mc_gf += std::pow(z, static_cast<double>(d));
        mc_gf /= static_cast<double>(degrees.size());
        ctx.stat("gf_quadrature_z" + std::to_string(z), quad);
        ctx.stat("gf_direct_z" + std::to_string(z), direct);
        ctx.stat("gf_mc_z" + std::to_string(z), mc_gf);
    }

    const WeightedMultiGraph g = build_cm(ctx.cfg, law, n, ctx.seed);
    const TreeDegreeCounts counts =
        pooled_tree_degrees(g, reps, true, ctx.seed, ctx.cfg.threads());
    const DegreeDistribution tree = to_dist(counts.cond, counts.n_cond);
    tree.write_csv(ctx.path("bfst-sim.csv"), ctx.header);
    ctx.stat("tv_sim_vs_limit", tv_distance(tree, limit));
}

void run_recentering(Ctx& ctx) {
    const double s = ctx.cfg.get_real("s", 1.0);
    const std::vector<std::int64_t> n_grid = ctx.cfg.get_ints("n_grid", "1000,4000");
    const std::vector<std::int64_t> sources =
        ctx.cfg.get_ints("sources", "2000,500");
    const std::vector<std::int64_t> targets = ctx.cfg.get_ints("targets", "10,40");
    const std::int64_t pool_size = ctx.cfg.get_int("pool_size", 100'000);
    const std::int64_t oracle_draws = ctx.cfg.get_int("oracle_draws", 40'000);
    if (sources.size() != n_grid.size() || targets.size() != n_grid.size())
        throw ConfigError("recentering: n_grid, sources, targets lengths differ");

    const double rate = limit_params_complete(s).lambda_s;
    std::vector<std::vector<double>> per_n(n_grid.size());
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        const std::int64_t n = n_grid[i];
        const double scale = rate * std::pow(static_cast<double>(n), s);
        const double shift = std::log(static_cast<double>(n));
        std::vector<std::vector<double>> slots(sources[i]);
        parallel_for(sources[i], ctx.cfg.threads(), [&](std::int64_t j) {
            RngStream rng(ctx.seed,
                          1'000'000 + i * 100'000 + static_cast<std::uint64_t>(j));
            const WeightedMultiGraph g = WeightedMultiGraph::complete(n, s, rng);
            const ShortestPathTree t = shortest_path_tree(g, 0);
            for (std::int64_t q = 0; q < targets[i]; ++q) {
                const std::int64_t v = 1 + rng.index(n - 1);
                slots[j].push_back(scale * t.dist[v] - shift);
            }
        });
        for (auto& sl : slots)
            per_n[i].insert(per_n[i].end(), sl.begin(), sl.end());
        write_samples(ctx.path("recentered-n" + std::to_string(n) + ".txt"),
                      ctx.header, per_n[i]);
    }

    // limit-law oracle: -(Gumbel) - log Wsrc - log Wtgt
    RngStream pool_rng(ctx.seed, 500);
    PoolOptions opt;
    opt.size = pool_size;
    const SamplePool pool = solve_w_complete(s, opt, pool_rng);
    WPoolView view(pool);
    RngStream orng(ctx.seed, 2000);
    std::vector<double> oracle;
    oracle.reserve(oracle_draws);
    for (std::int64_t d = 0; d < oracle_draws; ++d)
        oracle.push_back(-orng.gumbel() - std::log(view.pick(orng)) -
                         std::log(view.pick(orng)));
    write_samples(ctx.path("oracle.txt"), ctx.header, oracle);

    const RecenteringResult res = recentering_check(per_n, &oracle, false);
    for (std::size_t i = 0; i + 1 < n_grid.size(); ++i)
        ctx.stat("ks_consecutive_" + std::to_string(n_grid[i]) + "_" +
                     std::to_string(n_grid[i + 1]),
                 res.consecutive_ks[i]);
    ctx.stat("mean_recentered", res.mean);
    ctx.stat("ks_vs_oracle", res.oracle_ks);
}

void run_infvar(Ctx& ctx) {
    const double tau = ctx.cfg.get_real("tau", 2.5);
    const std::int64_t dmin = ctx.cfg.get_int("dmin", 2);
    const std::int64_t kmax = ctx.cfg.get_int("kmax", DegreeLaw::kDefaultKmax);
    const std::int64_t pool_size = ctx.cfg.get_int("pool_size", 100'000);
    const std::int64_t series_size = ctx.cfg.get_int("series_size", 30'000);
    const double series_tail = ctx.cfg.get_real("series_tail", 1e-4);
    const std::int64_t draws = ctx.cfg.get_int("draws", 1'000'000);
    const std::int64_t k_cond = ctx.cfg.get_int("k_cond", 10'000);
    const std::int64_t draws_k = ctx.cfg.get_int("draws_k", 500);
    const std::int64_t pairs = ctx.cfg.get_int("pairs", 1'000'000);
    const DegreeLaw law = DegreeLaw::powerlaw(tau, dmin, kmax);

    RngStream rng_min(ctx.seed, 500), rng_ser(ctx.seed, 501);
    PoolOptions opt;
    opt.size = pool_size;
    const SamplePool v_min = solve_v_minrec(law, opt, rng_min);
    const SamplePool v_ser = solve_v_series(law, series_size, rng_ser, series_tail);
    v_min.save(ctx.path("v-minrec.pool"));
    v_ser.save(ctx.path("v-series.pool"));
    ctx.stat("ks_two_representations",
             ks_statistic(v_min.samples, v_ser.samples));
    ctx.stat("v_min_mean", v_min.mean());
    ctx.stat("v_series_mean", v_ser.mean());

    CmInfiniteSampler sampler(law, v_min);
    RngStream rng(ctx.seed, 2000);
    std::vector<std::int64_t> degrees;
    degrees.reserve(draws);
    double mean = 0.0;
    for (std::int64_t d = 0; d < draws; ++d) {
        const HatDraw h = sampler.draw(rng);
        degrees.push_back(h.degree);
        mean += static_cast<double>(h.degree);
    }
    mean /= static_cast<double>(draws);
    ctx.stat("mean_hatd", mean);
    DegreeDistribution::from_samples(degrees).write_csv(ctx.path("oracle.csv"),
                                                        ctx.header);

    double p_hat = 0.0;
    for (std::int64_t i = 0; i < pairs; ++i)
        p_hat += v_min.pick(rng) > rng.exponential() ? 1.0 : 0.0;
    p_hat /= static_cast<double>(pairs);
    ctx.stat("p_hat_v_gt_e", p_hat);

    double mean_k = 0.0;
    for (std::int64_t d = 0; d < draws_k; ++d)
        mean_k += static_cast<double>(sampler.draw_k(k_cond, rng).degree);
    mean_k /= static_cast<double>(draws_k);
    ctx.stat("mean_hatd_k_over_k", mean_k / static_cast<double>(k_cond));
    ctx.stat("hatd_k_vs_p_gap",
             std::fabs(mean_k / static_cast<double>(k_cond) - p_hat));
}

}  // namespace

void run_experiment(const ExperimentConfig& cfg) {
    const std::string name = cfg.experiment();
    if (name.empty())
        throw ConfigError("config key 'experiment' is required for run");
    Ctx ctx(cfg);
    if (name == "fig1-powerlaw") run_fig1_powerlaw(ctx);
    else if (name == "fig2-regular") run_fig2_regular(ctx);
    else if (name == "complete-s-grid") run_complete_s_grid(ctx);
    else if (name == "oracle-vs-sim") run_oracle_vs_sim(ctx);
    else if (name == "rate-of-conv") run_rate_of_conv(ctx);
    else if (name == "bfst-identity") run_bfst_identity(ctx);
    else if (name == "recentering") run_recentering(ctx);
    else if (name == "infvar") run_infvar(ctx);
    else
        throw ConfigError("unknown experiment '" + name + "'");
    ctx.finish();
}

}  // namespace fpp
