// Acceptance suite: every criterion below runs at its stated tolerance and
// prints one PASS/FAIL line; the exit code is the number of failures.
// Individual criteria can be selected with `acceptance --only <id> [<id>...]`.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fpp/graph.hpp"
#include "fpp/laws.hpp"
#include "fpp/limit_samplers.hpp"
#include "fpp/numerics.hpp"
#include "fpp/pools.hpp"
#include "fpp/spt.hpp"
#include "fpp/stats.hpp"

using namespace fpp;

namespace {

constexpr std::uint64_t kSeed = 20240817;

struct Check {
    std::string detail;
    bool ok;
};

struct Reporter {
    std::vector<Check> checks;
    bool all_ok = true;
    void expect(bool ok, const std::string& detail) {
        checks.push_back({detail, ok});
        all_ok = all_ok && ok;
    }
    void expect_le(double value, double bound, const std::string& what) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s = %.6g (tolerance %.6g)", what.c_str(),
                      value, bound);
        expect(value <= bound, buf);
    }
    void expect_in(double value, double lo, double hi, const std::string& what) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s = %.6g (range [%g, %g])", what.c_str(),
                      value, lo, hi);
        expect(value >= lo && value <= hi, buf);
    }
};

DegreeDistribution geometric_half() {
    std::vector<std::pair<std::int64_t, double>> pmf;
    double q = 0.5;
    std::int64_t k = 1;
    for (; k <= 60; ++k) {
        pmf.emplace_back(k, q);
        q *= 0.5;
    }
    pmf.emplace_back(k, q * 2.0);
    return DegreeDistribution::from_pmf(pmf);
}

WeightedMultiGraph make_cm(const DegreeLaw& law, std::int64_t n,
                           const WeightLaw& weights, std::uint64_t stream) {
    RngStream rng(kSeed, stream);
    const auto seq = draw_degree_sequence(law, n, rng);
    auto g = WeightedMultiGraph::configuration_model(seq, rng);
    g.attach_weights(weights, rng);
    return g;
}

// lazily built shared pools (inputs reused across criteria)
struct Shared {
    std::unique_ptr<SamplePool> w1, w05, w2, r3, fixed4_exp, fixed3_unit, v_min;

    const SamplePool& w_complete_1() {
        if (!w1) {
            RngStream rng(kSeed, 900);
            PoolOptions opt;
            opt.size = 1'000'000;
            w1 = std::make_unique<SamplePool>(solve_w_complete(1.0, opt, rng));
        }
        return *w1;
    }
    const SamplePool& w_complete(double s) {
        auto& slot = s < 1.0 ? w05 : s > 1.0 ? w2 : w1;
        if (s == 1.0) return w_complete_1();
        if (!slot) {
            RngStream rng(kSeed, 901 + static_cast<std::uint64_t>(s * 10));
            PoolOptions opt;
            opt.size = 200'000;
            slot = std::make_unique<SamplePool>(solve_w_complete(s, opt, rng));
        }
        return *slot;
    }
    const SamplePool& r3_pool() {
        if (!r3) {
            RngStream rng(kSeed, 910);
            PoolOptions opt;
            opt.size = 1'000'000;
            r3 = std::make_unique<SamplePool>(solve_w_cm(
                DegreeLaw::fixed(3), WeightLaw::exponential(), 1.0, opt, rng));
        }
        return *r3;
    }
    const SamplePool& fixed4_pool() {
        if (!fixed4_exp) {
            RngStream rng(kSeed, 911);
            PoolOptions opt;
            opt.size = 200'000;
            fixed4_exp = std::make_unique<SamplePool>(solve_w_cm(
                DegreeLaw::fixed(4), WeightLaw::exponential(), 2.0, opt, rng));
        }
        return *fixed4_exp;
    }
    const SamplePool& unit3_pool() {
        if (!fixed3_unit) {
            RngStream rng(kSeed, 912);
            PoolOptions opt;
            opt.size = 200'000;
            fixed3_unit = std::make_unique<SamplePool>(
                solve_w_cm(DegreeLaw::fixed(3), WeightLaw::constant_one(),
                           std::log(2.0), opt, rng));
        }
        return *fixed3_unit;
    }
    const SamplePool& v_pool() {
        if (!v_min) {
            RngStream rng(kSeed, 913);
            PoolOptions opt;
            opt.size = 100'000;
            v_min = std::make_unique<SamplePool>(
                solve_v_minrec(DegreeLaw::powerlaw(2.5, 2), opt, rng));
        }
        return *v_min;
    }
};

Shared shared;

// pooled conditioned tree-degree distribution over several sources
DegreeDistribution pooled_tree_pmf(const WeightedMultiGraph& g,
                                   std::int64_t sources, std::uint64_t stream,
                                   bool use_bfst = false) {
    std::map<std::int64_t, std::int64_t> counts;
    std::int64_t total = 0;
    for (std::int64_t r = 0; r < sources; ++r) {
        RngStream rng(kSeed, stream + r);
        const std::int64_t src = rng.index(g.vertex_count());
        const ShortestPathTree t =
            use_bfst ? bfst(g, src, rng) : shortest_path_tree(g, src);
        for (std::int64_t v = 0; v < g.vertex_count(); ++v)
            if (t.is_reached(v)) {
                ++counts[t.tree_degree[v]];
                ++total;
            }
    }
    std::vector<std::pair<std::int64_t, double>> pmf;
    for (const auto& [k, c] : counts)
        pmf.emplace_back(k, static_cast<double>(c) / static_cast<double>(total));
    return DegreeDistribution::from_pmf(pmf, total);
}

// ---------------------------------------------------------------------------

void criterion_1_handshake(Reporter& rep) {
    {
        const auto g = make_cm(DegreeLaw::fixed(3), 10'000,
                               WeightLaw::exponential(), 10);
        const auto t = shortest_path_tree(g, 3);
        std::int64_t sum = 0;
        for (auto d : t.tree_degree) sum += d;
        rep.expect(sum == 2 * (t.reached - 1),
                   "degree sum equals 2(reached-1) on the multigraph tree");
    }
    {
        RngStream rng(kSeed, 11);
        const auto g = WeightedMultiGraph::complete(2'000, 1.0, rng);
        const auto t = shortest_path_tree(g, 0);
        std::int64_t sum = 0;
        for (auto d : t.tree_degree) sum += d;
        rep.expect(sum == 2 * (t.reached - 1),
                   "degree sum equals 2(reached-1) on the dense tree");
        rep.expect(t.reached == 2'000, "complete graph run is connected");
        rep.expect(mean_tree_degree(t) == 2.0 * (2'000.0 - 1.0) / 2'000.0,
                   "mean tree degree is exactly 2(n-1)/n");
    }
}

void criterion_2_geometric(Reporter& rep) {
    {  // oracle sampler
        WPoolView view(shared.w_complete_1());
        CompleteSampler sampler(1.0, view);
        RngStream rng(kSeed, 20);
        std::vector<std::int64_t> degrees;
        degrees.reserve(1'000'000);
        for (int i = 0; i < 1'000'000; ++i)
            degrees.push_back(sampler.draw(rng).degree);
        rep.expect_le(tv_distance(DegreeDistribution::from_samples(degrees),
                                  geometric_half()),
                      0.005, "oracle TV vs Geometric(1/2), 1e6 draws");
    }
    {  // direct simulation, 20 sources over 5 independent graphs
        std::map<std::int64_t, std::int64_t> counts;
        std::int64_t total = 0;
        for (int rep_g = 0; rep_g < 5; ++rep_g) {
            RngStream rng(kSeed, 21 + rep_g);
            const auto g = WeightedMultiGraph::complete(10'000, 1.0, rng);
            for (int s = 0; s < 4; ++s) {
                const auto t = shortest_path_tree(g, rng.index(10'000));
                for (auto d : t.tree_degree) {
                    ++counts[d];
                    ++total;
                }
            }
        }
        std::vector<std::pair<std::int64_t, double>> pmf;
        for (const auto& [k, c] : counts)
            pmf.emplace_back(k, static_cast<double>(c) / total);
        rep.expect_le(
            tv_distance(DegreeDistribution::from_pmf(pmf), geometric_half()),
            0.02, "simulated TV vs Geometric(1/2), n=1e4, 20 sources");
    }
}

void criterion_3_mean_two(Reporter& rep) {
    for (double s : {0.5, 1.0, 2.0}) {
        WPoolView view(shared.w_complete(s));
        CompleteSampler sampler(s, view);
        RngStream rng(kSeed, 30 + static_cast<std::uint64_t>(s * 10));
        double mean = 0.0;
        for (int i = 0; i < 1'000'000; ++i)
            mean += static_cast<double>(sampler.draw(rng).degree);
        rep.expect_in(mean / 1e6, 1.98, 2.02,
                      "weak-disorder mean degree, s=" + std::to_string(s));
    }
    {
        WPoolView view(shared.fixed4_pool());
        CmFiniteSampler sampler(DegreeLaw::fixed(4), view, 2.0,
                                WeightLaw::exponential());
        RngStream rng(kSeed, 33);
        double mean = 0.0;
        for (int i = 0; i < 1'000'000; ++i)
            mean += static_cast<double>(sampler.draw(rng).degree);
        rep.expect_in(mean / 1e6, 1.98, 2.02, "regular-graph mean degree");
    }
    {
        CmInfiniteSampler sampler(DegreeLaw::powerlaw(2.5, 2), shared.v_pool());
        RngStream rng(kSeed, 34);
        double mean = 0.0;
        for (int i = 0; i < 1'000'000; ++i)
            mean += static_cast<double>(sampler.draw(rng).degree);
        rep.expect_in(mean / 1e6, 1.98, 2.02, "heavy-tail mean degree, tau=2.5");
    }
}

void criterion_4_w_closed_forms(Reporter& rep) {
    const SamplePool& w1 = shared.w_complete_1();
    rep.expect_le(
        ks_statistic(w1.samples,
                     [](double x) { return x <= 0 ? 0.0 : 1.0 - std::exp(-x); }),
        0.01, "s=1 pool vs standard exponential (KS)");
    rep.expect_in(w1.mean(), 0.99, 1.01, "s=1 pool mean");

    const SamplePool& r3 = shared.r3_pool();
    for (double u : {0.5, 1.0, 2.0})
        rep.expect_le(
            std::fabs(r3.laplace(u) - std::pow(1.0 + u / 2.0, -2.0)), 0.01,
            "3-regular pool transform at u=" + std::to_string(u));
    rep.expect_in(r3.mean(), 0.99, 1.01, "3-regular pool mean");
}

void criterion_5_m_identities(Reporter& rep) {
    WPoolView view1(shared.w_complete_1());
    CompleteSampler sampler1(1.0, view1);
    RngStream rng(kSeed, 50);
    std::vector<double> m1;
    m1.reserve(300'000);
    for (int i = 0; i < 300'000; ++i) m1.push_back(sampler1.draw(rng).score_max);
    for (double m : {-1.0, 0.0, 1.0}) {
        double frac = 0.0;
        for (double x : m1) frac += x >= m ? 1.0 : 0.0;
        frac /= static_cast<double>(m1.size());
        rep.expect_le(std::fabs(frac - closed_form::p_m_at_least(m)), 0.01,
                      "P(M >= " + std::to_string(m) + ") vs 1/(1+e^m)");
    }
    for (double s : {1.0, 2.0}) {
        WPoolView view(shared.w_complete(s));
        CompleteSampler sampler(s, view);
        RngStream r2(kSeed, 51 + static_cast<std::uint64_t>(s));
        std::vector<double> ms, glw;
        ms.reserve(300'000);
        glw.reserve(300'000);
        for (int i = 0; i < 300'000; ++i) {
            ms.push_back(sampler.draw(r2).score_max);
            glw.push_back(r2.gumbel() + std::log(view.pick(r2)));
        }
        rep.expect_le(ks_statistic(ms, glw), 0.01,
                      "KS(M, Gumbel + log W) at s=" + std::to_string(s));
    }
}

void criterion_6_oracle_vs_sim(Reporter& rep) {
    const auto g =
        make_cm(DegreeLaw::fixed(4), 50'000, WeightLaw::exponential(), 60);
    const DegreeDistribution sim = pooled_tree_pmf(g, 20, 600);
    WPoolView view(shared.fixed4_pool());
    CmFiniteSampler sampler(DegreeLaw::fixed(4), view, 2.0,
                            WeightLaw::exponential());
    RngStream rng(kSeed, 61);
    std::vector<std::int64_t> degrees;
    degrees.reserve(1'000'000);
    for (int i = 0; i < 1'000'000; ++i) degrees.push_back(sampler.draw(rng).degree);
    rep.expect_le(
        tv_distance(sim, DegreeDistribution::from_samples(degrees)), 0.02,
        "TV(simulated tree pmf, oracle pmf), n=5e4, 20 sources, 1e6 draws");
}

void criterion_7_powerlaw_preserved(Reporter& rep) {
    for (double tau : {3.5, 2.5}) {
        const DegreeLaw law = DegreeLaw::powerlaw(tau, 5);
        const auto g = make_cm(law, 100'000, WeightLaw::exponential(),
                               70 + static_cast<std::uint64_t>(tau * 10));
        std::map<std::int64_t, std::int64_t> counts;
        for (std::int64_t v = 0; v < g.vertex_count(); ++v) ++counts[g.degree(v)];
        std::vector<std::pair<std::int64_t, double>> pmf;
        for (const auto& [k, c] : counts)
            pmf.emplace_back(k, static_cast<double>(c) / g.vertex_count());
        const DegreeDistribution truth = DegreeDistribution::from_pmf(pmf);
        const DegreeDistribution tree =
            pooled_tree_pmf(g, 4, 700 + static_cast<std::uint64_t>(tau * 10));

        const TailFit ft = estimate_tail_exponent(truth);  // top decade window
        const TailFit fb = estimate_tail_exponent(tree, ft.k_min, ft.k_max);
        char what[128];
        std::snprintf(what, sizeof what,
                      "|tau_graph - tau_tree| over k in [%lld, %lld], tau=%.1f",
                      static_cast<long long>(ft.k_min),
                      static_cast<long long>(ft.k_max), tau);
        rep.expect_le(std::fabs(ft.tau_hat - fb.tau_hat), 0.3, what);
    }
}

void criterion_8_rate_of_convergence(Reporter& rep) {
    const std::vector<std::int64_t> grid = {64,   128,  256,  512,  1024,
                                            2048, 4096, 8192, 16384};
    const int draws = 4000;
    {  // exponential weights, rate 2: deficit exponent 1 - 1/2
        WPoolView view(shared.fixed4_pool());
        CmFiniteSampler sampler(DegreeLaw::fixed(4), view, 2.0,
                                WeightLaw::exponential());
        RngStream rng(kSeed, 80);
        std::vector<double> ks, deficits, med_shifts;
        for (std::int64_t k : grid) {
            double deficit = 0.0;
            std::vector<double> shifts;
            shifts.reserve(draws);
            for (int i = 0; i < draws; ++i) {
                const HatDraw h = sampler.draw_k(k, rng);
                deficit += static_cast<double>(k - h.degree);
                shifts.push_back(h.score_max - std::log(static_cast<double>(k)));
            }
            ks.push_back(static_cast<double>(k));
            deficits.push_back(deficit / draws);
            std::nth_element(shifts.begin(), shifts.begin() + shifts.size() / 2,
                             shifts.end());
            med_shifts.push_back(shifts[shifts.size() / 2]);
        }
        const RateFit fit = rate_of_convergence_fit(ks, deficits);
        rep.expect_in(fit.alpha, 0.4, 0.6,
                      "fitted deficit exponent, exponential weights, rate 2");
        double lo = 1e300, hi = -1e300;
        for (double m : med_shifts) {
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
        rep.expect(lo > -2.0 && hi < 2.0,
                   "median(M_k - log k) within [-2, 2]; observed [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    {  // exponential weights, rate 1: logarithmic deficit
        WPoolView view(shared.r3_pool());
        CmFiniteSampler sampler(DegreeLaw::fixed(3), view, 1.0,
                                WeightLaw::exponential());
        RngStream rng(kSeed, 81);
        std::vector<double> ks, deficits;
        for (std::int64_t k : grid) {
            double deficit = 0.0;
            for (int i = 0; i < draws; ++i)
                deficit += static_cast<double>(k - sampler.draw_k(k, rng).degree);
            ks.push_back(static_cast<double>(k));
            deficits.push_back(deficit / draws);
        }
        const RateFit fit = rate_of_convergence_fit(ks, deficits);
        rep.expect(fit.log_model_wins,
                   "log-k deficit model beats the power model at rate 1 "
                   "(sse_log=" + std::to_string(fit.sse_log) +
                   ", sse_power=" + std::to_string(fit.sse_power) + ")");
    }
    {  // uniform weights: tight deficits
        const WeightLaw uniform = WeightLaw::uniform01();
        const double lambda = solve_malthusian(3.0, uniform);
        RngStream prng(kSeed, 82);
        PoolOptions opt;
        opt.size = 200'000;
        const SamplePool pool =
            solve_w_cm(DegreeLaw::fixed(4), uniform, lambda, opt, prng);
        WPoolView view(pool);
        CmFiniteSampler sampler(DegreeLaw::fixed(4), view, lambda, uniform);
        RngStream rng(kSeed, 83);
        std::vector<double> unif_deficits;
        for (std::int64_t k : grid) {
            double deficit = 0.0;
            for (int i = 0; i < draws; ++i)
                deficit += static_cast<double>(k - sampler.draw_k(k, rng).degree);
            unif_deficits.push_back(deficit / draws);
        }
        const double max_deficit =
            *std::max_element(unif_deficits.begin(), unif_deficits.end());
        // tight family: the plateau sits near E[W e^{lambda Y}] times an
        // order-one extreme-value factor; five times E[e^{lambda Y}] (with
        // E[W]=1) roofs it with margin while any polynomial growth escapes
        const double bound = 5.0 * (std::exp(lambda) - 1.0) / lambda;
        rep.expect_le(max_deficit, bound,
                      "max mean deficit under uniform weights (tightness)");
        // and the deficit must have stopped growing across the top octaves
        const double mid = std::max(unif_deficits[3], unif_deficits[4]);
        const double top = std::max(unif_deficits[7], unif_deficits[8]);
        rep.expect_le(top, 1.3 * mid + 1.0,
                      "uniform-weight deficit is flat from k=2^9 to k=2^14 "
                      "(mid=" + std::to_string(mid) + ")");
    }
}

void criterion_9_infinite_variance(Reporter& rep) {
    const DegreeLaw law = DegreeLaw::powerlaw(2.5, 2);
    RngStream rng_s(kSeed, 90);
    const SamplePool series = solve_v_series(law, 30'000, rng_s, 1e-4);
    rep.expect_le(ks_statistic(shared.v_pool().samples, series.samples), 0.02,
                  "KS between the two explosion-time representations");

    CmInfiniteSampler sampler(law, shared.v_pool());
    RngStream rng(kSeed, 91);
    double p_hat = 0.0;
    for (int i = 0; i < 1'000'000; ++i)
        p_hat += shared.v_pool().pick(rng) > rng.exponential() ? 1.0 : 0.0;
    p_hat /= 1e6;
    const std::int64_t k = 10'000;
    double mean_k = 0.0;
    const int draws = 500;
    for (int i = 0; i < draws; ++i)
        mean_k += static_cast<double>(sampler.draw_k(k, rng).degree);
    mean_k /= draws;
    rep.expect_le(std::fabs(mean_k / static_cast<double>(k) - p_hat), 0.02,
                  "mean(D_k)/k vs head-to-head fraction at k=1e4 (p_hat=" +
                      std::to_string(p_hat) + ")");
}

void criterion_10_bfst(Reporter& rep) {
    const auto a3 = bfst_limit_pmf(3);
    bool thirds = true;
    for (double a : a3) thirds = thirds && std::fabs(a - 1.0 / 3.0) < 1e-10;
    rep.expect(thirds, "unit-weight limit pmf at r=3 is uniform over {1,2,3}");
    for (std::int64_t r : {std::int64_t{3}, std::int64_t{10}, std::int64_t{100}}) {
        const auto a = bfst_limit_pmf(r);
        KahanSum sum;
        for (double x : a) sum.add(x);
        rep.expect_le(std::fabs(sum.value() - 1.0), 1e-10,
                      "pmf normalization at r=" + std::to_string(r));
    }

    const DegreeLaw d3 = DegreeLaw::fixed(3);
    for (double z : {0.25, 0.5, 0.75}) {
        double direct = 0.0;
        for (std::size_t k = 1; k <= 3; ++k)
            direct += a3[k - 1] * std::pow(z, static_cast<double>(k));
        rep.expect_le(std::fabs(gf_hatd_unit_weight(d3, z) - direct), 1e-6,
                      "generating-function quadrature at z=" + std::to_string(z));
    }

    {  // unit-weight Monte Carlo sampler against the quadrature
        WPoolView view(shared.unit3_pool());
        CmFiniteSampler sampler(d3, view, std::log(2.0), WeightLaw::constant_one());
        RngStream rng(kSeed, 100);
        std::vector<std::int64_t> degrees;
        degrees.reserve(1'000'000);
        for (int i = 0; i < 1'000'000; ++i)
            degrees.push_back(sampler.draw(rng).degree);
        double worst = 0.0;
        for (double z : {0.25, 0.5, 0.75}) {
            double mc = 0.0;
            for (auto d : degrees) mc += std::pow(z, static_cast<double>(d));
            mc /= static_cast<double>(degrees.size());
            worst = std::max(worst, std::fabs(mc - gf_hatd_unit_weight(d3, z)));
        }
        rep.expect_le(worst, 0.005, "unit-weight sampler vs quadrature");
    }

    {  // simulated breadth-first tree on the random 3-regular graph
        const auto g =
            make_cm(d3, 100'000, WeightLaw::constant_one(), 101);
        const DegreeDistribution tree = pooled_tree_pmf(g, 2, 1010, true);
        const DegreeDistribution limit = DegreeDistribution::from_pmf(
            {{1, a3[0]}, {2, a3[1]}, {3, a3[2]}});
        rep.expect_le(tv_distance(tree, limit), 0.02,
                      "simulated breadth-first tree vs limit pmf, n=1e5");
    }

    {  // r=100 regular graph with exponential weights tracks the 2^-k tail
        const auto g = make_cm(DegreeLaw::fixed(100), 100'000,
                               WeightLaw::exponential(), 102);
        const DegreeDistribution tree = pooled_tree_pmf(g, 4, 1020);
        double worst = 0.0;
        for (std::int64_t k = 1; k <= 12; ++k) {
            // strict tail: P(deg > k) corresponds to the 2^-k reference curve
            const double q = tree.ccdf(k + 1);
            const double ref = std::pow(2.0, -static_cast<double>(k));
            worst = std::max(worst, std::fabs(q / ref - 1.0));
        }
        rep.expect_le(worst, 0.5,
                      "r=100 tree tail vs 2^-k over k <= 12 (relative)");
    }
}

void criterion_11_excision(Reporter& rep) {
    std::int64_t failures = 0, skipped = 0;
    int done = 0;
    for (std::uint64_t rep_g = 0; rep_g < 10; ++rep_g) {
        const auto g = make_cm(DegreeLaw::fixed(4), 2'000,
                               WeightLaw::exponential(), 110 + rep_g);
        RngStream rng(kSeed, 1100 + rep_g);
        for (int s = 0; s < 5; ++s) {
            const std::int64_t src = rng.index(2'000);
            const auto tree = shortest_path_tree(g, src);
            for (int t = 0; t < 10; ++t) {
                std::int64_t tgt = rng.index(2'000);
                if (tgt == src) tgt = (tgt + 1) % 2'000;
                const ExcisionDegree x = degree_via_excision(g, src, tgt);
                ++done;
                if (x.skipped) {
                    ++skipped;
                    if (tree.tree_degree[tgt] != 0) ++failures;
                } else if (x.degree != tree.tree_degree[tgt]) {
                    ++failures;
                }
            }
        }
    }
    rep.expect(done == 500 && failures == 0,
               "excision degree equals direct tree degree on 500 triples (" +
                   std::to_string(skipped) + " skipped, " +
                   std::to_string(failures) + " failures)");
}

void criterion_12_recentering(Reporter& rep) {
    const auto collect = [&](std::int64_t n, std::int64_t graphs,
                             std::int64_t targets, std::uint64_t stream) {
        std::vector<double> samples;
        samples.reserve(graphs * targets);
        const double shift = std::log(static_cast<double>(n));
        for (std::int64_t j = 0; j < graphs; ++j) {
            RngStream rng(kSeed, stream + j);
            const auto g = WeightedMultiGraph::complete(n, 1.0, rng);
            const auto t = shortest_path_tree(g, 0);
            for (std::int64_t q = 0; q < targets; ++q) {
                const std::int64_t v = 1 + rng.index(n - 1);
                samples.push_back(static_cast<double>(n) * t.dist[v] - shift);
            }
        }
        return samples;
    };
    const auto s1 = collect(1'000, 4'000, 10, 120'000);
    const auto s2 = collect(4'000, 800, 25, 220'000);
    rep.expect_le(ks_statistic(s1, s2), 0.05,
                  "KS between recentered laws at n=1e3 and n=4e3");

    const double gamma_oracle = integrate(
        [](double x) { return x * std::exp(-x - std::exp(-x)); }, -12.0, 40.0,
        1e-12);
    KahanSum sum;
    for (double x : s1) sum.add(x);
    for (double x : s2) sum.add(x);
    const double mean = sum.value() / static_cast<double>(s1.size() + s2.size());
    rep.expect_le(std::fabs(mean - gamma_oracle), 0.05,
                  "pooled recentered mean vs the Euler-Mascheroni oracle");
}

struct Criterion {
    int id;
    const char* name;
    std::function<void(Reporter&)> fn;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "handshake exactness", criterion_1_handshake},
        {2, "geometric law at s=1", criterion_2_geometric},
        {3, "mean limiting degree is 2", criterion_3_mean_two},
        {4, "fixed-point closed forms", criterion_4_w_closed_forms},
        {5, "extremal score identities", criterion_5_m_identities},
        {6, "oracle vs simulation", criterion_6_oracle_vs_sim},
        {7, "power-law exponent preserved", criterion_7_powerlaw_preserved},
        {8, "rate of convergence", criterion_8_rate_of_convergence},
        {9, "infinite-variance laws", criterion_9_infinite_variance},
        {10, "breadth-first identities", criterion_10_bfst},
        {11, "excision identity", criterion_11_excision},
        {12, "recentering stabilization", criterion_12_recentering},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0) continue;
        only.push_back(std::atoi(argv[i]));
    }
    int failures = 0;
    for (const auto& c : criteria()) {
        if (!only.empty() &&
            std::find(only.begin(), only.end(), c.id) == only.end())
            continue;
        Reporter rep;
        try {
            c.fn(rep);
        } catch (const std::exception& e) {
            rep.expect(false, std::string("exception: ") + e.what());
        }
        std::printf("%s %2d  %s\n", rep.all_ok ? "PASS" : "FAIL", c.id, c.name);
        for (const auto& chk : rep.checks)
            std::printf("      %s %s\n", chk.ok ? "." : "x", chk.detail.c_str());
        std::fflush(stdout);
        failures += rep.all_ok ? 0 : 1;
    }
    return failures;
}
