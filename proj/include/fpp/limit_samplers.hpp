#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "fpp/laws.hpp"
#include "fpp/pools.hpp"
#include "fpp/rng.hpp"

namespace fpp {

// Pool view with cached logs; zero entries (extinct lines) map to -inf.
class WPoolView {
public:
    explicit WPoolView(const SamplePool& pool);
    double pick(RngStream& rng) const { return vals_[rng.index(vals_.size())]; }
    double log_pick(RngStream& rng) const {
        return logs_[rng.index(logs_.size())];
    }
    std::size_t size() const { return vals_.size(); }

private:
    std::vector<double> vals_;
    std::vector<double> logs_;
};

struct HatDraw {
    std::int64_t degree = 0;   // 0 marks the extinct case (reported separately)
    double score_max = 0.0;    // the extremal score deciding which edges join
};

// Limiting tree degree of a vertex in the finite-variance regime: with D
// incident lines carrying (Gumbel, log W, lambda*Y) scores, the degree is
// 1 + #{i : G_i + log W_i + lambda Y_i < M}, M = max_i(G_i + log W_i -
// lambda Y_i). An all-extinct draw returns degree 0 with score -inf.
class CmFiniteSampler {
public:
    CmFiniteSampler(const DegreeLaw& degree_law, const WPoolView& pool,
                    double lambda, const WeightLaw& weight_law);

    HatDraw draw(RngStream& rng);                       // D from the degree law
    HatDraw draw_k(std::int64_t k, RngStream& rng);     // conditioned on D = k

private:
    DegreeLaw law_;
    const WPoolView* pool_;
    double lambda_;
    WeightLaw weight_law_;
    std::vector<double> include_score_;
};

// Weak-disorder (complete graph) variant: scores ride on the ordered point
// process X_i; generation stops once lambda_s X exceeds the best score by a
// safety margin, so later points can no longer matter (probability below
// e^-margin each).
class CompleteSampler {
public:
    CompleteSampler(double s, const WPoolView& pool, double margin = 30.0,
                    std::int64_t max_points = 10'000'000);

    HatDraw draw(RngStream& rng);
    double sample_m(RngStream& rng) { return draw(rng).score_max; }
    double rate() const { return rate_; }

private:
    double s_;
    double rate_;
    double margin_;
    std::int64_t max_points_;
    const WPoolView* pool_;
    std::vector<double> include_score_;
};

// Infinite-variance regime: degree is 1 + #{i <= D : V_i - E_i > xi} with
// xi = min_i(V_i + E_i); V picks come from an explosion-time pool.
class CmInfiniteSampler {
public:
    CmInfiniteSampler(const DegreeLaw& degree_law, const SamplePool& v_pool);

    HatDraw draw(RngStream& rng);
    HatDraw draw_k(std::int64_t k, RngStream& rng);

private:
    DegreeLaw law_;
    const SamplePool* pool_;
    std::vector<double> margin_;
};

// Exact limiting degree pmf of the unit-weight (breadth-first) tree on the
// random r-regular graph, a_k for k = 1..r; evaluated through log-gamma.
std::vector<double> bfst_limit_pmf(std::int64_t r);

// Generating function E[z^Dhat] for deterministic unit weights, via the
// closed-form integral in terms of f'(t) = E[D t^(D-1)]; degree laws with
// mass below 3 are rejected. Quadrature to 1e-8.
double gf_hatd_unit_weight(const DegreeLaw& degree_law, double z);

// Closed forms for the s = 1 weak-disorder limit.
namespace closed_form {
inline double phi_w(double u) { return 1.0 / (1.0 + u); }
inline double triangle_mass_up(double m) { return std::log1p(std::exp(-m)); }
inline double triangle_mass_down(double m) { return std::log1p(std::exp(m)); }
inline double p_m_at_least(double m) { return 1.0 / (1.0 + std::exp(m)); }
}  // namespace closed_form

// P(M < m) = phi_W(e^-m) evaluated against an empirical pool transform.
double p_m_below_from_pool(const SamplePool& w_pool, double m);

}  // namespace fpp
