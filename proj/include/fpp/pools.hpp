#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpp/laws.hpp"
#include "fpp/rng.hpp"

namespace fpp {

// lambda_s = Gamma(1+1/s)^s, the growth rate matching the weak-disorder
// point process: integral of e^(-lambda_s x) against its intensity is 1.
double lambda_s(double s);

// integral of e^(-lambda x) against the intensity measure with density
// (1/s) x^(1/s-1), evaluated by quadrature (used as a self-check oracle).
double mu_s_laplace(double s, double lambda);

// Root of nu * E[e^(-lambda Y)] = 1; closed forms for the exponential and
// constant laws, bracketed bisection otherwise. Residual below 1e-10.
// Throws std::domain_error when nu <= 1 (no growth rate exists).
double solve_malthusian(double nu, const WeightLaw& weight_law);

// Validated bundle of limiting parameters for one regime.
struct LimitParams {
    double lambda = 0.0;    // growth rate in force
    double lambda_s = 0.0;  // Gamma(1+1/s)^s, weak-disorder regime only
    double nu = 0.0;        // mean forward degree, sparse regime only
    double s = 0.0;         // disorder power, weak-disorder regime only
};

// nu from the degree law, lambda from the growth equation; the residual
// |nu E(e^-lambda Y) - 1| < 1e-10 is re-asserted.
LimitParams limit_params_cm(const DegreeLaw& degree_law,
                            const WeightLaw& weight_law);
// lambda_s with its defining integral re-checked by quadrature to 1e-8.
LimitParams limit_params_complete(double s);

enum class PoolTarget { w_cm, w_complete, v_explosion };

// A finite population approximating the law of a fixed point (W or V).
// Refreshed in full sweeps; convergence is declared when the KS distance
// between successive sweeps drops below a threshold.
struct SamplePool {
    PoolTarget target = PoolTarget::w_cm;
    std::vector<double> samples;
    std::int64_t sweeps = 0;
    double last_sweep_ks = 0.0;
    double s = 0.0;       // disorder parameter (w_complete)
    double lambda = 0.0;  // Malthusian rate (w_cm)
    std::string degree_law;
    std::string weight_law;
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    double mean() const;
    double laplace(double u) const;  // empirical E[e^(-u W)]
    double pick(RngStream& rng) const {
        return samples[rng.index(samples.size())];
    }

    void save(const std::string& path) const;
    static SamplePool load(const std::string& path);
};

struct PoolOptions {
    std::int64_t size = 100'000;
    std::int64_t max_sweeps = 200;
    double converge_ks = 0.005;
};

// W fixed point for the configuration model: each fresh sample is
// sum_{i<=N} e^(-lambda Y_i) W_i with N distributed as D*-1 (D* the
// size-biasing of degree_law) and W_i resampled from the previous pool.
// The pool mean is never renormalized; it has to come out near 1 on its
// own, and a drift outside [0.9, 1.1] raises an error.
SamplePool solve_w_cm(const DegreeLaw& degree_law, const WeightLaw& weight_law,
                      double lambda, const PoolOptions& opt, RngStream& rng);

// W fixed point for the weak-disorder complete graph: sum over the ordered
// point process, truncated at the first index whose multiplier
// e^(-lambda_s X) falls below term_epsilon.
SamplePool solve_w_complete(double s, const PoolOptions& opt, RngStream& rng,
                            double term_epsilon = 1e-8);

// Explosion-time fixed point V = min_{i <= D*-1} (E_i + V_i), for degree
// laws with power-law exponent tau in (2,3). The size-biased offspring law
// is used with unbounded support (explosion needs infinite mean). The min
// over a possibly enormous candidate count is sampled exactly through the
// mixture cdf of E + pool pick, so huge D* draws cost O(log pool).
SamplePool solve_v_minrec(const DegreeLaw& degree_law, const PoolOptions& opt,
                          RngStream& rng);

// Independent route to V: the series sum_i E_i / (1 + sum_{j<=i} (D*_j - 2)),
// truncated once the conditional expected remainder drops below
// tail_epsilon. Slow for small tail_epsilon; the default honors the
// operation contract, large studies may relax it.
SamplePool solve_v_series(const DegreeLaw& degree_law, std::int64_t size,
                          RngStream& rng, double tail_epsilon = 1e-6);

}  // namespace fpp
