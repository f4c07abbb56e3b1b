#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fpp/spt.hpp"

namespace fpp {

// Empirical pmf p_k and tail ccdf q_k = sum_{j>=k} p_j over integer degrees.
class DegreeDistribution {
public:
    DegreeDistribution() = default;

    static DegreeDistribution from_samples(const std::vector<std::int64_t>& v);
    static DegreeDistribution from_samples(const std::vector<std::int32_t>& v);
    static DegreeDistribution from_pmf(
        const std::vector<std::pair<std::int64_t, double>>& pmf,
        std::int64_t n_samples = 0);

    double pmf(std::int64_t k) const;
    double ccdf(std::int64_t k) const;  // q_k, nonincreasing, q_{min support}=1
    std::int64_t n_samples() const { return n_; }
    double mean() const;
    const std::map<std::int64_t, double>& pmf_map() const { return pmf_; }

    // columns: k, p_k, q_k; header comment lines are written verbatim
    void write_csv(const std::string& path,
                   const std::vector<std::string>& header_comments = {}) const;
    static DegreeDistribution read_csv(const std::string& path);

private:
    std::map<std::int64_t, double> pmf_;
    std::int64_t n_ = 0;
};

double tv_distance(const DegreeDistribution& a, const DegreeDistribution& b);

// Two-sample Kolmogorov-Smirnov statistic; inputs need not be sorted.
double ks_statistic(std::vector<double> a, std::vector<double> b);
// One-sample variant against an explicit cdf.
double ks_statistic(std::vector<double> a,
                    const std::function<double(double)>& cdf);

struct TailFit {
    double tau_hat = 0.0;
    double stderr_slope = 0.0;
    std::int64_t k_min = 0;
    std::int64_t k_max = 0;
    std::string method;    // "ccdf-regression" or "hill"
    double curvature = 0.0;  // quadratic coefficient in log-log (regression only)
    bool power_law_plausible = false;
};

// Least-squares slope of log q_k against log k over k in [k_min, k_max];
// slope b estimates 1 - tau. k_min = 0 picks the smallest k with q_k <= 0.1,
// k_max = 0 uses the decade [k_min, 10 k_min].
TailFit estimate_tail_exponent(const DegreeDistribution& dist,
                               std::int64_t k_min = 0, std::int64_t k_max = 0);
TailFit hill_tail_exponent(const DegreeDistribution& dist,
                           std::int64_t k_min = 0);

struct RateFit {
    double alpha = 0.0;         // slope of log mean-deficit vs log k
    double alpha_stderr = 0.0;
    bool log_model_wins = false;  // a + b log k beats C k^alpha on residuals
    double sse_power = 0.0;
    double sse_log = 0.0;
};

// ks: geometric grid of k values; deficits: positive mean deficits per k.
RateFit rate_of_convergence_fit(const std::vector<double>& ks,
                                const std::vector<double>& deficits);

// Exactly 2(reached-1)/n.
double mean_tree_degree(const ShortestPathTree& t);

// Empirical pmf of tree degrees. Over all n vertices by default (unreached
// vertices count as degree 0); reached_only restricts to the reached set,
// matching comparisons against limit laws conditioned on survival.
DegreeDistribution empirical_tree_degrees(const ShortestPathTree& t,
                                          bool reached_only = false);

struct RecenteringResult {
    std::vector<double> consecutive_ks;  // between successive n values
    double mean = 0.0;                   // pooled over all n
    double fitted_offset = 0.0;          // location shift applied before oracle KS
    double oracle_ks = -1.0;             // -1 when no oracle was given
};

// per_n_samples: recentered path-length samples for an increasing n grid;
// oracle: optional Monte Carlo samples of the limit law. fit_offset shifts
// the pooled samples by the difference of medians before the oracle KS, for
// settings where the recentering constant is unknown.
RecenteringResult recentering_check(
    const std::vector<std::vector<double>>& per_n_samples,
    const std::vector<double>* oracle, bool fit_offset);

struct StatRow {
    std::string experiment;
    std::uint64_t seed = 0;
    std::string statistic;
    double value = 0.0;
    double stderr_ = 0.0;
};

void write_stats_csv(const std::string& path,
                     const std::vector<std::string>& header_comments,
                     const std::vector<StatRow>& rows);

}  // namespace fpp
