#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fpp/rng.hpp"

namespace fpp {

// Edge-weight laws. All are supported on the positive reals; constant_one is
// the only non-continuous one and callers that need a.s. unique shortest
// paths must check continuous().
class WeightLaw {
public:
    enum class Kind { exponential, powered_exponential, uniform01, constant_one };

    static WeightLaw exponential() { return WeightLaw(Kind::exponential, 1.0); }
    static WeightLaw powered_exponential(double s);
    static WeightLaw uniform01() { return WeightLaw(Kind::uniform01, 1.0); }
    static WeightLaw constant_one() { return WeightLaw(Kind::constant_one, 1.0); }
    // "exponential" | "powexp:<s>" | "uniform" | "constant"
    static WeightLaw parse(const std::string& text);

    Kind kind() const { return kind_; }
    double s() const { return s_; }
    bool continuous() const { return kind_ != Kind::constant_one; }

    double sample(RngStream& rng) const;
    double laplace(double lambda) const;  // E[exp(-lambda Y)]
    double mean() const;
    std::string describe() const;

private:
    WeightLaw(Kind k, double s) : kind_(k), s_(s) {}
    Kind kind_;
    double s_;
};

// Degree laws over nonnegative integers: degenerate, pure power-law tail
// p_k proportional to k^(-tau) on [d_min, k_max] with the beyond-k_max mass
// folded into k_max (k_max = 0 means unbounded support), or an explicit
// table. Size-biasing maps a power law to the tilted exponent tau - 1, so
// the biased variant is part of the same representation.
class DegreeLaw {
public:
    static constexpr std::int64_t kDefaultKmax = 10'000'000;

    static DegreeLaw fixed(std::int64_t r);
    static DegreeLaw powerlaw(double tau, std::int64_t d_min,
                              std::int64_t k_max = kDefaultKmax);
    static DegreeLaw explicit_pmf(std::vector<std::pair<std::int64_t, double>> table);
    static DegreeLaw from_pmf_file(const std::string& path);
    // "fixed:<r>" | "powerlaw:<tau>:<dmin>[:<kmax>]" | "file:<path>"
    static DegreeLaw parse(const std::string& text);

    std::int64_t sample(RngStream& rng) const;
    double pmf(std::int64_t k) const;
    double ccdf(std::int64_t k) const;  // P(D >= k)
    double mean() const;                // +inf when the law has infinite mean
    // nu = E[D(D-1)]/E[D], the mean forward degree after size-biasing;
    // +inf when the required moment diverges.
    double nu() const;
    bool infinite_mean() const { return infinite_mean_; }

    std::int64_t min_degree() const;
    std::int64_t max_degree() const;  // INT64_MAX for unbounded support
    bool is_degenerate() const;
    bool is_power_law() const;
    // tau for a base power law, tau - 1 after size-biasing
    double power_law_exponent() const;
    bool is_size_biased() const;
    double truncation_mass() const;  // mass folded into k_max (power laws)
    std::string describe() const;

    friend DegreeLaw size_biased(const DegreeLaw& law);

private:
    enum class Kind { fixed, powerlaw, explicit_table };

    DegreeLaw() = default;
    void build_powerlaw_cache();

    Kind kind_ = Kind::fixed;
    std::int64_t fixed_r_ = 1;

    // power law state; exponent_ is tau for the base law, tau-1 once biased
    double exponent_ = 0.0;
    std::int64_t d_min_ = 1;
    std::int64_t k_max_ = 0;  // 0 = unbounded
    bool biased_ = false;
    double norm_ = 1.0;       // pmf(k) = k^-exponent_ / norm_ below k_max
    double atom_ = 0.0;       // pmf at k_max (folded tail), 0 if unbounded
    // cached ccdf over [d_min, d_min + cache size); strictly decreasing
    std::shared_ptr<const std::vector<double>> ccdf_cache_;

    // explicit table state
    std::vector<std::pair<std::int64_t, double>> table_;
    std::vector<double> cdf_;

    bool infinite_mean_ = false;
};

DegreeLaw size_biased(const DegreeLaw& law);

// Ordered points X_i = (E_1 + ... + E_i)^s of the weak-disorder point
// process; strictly increasing for any s > 0.
std::vector<double> sample_ppp_prefix(double s, std::int64_t count, RngStream& rng);

}  // namespace fpp
