#include "fpp/pools.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fpp/numerics.hpp"
#include "fpp/stats.hpp"

namespace fpp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Draws pool indices in shuffled cyclic order so every member is reused
// equally often within a sweep; keeps the pool mean from random-walking.
class BalancedIndexer {
public:
    BalancedIndexer(std::size_t n, RngStream& rng) : rng_(rng), order_(n) {
        for (std::size_t i = 0; i < n; ++i) order_[i] = i;
        reshuffle();
    }
    std::size_t next() {
        if (pos_ == order_.size()) reshuffle();
        return order_[pos_++];
    }

private:
    void reshuffle() {
        for (std::size_t i = order_.size() - 1; i > 0; --i)
            std::swap(order_[i], order_[rng_.index(i + 1)]);
        pos_ = 0;
    }
    RngStream& rng_;
    std::vector<std::size_t> order_;
    std::size_t pos_ = 0;
};

// Runs full refresh sweeps of `step(old, fresh)` until successive sweeps
// agree in KS or the sweep budget runs out. The threshold is floored at the
// two-sample sampling resolution ~2/sqrt(size): below that the statistic is
// pure noise and extra sweeps only let the unrenormalized mean random-walk.
template <class Step>
void iterate_pool(SamplePool& pool, const PoolOptions& opt, Step&& step) {
    const double threshold = std::max(
        opt.converge_ks, 2.0 / std::sqrt(static_cast<double>(pool.samples.size())));
    std::vector<double> next(pool.samples.size());
    for (std::int64_t t = 0; t < opt.max_sweeps; ++t) {
        step(pool.samples, next);
        pool.last_sweep_ks = ks_statistic(pool.samples, next);
        pool.samples.swap(next);
        ++pool.sweeps;
        if (pool.last_sweep_ks < threshold) break;
    }
}

void check_w_mean(const SamplePool& pool) {
    const double m = pool.mean();
    if (!(m > 0.9 && m < 1.1))
        throw std::runtime_error(
            "population dynamics diagnostic failure: pool mean " +
            std::to_string(m) + " drifted outside [0.9, 1.1]");
}

}  // namespace

double lambda_s(double s) {
    if (!(s > 0.0)) throw std::invalid_argument("lambda_s: s must be > 0");
    return std::exp(s * std::lgamma(1.0 + 1.0 / s));
}

double mu_s_laplace(double s, double lambda) {
    if (!(s > 0.0)) throw std::invalid_argument("mu_s_laplace: s must be > 0");
    if (!(lambda > 0.0))
        throw std::invalid_argument("mu_s_laplace: lambda must be > 0");
    // substitute x = t^s: integral of e^(-lambda t^s) dt over t > 0
    const double cutoff = std::pow(60.0 / lambda, 1.0 / s);
    return integrate(
        [s, lambda](double t) { return std::exp(-lambda * std::pow(t, s)); },
        0.0, cutoff, 1e-10);
}

double solve_malthusian(double nu, const WeightLaw& weight_law) {
    if (!(nu > 1.0))
        throw std::domain_error(
            "no Malthusian parameter: nu = " + std::to_string(nu) +
            " is not > 1 (subcritical or critical growth)");
    double lambda;
    switch (weight_law.kind()) {
        case WeightLaw::Kind::exponential:
            lambda = nu - 1.0;
            break;
        case WeightLaw::Kind::constant_one:
            lambda = std::log(nu);
            break;
        default: {
            double lo = 0.0, hi = 1.0;
            while (nu * weight_law.laplace(hi) > 1.0) {
                lo = hi;
                hi *= 2.0;
                if (hi > 1e9)
                    throw std::runtime_error("solve_malthusian: no bracket found");
            }
            for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
                const double mid = 0.5 * (lo + hi);
                if (nu * weight_law.laplace(mid) > 1.0)
                    lo = mid;
                else
                    hi = mid;
            }
            lambda = 0.5 * (lo + hi);
        }
    }
    const double residual = std::fabs(nu * weight_law.laplace(lambda) - 1.0);
    if (residual > 1e-10)
        throw std::runtime_error("solve_malthusian: residual " +
                                 std::to_string(residual) + " exceeds 1e-10");
    return lambda;
}

LimitParams limit_params_cm(const DegreeLaw& degree_law,
                            const WeightLaw& weight_law) {
    LimitParams p;
    p.nu = degree_law.nu();
    if (!std::isfinite(p.nu))
        throw std::domain_error(
            "limit_params_cm: nu diverges; this is the explosive regime");
    p.lambda = solve_malthusian(p.nu, weight_law);
    return p;
}

LimitParams limit_params_complete(double s) {
    LimitParams p;
    p.s = s;
    p.lambda_s = lambda_s(s);
    p.lambda = p.lambda_s;
    const double residual = std::fabs(mu_s_laplace(s, p.lambda_s) - 1.0);
    if (residual > 1e-8)
        throw std::runtime_error("limit_params_complete: quadrature residual " +
                                 std::to_string(residual) + " exceeds 1e-8");
    return p;
}

double SamplePool::mean() const {
    KahanSum s;
    for (double x : samples) s.add(x);
    return s.value() / static_cast<double>(samples.size());
}

double SamplePool::laplace(double u) const {
    KahanSum s;
    for (double x : samples) s.add(std::exp(-u * x));
    return s.value() / static_cast<double>(samples.size());
}

SamplePool solve_w_cm(const DegreeLaw& degree_law, const WeightLaw& weight_law,
                      double lambda, const PoolOptions& opt, RngStream& rng) {
    const DegreeLaw biased = size_biased(degree_law);
    if (biased.infinite_mean() || !std::isfinite(biased.mean()))
        throw std::domain_error(
            "solve_w_cm: size-biased offspring has infinite mean; this fixed "
            "point needs the finite-variance regime");
    if (!(degree_law.nu() > 1.0))
        throw std::domain_error("solve_w_cm: nu <= 1, trivial fixed point only");
    if (!(lambda > 0.0)) throw std::invalid_argument("solve_w_cm: lambda <= 0");

    SamplePool pool;
    pool.target = PoolTarget::w_cm;
    pool.lambda = lambda;
    pool.degree_law = degree_law.describe();
    pool.weight_law = weight_law.describe();
    pool.seed = rng.seed();
    pool.stream_id = rng.stream_id();
    pool.samples.assign(opt.size, 1.0);

    BalancedIndexer pick(opt.size, rng);
    iterate_pool(pool, opt,
                 [&](const std::vector<double>& old, std::vector<double>& out) {
                     for (auto& x : out) {
                         const std::int64_t n = biased.sample(rng) - 1;
                         double acc = 0.0;
                         for (std::int64_t i = 0; i < n; ++i)
                             acc += std::exp(-lambda * weight_law.sample(rng)) *
                                    old[pick.next()];
                         x = acc;
                     }
                 });
    check_w_mean(pool);
    return pool;
}

SamplePool solve_w_complete(double s, const PoolOptions& opt, RngStream& rng,
                            double term_epsilon) {
    if (!(s > 0.0)) throw std::invalid_argument("solve_w_complete: s must be > 0");
    if (!(term_epsilon > 0.0 && term_epsilon < 1.0))
        throw std::invalid_argument("solve_w_complete: bad term_epsilon");
    const double rate = lambda_s(s);

    SamplePool pool;
    pool.target = PoolTarget::w_complete;
    pool.s = s;
    pool.lambda = rate;
    pool.seed = rng.seed();
    pool.stream_id = rng.stream_id();
    pool.samples.assign(opt.size, 1.0);

    BalancedIndexer pick(opt.size, rng);
    iterate_pool(pool, opt,
                 [&](const std::vector<double>& old, std::vector<double>& out) {
                     for (auto& x : out) {
                         double acc = 0.0;
                         double gamma_sum = 0.0;
                         for (;;) {
                             gamma_sum += rng.exponential();
                             const double xi =
                                 s == 1.0 ? gamma_sum : std::pow(gamma_sum, s);
                             const double mult = std::exp(-rate * xi);
                             if (mult < term_epsilon) break;
                             acc += mult * old[pick.next()];
                         }
                         x = acc;
                     }
                 });
    check_w_mean(pool);
    return pool;
}

namespace {

// Size-biased offspring law for the explosion fixed point, with the
// truncation removed: explosion needs the unbounded infinite-mean tail, a
// capped D* has finite mean and the series diverges instead of converging.
DegreeLaw unbounded_biased(const DegreeLaw& degree_law) {
    if (!degree_law.is_power_law() || degree_law.is_size_biased())
        throw std::domain_error(
            "explosion fixed point: needs an i.i.d. power-law degree base");
    const double tau = degree_law.power_law_exponent();
    if (!(tau > 2.0 && tau < 3.0))
        throw std::domain_error(
            "explosion fixed point: defined only for tau in (2,3), got tau = " +
            std::to_string(tau));
    if (degree_law.min_degree() < 2)
        throw std::domain_error("explosion fixed point: need degrees >= 2");
    return size_biased(DegreeLaw::powerlaw(tau, degree_law.min_degree(), 0));
}

}  // namespace

SamplePool solve_v_minrec(const DegreeLaw& degree_law, const PoolOptions& opt,
                          RngStream& rng) {
    const DegreeLaw biased = unbounded_biased(degree_law);

    SamplePool pool;
    pool.target = PoolTarget::v_explosion;
    pool.degree_law = degree_law.describe();
    pool.weight_law = "exponential";
    pool.seed = rng.seed();
    pool.stream_id = rng.stream_id();
    // The min map is translation-equivariant: every upward translate of a
    // fixed point is again a fixed point, and iteration keeps the lower
    // support edge of its starting pool. The explosion time is the solution
    // whose support touches 0, so the pool starts there and the profile
    // grows upward into the anchored wave.
    pool.samples.assign(opt.size, 0.0);

    // Mixture machinery: a candidate is E + V with V uniform on the old
    // pool, so the min over N candidates has cdf 1 - (1 - G(t))^N with
    //   G(t) = (1/P) sum_{w <= t} (1 - e^{-(t-w)}).
    // Between consecutive sorted pool values G inverts in closed form:
    // with j+1 values below t, G(t) = g gives t = lse[j] - log(j+1 - gP).
    std::vector<double> sorted;
    std::vector<double> lse;   // prefix log-sum-exp of sorted values
    std::vector<double> gpts;  // G evaluated at the sorted pool values
    auto rebuild = [&](const std::vector<double>& old) {
        sorted = old;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t p = sorted.size();
        lse.resize(p);
        gpts.resize(p);
        double run = -kInf;
        for (std::size_t i = 0; i < p; ++i) {
            const double a = std::max(run, sorted[i]);
            run = a + std::log(std::exp(run - a) + std::exp(sorted[i] - a));
            lse[i] = run;
            gpts[i] = i == 0 ? 0.0
                             : (static_cast<double>(i) -
                                std::exp(lse[i - 1] - sorted[i])) /
                                   static_cast<double>(p);
        }
    };

    iterate_pool(pool, opt,
                 [&](const std::vector<double>& old, std::vector<double>& out) {
                     rebuild(old);
                     const double p = static_cast<double>(sorted.size());
                     for (auto& x : out) {
                         const std::int64_t n = biased.sample(rng) - 1;
                         const double u = rng.u01_open();
                         // g = 1 - u^(1/n), stable for huge n
                         const double g = -std::expm1(std::log(u) /
                                                      static_cast<double>(n));
                         auto it = std::upper_bound(gpts.begin(), gpts.end(), g);
                         const std::size_t j = (it - gpts.begin()) - 1;
                         x = lse[j] - std::log(static_cast<double>(j + 1) - g * p);
                     }
                 });
    for (double x : pool.samples)
        if (!(x > 0.0))
            throw std::runtime_error("solve_v_minrec: nonpositive sample");
    return pool;
}

SamplePool solve_v_series(const DegreeLaw& degree_law, std::int64_t size,
                          RngStream& rng, double tail_epsilon) {
    const DegreeLaw biased = unbounded_biased(degree_law);
    if (!(tail_epsilon > 0.0))
        throw std::invalid_argument("solve_v_series: bad tail_epsilon");

    // conditional expected remainder after reaching denominator S is at most
    // about 2 S^(alpha-1) / (L (1 - 2^(alpha-1))) where the offspring
    // overshoot tail is P(D*-2 > x) ~ L x^-alpha
    const double tau = degree_law.power_law_exponent();
    const double alpha = tau - 2.0;
    const double x0 = 1e3;
    const double L = biased.ccdf(static_cast<std::int64_t>(x0) + 3) *
                     std::pow(x0, alpha);
    const double c_tail = 2.0 / (L * (1.0 - std::pow(2.0, alpha - 1.0)));
    const double s_stop = std::pow(tail_epsilon / c_tail, 1.0 / (alpha - 1.0));

    SamplePool pool;
    pool.target = PoolTarget::v_explosion;
    pool.degree_law = degree_law.describe();
    pool.weight_law = "exponential";
    pool.seed = rng.seed();
    pool.stream_id = rng.stream_id();
    pool.samples.resize(size);
    pool.sweeps = 1;

    for (auto& x : pool.samples) {
        // term i has denominator 1 + sum_{j<=i} (D*_j - 2): vertex i is
        // revealed first, then the race over its denom_i active edges runs
        double denom = 1.0;
        KahanSum acc;
        do {
            denom += static_cast<double>(biased.sample(rng) - 2);
            acc.add(rng.exponential() / denom);
        } while (denom < s_stop);
        x = acc.value();
    }
    return pool;
}

void SamplePool::save(const std::string& path) const {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    const char* name = target == PoolTarget::w_cm         ? "w-cm"
                       : target == PoolTarget::w_complete ? "w-complete"
                                                          : "v";
    std::fprintf(f, "# target=%s\n", name);
    std::fprintf(f, "# s=%.17g\n# lambda=%.17g\n", s, lambda);
    std::fprintf(f, "# degree_law=%s\n# weight_law=%s\n",
                 degree_law.empty() ? "-" : degree_law.c_str(),
                 weight_law.empty() ? "-" : weight_law.c_str());
    std::fprintf(f, "# size=%zu\n# sweeps=%lld\n# last_sweep_ks=%.17g\n",
                 samples.size(), static_cast<long long>(sweeps), last_sweep_ks);
    std::fprintf(f, "# seed=%llu\n# stream=%llu\n",
                 static_cast<unsigned long long>(seed),
                 static_cast<unsigned long long>(stream_id));
    for (double x : samples) std::fprintf(f, "%.17g\n", x);
    if (std::fclose(f) != 0)
        throw std::runtime_error("write failed for '" + path + "'");
}

SamplePool SamplePool::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    SamplePool pool;
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto grab = [&](const char* key) -> const char* {
                const std::string pat = std::string("# ") + key + "=";
                return line.rfind(pat, 0) == 0 ? line.c_str() + pat.size()
                                               : nullptr;
            };
            if (const char* v = grab("target")) {
                const std::string t(v);
                if (t == "w-cm") pool.target = PoolTarget::w_cm;
                else if (t == "w-complete") pool.target = PoolTarget::w_complete;
                else if (t == "v") pool.target = PoolTarget::v_explosion;
                else
                    throw std::runtime_error(path + ": unknown pool target '" +
                                             t + "'");
            } else if (const char* v2 = grab("s")) pool.s = std::stod(v2);
            else if (const char* v3 = grab("lambda")) pool.lambda = std::stod(v3);
            else if (const char* v4 = grab("degree_law")) pool.degree_law = v4;
            else if (const char* v5 = grab("weight_law")) pool.weight_law = v5;
            else if (const char* v6 = grab("sweeps")) pool.sweeps = std::stoll(v6);
            else if (const char* v7 = grab("seed")) pool.seed = std::stoull(v7);
            else if (const char* v8 = grab("stream")) pool.stream_id = std::stoull(v8);
            else if (const char* v9 = grab("last_sweep_ks"))
                pool.last_sweep_ks = std::stod(v9);
            continue;
        }
        try {
            pool.samples.push_back(std::stod(line));
        } catch (const std::exception&) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected one real per line");
        }
    }
    if (pool.samples.empty())
        throw std::runtime_error(path + ": pool file has no samples");
    return pool;
}

}  // namespace fpp
