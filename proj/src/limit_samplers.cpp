#include "fpp/limit_samplers.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "fpp/numerics.hpp"

namespace fpp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

WPoolView::WPoolView(const SamplePool& pool) : vals_(pool.samples) {
    if (vals_.empty()) throw std::invalid_argument("WPoolView: empty pool");
    logs_.reserve(vals_.size());
    for (double w : vals_) {
        if (w < 0.0)
            throw std::invalid_argument("WPoolView: negative pool sample");
        logs_.push_back(w == 0.0 ? -kInf : std::log(w));
    }
}

CmFiniteSampler::CmFiniteSampler(const DegreeLaw& degree_law,
                                 const WPoolView& pool, double lambda,
                                 const WeightLaw& weight_law)
    : law_(degree_law), pool_(&pool), lambda_(lambda), weight_law_(weight_law) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("CmFiniteSampler: lambda must be > 0");
}

HatDraw CmFiniteSampler::draw(RngStream& rng) {
    return draw_k(law_.sample(rng), rng);
}

HatDraw CmFiniteSampler::draw_k(std::int64_t k, RngStream& rng) {
    if (k < 1) throw std::invalid_argument("draw_k: need k >= 1");
    include_score_.clear();
    double m = -kInf;
    for (std::int64_t i = 0; i < k; ++i) {
        const double lw = pool_->log_pick(rng);
        const double g = rng.gumbel();
        const double ly = lambda_ * weight_law_.sample(rng);
        m = std::max(m, g + lw - ly);
        include_score_.push_back(g + lw + ly);
    }
    if (m == -kInf) return {0, -kInf};  // every line extinct
    std::int64_t extra = 0;
    for (double b : include_score_) extra += b < m ? 1 : 0;
    return {1 + extra, m};
}

CompleteSampler::CompleteSampler(double s, const WPoolView& pool, double margin,
                                 std::int64_t max_points)
    : s_(s), rate_(lambda_s(s)), margin_(margin), max_points_(max_points),
      pool_(&pool) {
    if (!(margin > 0.0))
        throw std::invalid_argument("CompleteSampler: margin must be > 0");
}

HatDraw CompleteSampler::draw(RngStream& rng) {
    include_score_.clear();
    double m = -kInf;
    double gamma_sum = 0.0;
    for (std::int64_t i = 0; i < max_points_; ++i) {
        gamma_sum += rng.exponential();
        const double x = s_ == 1.0 ? gamma_sum : std::pow(gamma_sum, s_);
        const double lx = rate_ * x;
        const double score = rng.gumbel() + pool_->log_pick(rng);
        m = std::max(m, score - lx);
        include_score_.push_back(score + lx);
        if (m > -kInf && lx - m > margin_) {
            std::int64_t extra = 0;
            for (double b : include_score_) extra += b < m ? 1 : 0;
            return {1 + extra, m};
        }
    }
    throw std::runtime_error(
        "CompleteSampler: point budget " + std::to_string(max_points_) +
        " exhausted before the margin was reached (s=" + std::to_string(s_) +
        ", best score " + std::to_string(m) + "); raise max_points");
}

CmInfiniteSampler::CmInfiniteSampler(const DegreeLaw& degree_law,
                                     const SamplePool& v_pool)
    : law_(degree_law), pool_(&v_pool) {
    if (v_pool.target != PoolTarget::v_explosion)
        throw std::invalid_argument(
            "CmInfiniteSampler: pool is not an explosion-time pool");
    if (v_pool.samples.empty())
        throw std::invalid_argument("CmInfiniteSampler: empty pool");
}

HatDraw CmInfiniteSampler::draw(RngStream& rng) {
    return draw_k(law_.sample(rng), rng);
}

HatDraw CmInfiniteSampler::draw_k(std::int64_t k, RngStream& rng) {
    if (k < 1) throw std::invalid_argument("draw_k: need k >= 1");
    margin_.clear();
    double xi = kInf;
    for (std::int64_t i = 0; i < k; ++i) {
        const double v = pool_->pick(rng);
        const double e = rng.exponential();
        xi = std::min(xi, v + e);
        margin_.push_back(v - e);
    }
    std::int64_t extra = 0;
    for (double d : margin_) extra += d > xi ? 1 : 0;
    return {1 + extra, xi};
}

std::vector<double> bfst_limit_pmf(std::int64_t r) {
    if (r < 3) throw std::invalid_argument("bfst_limit_pmf: need r >= 3");
    const double rd = static_cast<double>(r);
    const double beta = 1.0 / (rd - 2.0);
    const double head =
        std::lgamma(rd) - std::log(rd - 2.0) - std::lgamma(rd + beta);
    std::vector<double> pmf;
    pmf.reserve(r);
    for (std::int64_t k = 1; k <= r; ++k) {
        const double kd = static_cast<double>(k);
        pmf.push_back(
            std::exp(head + std::lgamma(kd - 1.0 + beta) - std::lgamma(kd)));
    }
    return pmf;
}

namespace {

// f'(x) = E[D x^(D-1)]
double gf_derivative(const DegreeLaw& law, double x) {
    if (x >= 1.0) return law.mean();
    if (x <= 0.0) return 0.0;  // holds since min degree >= 3
    double acc = 0.0, mass = 0.0;
    const std::int64_t hi = law.max_degree();
    for (std::int64_t k = law.min_degree(); k <= hi; ++k) {
        const double p = law.pmf(k);
        if (p > 0.0) {
            acc += static_cast<double>(k) * p * std::pow(x, static_cast<double>(k - 1));
            mass += p;
        }
        if (mass > 1.0 - 1e-15) break;
        if (k > law.min_degree() + 64 &&
            static_cast<double>(k) * std::pow(x, static_cast<double>(k - 1)) <
                1e-18)
            break;  // geometric decay has killed the remaining terms
    }
    return acc;
}

}  // namespace

double gf_hatd_unit_weight(const DegreeLaw& degree_law, double z) {
    if (degree_law.min_degree() < 3)
        throw std::domain_error(
            "gf_hatd_unit_weight: identity needs degrees >= 3 a.s.");
    if (!(z >= 0.0 && z <= 1.0))
        throw std::invalid_argument("gf_hatd_unit_weight: z must be in [0,1]");
    const double fp1 = degree_law.mean();
    const auto integrand = [&](double t) {
        const double inner = gf_derivative(degree_law, t) / fp1;
        const double arg = t - (1.0 - z) * gf_derivative(degree_law, inner) / fp1;
        return gf_derivative(degree_law, arg);
    };
    return z * integrate(integrand, 0.0, 1.0, 1e-9);
}

double p_m_below_from_pool(const SamplePool& w_pool, double m) {
    return w_pool.laplace(std::exp(-m));
}

}  // namespace fpp
