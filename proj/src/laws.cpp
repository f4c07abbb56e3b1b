#include "fpp/laws.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fpp/numerics.hpp"

namespace fpp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();
constexpr std::size_t kCcdfCacheSize = 1 << 16;

// sum_{k=lo}^{hi} k^(-a), inclusive, any real a. Direct below a pivot,
// Euler-Maclaurin for the long middle stretch.
double power_sum(double a, std::int64_t lo, std::int64_t hi) {
    if (lo < 1 || hi < lo) return 0.0;
    const std::int64_t pivot = 64;
    KahanSum acc;
    const std::int64_t direct_hi = std::min(hi, pivot - 1);
    for (std::int64_t k = lo; k <= direct_hi; ++k)
        acc.add(std::pow(static_cast<double>(k), -a));
    if (hi < pivot) return acc.value();
    const std::int64_t p = std::max(lo, pivot);
    if (hi - p < 32) {
        for (std::int64_t k = p; k <= hi; ++k)
            acc.add(std::pow(static_cast<double>(k), -a));
        return acc.value();
    }
    const double x0 = static_cast<double>(p), x1 = static_cast<double>(hi);
    double em;
    if (a == 1.0)
        em = std::log(x1 / x0);
    else
        em = (std::pow(x1, 1.0 - a) - std::pow(x0, 1.0 - a)) / (1.0 - a);
    em += 0.5 * (std::pow(x0, -a) + std::pow(x1, -a));
    em += (a / 12.0) * (std::pow(x0, -a - 1.0) - std::pow(x1, -a - 1.0));
    em -= (a * (a + 1.0) * (a + 2.0) / 720.0) *
          (std::pow(x0, -a - 3.0) - std::pow(x1, -a - 3.0));
    em += (a * (a + 1.0) * (a + 2.0) * (a + 3.0) * (a + 4.0) / 30240.0) *
          (std::pow(x0, -a - 5.0) - std::pow(x1, -a - 5.0));
    acc.add(em);
    return acc.value();
}

}  // namespace

// ---------------------------------------------------------------------------
// WeightLaw

WeightLaw WeightLaw::powered_exponential(double s) {
    if (!(s > 0.0))
        throw std::invalid_argument("powered_exponential: s must be positive");
    return WeightLaw(Kind::powered_exponential, s);
}

WeightLaw WeightLaw::parse(const std::string& text) {
    if (text == "exponential" || text == "exp") return exponential();
    if (text == "uniform") return uniform01();
    if (text == "constant" || text == "constant1") return constant_one();
    if (text.rfind("powexp:", 0) == 0)
        return powered_exponential(std::stod(text.substr(7)));
    throw std::invalid_argument("unknown weight law '" + text + "'");
}

double WeightLaw::sample(RngStream& rng) const {
    switch (kind_) {
        case Kind::exponential: return rng.exponential();
        case Kind::powered_exponential: {
            const double e = rng.exponential();
            return s_ == 1.0 ? e : std::pow(e, s_);
        }
        case Kind::uniform01: return rng.u01_open();
        case Kind::constant_one: return 1.0;
    }
    return 1.0;
}

double WeightLaw::laplace(double lambda) const {
    if (lambda < 0.0) throw std::invalid_argument("laplace: lambda < 0");
    switch (kind_) {
        case Kind::exponential: return 1.0 / (1.0 + lambda);
        case Kind::uniform01:
            return lambda == 0.0 ? 1.0 : (1.0 - std::exp(-lambda)) / lambda;
        case Kind::constant_one: return std::exp(-lambda);
        case Kind::powered_exponential: {
            const double s = s_;
            return integrate(
                [lambda, s](double t) {
                    return std::exp(-lambda * std::pow(t, s) - t);
                },
                0.0, 60.0, 1e-12);
        }
    }
    return 0.0;
}

double WeightLaw::mean() const {
    switch (kind_) {
        case Kind::exponential: return 1.0;
        case Kind::powered_exponential: return std::tgamma(1.0 + s_);
        case Kind::uniform01: return 0.5;
        case Kind::constant_one: return 1.0;
    }
    return 0.0;
}

std::string WeightLaw::describe() const {
    switch (kind_) {
        case Kind::exponential: return "exponential";
        case Kind::powered_exponential: {
            std::ostringstream os;
            os << "powexp:" << s_;
            return os.str();
        }
        case Kind::uniform01: return "uniform";
        case Kind::constant_one: return "constant";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// DegreeLaw

DegreeLaw DegreeLaw::fixed(std::int64_t r) {
    if (r < 1) throw std::invalid_argument("fixed degree law: need r >= 1");
    DegreeLaw law;
    law.kind_ = Kind::fixed;
    law.fixed_r_ = r;
    return law;
}

DegreeLaw DegreeLaw::powerlaw(double tau, std::int64_t d_min, std::int64_t k_max) {
    if (!(tau > 2.0)) throw std::invalid_argument("powerlaw: need tau > 2");
    if (d_min < 1) throw std::invalid_argument("powerlaw: need d_min >= 1");
    if (k_max != 0 && k_max <= d_min)
        throw std::invalid_argument("powerlaw: need k_max > d_min (or 0 for unbounded)");
    DegreeLaw law;
    law.kind_ = Kind::powerlaw;
    law.exponent_ = tau;
    law.d_min_ = d_min;
    law.k_max_ = k_max;
    law.biased_ = false;
    law.norm_ = zeta_tail(tau, d_min);
    law.atom_ = k_max == 0 ? 0.0 : zeta_tail(tau, k_max) / law.norm_;
    law.build_powerlaw_cache();
    return law;
}

DegreeLaw DegreeLaw::explicit_pmf(std::vector<std::pair<std::int64_t, double>> table) {
    if (table.empty()) throw std::invalid_argument("explicit pmf: empty table");
    std::sort(table.begin(), table.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i].first < 0)
            throw std::invalid_argument("explicit pmf: negative degree");
        if (i && table[i].first == table[i - 1].first)
            throw std::invalid_argument("explicit pmf: duplicate degree");
        if (!(table[i].second >= 0.0))
            throw std::invalid_argument("explicit pmf: negative probability");
        sum += table[i].second;
    }
    if (std::fabs(sum - 1.0) > 1e-6)
        throw std::invalid_argument("explicit pmf: probabilities sum to " +
                                    std::to_string(sum) + ", expected 1");
    DegreeLaw law;
    law.kind_ = Kind::explicit_table;
    law.table_ = std::move(table);
    law.cdf_.reserve(law.table_.size());
    double run = 0.0;
    for (auto& [k, p] : law.table_) {
        p /= sum;
        run += p;
        law.cdf_.push_back(run);
    }
    law.cdf_.back() = 1.0;
    return law;
}

DegreeLaw DegreeLaw::from_pmf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pmf file '" + path + "'");
    std::vector<std::pair<std::int64_t, double>> table;
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream is(line);
        std::int64_t k;
        double p;
        if (!(is >> k) || !(is >> p))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 'k p_k'");
        std::string extra;
        if (is >> extra)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": trailing token '" + extra + "'");
        table.emplace_back(k, p);
    }
    if (table.empty())
        throw std::runtime_error(path + ": no pmf entries found");
    return explicit_pmf(std::move(table));
}

DegreeLaw DegreeLaw::parse(const std::string& text) {
    if (text.rfind("fixed:", 0) == 0) return fixed(std::stoll(text.substr(6)));
    if (text.rfind("file:", 0) == 0) return from_pmf_file(text.substr(5));
    if (text.rfind("powerlaw:", 0) == 0) {
        std::istringstream is(text.substr(9));
        std::string part;
        std::vector<std::string> parts;
        while (std::getline(is, part, ':')) parts.push_back(part);
        if (parts.size() < 2 || parts.size() > 3)
            throw std::invalid_argument("powerlaw spec: powerlaw:<tau>:<dmin>[:<kmax>]");
        const double tau = std::stod(parts[0]);
        const std::int64_t dmin = std::stoll(parts[1]);
        const std::int64_t kmax = parts.size() == 3 ? std::stoll(parts[2]) : kDefaultKmax;
        return powerlaw(tau, dmin, kmax);
    }
    throw std::invalid_argument("unknown degree law '" + text + "'");
}

void DegreeLaw::build_powerlaw_cache() {
    const std::int64_t span =
        k_max_ == 0 ? static_cast<std::int64_t>(kCcdfCacheSize)
                    : std::min<std::int64_t>(kCcdfCacheSize, k_max_ - d_min_ + 1);
    auto cache = std::make_shared<std::vector<double>>();
    cache->reserve(span);
    KahanSum below;  // running pmf mass over [d_min, k)
    for (std::int64_t i = 0; i < span; ++i) {
        const std::int64_t k = d_min_ + i;
        cache->push_back(std::max(0.0, 1.0 - below.value()));
        below.add(std::pow(static_cast<double>(k), -exponent_) / norm_);
    }
    ccdf_cache_ = std::move(cache);
}

double DegreeLaw::ccdf(std::int64_t k) const {
    if (k <= min_degree()) return 1.0;
    switch (kind_) {
        case Kind::fixed: return k <= fixed_r_ ? 1.0 : 0.0;
        case Kind::explicit_table: {
            double tail = 0.0;
            for (std::size_t i = table_.size(); i-- > 0 && table_[i].first >= k;)
                tail += table_[i].second;
            return tail;
        }
        case Kind::powerlaw: {
            if (k_max_ != 0 && k > k_max_) return 0.0;
            const std::int64_t i = k - d_min_;
            if (i >= 0 && i < static_cast<std::int64_t>(ccdf_cache_->size()))
                return (*ccdf_cache_)[i];
            if (k_max_ == 0) return zeta_tail(exponent_, k) / norm_;
            return (zeta_tail(exponent_, k) - zeta_tail(exponent_, k_max_)) / norm_ +
                   atom_;
        }
    }
    return 0.0;
}

double DegreeLaw::pmf(std::int64_t k) const {
    switch (kind_) {
        case Kind::fixed: return k == fixed_r_ ? 1.0 : 0.0;
        case Kind::explicit_table: {
            auto it = std::lower_bound(
                table_.begin(), table_.end(), k,
                [](const auto& e, std::int64_t v) { return e.first < v; });
            return it != table_.end() && it->first == k ? it->second : 0.0;
        }
        case Kind::powerlaw: {
            if (k < d_min_) return 0.0;
            if (k_max_ != 0) {
                if (k > k_max_) return 0.0;
                if (k == k_max_) return atom_;
            }
            return std::pow(static_cast<double>(k), -exponent_) / norm_;
        }
    }
    return 0.0;
}

std::int64_t DegreeLaw::sample(RngStream& rng) const {
    switch (kind_) {
        case Kind::fixed: return fixed_r_;
        case Kind::explicit_table: {
            const double u = rng.u01();
            const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
            return table_[std::min<std::size_t>(it - cdf_.begin(), table_.size() - 1)]
                .first;
        }
        case Kind::powerlaw: {
            // D = k iff ccdf(k+1) <= v < ccdf(k), v uniform on (0,1)
            const double v = rng.u01_open();
            const auto& cache = *ccdf_cache_;
            if (v > cache.back()) {
                auto it = std::lower_bound(cache.begin() + 1, cache.end(), v,
                                           [](double c, double x) { return c > x; });
                return d_min_ + static_cast<std::int64_t>(it - cache.begin()) - 1;
            }
            std::int64_t lo = d_min_ + static_cast<std::int64_t>(cache.size()) - 1;
            std::int64_t hi;  // smallest known k with ccdf(k+1) <= v
            if (k_max_ != 0) {
                if (v <= ccdf(k_max_)) return k_max_;
                hi = k_max_ - 1;
            } else {
                hi = lo;
                std::int64_t step = 1024;
                while (ccdf(hi + 1) > v) {
                    hi += step;
                    step *= 8;
                    if (hi > (std::int64_t{1} << 62))
                        throw std::runtime_error("powerlaw sample: tail search overflow");
                }
            }
            while (lo < hi) {
                const std::int64_t mid = lo + (hi - lo) / 2;
                if (ccdf(mid + 1) <= v)
                    hi = mid;
                else
                    lo = mid + 1;
            }
            return lo;
        }
    }
    return 0;
}

double DegreeLaw::mean() const {
    switch (kind_) {
        case Kind::fixed: return static_cast<double>(fixed_r_);
        case Kind::explicit_table: {
            double m = 0.0;
            for (const auto& [k, p] : table_) m += static_cast<double>(k) * p;
            return m;
        }
        case Kind::powerlaw: {
            if (k_max_ == 0) {
                if (exponent_ <= 2.0) return kInf;
                return zeta_tail(exponent_ - 1.0, d_min_) / norm_;
            }
            return power_sum(exponent_ - 1.0, d_min_, k_max_ - 1) / norm_ +
                   static_cast<double>(k_max_) * atom_;
        }
    }
    return 0.0;
}

double DegreeLaw::nu() const {
    switch (kind_) {
        case Kind::fixed: return static_cast<double>(fixed_r_) - 1.0;
        case Kind::explicit_table: {
            double m1 = 0.0, m2 = 0.0;
            for (const auto& [k, p] : table_) {
                m1 += static_cast<double>(k) * p;
                m2 += static_cast<double>(k) * static_cast<double>(k) * p;
            }
            if (m1 <= 0.0)
                throw std::domain_error("nu: degree law has zero mean");
            return (m2 - m1) / m1;
        }
        case Kind::powerlaw: {
            const double m1 = mean();
            if (!std::isfinite(m1)) return kInf;
            double m2;
            if (k_max_ == 0) {
                if (exponent_ <= 3.0) return kInf;
                m2 = zeta_tail(exponent_ - 2.0, d_min_) / norm_;
            } else {
                m2 = power_sum(exponent_ - 2.0, d_min_, k_max_ - 1) / norm_ +
                     static_cast<double>(k_max_) * static_cast<double>(k_max_) * atom_;
            }
            return (m2 - m1) / m1;
        }
    }
    return 0.0;
}

std::int64_t DegreeLaw::min_degree() const {
    switch (kind_) {
        case Kind::fixed: return fixed_r_;
        case Kind::explicit_table: return table_.front().first;
        case Kind::powerlaw: return d_min_;
    }
    return 0;
}

std::int64_t DegreeLaw::max_degree() const {
    switch (kind_) {
        case Kind::fixed: return fixed_r_;
        case Kind::explicit_table: return table_.back().first;
        case Kind::powerlaw: return k_max_ == 0 ? kUnbounded : k_max_;
    }
    return 0;
}

bool DegreeLaw::is_degenerate() const {
    return kind_ == Kind::fixed ||
           (kind_ == Kind::explicit_table && table_.size() == 1);
}

bool DegreeLaw::is_power_law() const { return kind_ == Kind::powerlaw; }

double DegreeLaw::power_law_exponent() const {
    if (kind_ != Kind::powerlaw)
        throw std::domain_error("power_law_exponent: not a power law");
    return exponent_;
}

bool DegreeLaw::is_size_biased() const {
    return kind_ == Kind::powerlaw && biased_;
}

double DegreeLaw::truncation_mass() const {
    if (kind_ != Kind::powerlaw || k_max_ == 0) return 0.0;
    return atom_ - std::pow(static_cast<double>(k_max_), -exponent_) / norm_;
}

std::string DegreeLaw::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::fixed: os << "fixed:" << fixed_r_; break;
        case Kind::explicit_table: os << "explicit[" << table_.size() << "]"; break;
        case Kind::powerlaw:
            os << (biased_ ? "sizebiased-powerlaw:" : "powerlaw:") << exponent_
               << ":" << d_min_ << ":" << k_max_;
            break;
    }
    return os.str();
}

DegreeLaw size_biased(const DegreeLaw& law) {
    switch (law.kind_) {
        case DegreeLaw::Kind::fixed:
            return law;  // a degenerate law is its own size-biasing
        case DegreeLaw::Kind::explicit_table: {
            const double m = law.mean();
            if (!(m > 0.0))
                throw std::domain_error("size_biased: law has zero mean");
            std::vector<std::pair<std::int64_t, double>> biased;
            for (const auto& [k, p] : law.table_)
                if (k > 0 && p > 0.0)
                    biased.emplace_back(k, static_cast<double>(k) * p / m);
            return DegreeLaw::explicit_pmf(std::move(biased));
        }
        case DegreeLaw::Kind::powerlaw: {
            const double m = law.mean();
            if (!std::isfinite(m))
                throw std::domain_error("size_biased: law has infinite mean");
            DegreeLaw out;
            out.kind_ = DegreeLaw::Kind::powerlaw;
            out.exponent_ = law.exponent_ - 1.0;
            out.d_min_ = law.d_min_;
            out.k_max_ = law.k_max_;
            out.biased_ = true;
            out.norm_ = law.norm_ * m;
            out.atom_ = law.k_max_ == 0
                            ? 0.0
                            : static_cast<double>(law.k_max_) * law.atom_ / m;
            // theoretical regime flag: base tau <= 3 means the ideal biased
            // law has infinite mean, whatever the truncation says
            out.infinite_mean_ = law.exponent_ <= 3.0;
            out.build_powerlaw_cache();
            return out;
        }
    }
    throw std::logic_error("size_biased: unreachable");
}

std::vector<double> sample_ppp_prefix(double s, std::int64_t count, RngStream& rng) {
    if (!(s > 0.0)) throw std::invalid_argument("sample_ppp_prefix: s must be > 0");
    if (count < 1) throw std::invalid_argument("sample_ppp_prefix: count must be >= 1");
    std::vector<double> points;
    points.reserve(count);
    double gamma_sum = 0.0;
    for (std::int64_t i = 0; i < count; ++i) {
        gamma_sum += rng.exponential();
        points.push_back(s == 1.0 ? gamma_sum : std::pow(gamma_sum, s));
    }
    return points;
}

}  // namespace fpp
