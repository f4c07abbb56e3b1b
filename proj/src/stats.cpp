#include "fpp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fpp {

namespace {

template <class Int>
DegreeDistribution dist_from(const std::vector<Int>& v) {
    if (v.empty())
        throw std::invalid_argument("DegreeDistribution: empty sample set");
    std::map<std::int64_t, std::int64_t> counts;
    for (auto k : v) ++counts[static_cast<std::int64_t>(k)];
    std::vector<std::pair<std::int64_t, double>> pmf;
    pmf.reserve(counts.size());
    const double n = static_cast<double>(v.size());
    for (const auto& [k, c] : counts)
        pmf.emplace_back(k, static_cast<double>(c) / n);
    return DegreeDistribution::from_pmf(pmf, static_cast<std::int64_t>(v.size()));
}

struct LineFit {
    double intercept = 0.0, slope = 0.0, slope_stderr = 0.0, sse = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - f.intercept - f.slope * x[i];
        f.sse += r * r;
    }
    if (n > 2) f.slope_stderr = std::sqrt(f.sse / (n - 2) / sxx);
    return f;
}

// quadratic coefficient of the least-squares parabola
double quad_coefficient(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double s[5] = {static_cast<double>(n), 0, 0, 0, 0};
    double t[3] = {0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        double p = 1.0;
        for (int d = 1; d <= 4; ++d) {
            p *= x[i];
            s[d] += p;
        }
        t[0] += y[i];
        t[1] += y[i] * x[i];
        t[2] += y[i] * x[i] * x[i];
    }
    double m[3][4] = {{s[0], s[1], s[2], t[0]},
                      {s[1], s[2], s[3], t[1]},
                      {s[2], s[3], s[4], t[2]}};
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
        std::swap(m[c], m[piv]);
        if (m[c][c] == 0.0) return 0.0;
        for (int r = 0; r < 3; ++r) {
            if (r == c) continue;
            const double f = m[r][c] / m[c][c];
            for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return m[2][3] / m[2][2];
}

}  // namespace

DegreeDistribution DegreeDistribution::from_samples(
    const std::vector<std::int64_t>& v) {
    return dist_from(v);
}

DegreeDistribution DegreeDistribution::from_samples(
    const std::vector<std::int32_t>& v) {
    return dist_from(v);
}

DegreeDistribution DegreeDistribution::from_pmf(
    const std::vector<std::pair<std::int64_t, double>>& pmf,
    std::int64_t n_samples) {
    DegreeDistribution d;
    double sum = 0.0;
    for (const auto& [k, p] : pmf) {
        if (p < 0.0)
            throw std::invalid_argument("DegreeDistribution: negative mass");
        if (p > 0.0) d.pmf_[k] += p;
        sum += p;
    }
    if (std::fabs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("DegreeDistribution: pmf sums to " +
                                    std::to_string(sum));
    d.n_ = n_samples;
    return d;
}

double DegreeDistribution::pmf(std::int64_t k) const {
    const auto it = pmf_.find(k);
    return it == pmf_.end() ? 0.0 : it->second;
}

double DegreeDistribution::ccdf(std::int64_t k) const {
    double q = 0.0;
    for (auto it = pmf_.lower_bound(k); it != pmf_.end(); ++it) q += it->second;
    return q;
}

double DegreeDistribution::mean() const {
    double m = 0.0;
    for (const auto& [k, p] : pmf_) m += static_cast<double>(k) * p;
    return m;
}

void DegreeDistribution::write_csv(
    const std::string& path, const std::vector<std::string>& header) const {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    for (const auto& h : header) std::fprintf(f, "# %s\n", h.c_str());
    std::fprintf(f, "k,p_k,q_k\n");
    double q = 1.0;
    for (const auto& [k, p] : pmf_) {
        std::fprintf(f, "%lld,%.17g,%.17g\n", static_cast<long long>(k), p, q);
        q -= p;
    }
    if (std::fclose(f) != 0)
        throw std::runtime_error("write failed for '" + path + "'");
}

DegreeDistribution DegreeDistribution::read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<std::pair<std::int64_t, double>> pmf;
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#' || line.rfind("k,", 0) == 0) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream is(line);
        std::int64_t k;
        double p;
        if (!(is >> k >> p))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 'k,p_k[,q_k]'");
        pmf.emplace_back(k, p);
    }
    return from_pmf(pmf);
}

double tv_distance(const DegreeDistribution& a, const DegreeDistribution& b) {
    if (a.pmf_map().empty() || b.pmf_map().empty())
        throw std::invalid_argument("tv_distance: empty distribution");
    double tv = 0.0;
    auto ia = a.pmf_map().begin();
    auto ib = b.pmf_map().begin();
    while (ia != a.pmf_map().end() || ib != b.pmf_map().end()) {
        if (ib == b.pmf_map().end() ||
            (ia != a.pmf_map().end() && ia->first < ib->first)) {
            tv += ia->second;
            ++ia;
        } else if (ia == a.pmf_map().end() || ib->first < ia->first) {
            tv += ib->second;
            ++ib;
        } else {
            tv += std::fabs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return 0.5 * tv;
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("ks_statistic: empty sample set");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double ks = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        ks = std::max(ks, std::fabs(i / na - j / nb));
    }
    return ks;
}

double ks_statistic(std::vector<double> a,
                    const std::function<double(double)>& cdf) {
    if (a.empty()) throw std::invalid_argument("ks_statistic: empty sample set");
    std::sort(a.begin(), a.end());
    const double n = static_cast<double>(a.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double F = cdf(a[i]);
        ks = std::max(ks, std::max(std::fabs((i + 1) / n - F), std::fabs(i / n - F)));
    }
    return ks;
}

TailFit estimate_tail_exponent(const DegreeDistribution& dist,
                               std::int64_t k_min, std::int64_t k_max) {
    if (k_min <= 0) {
        k_min = dist.pmf_map().rbegin()->first;
        double q = 0.0;
        for (auto it = dist.pmf_map().rbegin(); it != dist.pmf_map().rend(); ++it) {
            q += it->second;
            if (q > 0.1) break;
            k_min = it->first;
        }
    }
    if (k_max <= 0) k_max = 10 * k_min;

    std::vector<double> lx, ly;
    double q = dist.ccdf(k_min);
    for (auto it = dist.pmf_map().lower_bound(k_min);
         it != dist.pmf_map().end() && it->first <= k_max; ++it) {
        if (q > 0.0 && it->first >= 1) {
            lx.push_back(std::log(static_cast<double>(it->first)));
            ly.push_back(std::log(q));
        }
        q -= it->second;
    }
    if (lx.size() < 10)
        throw std::runtime_error(
            "estimate_tail_exponent: insufficient tail data (" +
            std::to_string(lx.size()) + " support points in [" +
            std::to_string(k_min) + "," + std::to_string(k_max) + "])");
    const LineFit f = least_squares(lx, ly);
    TailFit out;
    out.tau_hat = 1.0 - f.slope;
    out.stderr_slope = f.slope_stderr;
    out.k_min = k_min;
    out.k_max = k_max;
    out.method = "ccdf-regression";
    out.curvature = quad_coefficient(lx, ly);
    out.power_law_plausible = std::fabs(out.curvature) < 0.25;
    return out;
}

TailFit hill_tail_exponent(const DegreeDistribution& dist, std::int64_t k_min) {
    if (k_min <= 0) {
        TailFit probe = estimate_tail_exponent(dist);
        k_min = probe.k_min;
    }
    double n_tail = 0.0, s = 0.0;
    for (auto it = dist.pmf_map().lower_bound(k_min); it != dist.pmf_map().end();
         ++it) {
        const double w =
            dist.n_samples() > 0 ? it->second * dist.n_samples() : it->second;
        n_tail += w;
        s += w * std::log(static_cast<double>(it->first) /
                          static_cast<double>(k_min));
    }
    if (!(s > 0.0) || !(n_tail > 0.0))
        throw std::runtime_error("hill_tail_exponent: insufficient tail data");
    TailFit out;
    const double alpha = n_tail / s;
    out.tau_hat = 1.0 + alpha;
    out.stderr_slope = alpha / std::sqrt(n_tail);
    out.k_min = k_min;
    out.method = "hill";
    return out;
}

RateFit rate_of_convergence_fit(const std::vector<double>& ks,
                                const std::vector<double>& deficits) {
    if (ks.size() != deficits.size() || ks.size() < 5)
        throw std::invalid_argument(
            "rate_of_convergence_fit: need >= 5 grid points");
    std::vector<double> lk, ld;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (!(deficits[i] > 0.0))
            throw std::invalid_argument(
                "rate_of_convergence_fit: deficits must be positive");
        lk.push_back(std::log(ks[i]));
        ld.push_back(std::log(deficits[i]));
    }
    const LineFit pw = least_squares(lk, ld);        // log d = c + alpha log k
    const LineFit lg = least_squares(lk, deficits);  // d = a + b log k

    RateFit out;
    out.alpha = pw.slope;
    out.alpha_stderr = pw.slope_stderr;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const double rp = deficits[i] - std::exp(pw.intercept + pw.slope * lk[i]);
        out.sse_power += rp * rp;
        const double rl = deficits[i] - (lg.intercept + lg.slope * lk[i]);
        out.sse_log += rl * rl;
    }
    out.log_model_wins = out.sse_log < out.sse_power;
    return out;
}

double mean_tree_degree(const ShortestPathTree& t) {
    const std::size_t n = t.tree_degree.size();
    if (n == 0) return 0.0;
    return 2.0 * static_cast<double>(t.reached - 1) / static_cast<double>(n);
}

DegreeDistribution empirical_tree_degrees(const ShortestPathTree& t,
                                          bool reached_only) {
    std::vector<std::int32_t> degrees;
    degrees.reserve(t.tree_degree.size());
    for (std::size_t v = 0; v < t.tree_degree.size(); ++v) {
        if (reached_only && !t.is_reached(static_cast<std::int64_t>(v))) continue;
        degrees.push_back(t.tree_degree[v]);
    }
    return DegreeDistribution::from_samples(degrees);
}

RecenteringResult recentering_check(
    const std::vector<std::vector<double>>& per_n_samples,
    const std::vector<double>* oracle, bool fit_offset) {
    if (per_n_samples.empty())
        throw std::invalid_argument("recentering_check: no sample sets");
    RecenteringResult out;
    std::vector<double> pooled;
    for (std::size_t i = 0; i < per_n_samples.size(); ++i) {
        if (per_n_samples[i].size() < 10)
            throw std::invalid_argument("recentering_check: insufficient samples");
        pooled.insert(pooled.end(), per_n_samples[i].begin(),
                      per_n_samples[i].end());
        if (i + 1 < per_n_samples.size())
            out.consecutive_ks.push_back(
                ks_statistic(per_n_samples[i], per_n_samples[i + 1]));
    }
    double s = 0.0;
    for (double x : pooled) s += x;
    out.mean = s / static_cast<double>(pooled.size());

    if (oracle != nullptr) {
        out.fitted_offset = 0.0;
        if (fit_offset) {
            auto med = [](std::vector<double> v) {
                std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
                return v[v.size() / 2];
            };
            out.fitted_offset = med(*oracle) - med(pooled);
        }
        std::vector<double> shifted = pooled;
        for (double& x : shifted) x += out.fitted_offset;
        out.oracle_ks = ks_statistic(shifted, *oracle);
    }
    return out;
}

void write_stats_csv(const std::string& path,
                     const std::vector<std::string>& header_comments,
                     const std::vector<StatRow>& rows) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    for (const auto& h : header_comments) std::fprintf(f, "# %s\n", h.c_str());
    std::fprintf(f, "experiment,seed,statistic,value,stderr\n");
    for (const auto& r : rows)
        std::fprintf(f, "%s,%llu,%s,%.17g,%.17g\n", r.experiment.c_str(),
                     static_cast<unsigned long long>(r.seed), r.statistic.c_str(),
                     r.value, r.stderr_);
    if (std::fclose(f) != 0)
        throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace fpp
