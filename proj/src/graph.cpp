#include "fpp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace fpp {

std::int64_t DegreeSequence::total() const {
    std::int64_t t = 0;
    for (auto d : degrees) t += d;
    return t;
}

void DegreeSequence::write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    for (auto d : degrees) out << d << '\n';
}

DegreeSequence DegreeSequence::read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    DegreeSequence seq;
    std::int64_t d;
    while (in >> d) {
        if (d < 0) throw std::runtime_error(path + ": negative degree");
        seq.degrees.push_back(d);
    }
    return seq;
}

DegreeSequence draw_degree_sequence(const DegreeLaw& law, std::int64_t n,
                                    RngStream& rng) {
    if (n < 2) throw std::invalid_argument("draw_degree_sequence: need n >= 2");
    DegreeSequence seq;
    seq.degrees.resize(n);
    std::int64_t total = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        seq.degrees[i] = law.sample(rng);
        total += seq.degrees[i];
    }
    if (total % 2 != 0) ++seq.degrees[rng.index(n)];
    return seq;
}

WeightedMultiGraph WeightedMultiGraph::configuration_model(
    const DegreeSequence& seq, RngStream& rng) {
    const std::int64_t total = seq.total();
    if (total % 2 != 0)
        throw std::invalid_argument("configuration model: total degree is odd");
    WeightedMultiGraph g;
    g.n_ = static_cast<std::int64_t>(seq.degrees.size());

    std::vector<std::int64_t> half;
    half.reserve(total);
    for (std::int64_t v = 0; v < g.n_; ++v)
        half.insert(half.end(), seq.degrees[v], v);
    for (std::int64_t i = total - 1; i > 0; --i)
        std::swap(half[i], half[rng.index(i + 1)]);

    g.edges_.reserve(total / 2);
    for (std::int64_t i = 0; i + 1 < total; i += 2)
        g.edges_.push_back({half[i], half[i + 1], 1.0});
    g.build_incidence();
    g.detect_multiplicity();
    return g;
}

WeightedMultiGraph WeightedMultiGraph::complete(std::int64_t n, double s,
                                                RngStream& rng,
                                                std::int64_t dense_cap) {
    if (n < 0) throw std::invalid_argument("complete graph: n < 0");
    if (!(s > 0.0)) throw std::invalid_argument("complete graph: s must be > 0");
    if (n >= dense_cap)
        throw std::length_error(
            "complete graph: n = " + std::to_string(n) + " needs " +
            std::to_string(n * (n - 1) / 2) +
            " materialized weights, over the dense cap (" +
            std::to_string(dense_cap) + "); lower n or raise the cap");
    WeightedMultiGraph g;
    g.n_ = n;
    g.dense_ = true;
    g.weights_attached_ = true;
    g.dense_w_.resize(n * (n - 1) / 2);
    if (s == 1.0) {
        for (auto& w : g.dense_w_) w = rng.exponential();
    } else {
        for (auto& w : g.dense_w_) w = std::pow(rng.exponential(), s);
    }
    return g;
}

WeightedMultiGraph WeightedMultiGraph::from_edges(std::int64_t n,
                                                  std::vector<Edge> edges) {
    WeightedMultiGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.weights_attached_ = true;
    for (const auto& e : g.edges_) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("from_edges: endpoint out of range");
        if (!(e.w > 0.0))
            throw std::invalid_argument("from_edges: weights must be positive");
    }
    g.build_incidence();
    g.detect_multiplicity();
    return g;
}

void WeightedMultiGraph::build_incidence() {
    inc_off_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
        ++inc_off_[e.u + 1];
        ++inc_off_[e.v + 1];
    }
    for (std::int64_t v = 0; v < n_; ++v) inc_off_[v + 1] += inc_off_[v];
    inc_other_.resize(edges_.size() * 2);
    inc_eid_.resize(edges_.size() * 2);
    std::vector<std::int64_t> cursor(inc_off_.begin(), inc_off_.end() - 1);
    for (std::int64_t eid = 0; eid < static_cast<std::int64_t>(edges_.size());
         ++eid) {
        const auto& e = edges_[eid];
        inc_other_[cursor[e.u]] = e.v;
        inc_eid_[cursor[e.u]++] = eid;
        inc_other_[cursor[e.v]] = e.u;
        inc_eid_[cursor[e.v]++] = eid;
    }
}

void WeightedMultiGraph::detect_multiplicity() {
    has_self_loops_ = false;
    has_multi_edges_ = false;
    std::vector<std::uint64_t> keys;
    keys.reserve(edges_.size());
    for (const auto& e : edges_) {
        if (e.u == e.v) has_self_loops_ = true;
        const std::uint64_t a = static_cast<std::uint64_t>(std::min(e.u, e.v));
        const std::uint64_t b = static_cast<std::uint64_t>(std::max(e.u, e.v));
        keys.push_back((a << 32) | b);
    }
    std::sort(keys.begin(), keys.end());
    has_multi_edges_ =
        std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

std::int64_t WeightedMultiGraph::edge_count() const {
    return dense_ ? static_cast<std::int64_t>(dense_w_.size())
                  : static_cast<std::int64_t>(edges_.size());
}

std::int64_t WeightedMultiGraph::degree(std::int64_t v) const {
    if (dense_) return n_ > 0 ? n_ - 1 : 0;
    return inc_off_[v + 1] - inc_off_[v];
}

Edge WeightedMultiGraph::edge(std::int64_t eid) const {
    if (!dense_) return edges_[eid];
    // invert the packed triangular index
    std::int64_t i = 0;
    std::int64_t rem = eid;
    while (rem >= n_ - 1 - i) {
        rem -= n_ - 1 - i;
        ++i;
    }
    return {i, i + 1 + rem, dense_w_[eid]};
}

void WeightedMultiGraph::attach_weights(const WeightLaw& law, RngStream& rng) {
    if (dense_) {
        for (auto& w : dense_w_) w = law.sample(rng);
    } else {
        for (auto& e : edges_) e.w = law.sample(rng);
    }
    weights_attached_ = true;
}

void WeightedMultiGraph::write_edge_list(const std::string& path) const {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    char buf[96];
    if (dense_) {
        for (std::int64_t i = 0; i < n_; ++i)
            for (std::int64_t j = i + 1; j < n_; ++j) {
                const int len = std::snprintf(buf, sizeof buf, "%lld %lld %.17g\n",
                                              static_cast<long long>(i),
                                              static_cast<long long>(j),
                                              dense_w_[dense_index(i, j)]);
                std::fwrite(buf, 1, len, f);
            }
    } else {
        for (const auto& e : edges_) {
            const int len = std::snprintf(buf, sizeof buf, "%lld %lld %.17g\n",
                                          static_cast<long long>(e.u),
                                          static_cast<long long>(e.v), e.w);
            std::fwrite(buf, 1, len, f);
        }
    }
    if (std::fclose(f) != 0) throw std::runtime_error("write failed for '" + path + "'");
}

WeightedMultiGraph WeightedMultiGraph::read_edge_list(const std::string& path,
                                                      std::int64_t n_hint) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<Edge> edges;
    std::int64_t n = n_hint > 0 ? n_hint : 0;
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const char* p = line.c_str();
        while (*p == ' ' || *p == '\t' || *p == '\r') ++p;
        if (*p == '\0') continue;
        char* end = nullptr;
        const long long u = std::strtoll(p, &end, 10);
        bool ok = end != p;
        p = end;
        const long long v = ok ? std::strtoll(p, &end, 10) : 0;
        ok = ok && end != p;
        p = end;
        const double w = ok ? std::strtod(p, &end) : 0.0;
        ok = ok && end != p;
        p = end;
        if (ok) {
            while (*p == ' ' || *p == '\t' || *p == '\r') ++p;
            ok = *p == '\0';
        }
        if (!ok)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 'u v weight'");
        if (u < 0 || v < 0 || !(w > 0.0))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": vertices must be >= 0 and weight > 0");
        edges.push_back({u, v, w});
        n = std::max(n, std::max<std::int64_t>(u, v) + 1);
    }
    return from_edges(n, std::move(edges));
}

}  // namespace fpp
