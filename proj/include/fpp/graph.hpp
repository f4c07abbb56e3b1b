#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpp/laws.hpp"
#include "fpp/rng.hpp"

namespace fpp {

struct DegreeSequence {
    std::vector<std::int64_t> degrees;
    std::int64_t total() const;
    void write(const std::string& path) const;
    static DegreeSequence read(const std::string& path);
};

// n i.i.d. draws; if the sum is odd one uniformly chosen entry is bumped by 1
// so the half-edges can be paired.
DegreeSequence draw_degree_sequence(const DegreeLaw& law, std::int64_t n,
                                    RngStream& rng);

struct Edge {
    std::int64_t u, v;
    double w;
};

// Multigraph with positive edge weights. Self-loops and parallel edges are
// kept as built; a self-loop contributes 2 to its endpoint's degree. Complete
// graphs are stored as a packed triangular weight array instead of an edge
// list, behind the same interface.
class WeightedMultiGraph {
public:
    static constexpr std::int64_t kDefaultDenseCap = 20'000;

    // Uniform pairing of half-edges via a full shuffle; weights all start at
    // 1 until attach_weights is called.
    static WeightedMultiGraph configuration_model(const DegreeSequence& seq,
                                                  RngStream& rng);
    // Simple complete graph with i.i.d. E^s weights; n >= dense_cap is
    // rejected since n(n-1)/2 weights get materialized.
    static WeightedMultiGraph complete(std::int64_t n, double s, RngStream& rng,
                                       std::int64_t dense_cap = kDefaultDenseCap);
    static WeightedMultiGraph from_edges(std::int64_t n, std::vector<Edge> edges);

    static WeightedMultiGraph read_edge_list(const std::string& path,
                                             std::int64_t n_hint = -1);
    void write_edge_list(const std::string& path) const;

    void attach_weights(const WeightLaw& law, RngStream& rng);

    std::int64_t vertex_count() const { return n_; }
    std::int64_t edge_count() const;
    std::int64_t degree(std::int64_t v) const;
    bool dense() const { return dense_; }
    bool has_self_loops() const { return has_self_loops_; }
    bool has_multi_edges() const { return has_multi_edges_; }
    bool weights_attached() const { return weights_attached_; }

    Edge edge(std::int64_t eid) const;
    double edge_weight(std::int64_t eid) const {
        return dense_ ? dense_w_[eid] : edges_[eid].w;
    }

    // f(other_endpoint, weight, edge_id); a self-loop is visited twice
    template <class F>
    void for_each_incident(std::int64_t v, F&& f) const {
        if (dense_) {
            for (std::int64_t u = 0; u < n_; ++u) {
                if (u == v) continue;
                const std::int64_t eid = dense_index(v, u);
                f(u, dense_w_[eid], eid);
            }
        } else {
            for (std::int64_t i = inc_off_[v]; i < inc_off_[v + 1]; ++i)
                f(inc_other_[i], edges_[inc_eid_[i]].w, inc_eid_[i]);
        }
    }

    std::int64_t dense_index(std::int64_t i, std::int64_t j) const {
        if (i > j) std::swap(i, j);
        return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
    }

private:
    WeightedMultiGraph() = default;
    void build_incidence();
    void detect_multiplicity();

    std::int64_t n_ = 0;
    bool dense_ = false;
    bool has_self_loops_ = false;
    bool has_multi_edges_ = false;
    bool weights_attached_ = false;

    std::vector<Edge> edges_;
    std::vector<std::int64_t> inc_off_;
    std::vector<std::int64_t> inc_other_;
    std::vector<std::int64_t> inc_eid_;

    std::vector<double> dense_w_;
};

}  // namespace fpp
