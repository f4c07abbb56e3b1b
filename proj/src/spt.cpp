#include "fpp/spt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <stdexcept>

namespace fpp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_source(const WeightedMultiGraph& g, std::int64_t source) {
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("source vertex out of range");
}

void finalize(const WeightedMultiGraph& g, ShortestPathTree& t) {
    const std::int64_t n = g.vertex_count();
    t.tree_degree.assign(n, 0);
    t.reached = 0;
    for (std::int64_t v = 0; v < n; ++v) {
        if (t.hops[v] < 0) continue;
        ++t.reached;
        if (v == t.source) continue;
        ++t.tree_degree[v];
        ++t.tree_degree[t.parent[v]];
    }
}

// Dijkstra over the packed triangular weights: linear-scan selection, no heap.
void dijkstra_dense(const WeightedMultiGraph& g, std::int64_t source,
                    std::int64_t excluded, ShortestPathTree& t) {
    const std::int64_t n = g.vertex_count();
    std::vector<char> settled(n, 0);
    if (excluded >= 0) settled[excluded] = 1;
    t.dist[source] = 0.0;
    t.hops[source] = 0;
    for (;;) {
        std::int64_t best = -1;
        double bd = kInf;
        for (std::int64_t v = 0; v < n; ++v)
            if (!settled[v] && t.dist[v] < bd) {
                bd = t.dist[v];
                best = v;
            }
        if (best < 0) break;
        settled[best] = 1;
        const double d0 = t.dist[best];
        for (std::int64_t u = 0; u < n; ++u) {
            if (settled[u]) continue;
            const std::int64_t eid = g.dense_index(best, u);
            const double nd = d0 + g.edge_weight(eid);
            if (nd < t.dist[u]) {
                t.dist[u] = nd;
                t.parent[u] = best;
                t.parent_edge[u] = eid;
                t.hops[u] = t.hops[best] + 1;
            }
        }
    }
}

void dijkstra_sparse(const WeightedMultiGraph& g, std::int64_t source,
                     std::int64_t excluded, ShortestPathTree& t) {
    using Item = std::pair<double, std::int64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    std::vector<char> settled(g.vertex_count(), 0);
    t.dist[source] = 0.0;
    t.hops[source] = 0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (settled[v] || d > t.dist[v]) continue;  // lazily deleted entry
        settled[v] = 1;
        g.for_each_incident(v, [&](std::int64_t u, double w, std::int64_t eid) {
            if (u == excluded || settled[u]) return;
            const double nd = d + w;
            if (nd < t.dist[u]) {
                t.dist[u] = nd;
                t.parent[u] = v;
                t.parent_edge[u] = eid;
                t.hops[u] = t.hops[v] + 1;
                heap.push({nd, u});
            }
        });
    }
}

ShortestPathTree run_dijkstra(const WeightedMultiGraph& g, std::int64_t source,
                              std::int64_t excluded) {
    check_source(g, source);
    const std::int64_t n = g.vertex_count();
    ShortestPathTree t;
    t.source = source;
    t.parent.assign(n, -1);
    t.parent_edge.assign(n, -1);
    t.dist.assign(n, kInf);
    t.hops.assign(n, -1);
    if (g.dense())
        dijkstra_dense(g, source, excluded, t);
    else
        dijkstra_sparse(g, source, excluded, t);
    if (excluded >= 0) {
        t.dist[excluded] = kInf;
        t.hops[excluded] = -1;
        t.parent[excluded] = -1;
        t.parent_edge[excluded] = -1;
    }
    finalize(g, t);
    return t;
}

}  // namespace

ShortestPathTree shortest_path_tree(const WeightedMultiGraph& g,
                                    std::int64_t source) {
    return run_dijkstra(g, source, -1);
}

ShortestPathTree bfst(const WeightedMultiGraph& g, std::int64_t source,
                      RngStream& rng) {
    check_source(g, source);
    const std::uint64_t key_seed = rng.next_u64();
    const std::uint64_t key_stream = rng.next_u64();
    const auto edge_key = [&](std::int64_t eid) {
        return RngStream::keyed_u01(key_seed, key_stream,
                                    static_cast<std::uint64_t>(eid));
    };

    const std::int64_t n = g.vertex_count();
    ShortestPathTree t;
    t.source = source;
    t.parent.assign(n, -1);
    t.parent_edge.assign(n, -1);
    t.dist.assign(n, kInf);
    t.hops.assign(n, -1);

    std::vector<double> noise(n, kInf);
    using Item = std::pair<std::pair<std::int32_t, double>, std::int64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    std::vector<char> settled(n, 0);
    t.hops[source] = 0;
    t.dist[source] = 0.0;
    noise[source] = 0.0;
    heap.push({{0, 0.0}, source});
    while (!heap.empty()) {
        const auto [dn, v] = heap.top();
        heap.pop();
        if (settled[v]) continue;
        settled[v] = 1;
        g.for_each_incident(v, [&](std::int64_t u, double, std::int64_t eid) {
            if (settled[u]) return;
            const std::int32_t nh = t.hops[v] + 1;
            const double nn = noise[v] + edge_key(eid);
            if (t.hops[u] < 0 || nh < t.hops[u] ||
                (nh == t.hops[u] && nn < noise[u])) {
                t.hops[u] = nh;
                noise[u] = nn;
                t.dist[u] = static_cast<double>(nh);
                t.parent[u] = v;
                t.parent_edge[u] = eid;
                heap.push({{nh, nn}, u});
            }
        });
    }
    finalize(g, t);
    return t;
}

ExcisionDegree degree_via_excision(const WeightedMultiGraph& g,
                                   std::int64_t source, std::int64_t target) {
    check_source(g, source);
    check_source(g, target);
    if (source == target)
        throw std::invalid_argument("degree_via_excision: target equals source");

    struct Nb {
        std::int64_t v;
        double y;
    };
    // distinct neighbors only: of parallel copies only the cheapest can lie
    // on a shortest path, so each contributes through its minimum weight
    std::vector<Nb> nbs;
    g.for_each_incident(target, [&](std::int64_t u, double w, std::int64_t) {
        if (u != target) nbs.push_back({u, w});
    });
    std::sort(nbs.begin(), nbs.end(), [](const Nb& a, const Nb& b) {
        return a.v < b.v || (a.v == b.v && a.y < b.y);
    });
    nbs.erase(std::unique(nbs.begin(), nbs.end(),
                          [](const Nb& a, const Nb& b) { return a.v == b.v; }),
              nbs.end());
    if (nbs.empty()) return {0, true};

    const ShortestPathTree excised = run_dijkstra(g, source, target);

    std::size_t best = 0;
    double best_cost = kInf;
    for (std::size_t i = 0; i < nbs.size(); ++i) {
        const double c = excised.dist[nbs[i].v] + nbs[i].y;
        if (c < best_cost) {
            best_cost = c;
            best = i;
        }
    }
    if (!std::isfinite(best_cost)) return {0, true};

    std::int64_t degree = 1;
    const double through = excised.dist[nbs[best].v] + nbs[best].y;
    for (std::size_t i = 0; i < nbs.size(); ++i) {
        if (i == best) continue;
        if (through + nbs[i].y < excised.dist[nbs[i].v]) ++degree;
    }
    return {degree, false};
}

void ShortestPathTree::write_table(const std::string& path) const {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    std::fprintf(f, "# v parent dist hops tree_degree (source=%lld)\n",
                 static_cast<long long>(source));
    for (std::size_t v = 0; v < dist.size(); ++v)
        std::fprintf(f, "%zu %lld %.17g %d %d\n", v,
                     static_cast<long long>(parent[v]), dist[v], hops[v],
                     tree_degree[v]);
    if (std::fclose(f) != 0)
        throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace fpp
