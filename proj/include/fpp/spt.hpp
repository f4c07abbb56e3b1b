#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpp/graph.hpp"
#include "fpp/rng.hpp"

namespace fpp {

// Single-source tree: parent pointers realize a minimum-weight path to every
// reached vertex. Unreached vertices carry parent -1, dist +inf, hops -1 and
// tree degree 0.
struct ShortestPathTree {
    std::int64_t source = 0;
    std::int64_t reached = 0;
    std::vector<std::int64_t> parent;       // parent vertex, -1 if none
    std::vector<std::int64_t> parent_edge;  // edge id into the graph, -1 if none
    std::vector<double> dist;
    std::vector<std::int32_t> hops;
    std::vector<std::int32_t> tree_degree;

    bool is_reached(std::int64_t v) const { return hops[v] >= 0; }
    // "v parent dist hops tree_degree" rows, one per vertex
    void write_table(const std::string& path) const;
};

ShortestPathTree shortest_path_tree(const WeightedMultiGraph& g,
                                    std::int64_t source);

// Breadth-first search tree with uniformly random tie-breaking: paths are
// ordered by (edge count, sum of per-edge noise keys), the vanishing-noise
// limit of weights 1 + eps*U_e. Keys are fresh per call, drawn off rng.
ShortestPathTree bfst(const WeightedMultiGraph& g, std::int64_t source,
                      RngStream& rng);

struct ExcisionDegree {
    std::int64_t degree = 0;
    // true when excising the target cut every neighbor off from the source,
    // so the identity carries no information (degree reported as 0)
    bool skipped = false;
};

// Tree degree of `target` computed without ever building the tree: from
// source-to-neighbor distances in the graph with `target` excised. Agrees
// with the direct tree degree whenever weights are continuous.
ExcisionDegree degree_via_excision(const WeightedMultiGraph& g,
                                   std::int64_t source, std::int64_t target);

}  // namespace fpp
