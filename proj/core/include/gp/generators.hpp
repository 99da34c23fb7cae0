#pragma once

#include <cstdint>

#include "gp/graph.hpp"

namespace gp {

// Path 0-1-...-n-1 with unit weights. n >= 2.
WeightedGraph path_graph(int n);
// Cycle 0-1-...-n-1-0 with unit weights. n >= 3.
WeightedGraph cycle_graph(int n);
// Star: center 0 joined to leaves 1..k with unit weights. k >= 1.
WeightedGraph star_graph(int k);

// Ball of radius R+1 in the integer lattice Z^dim (dim in {1,2,3}) under the
// l1 metric, unit weights. The extra layer guarantees every vertex within R
// of the origin has its complete neighborhood stored; the graph carries a
// cover annotation {center: 0, complete_radius: R}. Ids are assigned by
// (l1 norm, lexicographic coordinates), so the origin is id 0.
// R >= 1. Throws resource_error when the vertex count exceeds the cap
// (env GP_MAX_VERTICES, default 2,000,000).
WeightedGraph lattice_ball(int dim, int radius);

// Ball of radius R+1 in the infinite d-regular tree, unit weights, root id 0,
// breadth-first id assignment, cover annotation {0, R}. d >= 3, R >= 1.
// Vertex count 1 + d*((d-1)^(R+1) - 1)/(d-2); throws resource_error past the cap.
WeightedGraph regular_tree_ball(int d, int radius);

// A positive function u together with the potential Q that makes it a
// solution of -lap(u) + Q u = 0 on the whole graph: u(x) = exp(xi_x) with
// xi_x uniform in [-1, 1) drawn in ascending vertex order from SplitMix64,
// and Q = lap(u)/u. Reproducible bit for bit from (graph, seed).
struct SolutionPair {
  GraphFunction u;
  GraphFunction q;
};

SolutionPair sample_solution_pair(const WeightedGraph& g, std::uint64_t seed);

// Same topology with every weight redrawn uniformly from [lo, hi) in stored
// edge order. Preserves any cover annotation. Requires 0 < lo <= hi.
WeightedGraph perturb_weights(const WeightedGraph& g, std::uint64_t seed, double lo,
                              double hi);

// Current vertex-count cap: GP_MAX_VERTICES when set, otherwise 2,000,000.
long long vertex_cap();

}  // namespace gp
