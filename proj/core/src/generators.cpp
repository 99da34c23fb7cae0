#include "gp/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

#include "gp/operators.hpp"
#include "gp/rng.hpp"

namespace gp {
namespace {

void enforce_cap(long long count, const std::string& what) {
  if (count > vertex_cap()) {
    throw resource_error(what + " needs " + std::to_string(count) +
                         " vertices, over the cap of " + std::to_string(vertex_cap()) +
                         " (raise GP_MAX_VERTICES to override)");
  }
}

using Coord = std::array<int, 3>;

int l1_norm(const Coord& c) { return std::abs(c[0]) + std::abs(c[1]) + std::abs(c[2]); }

long long lattice_count(int dim, long long b) {
  if (dim == 1) return 2 * b + 1;
  if (dim == 2) return 2 * b * b + 2 * b + 1;
  return (4 * b * b * b + 6 * b * b + 8 * b + 3) / 3;
}

}  // namespace

long long vertex_cap() {
  if (const char* env = std::getenv("GP_MAX_VERTICES")) {
    char* end = nullptr;
    long long cap = std::strtoll(env, &end, 10);
    if (end != env && cap > 0) return cap;
  }
  return 2'000'000;
}

WeightedGraph path_graph(int n) {
  if (n < 2) throw input_error("path needs at least 2 vertices");
  enforce_cap(n, "path(" + std::to_string(n) + ")");
  std::vector<WeightedGraph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1, 1.0);
  return WeightedGraph::from_edges(std::move(edges));
}

WeightedGraph cycle_graph(int n) {
  if (n < 3) throw input_error("cycle needs at least 3 vertices");
  enforce_cap(n, "cycle(" + std::to_string(n) + ")");
  std::vector<WeightedGraph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1, 1.0);
  edges.emplace_back(0, n - 1, 1.0);
  return WeightedGraph::from_edges(std::move(edges));
}

WeightedGraph star_graph(int k) {
  if (k < 1) throw input_error("star needs at least 1 leaf");
  enforce_cap(k + 1, "star(" + std::to_string(k) + ")");
  std::vector<WeightedGraph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) edges.emplace_back(0, i, 1.0);
  return WeightedGraph::from_edges(std::move(edges));
}

WeightedGraph lattice_ball(int dim, int radius) {
  if (dim < 1 || dim > 3) throw input_error("lattice dimension must be 1, 2, or 3");
  if (radius < 1) throw input_error("lattice ball radius must be at least 1");
  int b = radius + 1;  // one layer beyond the requested radius
  if (b > 100000) throw resource_error("lattice ball radius too large");
  std::string what = "lattice_ball(" + std::to_string(dim) + ", " + std::to_string(radius) + ")";
  enforce_cap(lattice_count(dim, b), what);

  std::vector<Coord> points;
  points.reserve(static_cast<std::size_t>(lattice_count(dim, b)));
  int ylim = dim >= 2 ? b : 0;
  for (int x = -b; x <= b; ++x) {
    for (int y = -std::min(ylim, b - std::abs(x)); y <= std::min(ylim, b - std::abs(x)); ++y) {
      int rest = b - std::abs(x) - std::abs(y);
      int zlim = dim >= 3 ? rest : 0;
      for (int z = -zlim; z <= zlim; ++z) points.push_back({x, y, z});
    }
  }
  std::sort(points.begin(), points.end(), [](const Coord& p, const Coord& q) {
    int np = l1_norm(p), nq = l1_norm(q);
    return np != nq ? np < nq : p < q;
  });

  std::map<Coord, VertexId> id_of;
  for (std::size_t i = 0; i < points.size(); ++i) id_of[points[i]] = static_cast<VertexId>(i);

  std::vector<WeightedGraph::Edge> edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int k = 0; k < dim; ++k) {
      Coord q = points[i];
      q[static_cast<std::size_t>(k)] += 1;
      auto it = id_of.find(q);
      if (it == id_of.end()) continue;
      VertexId a = static_cast<VertexId>(i), c = it->second;
      edges.emplace_back(std::min(a, c), std::max(a, c), 1.0);
    }
  }
  return WeightedGraph::from_edges(std::move(edges), {}, BallCover{0, radius});
}

WeightedGraph regular_tree_ball(int d, int radius) {
  if (d < 3) throw input_error("regular tree branching must be at least 3");
  if (radius < 1) throw input_error("tree ball radius must be at least 1");
  int depth = radius + 1;

  long long count = 1, layer = d;
  for (int lvl = 1; lvl <= depth; ++lvl) {
    count += layer;
    if (count > vertex_cap()) break;
    layer *= d - 1;
  }
  enforce_cap(count, "regular_tree_ball(" + std::to_string(d) + ", " + std::to_string(radius) + ")");

  std::vector<WeightedGraph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(count) - 1);
  VertexId next = 1;
  std::vector<VertexId> frontier{0};
  for (int lvl = 0; lvl < depth; ++lvl) {
    std::vector<VertexId> produced;
    int children = lvl == 0 ? d : d - 1;
    for (VertexId parent : frontier) {
      for (int c = 0; c < children; ++c) {
        edges.emplace_back(parent, next, 1.0);
        produced.push_back(next);
        ++next;
      }
    }
    frontier = std::move(produced);
  }
  return WeightedGraph::from_edges(std::move(edges), {}, BallCover{0, radius});
}

SolutionPair sample_solution_pair(const WeightedGraph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SolutionPair pair;
  for (VertexId v : g.vertices()) pair.u.set(v, std::exp(rng.next_symmetric()));
  for (VertexId v : g.vertices()) {
    double lap = laplacian(g, pair.u, v);
    pair.q.set(v, lap / pair.u.at(v));
  }
  double scale = 1e-14 * (1.0 + pair.u.sup_norm());
  for (VertexId v : g.vertices()) {
    double res = -laplacian(g, pair.u, v) + pair.q.at(v) * pair.u.at(v);
    if (std::abs(res) > scale) {
      throw numeric_error("solution pair residual " + std::to_string(res) + " at vertex " +
                          std::to_string(v));
    }
  }
  return pair;
}

WeightedGraph perturb_weights(const WeightedGraph& g, std::uint64_t seed, double lo, double hi) {
  if (!(lo > 0.0) || !(lo <= hi)) throw input_error("weight range must satisfy 0 < lo <= hi");
  SplitMix64 rng(seed);
  std::vector<WeightedGraph::Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& [x, y, mu] : g.raw_edges()) {
    (void)mu;
    edges.emplace_back(x, y, rng.next_in(lo, hi));
  }
  return WeightedGraph::from_edges(std::move(edges), g.vertices(), g.cover());
}

}  // namespace gp
