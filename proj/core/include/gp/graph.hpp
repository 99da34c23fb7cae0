#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gp/errors.hpp"

namespace gp {

using VertexId = std::int64_t;

// Adjacency entry in index space: neighbor slot and edge weight.
struct HalfEdge {
  int nbr;
  double mu;
};

// Annotation attached by generators that truncate an infinite graph: every
// vertex within `complete_radius` of `center` has its full neighborhood
// stored; vertices beyond that are rim vertices whose degrees are truncated.
struct BallCover {
  VertexId center = 0;
  int complete_radius = 0;
};

// Finite weighted graph with symmetric positive edge weights and no loops.
// Construction is permissive: defective inputs still build, and validate()
// reports what is wrong as data. Every operator in the library assumes a
// graph for which validate(g).pass() holds.
//
// Vertices carry arbitrary nonnegative ids; internally they map to dense
// indices in ascending id order, and all cached quantities (degrees,
// adjacency) are accumulated in that fixed order so results are reproducible
// across runs.
class WeightedGraph {
 public:
  using Edge = std::tuple<VertexId, VertexId, double>;

  WeightedGraph() = default;

  static WeightedGraph from_edges(std::vector<Edge> edges,
                                  std::vector<VertexId> extra_vertices = {},
                                  std::optional<BallCover> cover = {});

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  const std::vector<VertexId>& vertices() const { return ids_; }
  bool has_vertex(VertexId v) const;
  int index_of(VertexId v) const;  // throws input_error on unknown id
  VertexId id_of(int index) const { return ids_[static_cast<std::size_t>(index)]; }

  // Neighbors of a vertex slot, ascending by neighbor index.
  const std::vector<HalfEdge>& neighbors(int index) const {
    return adj_[static_cast<std::size_t>(index)];
  }
  // Weighted degree d_x = sum of incident weights, summed in neighbor order.
  double degree_at(int index) const { return degree_[static_cast<std::size_t>(index)]; }
  // Weight of the edge between two slots, if present.
  std::optional<double> weight_between(int a, int b) const;

  const std::vector<Edge>& raw_edges() const { return raw_; }
  std::size_t edge_count() const { return raw_.size(); }

  const std::optional<BallCover>& cover() const { return cover_; }
  // True when the stored neighborhood of this slot is known to be complete.
  // Graphs without a cover annotation are exact, so every vertex qualifies.
  bool complete_at(int index) const;

  bool connected() const { return connected_; }

 private:
  std::vector<VertexId> ids_;               // ascending
  std::vector<std::vector<HalfEdge>> adj_;  // by index
  std::vector<double> degree_;
  std::vector<Edge> raw_;
  std::optional<BallCover> cover_;
  std::vector<int> center_dist_;  // hops from cover center, when annotated
  bool connected_ = false;
};

struct Violation {
  std::string kind;    // "loop", "duplicate edge", "asymmetric weight",
                       // "nonpositive weight", "isolated vertex", "disconnected"
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
};

// Structural soundness check. Reports every violation rather than stopping at
// the first, so a defective input file can be repaired in one pass.
ValidationReport validate(const WeightedGraph& g);

// Weighted degree d_x.
double degree(const WeightedGraph& g, VertexId x);
// d^_x = max over neighbors y of d_x / mu_xy. Always >= 1; equals 1 exactly
// when x has a single neighbor. Throws input_error on isolated vertices.
double hat_degree(const WeightedGraph& g, VertexId x);

// Hop distance (every edge counts 1). Returns -1 when y is unreachable.
int distance(const WeightedGraph& g, VertexId x, VertexId y);

// Hop distances from x to every vertex, indexed like the graph's internal
// slots (position i belongs to vertices()[i]); unreachable entries are -1.
std::vector<int> distances_from(const WeightedGraph& g, VertexId x);

// A shortest path from x to y as a vertex id sequence, ties broken toward the
// smallest next vertex id. Throws input_error when y is unreachable.
std::vector<VertexId> minimizing_path(const WeightedGraph& g, VertexId x, VertexId y);

// Interior vertex set S with its boundary shell
//   delta S = { v outside S : v has a neighbor in S },
// inside a host graph. The induced subgraph on S is connected and both lists
// are ascending.
struct Region {
  const WeightedGraph* host = nullptr;
  std::vector<VertexId> interior;
  std::vector<VertexId> boundary;

  int interior_size() const { return static_cast<int>(interior.size()); }
  int interior_index(VertexId v) const;  // -1 when v is not interior
  int boundary_index(VertexId v) const;
  bool is_interior(VertexId v) const { return interior_index(v) >= 0; }
  bool is_boundary(VertexId v) const { return boundary_index(v) >= 0; }
  // S together with delta S, ascending.
  std::vector<VertexId> closure() const;
};

// Metric ball region: interior = vertices within hop distance `radius` of
// `center` whose stored neighborhoods are complete. Throws input_error on an
// unknown center, a negative radius, or when the filtered interior is empty
// or disconnected.
Region ball(const WeightedGraph& g, VertexId center, int radius);

// Region from an explicit interior set. Duplicates are rejected; the induced
// subgraph must be nonempty and connected.
Region region_from_interior(const WeightedGraph& g, std::vector<VertexId> interior);

// Partial function on vertices. Lookups outside the domain throw input_error
// rather than defaulting to zero, so a forgotten value cannot silently skew a
// computation. Iteration runs in ascending vertex order.
class GraphFunction {
 public:
  GraphFunction() = default;

  static GraphFunction constant(const std::vector<VertexId>& domain, double value);
  static GraphFunction zero(const std::vector<VertexId>& domain) {
    return constant(domain, 0.0);
  }

  double at(VertexId v) const;
  bool defined(VertexId v) const { return vals_.count(v) != 0; }
  void set(VertexId v, double value) { vals_[v] = value; }
  std::size_t size() const { return vals_.size(); }
  double sup_norm() const;

  auto begin() const { return vals_.begin(); }
  auto end() const { return vals_.end(); }
  const std::map<VertexId, double>& values() const { return vals_; }

 private:
  std::map<VertexId, double> vals_;
};

}  // namespace gp
