#include "gp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

namespace gp {
namespace {

std::string id_str(VertexId v) { return std::to_string(v); }

std::string edge_str(VertexId x, VertexId y, double mu) {
  return "(" + id_str(x) + ", " + id_str(y) + ", mu=" + std::to_string(mu) + ")";
}

// Hop distances from `start` in index space; unreachable slots get -1.
std::vector<int> bfs_distances(const WeightedGraph& g, int start) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<int> queue;
  dist[static_cast<std::size_t>(start)] = 0;
  queue.push_back(start);
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const HalfEdge& e : g.neighbors(cur)) {
      if (dist[static_cast<std::size_t>(e.nbr)] < 0) {
        dist[static_cast<std::size_t>(e.nbr)] = dist[static_cast<std::size_t>(cur)] + 1;
        queue.push_back(e.nbr);
      }
    }
  }
  return dist;
}

}  // namespace

WeightedGraph WeightedGraph::from_edges(std::vector<Edge> edges,
                                        std::vector<VertexId> extra_vertices,
                                        std::optional<BallCover> cover) {
  WeightedGraph g;
  g.raw_ = std::move(edges);

  g.ids_.reserve(2 * g.raw_.size() + extra_vertices.size());
  for (const auto& [x, y, mu] : g.raw_) {
    (void)mu;
    g.ids_.push_back(x);
    g.ids_.push_back(y);
  }
  g.ids_.insert(g.ids_.end(), extra_vertices.begin(), extra_vertices.end());
  std::sort(g.ids_.begin(), g.ids_.end());
  g.ids_.erase(std::unique(g.ids_.begin(), g.ids_.end()), g.ids_.end());

  g.adj_.assign(g.ids_.size(), {});
  for (const auto& [x, y, mu] : g.raw_) {
    int a = g.index_of(x);
    int b = g.index_of(y);
    if (a == b) continue;  // loops never enter the adjacency; validate() reports them
    g.adj_[static_cast<std::size_t>(a)].push_back({b, mu});
    g.adj_[static_cast<std::size_t>(b)].push_back({a, mu});
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end(), [](const HalfEdge& p, const HalfEdge& q) {
      return p.nbr != q.nbr ? p.nbr < q.nbr : p.mu < q.mu;
    });
  }

  g.degree_.assign(g.ids_.size(), 0.0);
  for (std::size_t i = 0; i < g.adj_.size(); ++i) {
    double d = 0.0;
    for (const HalfEdge& e : g.adj_[i]) d += e.mu;
    g.degree_[i] = d;
  }

  if (!g.ids_.empty()) {
    std::vector<int> dist = bfs_distances(g, 0);
    g.connected_ = std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
  }

  if (cover) {
    if (!g.has_vertex(cover->center)) {
      throw input_error("cover center " + id_str(cover->center) + " is not a vertex");
    }
    g.center_dist_ = bfs_distances(g, g.index_of(cover->center));
    g.cover_ = *cover;
  }
  return g;
}

bool WeightedGraph::has_vertex(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

int WeightedGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) {
    throw input_error("unknown vertex " + id_str(v));
  }
  return static_cast<int>(it - ids_.begin());
}

std::optional<double> WeightedGraph::weight_between(int a, int b) const {
  const auto& nbrs = adj_[static_cast<std::size_t>(a)];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b,
                             [](const HalfEdge& e, int idx) { return e.nbr < idx; });
  if (it == nbrs.end() || it->nbr != b) return std::nullopt;
  return it->mu;
}

bool WeightedGraph::complete_at(int index) const {
  if (!cover_) return true;
  int d = center_dist_[static_cast<std::size_t>(index)];
  return d >= 0 && d <= cover_->complete_radius;
}

ValidationReport validate(const WeightedGraph& g) {
  ValidationReport report;
  auto add = [&report](std::string kind, std::string detail) {
    report.violations.push_back({std::move(kind), std::move(detail)});
  };

  if (g.vertex_count() == 0) {
    add("disconnected", "graph has no vertices");
    return report;
  }

  for (const auto& [x, y, mu] : g.raw_edges()) {
    if (x == y) add("loop", "edge " + edge_str(x, y, mu) + " joins a vertex to itself");
    if (!(mu > 0.0) || !std::isfinite(mu)) {
      add("nonpositive weight", "edge " + edge_str(x, y, mu));
    }
  }

  // Duplicate listings of the same unordered pair. Differing weights mean the
  // two orientations disagree, which breaks the symmetry d_x p(x,y) = d_y p(y,x).
  std::map<std::pair<VertexId, VertexId>, std::vector<double>> pair_weights;
  for (const auto& [x, y, mu] : g.raw_edges()) {
    if (x == y) continue;
    pair_weights[{std::min(x, y), std::max(x, y)}].push_back(mu);
  }
  for (const auto& [pair, weights] : pair_weights) {
    if (weights.size() < 2) continue;
    bool uniform = std::all_of(weights.begin(), weights.end(),
                               [&](double w) { return w == weights.front(); });
    std::string where = "edge {" + id_str(pair.first) + ", " + id_str(pair.second) +
                        "} listed " + std::to_string(weights.size()) + " times";
    add(uniform ? "duplicate edge" : "asymmetric weight", where);
  }

  for (int i = 0; i < g.vertex_count(); ++i) {
    if (g.neighbors(i).empty()) {
      add("isolated vertex", "vertex " + id_str(g.id_of(i)) + " has no incident edges");
    }
  }

  if (!g.connected()) add("disconnected", "graph has more than one component");
  return report;
}

double degree(const WeightedGraph& g, VertexId x) { return g.degree_at(g.index_of(x)); }

double hat_degree(const WeightedGraph& g, VertexId x) {
  int i = g.index_of(x);
  const auto& nbrs = g.neighbors(i);
  if (nbrs.empty()) {
    throw input_error("hat_degree undefined: vertex " + id_str(x) + " is isolated");
  }
  double d = g.degree_at(i);
  double best = 0.0;
  for (const HalfEdge& e : nbrs) best = std::max(best, d / e.mu);
  return best;
}

int distance(const WeightedGraph& g, VertexId x, VertexId y) {
  return bfs_distances(g, g.index_of(x))[static_cast<std::size_t>(g.index_of(y))];
}

std::vector<int> distances_from(const WeightedGraph& g, VertexId x) {
  return bfs_distances(g, g.index_of(x));
}

std::vector<VertexId> minimizing_path(const WeightedGraph& g, VertexId x, VertexId y) {
  int from = g.index_of(x);
  int to = g.index_of(y);
  std::vector<int> dist = bfs_distances(g, to);
  if (dist[static_cast<std::size_t>(from)] < 0) {
    throw input_error("no path from " + id_str(x) + " to " + id_str(y));
  }
  std::vector<VertexId> path;
  int cur = from;
  path.push_back(g.id_of(cur));
  while (cur != to) {
    // Neighbors are ascending by index, hence by id: the first one a step
    // closer to the target is the smallest-id choice.
    for (const HalfEdge& e : g.neighbors(cur)) {
      if (dist[static_cast<std::size_t>(e.nbr)] == dist[static_cast<std::size_t>(cur)] - 1) {
        cur = e.nbr;
        break;
      }
    }
    path.push_back(g.id_of(cur));
  }
  return path;
}

int Region::interior_index(VertexId v) const {
  auto it = std::lower_bound(interior.begin(), interior.end(), v);
  if (it == interior.end() || *it != v) return -1;
  return static_cast<int>(it - interior.begin());
}

int Region::boundary_index(VertexId v) const {
  auto it = std::lower_bound(boundary.begin(), boundary.end(), v);
  if (it == boundary.end() || *it != v) return -1;
  return static_cast<int>(it - boundary.begin());
}

std::vector<VertexId> Region::closure() const {
  std::vector<VertexId> all;
  all.reserve(interior.size() + boundary.size());
  std::merge(interior.begin(), interior.end(), boundary.begin(), boundary.end(),
             std::back_inserter(all));
  return all;
}

namespace {

// Boundary shell and connectivity check shared by the two region builders.
// `in_set` marks interior slots; `seed` is an interior slot to flood from.
Region finish_region(const WeightedGraph& g, const std::vector<char>& in_set, int seed,
                     const char* what) {
  std::deque<int> queue{seed};
  std::vector<char> seen(in_set.size(), 0);
  seen[static_cast<std::size_t>(seed)] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const HalfEdge& e : g.neighbors(cur)) {
      if (in_set[static_cast<std::size_t>(e.nbr)] && !seen[static_cast<std::size_t>(e.nbr)]) {
        seen[static_cast<std::size_t>(e.nbr)] = 1;
        ++reached;
        queue.push_back(e.nbr);
      }
    }
  }
  std::size_t total = static_cast<std::size_t>(
      std::count(in_set.begin(), in_set.end(), static_cast<char>(1)));
  if (reached != total) {
    throw input_error(std::string(what) + ": interior is disconnected");
  }

  Region region;
  region.host = &g;
  std::vector<char> on_boundary(in_set.size(), 0);
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (!in_set[static_cast<std::size_t>(i)]) continue;
    region.interior.push_back(g.id_of(i));
    for (const HalfEdge& e : g.neighbors(i)) {
      if (!in_set[static_cast<std::size_t>(e.nbr)]) {
        on_boundary[static_cast<std::size_t>(e.nbr)] = 1;
      }
    }
  }
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (on_boundary[static_cast<std::size_t>(i)]) region.boundary.push_back(g.id_of(i));
  }
  return region;
}

}  // namespace

Region ball(const WeightedGraph& g, VertexId center, int radius) {
  if (radius < 0) throw input_error("ball radius must be nonnegative");
  int c = g.index_of(center);
  std::vector<int> dist = bfs_distances(g, c);
  std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
  bool any = false;
  for (int i = 0; i < g.vertex_count(); ++i) {
    int d = dist[static_cast<std::size_t>(i)];
    if (d >= 0 && d <= radius && g.complete_at(i)) {
      in_set[static_cast<std::size_t>(i)] = 1;
      any = true;
    }
  }
  if (!any || !in_set[static_cast<std::size_t>(c)]) {
    throw input_error("ball(" + id_str(center) + ", " + std::to_string(radius) +
                      "): interior is empty");
  }
  return finish_region(g, in_set, c, "ball");
}

Region region_from_interior(const WeightedGraph& g, std::vector<VertexId> interior) {
  if (interior.empty()) throw input_error("region interior is empty");
  std::sort(interior.begin(), interior.end());
  if (std::adjacent_find(interior.begin(), interior.end()) != interior.end()) {
    throw input_error("region interior lists a vertex twice");
  }
  std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId v : interior) in_set[static_cast<std::size_t>(g.index_of(v))] = 1;
  return finish_region(g, in_set, g.index_of(interior.front()), "region");
}

GraphFunction GraphFunction::constant(const std::vector<VertexId>& domain, double value) {
  GraphFunction f;
  for (VertexId v : domain) f.vals_[v] = value;
  return f;
}

double GraphFunction::at(VertexId v) const {
  auto it = vals_.find(v);
  if (it == vals_.end()) {
    throw input_error("function undefined at vertex " + id_str(v));
  }
  return it->second;
}

double GraphFunction::sup_norm() const {
  double m = 0.0;
  for (const auto& [v, value] : vals_) {
    (void)v;
    m = std::max(m, std::abs(value));
  }
  return m;
}

}  // namespace gp
