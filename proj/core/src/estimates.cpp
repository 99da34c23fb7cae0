#include "gp/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gp/operators.hpp"

namespace gp {
namespace {

// Vertices of the pair's domain where every stored neighbor is also in the
// domain, ascending. Rim vertices of covered graphs are skipped by the
// completeness test.
std::vector<VertexId> estimate_sites(const WeightedGraph& g, const SolutionPair& pair) {
  std::vector<VertexId> sites;
  for (const auto& [v, value] : pair.u) {
    (void)value;
    if (!g.has_vertex(v)) continue;
    int i = g.index_of(v);
    if (!g.complete_at(i)) continue;
    bool covered = true;
    for (const HalfEdge& e : g.neighbors(i)) {
      if (!pair.u.defined(g.id_of(e.nbr))) {
        covered = false;
        break;
      }
    }
    if (covered) sites.push_back(v);
  }
  return sites;
}

}  // namespace

double p_bound(const WeightedGraph& g, const GraphFunction& q, VertexId x) {
  double hat = hat_degree(g, x);
  double qx = q.at(x);
  return hat * (1.0 + qx) * (1.0 + qx) - 2.0 * qx - 1.0;
}

void require_solution_pair(const WeightedGraph& g, const SolutionPair& pair, double tol) {
  double limit = tol * (1.0 + pair.u.sup_norm());
  for (VertexId v : estimate_sites(g, pair)) {
    if (!(pair.u.at(v) > 0.0)) {
      throw input_error("pair is not positive at vertex " + std::to_string(v));
    }
    double res = -laplacian(g, pair.u, v) + pair.q.at(v) * pair.u.at(v);
    if (std::abs(res) > limit) {
      throw input_error("pair does not solve its equation at vertex " + std::to_string(v) +
                        " (residual " + std::to_string(res) + ")");
    }
  }
}

GradientReport gradient_estimate_check(const WeightedGraph& g, const SolutionPair& pair,
                                       double tol) {
  require_solution_pair(g, pair);

  GradientReport report;
  double inf = std::numeric_limits<double>::infinity();
  report.worst_slack = inf;
  report.worst_floor = inf;
  report.tolerance = tol;

  for (VertexId x : estimate_sites(g, pair)) {
    double ux = pair.u.at(x);
    double p = p_bound(g, pair.q, x);
    double qx = pair.q.at(x);
    double lhs = grad_sq(g, pair.u, x);
    double cap = p * ux * ux;
    report.worst_slack = std::min(report.worst_slack, (cap - lhs) / (ux * ux));
    report.worst_floor = std::min(report.worst_floor, (p - qx * qx) / (1.0 + qx * qx));
    if (cap > 0.0) {
      report.max_ratio = std::max(report.max_ratio, lhs / cap);
    } else if (lhs > tol * ux * ux) {
      report.max_ratio = std::max(report.max_ratio, inf);
    }
    ++report.vertices_checked;
  }
  if (report.vertices_checked == 0) {
    report.worst_slack = 0.0;
    report.worst_floor = 0.0;
  }
  return report;
}

double harnack_constant(const WeightedGraph& g, const GraphFunction& q,
                        const std::vector<VertexId>& s, HarnackMode mode) {
  std::vector<VertexId> set = s;
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.empty()) throw input_error("harnack constant of an empty set");
  for (VertexId v : set) (void)g.index_of(v);

  double best = 1.0;
  for (VertexId a : set) {
    for (VertexId b : set) {
      if (a == b) continue;
      std::vector<VertexId> path = minimizing_path(g, a, b);
      double product = 1.0;
      for (std::size_t j = 0; j + 1 < path.size(); ++j) {
        double p = std::max(0.0, p_bound(g, q, path[j]));
        double factor;
        if (mode == HarnackMode::uniform) {
          factor = 1.0 + std::sqrt(hat_degree(g, path[j]) * p);
        } else {
          double mu = g.weight_between(g.index_of(path[j]), g.index_of(path[j + 1])).value();
          factor = 1.0 + std::sqrt(degree(g, path[j]) / mu * p);
        }
        product *= factor;
      }
      best = std::max(best, product);
    }
  }
  return best;
}

HarnackReport harnack_verify(const WeightedGraph& g, const SolutionPair& pair,
                             const std::vector<VertexId>& s, HarnackMode mode, double tol) {
  require_solution_pair(g, pair);
  if (s.empty()) throw input_error("harnack check over an empty set");

  HarnackReport report;
  report.sup = -std::numeric_limits<double>::infinity();
  report.inf = std::numeric_limits<double>::infinity();
  for (VertexId v : s) {
    double uv = pair.u.at(v);
    report.sup = std::max(report.sup, uv);
    report.inf = std::min(report.inf, uv);
  }
  report.constant = harnack_constant(g, pair.q, s, mode);
  report.tolerance = tol;
  report.slack = report.constant * report.inf * (1.0 + tol) - report.sup;
  return report;
}

}  // namespace gp
