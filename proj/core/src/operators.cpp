#include "gp/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gp {
namespace {

double sign(double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); }
double sign_plus(double t) { return t > 0.0 ? 1.0 : 0.0; }

// Vertices where u and the whole stored neighborhood are defined, ascending.
std::vector<VertexId> admissible_vertices(const WeightedGraph& g, const GraphFunction& u) {
  std::vector<VertexId> out;
  for (const auto& [v, value] : u) {
    (void)value;
    if (!g.has_vertex(v)) continue;
    int i = g.index_of(v);
    bool ok = true;
    for (const HalfEdge& e : g.neighbors(i)) {
      if (!u.defined(g.id_of(e.nbr))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(v);
  }
  return out;
}

}  // namespace

double laplacian(const WeightedGraph& g, const GraphFunction& u, VertexId x) {
  int i = g.index_of(x);
  double ux = u.at(x);
  double d = g.degree_at(i);
  double acc = 0.0;
  for (const HalfEdge& e : g.neighbors(i)) {
    acc += (e.mu / d) * (u.at(g.id_of(e.nbr)) - ux);
  }
  return acc;
}

double grad_sq(const WeightedGraph& g, const GraphFunction& u, VertexId x) {
  int i = g.index_of(x);
  double ux = u.at(x);
  double d = g.degree_at(i);
  double acc = 0.0;
  for (const HalfEdge& e : g.neighbors(i)) {
    double diff = u.at(g.id_of(e.nbr)) - ux;
    acc += (e.mu / d) * diff * diff;
  }
  return acc;
}

double integral(const WeightedGraph& g, const GraphFunction& u) {
  return integral(g, u, g.vertices());
}

double integral(const WeightedGraph& g, const GraphFunction& u,
                const std::vector<VertexId>& over) {
  double acc = 0.0;
  for (VertexId v : over) acc += u.at(v) * g.degree_at(g.index_of(v));
  return acc;
}

double inner(const WeightedGraph& g, const GraphFunction& u, const GraphFunction& v) {
  return inner(g, u, v, g.vertices());
}

double inner(const WeightedGraph& g, const GraphFunction& u, const GraphFunction& v,
             const std::vector<VertexId>& over) {
  double acc = 0.0;
  for (VertexId x : over) acc += u.at(x) * v.at(x) * g.degree_at(g.index_of(x));
  return acc;
}

double schrodinger(const WeightedGraph& g, const GraphFunction& q, const GraphFunction& u,
                   VertexId x) {
  return -laplacian(g, u, x) + q.at(x) * u.at(x);
}

KatoReport kato_check(const WeightedGraph& g, const GraphFunction& u, double tol) {
  GraphFunction abs_u;
  GraphFunction pos_u;
  for (const auto& [v, value] : u) {
    abs_u.set(v, std::abs(value));
    pos_u.set(v, (std::abs(value) + value) / 2.0);
  }

  KatoReport report;
  report.tolerance = tol * (1.0 + u.sup_norm() * u.sup_norm());
  double inf = std::numeric_limits<double>::infinity();
  report.worst_gradient_slack = inf;
  report.worst_abs_slack = inf;
  report.worst_positive_part_slack = inf;

  for (VertexId x : admissible_vertices(g, u)) {
    double lap = laplacian(g, u, x);
    double ux = u.at(x);
    report.worst_gradient_slack =
        std::min(report.worst_gradient_slack, grad_sq(g, u, x) - grad_sq(g, abs_u, x));
    report.worst_abs_slack =
        std::min(report.worst_abs_slack, laplacian(g, abs_u, x) - sign(ux) * lap);
    report.worst_positive_part_slack =
        std::min(report.worst_positive_part_slack, laplacian(g, pos_u, x) - sign_plus(ux) * lap);
    ++report.vertices_checked;
  }
  if (report.vertices_checked == 0) {
    report.worst_gradient_slack = 0.0;
    report.worst_abs_slack = 0.0;
    report.worst_positive_part_slack = 0.0;
  }
  return report;
}

SquareIdentityReport square_identity_check(const WeightedGraph& g, const GraphFunction& u,
                                           double tol) {
  GraphFunction u_sq;
  for (const auto& [v, value] : u) u_sq.set(v, value * value);

  SquareIdentityReport report;
  report.tolerance = tol * (1.0 + u.sup_norm() * u.sup_norm());
  report.worst_conditional_slack = std::numeric_limits<double>::infinity();

  for (VertexId x : admissible_vertices(g, u)) {
    double lap = laplacian(g, u, x);
    double lap_sq = laplacian(g, u_sq, x);
    double grad = grad_sq(g, u, x);
    double ux = u.at(x);
    report.max_identity_residual =
        std::max(report.max_identity_residual, std::abs(lap_sq - 2.0 * ux * lap - grad));
    if (ux * lap >= 0.0) {
      report.worst_conditional_slack =
          std::min(report.worst_conditional_slack, lap_sq - grad);
    }
    ++report.vertices_checked;
  }
  if (!std::isfinite(report.worst_conditional_slack)) report.worst_conditional_slack = 0.0;
  return report;
}

}  // namespace gp
