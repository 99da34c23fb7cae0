#pragma once

#include <vector>

#include "gp/graph.hpp"
#include "gp/tolerances.hpp"

namespace gp {

// Normalized Laplacian at a vertex:
//   lap(u)(x) = sum over neighbors y of (mu_xy / d_x) * (u(y) - u(x)).
// Requires u defined at x and at every stored neighbor of x.
double laplacian(const WeightedGraph& g, const GraphFunction& u, VertexId x);

// Squared gradient at a vertex (no factor 1/2; this is twice the
// Dirichlet-form convention some texts use):
//   grad_sq(u)(x) = sum over neighbors y of (mu_xy / d_x) * (u(y) - u(x))^2.
double grad_sq(const WeightedGraph& g, const GraphFunction& u, VertexId x);

// integral(u) = sum of u(x) d_x, the vertex measure being the weighted
// degree. The three-argument form restricts the sum to `over`.
double integral(const WeightedGraph& g, const GraphFunction& u);
double integral(const WeightedGraph& g, const GraphFunction& u,
                const std::vector<VertexId>& over);

// Weighted inner product sum of u(x) v(x) d_x.
double inner(const WeightedGraph& g, const GraphFunction& u, const GraphFunction& v);
double inner(const WeightedGraph& g, const GraphFunction& u, const GraphFunction& v,
             const std::vector<VertexId>& over);

// (-lap(u) + Q u)(x).
double schrodinger(const WeightedGraph& g, const GraphFunction& q, const GraphFunction& u,
                   VertexId x);

// Pointwise inequalities relating u, |u| and the positive part
// u_plus = (|u| + u)/2, with sign(0) = 0 and sign_plus(u) = 1 only for u > 0:
//   grad_sq(u)      >= grad_sq(|u|)
//   lap(|u|)        >= sign(u) lap(u)
//   lap(u_plus)     >= sign_plus(u) lap(u)
// Checked at every vertex where u and its whole neighborhood are defined.
// Slacks are left side minus right side; the worst (most negative) is kept.
struct KatoReport {
  int vertices_checked = 0;
  double worst_gradient_slack = 0.0;
  double worst_abs_slack = 0.0;
  double worst_positive_part_slack = 0.0;
  double tolerance = 0.0;  // scaled: tol * (1 + sup|u|^2)
  bool pass() const {
    return worst_gradient_slack >= -tolerance && worst_abs_slack >= -tolerance &&
           worst_positive_part_slack >= -tolerance;
  }
};

KatoReport kato_check(const WeightedGraph& g, const GraphFunction& u,
                      double tol = default_tol.identity);

// The product rule for squares and its consequence:
//   lap(u^2) = 2 u lap(u) + grad_sq(u)          (identity, exact in reals)
//   where u lap(u) >= 0:  grad_sq(u) <= lap(u^2)
struct SquareIdentityReport {
  int vertices_checked = 0;
  double max_identity_residual = 0.0;
  double worst_conditional_slack = 0.0;  // min of lap(u^2) - grad_sq(u) where u lap(u) >= 0
  double tolerance = 0.0;
  bool pass() const {
    return max_identity_residual <= tolerance && worst_conditional_slack >= -tolerance;
  }
};

SquareIdentityReport square_identity_check(const WeightedGraph& g, const GraphFunction& u,
                                           double tol = default_tol.identity);

}  // namespace gp
