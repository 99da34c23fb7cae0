#pragma once

#include <string>
#include <vector>

#include "gp/generators.hpp"
#include "gp/graph.hpp"
#include "gp/tolerances.hpp"

namespace gp {

// Pointwise gradient-bound coefficient for a positive solution of
// (-lap + Q)u = 0:
//   P(x) = d^_x (1 + Q(x))^2 - 2 Q(x) - 1.
// Always >= Q(x)^2 since d^_x >= 1.
double p_bound(const WeightedGraph& g, const GraphFunction& q, VertexId x);

struct GradientReport {
  int vertices_checked = 0;
  double worst_slack = 0.0;  // min over x of (P(x) u(x)^2 - grad_sq(u)(x)) / u(x)^2
  double worst_floor = 0.0;  // min over x of (P(x) - Q(x)^2) / (1 + Q(x)^2)
  double max_ratio = 0.0;    // max of grad_sq(u) / (P u^2), 0/0 counted as 0
  double tolerance = 0.0;
  bool pass() const { return worst_slack >= -tolerance && worst_floor >= -tolerance; }
};

// Verifies grad_sq(u) <= P u^2 at every vertex of the pair's domain whose
// neighborhood is stored completely, plus the coefficient floor P >= Q^2.
// Slacks are normalized (divided by u^2 resp. 1 + Q^2) so they compare across
// instances of different scale.
GradientReport gradient_estimate_check(const WeightedGraph& g, const SolutionPair& pair,
                                       double tol = default_tol.gradient_slack);

// Multiplicative constant modes. Walking a shortest path x_1 ... x_n, each
// step contributes a factor bounding u(x_{j+1}) / u(x_j):
//   uniform: 1 + sqrt(d^_{x_j} P(x_j))         (worst case over edges at x_j)
//   sharp:   1 + sqrt((d_{x_j}/mu_j) P(x_j))   (the traversed edge itself)
// sharp never exceeds uniform.
enum class HarnackMode { uniform, sharp };

// C(S): the largest path product over ordered pairs of vertices of S, paths
// chosen by minimizing_path. Negative P values are clamped to zero before the
// square root (P can only dip below zero through rounding, since the gradient
// bound forces P >= 0 wherever a positive solution exists). Singleton S gives 1.
double harnack_constant(const WeightedGraph& g, const GraphFunction& q,
                        const std::vector<VertexId>& s, HarnackMode mode);

struct HarnackReport {
  double sup = 0.0;
  double inf = 0.0;
  double constant = 0.0;       // C(S) in the requested mode
  double slack = 0.0;          // C * inf * (1 + tolerance) - sup
  double tolerance = 0.0;
  bool pass() const { return slack >= 0.0; }
};

// Checks sup_S u <= C(S) inf_S u for a positive solution pair.
HarnackReport harnack_verify(const WeightedGraph& g, const SolutionPair& pair,
                             const std::vector<VertexId>& s, HarnackMode mode,
                             double tol = default_tol.harnack_slack);

// Validates that the pair really is a positive solution on its domain:
// u > 0 everywhere and the equation residual below pair_residual * sup|u| at
// every vertex with a complete stored neighborhood. Throws input_error on
// failure; used by the estimate checks before trusting their hypotheses.
void require_solution_pair(const WeightedGraph& g, const SolutionPair& pair,
                           double tol = default_tol.pair_residual);

}  // namespace gp
