#pragma once

#include <vector>

#include "gp/graph.hpp"
#include "gp/spectral.hpp"
#include "gp/tolerances.hpp"

namespace gp {

// Solves (-lap(u) + Q u)(x) = f(x) at every interior vertex with u = bc on
// the boundary shell. Returns u on the region closure. The assembled system
// must be positive definite (equivalently lambda1(region, Q) > 0); the
// factorization certifies that and the call throws numeric_error otherwise.
// The result is re-checked against the operators directly: the residual must
// stay below residual_tol * (sup|f| + sup|bc| + 1).
GraphFunction dirichlet_solve(const WeightedGraph& g, const Region& region,
                              const GraphFunction& q, const GraphFunction& f,
                              const GraphFunction& bc,
                              const SolveOptions& opts = default_solve,
                              double residual_tol = default_tol.residual);

struct PoissonResult {
  GraphFunction u;          // positive on the interior, 0 on the boundary shell
  double lambda = 0.0;      // lambda1(region, Q)
  double u_l2 = 0.0;        // integral of u^2 over the interior
  double f_l2 = 0.0;        // integral of f^2 over the interior
  double bound = 0.0;       // lambda^-2 * f_l2
  double slack = 0.0;       // bound - u_l2; the contract keeps it >= -tolerance
  double tolerance = 0.0;
  bool bound_holds = false;
};

// Solves with f >= 0 (nontrivial) and zero boundary data, then asserts the
// two consequences that make the solution meaningful: strict positivity on
// the interior and the energy bound integral(u^2) <= lambda1^-2 integral(f^2)
// (relative tolerance l2_tol). Violations throw numeric_error; the report
// carries the measured numbers.
PoissonResult poisson_solve(const WeightedGraph& g, const Region& region,
                            const GraphFunction& q, const GraphFunction& f,
                            const SolveOptions& opts = default_solve,
                            const Tolerances& tol = default_tol);

struct ExistenceStep {
  int radius = 0;
  int interior_size = 0;
  double lambda = 0.0;
  double min_u = 0.0;       // smallest interior value of u = v + 1 (must be > 0)
  double sup_diff_prev = 0.0;  // max |u^ - previous u^| on the smallest interior
};

struct ExistenceExhaustion {
  std::vector<ExistenceStep> steps;
  GraphFunction normalized;  // u^ from the largest radius, on its region closure
  bool positive = false;     // every step produced a strictly positive interior u
  bool diffs_decreasing = false;  // sup_diff_prev nonincreasing from step 2 on
};

// Positive solutions of (-lap + Q)u = 0 built radius by radius: on each open
// ball solve (-lap + Q)v = -Q with zero boundary data, set u = v + 1, check
// u > 0 on the interior, and normalize u^ = u / u(x0). Successive u^ are
// compared on the smallest ball's interior as a Cauchy diagnostic; no limit
// claim is made. Requires lambda1 > 0 at every radius.
ExistenceExhaustion existence_exhaustion(const WeightedGraph& host, VertexId x0,
                                         const std::vector<int>& radii,
                                         const GraphFunction& q,
                                         const SolveOptions& opts = default_solve,
                                         const Tolerances& tol = default_tol);

}  // namespace gp
