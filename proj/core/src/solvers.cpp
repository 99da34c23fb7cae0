#include "gp/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gp/operators.hpp"
#include "spd_solver.hpp"

namespace gp {
namespace {

double sup_over(const GraphFunction& f, const std::vector<VertexId>& vs) {
  double m = 0.0;
  for (VertexId v : vs) m = std::max(m, std::abs(f.at(v)));
  return m;
}

}  // namespace

GraphFunction dirichlet_solve(const WeightedGraph& g, const Region& region,
                              const GraphFunction& q, const GraphFunction& f,
                              const GraphFunction& bc, const SolveOptions& opts,
                              double residual_tol) {
  DirichletForm form = assemble(g, region, q);
  int n = region.interior_size();

  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    VertexId x = region.interior[static_cast<std::size_t>(i)];
    int xi = g.index_of(x);
    double acc = g.degree_at(xi) * f.at(x);
    for (const HalfEdge& e : g.neighbors(xi)) {
      VertexId y = g.id_of(e.nbr);
      if (!region.is_interior(y)) acc += e.mu * bc.at(y);
    }
    rhs(i) = acc;
  }

  detail::SpdSolver solver(form.matrix, opts);
  if (solver.direct()) {
    if (!solver.positive_definite()) {
      throw numeric_error("dirichlet system is not positive definite (lambda1 <= 0)");
    }
  } else {
    // The factorization that certifies definiteness is unavailable on the
    // conjugate-gradient route; a nonnegative potential with a nonempty
    // boundary shell is definite structurally, anything else is refused.
    double q_min = 0.0;
    for (VertexId v : region.interior) q_min = std::min(q_min, q.at(v));
    if (q_min < 0.0) {
      throw input_error(
          "negative potential beyond the direct-solve scale is not supported "
          "(interior exceeds direct_solve_max)");
    }
    if (region.boundary.empty()) {
      throw numeric_error("dirichlet system without a boundary shell is singular");
    }
  }
  Eigen::VectorXd x = solver.solve(rhs);

  GraphFunction u;
  for (int i = 0; i < n; ++i) u.set(region.interior[static_cast<std::size_t>(i)], x(i));
  for (VertexId b : region.boundary) u.set(b, bc.at(b));

  double scale = sup_over(f, region.interior) + sup_over(bc, region.boundary) + 1.0;
  double worst = 0.0;
  for (VertexId v : region.interior) {
    worst = std::max(worst, std::abs(schrodinger(g, q, u, v) - f.at(v)));
  }
  if (worst > residual_tol * scale) {
    throw numeric_error("dirichlet solve residual " + std::to_string(worst) +
                        " exceeds contract " + std::to_string(residual_tol * scale));
  }
  return u;
}

PoissonResult poisson_solve(const WeightedGraph& g, const Region& region,
                            const GraphFunction& q, const GraphFunction& f,
                            const SolveOptions& opts, const Tolerances& tol) {
  bool nontrivial = false;
  for (VertexId v : region.interior) {
    double fv = f.at(v);
    if (fv < 0.0) {
      throw input_error("source term is negative at vertex " + std::to_string(v));
    }
    if (fv > 0.0) nontrivial = true;
  }
  if (!nontrivial) throw input_error("source term vanishes on the whole interior");

  Lambda1Result spec = lambda1(g, region, q, opts);
  if (!(spec.lambda > 0.0)) {
    throw input_error("lambda1 = " + std::to_string(spec.lambda) +
                      " is not positive; the energy bound is void");
  }

  PoissonResult out;
  out.lambda = spec.lambda;
  out.u = dirichlet_solve(g, region, q, f, GraphFunction::zero(region.boundary), opts,
                          tol.residual);

  double min_u = std::numeric_limits<double>::infinity();
  for (VertexId v : region.interior) min_u = std::min(min_u, out.u.at(v));
  if (!(min_u > 0.0)) {
    throw numeric_error("solution is not strictly positive on the interior (min " +
                        std::to_string(min_u) + ")");
  }

  GraphFunction u_sq, f_sq;
  for (VertexId v : region.interior) {
    u_sq.set(v, out.u.at(v) * out.u.at(v));
    f_sq.set(v, f.at(v) * f.at(v));
  }
  out.u_l2 = integral(g, u_sq, region.interior);
  out.f_l2 = integral(g, f_sq, region.interior);
  out.bound = out.f_l2 / (spec.lambda * spec.lambda);
  out.slack = out.bound - out.u_l2;
  out.tolerance = tol.l2_bound * (1.0 + std::abs(out.bound));
  out.bound_holds = out.slack >= -out.tolerance;
  if (!out.bound_holds) {
    throw numeric_error("energy bound violated: integral(u^2) = " + std::to_string(out.u_l2) +
                        " exceeds " + std::to_string(out.bound));
  }
  return out;
}

ExistenceExhaustion existence_exhaustion(const WeightedGraph& host, VertexId x0,
                                         const std::vector<int>& radii,
                                         const GraphFunction& q, const SolveOptions& opts,
                                         const Tolerances& tol) {
  if (radii.empty()) throw input_error("no radii given");
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    if (radii[i] >= radii[i + 1]) throw input_error("radii must be strictly increasing");
  }

  ExistenceExhaustion out;
  out.positive = true;
  std::vector<VertexId> base_interior;  // smallest ball, the comparison window
  std::vector<double> prev_hat;
  double prev_diff = std::numeric_limits<double>::infinity();
  out.diffs_decreasing = true;

  for (std::size_t k = 0; k < radii.size(); ++k) {
    Region region = exhaustion_region(host, x0, radii[k]);
    if (k == 0) base_interior = region.interior;

    Lambda1Result spec = lambda1(host, region, q, opts);
    if (!(spec.lambda > 0.0)) {
      throw input_error("lambda1(" + std::to_string(radii[k]) + ") = " +
                        std::to_string(spec.lambda) + " is not positive");
    }

    GraphFunction minus_q;
    for (VertexId v : region.interior) minus_q.set(v, -q.at(v));
    GraphFunction v_part = dirichlet_solve(host, region, q, minus_q,
                                           GraphFunction::zero(region.boundary), opts,
                                           tol.residual);
    GraphFunction u;
    for (const auto& [v, value] : v_part) u.set(v, value + 1.0);

    double min_u = std::numeric_limits<double>::infinity();
    for (VertexId v : region.interior) min_u = std::min(min_u, u.at(v));
    if (!(min_u > 0.0)) {
      out.positive = false;
      throw numeric_error("positive-solution construction failed at radius " +
                          std::to_string(radii[k]) + " (min u = " + std::to_string(min_u) +
                          ", lambda1 = " + std::to_string(spec.lambda) + ")");
    }

    double at_x0 = u.at(x0);
    GraphFunction hat;
    for (const auto& [v, value] : u) hat.set(v, value / at_x0);

    ExistenceStep step;
    step.radius = radii[k];
    step.interior_size = region.interior_size();
    step.lambda = spec.lambda;
    step.min_u = min_u;

    std::vector<double> base_values;
    base_values.reserve(base_interior.size());
    for (VertexId v : base_interior) base_values.push_back(hat.at(v));
    if (k > 0) {
      double diff = 0.0;
      for (std::size_t i = 0; i < base_values.size(); ++i) {
        diff = std::max(diff, std::abs(base_values[i] - prev_hat[i]));
      }
      step.sup_diff_prev = diff;
      if (k > 1 && diff > prev_diff + tol.monotone) out.diffs_decreasing = false;
      prev_diff = diff;
    }
    prev_hat = std::move(base_values);

    out.steps.push_back(step);
    if (k + 1 == radii.size()) out.normalized = hat;
  }
  return out;
}

}  // namespace gp
