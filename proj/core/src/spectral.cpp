#include "gp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <Eigen/Eigenvalues>

#include "spd_solver.hpp"

namespace gp {
namespace {

double inf_norm_of(const Eigen::SparseMatrix<double>& m) {
  Eigen::VectorXd row_abs = Eigen::VectorXd::Zero(m.rows());
  for (int k = 0; k < m.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, k); it; ++it) {
      row_abs(it.row()) += std::abs(it.value());
    }
  }
  return m.rows() == 0 ? 0.0 : row_abs.maxCoeff();
}

// Smallest potential value; the generalized spectrum of (A, D) lies above
// min(0, q_min), so shifting by one below that keeps A - shift*D definite.
double safe_shift(const DirichletForm& form, const GraphFunction& q) {
  double q_min = 0.0;
  for (VertexId v : form.region.interior) q_min = std::min(q_min, q.at(v));
  return q_min - 1.0;
}

struct EigenPair {
  double lambda;
  Eigen::VectorXd u;
  double residual;
  int iterations;
};

EigenPair dense_smallest(const DirichletForm& form) {
  int n = static_cast<int>(form.matrix.rows());
  Eigen::VectorXd half = form.mass.array().sqrt().inverse();
  Eigen::MatrixXd sym = half.asDiagonal() * Eigen::MatrixXd(form.matrix) * half.asDiagonal();
  sym = (sym + sym.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.info() != Eigen::Success) throw numeric_error("dense eigensolve failed");
  EigenPair pair;
  pair.lambda = es.eigenvalues()(0);
  pair.u = half.asDiagonal() * es.eigenvectors().col(0);
  pair.residual =
      (form.matrix * pair.u - pair.lambda * form.mass.asDiagonal() * pair.u)
          .cwiseAbs()
          .maxCoeff();
  pair.iterations = 0;
  (void)n;
  return pair;
}

EigenPair iterate_smallest(const DirichletForm& form, const GraphFunction& q,
                           const SolveOptions& opts, double residual_target) {
  // Factor the form itself when it is definite (shift 0, fastest contraction
  // toward the smallest eigenvalue); otherwise shift safely below the whole
  // spectrum so the factored matrix is definite again.
  SolveOptions direct_opts = opts;
  direct_opts.direct_solve_max =
      std::max(direct_opts.direct_solve_max, static_cast<int>(form.matrix.rows()));
  std::optional<detail::SpdSolver> plain;
  plain.emplace(form.matrix, direct_opts);
  std::optional<detail::SpdSolver> shifted;
  double shift = 0.0;
  if (!plain->positive_definite()) {
    shift = safe_shift(form, q);
    Eigen::SparseMatrix<double> moved = form.matrix;
    for (int i = 0; i < moved.rows(); ++i) moved.coeffRef(i, i) -= shift * form.mass(i);
    shifted.emplace(std::move(moved), direct_opts);
  }
  detail::SpdSolver& solver = shifted ? *shifted : *plain;

  Eigen::VectorXd u = Eigen::VectorXd::Ones(form.matrix.rows());
  u /= std::sqrt(u.dot(form.mass.asDiagonal() * u));
  double lambda = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  int iter = 0;
  while (iter < opts.iteration_cap) {
    ++iter;
    Eigen::VectorXd rhs = form.mass.asDiagonal() * u;
    u = solver.solve(rhs);
    u /= std::sqrt(u.dot(form.mass.asDiagonal() * u));
    Eigen::VectorXd au = form.matrix * u;
    Eigen::VectorXd du = form.mass.asDiagonal() * u;
    lambda = u.dot(au);  // u is D-normalized, so the quotient is just u'Au
    // Measured on the sup-normalized vector, matching the reported contract.
    residual = (au - lambda * du).cwiseAbs().maxCoeff() / u.cwiseAbs().maxCoeff();
    if (residual <= residual_target) break;
  }
  if (residual > residual_target) {
    throw numeric_error("eigenvalue iteration failed to reach residual " +
                        std::to_string(residual_target) + " within " +
                        std::to_string(opts.iteration_cap) + " steps");
  }
  return {lambda, u, residual, iter};
}

}  // namespace

DirichletForm assemble(const WeightedGraph& g, const Region& region, const GraphFunction& q) {
  DirichletForm form;
  form.region = region;
  int n = region.interior_size();
  form.mass.resize(n);

  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(n) * 4);
  for (int i = 0; i < n; ++i) {
    VertexId x = region.interior[static_cast<std::size_t>(i)];
    int xi = g.index_of(x);
    double d = g.degree_at(xi);
    form.mass(i) = d;
    entries.emplace_back(i, i, d * (1.0 + q.at(x)));
    for (const HalfEdge& e : g.neighbors(xi)) {
      int j = region.interior_index(g.id_of(e.nbr));
      if (j >= 0) entries.emplace_back(i, j, -e.mu);
    }
  }
  form.matrix.resize(n, n);
  form.matrix.setFromTriplets(entries.begin(), entries.end());
  return form;
}

double rayleigh(const DirichletForm& form, const GraphFunction& u) {
  int n = form.region.interior_size();
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = u.at(form.region.interior[static_cast<std::size_t>(i)]);
  double den = x.dot(form.mass.asDiagonal() * x);
  if (den == 0.0) throw input_error("rayleigh quotient of a function vanishing on the interior");
  return x.dot(form.matrix * x) / den;
}

Lambda1Result lambda1(const WeightedGraph& g, const Region& region, const GraphFunction& q,
                      const SolveOptions& opts, double residual_tol) {
  DirichletForm form = assemble(g, region, q);
  int n = region.interior_size();
  double target = residual_tol * inf_norm_of(form.matrix);

  EigenPair pair;
  Lambda1Result result;
  if (n <= opts.dense_eigen_max) {
    pair = dense_smallest(form);
    result.method = "dense";
  } else {
    pair = iterate_smallest(form, q, opts, target);
    result.method = "inverse-iteration";
  }

  // Canonical presentation: positive at the smallest interior id, max 1.
  if (pair.u(0) < 0.0) pair.u = -pair.u;
  double top = pair.u.maxCoeff();
  if (top <= 0.0) throw numeric_error("principal eigenfunction has no positive part");
  pair.u /= top;

  result.lambda = pair.lambda;
  result.residual =
      (form.matrix * pair.u - pair.lambda * form.mass.asDiagonal() * pair.u)
          .cwiseAbs()
          .maxCoeff();
  result.residual_limit = target;
  result.iterations = pair.iterations;
  result.positive = pair.u.minCoeff() > 0.0;
  for (int i = 0; i < n; ++i) {
    result.eigenfunction.set(region.interior[static_cast<std::size_t>(i)], pair.u(i));
  }
  for (VertexId b : region.boundary) result.eigenfunction.set(b, 0.0);
  if (result.residual > result.residual_limit) {
    throw numeric_error("eigenpair residual " + std::to_string(result.residual) +
                        " exceeds contract " + std::to_string(result.residual_limit));
  }
  return result;
}

Region exhaustion_region(const WeightedGraph& g, VertexId center, int radius) {
  if (radius < 1) throw input_error("exhaustion radius must be at least 1");
  // Open ball: vertices strictly closer than `radius`.
  std::vector<int> dist = distances_from(g, center);
  std::vector<VertexId> interior;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (dist[static_cast<std::size_t>(i)] >= 0 && dist[static_cast<std::size_t>(i)] < radius) {
      interior.push_back(g.id_of(i));
    }
  }
  Region region = region_from_interior(g, std::move(interior));
  for (VertexId v : region.interior) {
    if (!g.complete_at(g.index_of(v))) {
      throw input_error("host graph truncates the neighborhood of vertex " +
                        std::to_string(v) + "; radius " + std::to_string(radius) +
                        " exceeds the covered range");
    }
  }
  if (region.boundary.empty()) {
    throw input_error("radius " + std::to_string(radius) +
                      " swallows the whole host graph; no boundary shell remains");
  }
  return region;
}

Lambda1Exhaustion lambda1_exhaustion(const WeightedGraph& host, VertexId x0,
                                     const std::vector<int>& radii, const GraphFunction& q,
                                     const SolveOptions& opts, const Tolerances& tol) {
  if (radii.empty()) throw input_error("no radii given");
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    if (radii[i] >= radii[i + 1]) throw input_error("radii must be strictly increasing");
  }

  Lambda1Exhaustion out;
  out.monotone = true;
  double prev = 0.0;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    Region region = exhaustion_region(host, x0, radii[k]);
    Lambda1Result r = lambda1(host, region, q, opts);
    Lambda1Step step;
    step.radius = radii[k];
    step.interior_size = region.interior_size();
    step.lambda = r.lambda;
    step.gap_from_prev = k == 0 ? 0.0 : prev - r.lambda;
    step.residual = r.residual;
    step.iterations = r.iterations;
    if (k > 0 && r.lambda > prev + tol.monotone) out.monotone = false;
    out.steps.push_back(step);
    prev = r.lambda;
  }
  out.last_value = out.steps.back().lambda;
  out.last_gap = out.steps.size() > 1 ? out.steps.back().gap_from_prev : 0.0;
  return out;
}

}  // namespace gp
