#include "gp/green.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "gp/operators.hpp"
#include "spd_solver.hpp"

namespace gp {
namespace {

// D - W restricted to the interior: the assembled form with zero potential.
DirichletForm zero_form(const WeightedGraph& g, const Region& region) {
  return assemble(g, region, GraphFunction::zero(region.interior));
}

Eigen::VectorXd solve_column(const detail::SpdSolver& solver, const DirichletForm& form,
                             int j) {
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(form.matrix.rows());
  rhs(j) = form.mass(j);
  return solver.solve(rhs);
}

// Least-squares fit of values against the model column, plus residuals.
void fit_line(const std::vector<double>& xs, const std::vector<double>& ys, double* slope,
              double* rss) {
  double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  double b = denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
  double a = (sy - b * sx) / n;
  double acc = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double r = ys[i] - (a + b * xs[i]);
    acc += r * r;
  }
  *slope = b;
  *rss = acc;
}

}  // namespace

TransitionMatrix transition(const WeightedGraph& g, const Region& region) {
  TransitionMatrix t;
  t.region = region;
  int n = region.interior_size();
  int m = static_cast<int>(region.boundary.size());

  std::vector<Eigen::Triplet<double>> inner, outer;
  for (int i = 0; i < n; ++i) {
    VertexId x = region.interior[static_cast<std::size_t>(i)];
    int xi = g.index_of(x);
    double d = g.degree_at(xi);
    for (const HalfEdge& e : g.neighbors(xi)) {
      VertexId y = g.id_of(e.nbr);
      int j = region.interior_index(y);
      if (j >= 0) {
        inner.emplace_back(i, j, e.mu / d);
      } else {
        outer.emplace_back(i, region.boundary_index(y), e.mu / d);
      }
    }
  }
  t.interior.resize(n, n);
  t.interior.setFromTriplets(inner.begin(), inner.end());
  t.to_boundary.resize(n, m);
  t.to_boundary.setFromTriplets(outer.begin(), outer.end());
  return t;
}

GreenMatrix green_direct(const WeightedGraph& g, const Region& region,
                         const SolveOptions& opts, int matrix_max) {
  int n = region.interior_size();
  if (n > matrix_max) {
    throw resource_error("full Green matrix refused for interior size " + std::to_string(n) +
                         " (limit " + std::to_string(matrix_max) +
                         "); use green_column or green_probes");
  }
  DirichletForm form = zero_form(g, region);
  detail::SpdSolver solver(form.matrix, opts);
  if (solver.direct() && !solver.positive_definite()) {
    throw numeric_error("interior system is singular; the region has no boundary shell");
  }

  GreenMatrix green;
  green.region = region;
  green.mass = form.mass;
  green.values.resize(n, n);
  for (int j = 0; j < n; ++j) green.values.col(j) = solve_column(solver, form, j);
  return green;
}

GreenSeries green_series(const WeightedGraph& g, const Region& region, int max_terms,
                         double increment_tol, int matrix_max) {
  if (max_terms < 1) throw input_error("series needs max_terms >= 1");
  if (!(increment_tol > 0.0)) throw input_error("series tolerance must be positive");
  int n = region.interior_size();
  if (n > matrix_max) {
    throw resource_error("full series matrix refused for interior size " + std::to_string(n) +
                         " (limit " + std::to_string(matrix_max) + "); use green_series_column");
  }

  TransitionMatrix t = transition(g, region);
  GreenSeries out;
  out.green.region = region;
  out.green.mass = zero_form(g, region).mass;

  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  out.partial_max.push_back(sum.maxCoeff());
  for (int k = 1; k <= max_terms; ++k) {
    power = t.interior * power;
    double inc = power.maxCoeff();
    sum += power;
    out.terms = k;
    out.last_increment = inc;
    out.partial_max.push_back(sum.maxCoeff());
    if (inc < increment_tol) {
      out.converged = true;
      break;
    }
  }
  out.green.values = std::move(sum);
  return out;
}

GreenColumn green_column(const WeightedGraph& g, const Region& region, VertexId y,
                         const SolveOptions& opts) {
  int j = region.interior_index(y);
  if (j < 0) throw input_error("column vertex " + std::to_string(y) + " is not interior");
  DirichletForm form = zero_form(g, region);
  detail::SpdSolver solver(form.matrix, opts);
  if (solver.direct() && !solver.positive_definite()) {
    throw numeric_error("interior system is singular; the region has no boundary shell");
  }
  Eigen::VectorXd col = solve_column(solver, form, j);
  GreenColumn out;
  out.source = y;
  out.values.assign(col.data(), col.data() + col.size());
  return out;
}

GreenColumn green_series_column(const WeightedGraph& g, const Region& region, VertexId y,
                                int max_terms, double increment_tol) {
  if (max_terms < 1) throw input_error("series needs max_terms >= 1");
  int j = region.interior_index(y);
  if (j < 0) throw input_error("column vertex " + std::to_string(y) + " is not interior");

  TransitionMatrix t = transition(g, region);
  int n = region.interior_size();
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd power = Eigen::VectorXd::Zero(n);
  sum(j) = 1.0;
  power(j) = 1.0;
  GreenColumn out;
  out.source = y;
  out.converged = false;
  for (int k = 1; k <= max_terms; ++k) {
    power = t.interior * power;
    sum += power;
    out.terms = k;
    if (power.cwiseAbs().maxCoeff() < increment_tol) {
      out.converged = true;
      break;
    }
  }
  out.values.assign(sum.data(), sum.data() + sum.size());
  return out;
}

std::vector<double> green_probes(const WeightedGraph& g, const Region& region,
                                 const std::vector<std::pair<VertexId, VertexId>>& probes,
                                 const SolveOptions& opts) {
  DirichletForm form = zero_form(g, region);
  detail::SpdSolver solver(form.matrix, opts);
  if (solver.direct() && !solver.positive_definite()) {
    throw numeric_error("interior system is singular; the region has no boundary shell");
  }

  std::map<VertexId, Eigen::VectorXd> columns;
  for (const auto& [x, y] : probes) {
    if (region.interior_index(x) < 0 || region.interior_index(y) < 0) {
      throw input_error("probe (" + std::to_string(x) + ", " + std::to_string(y) +
                        ") is not an interior pair");
    }
    if (!columns.count(y)) {
      columns.emplace(y, solve_column(solver, form, region.interior_index(y)));
    }
  }
  std::vector<double> out;
  out.reserve(probes.size());
  for (const auto& [x, y] : probes) {
    out.push_back(columns.at(y)(region.interior_index(x)));
  }
  return out;
}

GreenExhaustion green_exhaustion(const WeightedGraph& host, VertexId x0,
                                 const std::vector<int>& radii,
                                 const std::vector<std::pair<VertexId, VertexId>>& probes,
                                 const SolveOptions& opts, const Tolerances& tol) {
  if (radii.empty()) throw input_error("no radii given");
  if (probes.empty()) throw input_error("no probes given");
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    if (radii[i] >= radii[i + 1]) throw input_error("radii must be strictly increasing");
  }

  GreenExhaustion out;
  out.radii = radii;
  {
    Region smallest = exhaustion_region(host, x0, radii.front());
    for (const auto& [x, y] : probes) {
      if (!smallest.is_interior(x) || !smallest.is_interior(y)) {
        throw input_error("probe (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") lies outside the smallest ball's interior");
      }
    }
  }

  std::vector<std::vector<double>> per_probe(probes.size());
  for (int radius : radii) {
    Region region = exhaustion_region(host, x0, radius);
    std::vector<double> values = green_probes(host, region, probes, opts);
    for (std::size_t p = 0; p < probes.size(); ++p) per_probe[p].push_back(values[p]);
  }

  out.monotone = true;
  bool any_growing = false;
  for (std::size_t p = 0; p < probes.size(); ++p) {
    GreenExhaustionProbe probe;
    probe.x = probes[p].first;
    probe.y = probes[p].second;
    probe.values = per_probe[p];

    probe.monotone = probe.values.front() >= -tol.monotone;
    for (std::size_t i = 0; i + 1 < probe.values.size(); ++i) {
      if (probe.values[i + 1] < probe.values[i] - tol.monotone) probe.monotone = false;
    }
    if (!probe.monotone) out.monotone = false;

    std::size_t m = probe.values.size();
    probe.last_gap = m > 1 ? probe.values[m - 1] - probe.values[m - 2] : 0.0;

    // Gaps normalized per unit radius so uneven radius lists compare fairly.
    std::vector<double> unit_gaps;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      double dr = static_cast<double>(radii[i + 1] - radii[i]);
      unit_gaps.push_back((probe.values[i + 1] - probe.values[i]) / dr);
    }
    probe.gap_ratio = unit_gaps.size() >= 2 && unit_gaps[unit_gaps.size() - 2] > 0.0
                          ? unit_gaps.back() / unit_gaps[unit_gaps.size() - 2]
                          : 1.0;

    bool tiny_gap =
        m > 1 && std::abs(probe.last_gap) < tol.converge_gap * (1.0 + std::abs(probe.values.back()));
    bool decaying = unit_gaps.size() >= 2 && unit_gaps[unit_gaps.size() - 2] > 0.0 &&
                    probe.gap_ratio <= tol.converge_ratio;
    probe.classification = (tiny_gap || decaying) ? "CONVERGING" : "GROWING";
    if (probe.classification == "GROWING") any_growing = true;

    std::vector<double> xs_lin, xs_log;
    for (int r : radii) {
      xs_lin.push_back(static_cast<double>(r));
      xs_log.push_back(std::log(static_cast<double>(r)));
    }
    fit_line(xs_lin, probe.values, &probe.fit.linear_slope, &probe.fit.linear_rss);
    fit_line(xs_log, probe.values, &probe.fit.log_slope, &probe.fit.log_rss);
    probe.fit.better = probe.fit.linear_rss <= probe.fit.log_rss ? "linear" : "log";

    out.probes.push_back(std::move(probe));
  }
  out.classification = any_growing ? "GROWING" : "CONVERGING";
  return out;
}

EigenBoundReport eigen_bound_check(const WeightedGraph& g, const Region& region,
                                   const SolveOptions& opts, const Tolerances& tol) {
  GraphFunction zero_q = GraphFunction::zero(region.interior);
  Lambda1Result spec = lambda1(g, region, zero_q, opts);

  DirichletForm form = zero_form(g, region);
  detail::SpdSolver solver(form.matrix, opts);
  if (solver.direct() && !solver.positive_definite()) {
    throw numeric_error("interior system is singular; the region has no boundary shell");
  }
  int n = region.interior_size();

  // Row sums of g in one solve: (D - W) s = D 1 gives s = G 1.
  Eigen::VectorXd ones_rhs = form.mass;
  Eigen::VectorXd row_sums = solver.solve(ones_rhs);

  // Representation identity via one more solve: (D - W) w = D u gives w = G u.
  Eigen::VectorXd u(n);
  for (int i = 0; i < n; ++i) {
    u(i) = spec.eigenfunction.at(region.interior[static_cast<std::size_t>(i)]);
  }
  Eigen::VectorXd gu = solver.solve(form.mass.asDiagonal() * u);

  EigenBoundReport report;
  report.lambda = spec.lambda;
  report.max_row_sum = row_sums.maxCoeff();
  report.product = report.lambda * report.max_row_sum;
  report.product_floor = 1.0 - tol.eigen_bound;
  report.representation_residual = (u - spec.lambda * gu).cwiseAbs().maxCoeff();
  report.representation_limit = tol.representation * u.cwiseAbs().maxCoeff();
  return report;
}

SuperharmonicReport superharmonic_certificate(const WeightedGraph& g, const Region& region,
                                              const GraphFunction& phi, double p,
                                              double tol) {
  for (VertexId v : region.closure()) {
    if (!(phi.at(v) > 0.0)) {
      throw input_error("test function is not positive at vertex " + std::to_string(v));
    }
  }
  if (p != 0.0 && !(p > 1.0)) throw input_error("power-sum exponent must exceed 1");

  SuperharmonicReport report;
  report.tolerance = tol * (1.0 + phi.sup_norm() * phi.sup_norm());
  double worst = -std::numeric_limits<double>::infinity();
  for (VertexId v : region.interior) {
    worst = std::max(worst, laplacian(g, phi, v));
    ++report.vertices_checked;
  }
  report.max_laplacian = worst;
  report.superharmonic = worst <= report.tolerance;
  double bmax = 0.0;
  for (VertexId b : region.boundary) bmax = std::max(bmax, phi.at(b));
  report.boundary_max = bmax;
  if (p > 1.0) {
    report.p = p;
    GraphFunction powered;
    for (VertexId v : region.interior) powered.set(v, std::pow(phi.at(v), p));
    report.power_sum = integral(g, powered, region.interior);
  }
  return report;
}

}  // namespace gp
