#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "gp/graph.hpp"
#include "gp/spectral.hpp"
#include "gp/tolerances.hpp"

namespace gp {

// Random-walk transition structure of a region: p(x,y) = mu_xy / d_x for
// interior rows x, split into the interior block and the block into the
// absorbing boundary shell. Interior row sums plus boundary row sums equal 1,
// and d_x p(x,y) = d_y p(y,x) (reversibility).
struct TransitionMatrix {
  Region region;
  Eigen::SparseMatrix<double> interior;     // interior x interior
  Eigen::SparseMatrix<double> to_boundary;  // interior x boundary
};

TransitionMatrix transition(const WeightedGraph& g, const Region& region);

// Green function of the absorbed walk, Kronecker-normalized:
//   (I - P_S) g = Identity,
// so g(x,y) counts expected visits to y started from x. The measure-level
// kernel g(x,y)/d_y is symmetric; kernel_at exposes it.
struct GreenMatrix {
  Region region;
  Eigen::VectorXd mass;    // interior degrees
  Eigen::MatrixXd values;  // g(x, y), indexed by interior position

  double kernel_at(int i, int j) const { return values(i, j) / mass(j); }
};

// Full Green matrix via one factorization of D - W restricted to the
// interior and one solve per column. Interior sizes above matrix_max (2000)
// are refused; use green_column / green_probes there.
GreenMatrix green_direct(const WeightedGraph& g, const Region& region,
                         const SolveOptions& opts = default_solve, int matrix_max = 2000);

struct GreenSeries {
  GreenMatrix green;               // partial sum of powers of P_S
  bool converged = false;
  int terms = 0;                   // highest power included
  double last_increment = 0.0;     // max entry of the last added power
  std::vector<double> partial_max; // max entry of the running sum after each term
};

// Neumann series sum of powers of P_S, full-matrix form (interior <= 2000).
// Stops when the next power's max entry drops below increment_tol, or exposes
// the partial sum plus growth curve after max_terms. For regions with a
// nonempty boundary the series always converges eventually.
GreenSeries green_series(const WeightedGraph& g, const Region& region, int max_terms,
                         double increment_tol = default_tol.series_increment,
                         int matrix_max = 2000);

struct GreenColumn {
  VertexId source;                // the column vertex y
  std::vector<double> values;     // g(x, y) for interior x, ascending id order
  bool converged = true;
  int terms = 0;                  // series route only
};

// Single column of the Green matrix at any interior scale: direct sparse
// solve of (D - W) col = d_y e_y.
GreenColumn green_column(const WeightedGraph& g, const Region& region, VertexId y,
                         const SolveOptions& opts = default_solve);

// Same column through the Neumann series (per-column vectors, no full
// matrix); used to cross-check the direct route at scales where the full
// series matrix is unavailable.
GreenColumn green_series_column(const WeightedGraph& g, const Region& region, VertexId y,
                                int max_terms,
                                double increment_tol = default_tol.series_increment);

// g values at the requested (x, y) probe pairs, one direct column solve per
// distinct y.
std::vector<double> green_probes(const WeightedGraph& g, const Region& region,
                                 const std::vector<std::pair<VertexId, VertexId>>& probes,
                                 const SolveOptions& opts = default_solve);

struct GrowthFit {
  double linear_slope = 0.0;  // least squares of value against radius
  double linear_rss = 0.0;
  double log_slope = 0.0;     // least squares of value against log(radius)
  double log_rss = 0.0;
  std::string better;         // "linear" or "log", by residual sum of squares
};

struct GreenExhaustionProbe {
  VertexId x = 0;
  VertexId y = 0;
  std::vector<double> values;  // per radius
  bool monotone = false;       // nondecreasing within tolerance, and all >= 0
  std::string classification;  // "CONVERGING" or "GROWING"
  double last_gap = 0.0;
  double gap_ratio = 0.0;      // last step-normalized gap over the previous one
  GrowthFit fit;
};

struct GreenExhaustion {
  std::vector<int> radii;
  std::vector<GreenExhaustionProbe> probes;
  bool monotone = false;       // all probes
  std::string classification;  // "GROWING" when any probe grows
};

// Green values along a growing family of open balls about x0, evaluated at
// probe pairs that must lie inside the smallest interior. Asserts entrywise
// monotonicity (report field) and classifies each probe:
//   CONVERGING when the last gap is below converge_gap * (1 + value), or when
//   the per-unit-radius gaps decay geometrically (ratio <= converge_ratio);
//   GROWING otherwise, with linear and logarithmic growth fits reported.
GreenExhaustion green_exhaustion(const WeightedGraph& host, VertexId x0,
                                 const std::vector<int>& radii,
                                 const std::vector<std::pair<VertexId, VertexId>>& probes,
                                 const SolveOptions& opts = default_solve,
                                 const Tolerances& tol = default_tol);

struct EigenBoundReport {
  double lambda = 0.0;
  double max_row_sum = 0.0;              // A = max over x of sum_y g(x, y)
  double product = 0.0;                  // lambda * A, bounded below by 1
  double product_floor = 0.0;
  double representation_residual = 0.0;  // max |u - lambda * G u| for the eigenfunction
  double representation_limit = 0.0;
  bool pass() const {
    return product >= product_floor && representation_residual <= representation_limit;
  }
};

// The potential-free bound lambda1 * max_x sum_y g(x,y) >= 1 together with
// the representation identity u = lambda1 * (G applied to u) for the
// principal eigenfunction. Both are checked without forming the full Green
// matrix (two linear solves).
EigenBoundReport eigen_bound_check(const WeightedGraph& g, const Region& region,
                                   const SolveOptions& opts = default_solve,
                                   const Tolerances& tol = default_tol);

struct SuperharmonicReport {
  int vertices_checked = 0;
  double max_laplacian = 0.0;    // over interior vertices
  bool superharmonic = false;    // max_laplacian <= tolerance
  double boundary_max = 0.0;     // max of phi on the boundary shell (decay proxy)
  double p = 0.0;                // 0 when no power sum was requested
  double power_sum = 0.0;        // integral of phi^p over the interior
  double tolerance = 0.0;
};

// Certificate data for a positive test function phi on the region closure:
// superharmonicity (lap(phi) <= 0 at every interior vertex, within identity
// tolerance), the boundary maximum, and optionally the weighted p-th power
// sum. Throws input_error when phi is not strictly positive on the closure.
SuperharmonicReport superharmonic_certificate(const WeightedGraph& g, const Region& region,
                                              const GraphFunction& phi, double p = 0.0,
                                              double tol = default_tol.identity);

}  // namespace gp
