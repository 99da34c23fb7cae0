#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "gp/graph.hpp"
#include "gp/tolerances.hpp"

namespace gp {

// Knobs for the linear-algebra backends. Defaults keep every routine exact
// and deterministic at desk scale: dense eigensolves up to 512 interior
// vertices, sparse factorization up to 2e4, conjugate gradient beyond.
struct SolveOptions {
  int dense_eigen_max = 512;
  int direct_solve_max = 20000;
  double cg_tol = 1e-12;
  int cg_max_iterations = 200000;
  double rayleigh_step = 1e-12;  // inverse-iteration stall threshold
  int iteration_cap = 100000;
};

inline constexpr SolveOptions default_solve{};

// Quadratic form of the operator -lap + Q on a region with the boundary
// condition u = 0 baked in: A is interior x interior with
//   A[x][x] = d_x (1 + Q(x)),   A[x][y] = -mu_xy for interior neighbors,
// and the mass weights are the degrees d_x. The Rayleigh quotient
// u'Au / u'Du reproduces integral((-lap(u)+Qu) u) / integral(u^2) for u
// vanishing on the boundary shell.
struct DirichletForm {
  Region region;
  Eigen::SparseMatrix<double> matrix;
  Eigen::VectorXd mass;  // interior degrees, ascending id order
};

DirichletForm assemble(const WeightedGraph& g, const Region& region, const GraphFunction& q);

// Rayleigh quotient of u against the form; u must be nonzero on the interior
// (boundary values are irrelevant, the form treats them as 0).
double rayleigh(const DirichletForm& form, const GraphFunction& u);

struct Lambda1Result {
  double lambda = 0.0;
  // Principal eigenfunction on the region closure: 0 on the boundary shell,
  // max value 1, sign fixed positive at the smallest interior id.
  GraphFunction eigenfunction;
  double residual = 0.0;        // max-norm of A u - lambda D u at the reported u
  double residual_limit = 0.0;  // contract: residual < residual_limit
  int iterations = 0;           // 0 on the dense route
  bool positive = false;        // strictly positive on the whole interior
  std::string method;           // "dense" or "inverse-iteration"
};

// Smallest generalized eigenvalue of A u = lambda D u with its eigenfunction.
// Dense symmetric solve on D^(-1/2) A D^(-1/2) for small interiors; shifted
// inverse iteration from the all-ones vector above that. Throws numeric_error
// if the iteration cap is reached before the residual contract holds.
Lambda1Result lambda1(const WeightedGraph& g, const Region& region, const GraphFunction& q,
                      const SolveOptions& opts = default_solve,
                      double residual_tol = default_tol.residual);

struct Lambda1Step {
  int radius = 0;
  int interior_size = 0;
  double lambda = 0.0;
  double gap_from_prev = 0.0;  // previous lambda minus this one; 0 on the first step
  double residual = 0.0;
  int iterations = 0;
};

struct Lambda1Exhaustion {
  std::vector<Lambda1Step> steps;
  bool monotone = false;  // nonincreasing within the monotonicity tolerance
  double last_value = 0.0;
  double last_gap = 0.0;
};

// lambda1 over a growing family of balls about x0: at each requested radius R
// the interior is the open ball {d(x0, v) < R}. The host must store complete
// neighborhoods for every interior vertex, and every ball must leave a
// nonempty boundary shell. Radii must be strictly increasing and >= 1.
Lambda1Exhaustion lambda1_exhaustion(const WeightedGraph& host, VertexId x0,
                                     const std::vector<int>& radii, const GraphFunction& q,
                                     const SolveOptions& opts = default_solve,
                                     const Tolerances& tol = default_tol);

// Region whose interior is the open ball {v : d(center, v) < radius}. Throws
// input_error when the host truncates a needed neighborhood or when nothing
// is left outside the ball.
Region exhaustion_region(const WeightedGraph& g, VertexId center, int radius);

}  // namespace gp
