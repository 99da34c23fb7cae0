#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <Eigen/IterativeLinearSolvers>

#include "gp/errors.hpp"
#include "gp/spectral.hpp"

namespace gp::detail {

// Shared backend for symmetric positive definite systems: sparse LDLT
// factorization at desk scale, conjugate gradient above. Holds its own copy
// of the matrix so callers can discard theirs.
class SpdSolver {
 public:
  SpdSolver(Eigen::SparseMatrix<double> m, const SolveOptions& opts)
      : m_(std::move(m)), opts_(opts), direct_(m_.rows() <= opts.direct_solve_max) {
    if (direct_) {
      ldlt_.compute(m_);
    } else {
      cg_.setTolerance(opts_.cg_tol);
      cg_.setMaxIterations(opts_.cg_max_iterations);
      cg_.compute(m_);
    }
  }

  bool direct() const { return direct_; }

  // Meaningful on the direct route only: factorization succeeded with
  // strictly positive pivots, which certifies the matrix is positive
  // definite (equivalently, the associated lambda1 is positive).
  bool positive_definite() const {
    return direct_ && ldlt_.info() == Eigen::Success && ldlt_.vectorD().minCoeff() > 0.0;
  }

  Eigen::VectorXd solve(const Eigen::VectorXd& b) const {
    if (direct_) {
      if (ldlt_.info() != Eigen::Success) {
        throw numeric_error("sparse factorization failed");
      }
      return ldlt_.solve(b);
    }
    Eigen::VectorXd x = cg_.solve(b);
    if (cg_.info() != Eigen::Success) {
      throw numeric_error("conjugate gradient did not reach tolerance " +
                          std::to_string(opts_.cg_tol));
    }
    return x;
  }

 private:
  Eigen::SparseMatrix<double> m_;
  SolveOptions opts_;
  bool direct_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt_;
  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg_;
};

}  // namespace gp::detail
