#pragma once

namespace gp {

// Default tolerances for every assertion the library makes. Checks of
// identities that are exact in real arithmetic use `identity`, scaled by a
// size factor stated at the call site; linear-algebra contracts use
// `residual`. The CLI exposes each field as a --tol-* flag.
struct Tolerances {
  double identity = 1e-12;         // pointwise identities, scaled by (1 + sup|u|^2)
  double residual = 1e-10;         // linear solves and eigenpairs, relative
  double pair_residual = 1e-10;    // -lap(u) + Q u residual of sampled pairs, relative to sup|u|
  double gradient_slack = 1e-9;    // grad_sq(u) <= P u^2 + gradient_slack * u^2
  double harnack_slack = 1e-9;     // sup u <= C(S) inf u * (1 + harnack_slack)
  double monotone = 1e-12;         // exhaustion monotonicity slack
  double green_agree = 1e-10;      // series vs direct Green agreement, entrywise
  double kernel_symmetry = 1e-12;  // g(x,y)/d_y vs g(y,x)/d_x, relative
  double eigen_bound = 1e-9;       // lambda1 * max row sum >= 1 - eigen_bound
  double representation = 1e-8;    // u = lambda1 * (G u) residual, relative to sup u
  double l2_bound = 1e-9;          // integral(u^2) <= lambda1^-2 integral(f^2), relative
  double series_increment = 1e-13; // Neumann series stopping increment
  double converge_gap = 1e-6;      // exhaustion gap threshold for CONVERGING
  double converge_ratio = 0.9;     // geometric gap-decay acceptance ratio
};

inline constexpr Tolerances default_tol{};

}  // namespace gp
