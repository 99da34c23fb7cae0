#pragma once

#include <cstdint>

#include "gp/graph.hpp"
#include "gp/report.hpp"
#include "gp/rng.hpp"
#include "gp/spectral.hpp"
#include "gp/tolerances.hpp"

namespace gp::checks {

// Trial counts are the advertised defaults of `check-all`; lowering them is
// for exploratory runs only.
struct SuiteOptions {
  std::uint64_t seed = 42;
  Tolerances tol{};
  SolveOptions solve{};
  int kato_trials = 1000;
  int pair_trials = 500;
  int region_trials = 100;
  int poisson_trials = 500;
  int harmonic_trials = 500;
};

// Deterministic fixture samplers, shared with the test suite. Families:
// paths, cycles, stars, 1d/2d lattice balls, binary-branching tree balls,
// each at most 60 vertices, half the draws with perturbed edge weights.
WeightedGraph sample_fixture(SplitMix64& rng);
// Connected random interior of at most max_interior vertices, grown from a
// random start; the complement is never empty, so the boundary exists.
Region sample_region(SplitMix64& rng, const WeightedGraph& g, int max_interior = 12);
GraphFunction sample_function(SplitMix64& rng, const WeightedGraph& g, double lo, double hi);
GraphFunction sample_function_on(SplitMix64& rng, const std::vector<VertexId>& ids,
                                 double lo, double hi);

// Pointwise identities and inequalities for the Laplacian of u, |u|, u+, u^2.
ExperimentReport kato_suite(const SuiteOptions& o);
// grad_sq(u) <= P u^2 and P >= Q^2 across sampled solution pairs.
ExperimentReport gradient_suite(const SuiteOptions& o);
// sup_S u <= C(S) inf_S u in both modes; sharp never exceeds uniform.
ExperimentReport harnack_suite(const SuiteOptions& o);
// Closed-form path eigenvalues, exhaustion monotonicity, tree floor.
ExperimentReport eigenvalue_suite(const SuiteOptions& o);
// Direct vs series Green agreement, kernel symmetry, defining identity.
ExperimentReport green_suite(const SuiteOptions& o);
// Growth vs convergence of g_R along ball exhaustions of three lattices.
ExperimentReport green_exhaustion_suite(const SuiteOptions& o);
// lambda1 * max row sum of the Green matrix >= 1, plus the representation
// identity for the principal eigenfunction.
ExperimentReport eigen_bound_suite(const SuiteOptions& o);
// L2 source bound for (-Delta + Q)u = f with zero boundary values.
ExperimentReport poisson_suite(const SuiteOptions& o);
// Solver cross-checks: Green consistency, maximum principle, linearity,
// normalized limits for zero potential.
ExperimentReport solver_suite(const SuiteOptions& o);

// Every suite above, merged under name prefixes. Deterministic except for
// the wall-time field.
ExperimentReport run_all(const SuiteOptions& o);

}  // namespace gp::checks
