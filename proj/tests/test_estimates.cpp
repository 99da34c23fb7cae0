#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "gp/estimates.hpp"
#include "gp/generators.hpp"
#include "gp/graph.hpp"
#include "gp/operators.hpp"

using namespace gp;

namespace {

// The tent u = (1, 2, 1) on a path of three vertices, with the potential that
// makes it a solution. Worked out by hand: Q = (1, -1/2, 1), P = (1, 1/2, 1).
SolutionPair tent_pair(const WeightedGraph& p3) {
  SolutionPair pair;
  pair.u = GraphFunction::zero({0, 1, 2});
  pair.u.set(0, 1.0);
  pair.u.set(1, 2.0);
  pair.u.set(2, 1.0);
  pair.q = GraphFunction::zero({0, 1, 2});
  for (VertexId v : p3.vertices())
    pair.q.set(v, laplacian(p3, pair.u, v) / pair.u.at(v));
  return pair;
}

}  // namespace

TEST_CASE("p bound values") {
  WeightedGraph p3 = path_graph(3);
  GraphFunction zero = GraphFunction::zero(p3.vertices());
  CHECK(p_bound(p3, zero, 1) == doctest::Approx(1.0));  // dhat - 1
  CHECK(p_bound(p3, zero, 0) == doctest::Approx(0.0));

  SolutionPair pair = tent_pair(p3);
  CHECK(pair.q.at(0) == doctest::Approx(1.0));
  CHECK(pair.q.at(1) == doctest::Approx(-0.5));
  CHECK(p_bound(p3, pair.q, 0) == doctest::Approx(1.0));
  CHECK(p_bound(p3, pair.q, 1) == doctest::Approx(0.5));
}

TEST_CASE("p bound dominates q squared on sampled potentials") {
  WeightedGraph g = perturb_weights(lattice_ball(2, 1), 3, 0.5, 2.0);
  SolutionPair pair = sample_solution_pair(g, 17);
  for (VertexId v : g.vertices()) {
    double p = p_bound(g, pair.q, v);
    double qv = pair.q.at(v);
    CHECK(p >= qv * qv - 1e-12 * (1.0 + qv * qv));
  }
}

TEST_CASE("gradient estimate on sampled pairs") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    WeightedGraph g = regular_tree_ball(3, 2);
    SolutionPair pair = sample_solution_pair(g, seed);
    require_solution_pair(g, pair);
    GradientReport r = gradient_estimate_check(g, pair);
    CHECK(r.pass());
    CHECK(r.vertices_checked > 0);
    CHECK(r.max_ratio <= 1.0 + 1e-6);
  }
}

TEST_CASE("require_solution_pair rejects a broken pair") {
  WeightedGraph p3 = path_graph(3);
  SolutionPair pair = tent_pair(p3);
  pair.u.set(1, -2.0);
  CHECK_THROWS_AS(require_solution_pair(p3, pair), input_error);
}

TEST_CASE("harnack constant is exactly two on the tent") {
  WeightedGraph p3 = path_graph(3);
  SolutionPair pair = tent_pair(p3);
  std::vector<VertexId> s{0, 1};
  CHECK(harnack_constant(p3, pair.q, s, HarnackMode::uniform) == doctest::Approx(2.0));
  CHECK(harnack_constant(p3, pair.q, s, HarnackMode::sharp) == doctest::Approx(2.0));

  HarnackReport hr = harnack_verify(p3, pair, s, HarnackMode::sharp);
  CHECK(hr.sup == doctest::Approx(2.0));
  CHECK(hr.inf == doctest::Approx(1.0));
  CHECK(hr.constant == doctest::Approx(2.0));
  CHECK(hr.pass());
}

TEST_CASE("singleton set gives constant one") {
  WeightedGraph p3 = path_graph(3);
  GraphFunction zero = GraphFunction::zero(p3.vertices());
  CHECK(harnack_constant(p3, zero, {1}, HarnackMode::uniform) == 1.0);
}

TEST_CASE("sharp mode never exceeds uniform mode") {
  for (std::uint64_t seed : {11, 12, 13}) {
    WeightedGraph g = perturb_weights(lattice_ball(2, 1), seed, 0.5, 2.0);
    SolutionPair pair = sample_solution_pair(g, seed);
    std::vector<VertexId> s{0, 1, 2, 3};
    double cu = harnack_constant(g, pair.q, s, HarnackMode::uniform);
    double cs = harnack_constant(g, pair.q, s, HarnackMode::sharp);
    CHECK(cs <= cu);
    CHECK(cs >= 1.0);
    HarnackReport hr = harnack_verify(g, pair, s, HarnackMode::uniform);
    CHECK(hr.pass());
  }
}
