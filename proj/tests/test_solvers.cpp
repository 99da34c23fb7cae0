#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "gp/generators.hpp"
#include "gp/graph.hpp"
#include "gp/green.hpp"
#include "gp/solvers.hpp"

using namespace gp;

TEST_CASE("dirichlet solve on the segment") {
  WeightedGraph p4 = path_graph(4);
  Region r = region_from_interior(p4, {1, 2});
  GraphFunction q = GraphFunction::zero(p4.vertices());
  GraphFunction f = GraphFunction::constant({1, 2}, 1.0);
  GraphFunction bc = GraphFunction::zero({0, 3});

  GraphFunction u = dirichlet_solve(p4, r, q, f, bc);
  CHECK(u.at(1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(u.at(2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(u.at(0) == 0.0);
  CHECK(u.at(3) == 0.0);
}

TEST_CASE("boundary data enters affinely") {
  WeightedGraph p4 = path_graph(4);
  Region r = region_from_interior(p4, {1, 2});
  GraphFunction q = GraphFunction::zero(p4.vertices());
  GraphFunction f = GraphFunction::zero({1, 2});
  GraphFunction bc = GraphFunction::zero({0, 3});
  bc.set(0, 1.0);
  bc.set(3, 4.0);

  // harmonic interpolation on a path is linear
  GraphFunction u = dirichlet_solve(p4, r, q, f, bc);
  CHECK(u.at(1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(u.at(2) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("harmonic extensions obey the maximum principle") {
  WeightedGraph g = perturb_weights(lattice_ball(2, 2), 5, 0.5, 2.0);
  Region r = ball(g, 0, 2);
  GraphFunction q = GraphFunction::zero(g.vertices());
  GraphFunction f = GraphFunction::zero(r.interior);
  GraphFunction bc = GraphFunction::zero(r.boundary);
  double lo = 1e9, hi = -1e9;
  int i = 0;
  for (VertexId v : r.boundary) {
    double value = std::cos(0.7 * ++i) + 0.3;
    bc.set(v, value);
    lo = std::min(lo, value);
    hi = std::max(hi, value);
  }
  GraphFunction u = dirichlet_solve(g, r, q, f, bc);
  for (VertexId v : r.interior) {
    CHECK(u.at(v) >= lo - 1e-12);
    CHECK(u.at(v) <= hi + 1e-12);
  }
}

TEST_CASE("solve refuses an indefinite operator") {
  WeightedGraph p4 = path_graph(4);
  Region r = region_from_interior(p4, {1, 2});
  // lambda1 with q = 0 is 1/2, so q = -1 drives the form negative
  GraphFunction q = GraphFunction::constant(p4.vertices(), -1.0);
  GraphFunction f = GraphFunction::constant({1, 2}, 1.0);
  GraphFunction bc = GraphFunction::zero({0, 3});
  CHECK_THROWS_AS(dirichlet_solve(p4, r, q, f, bc), numeric_error);
}

TEST_CASE("poisson bound is saturated on the segment") {
  WeightedGraph p4 = path_graph(4);
  Region r = region_from_interior(p4, {1, 2});
  GraphFunction q = GraphFunction::zero(p4.vertices());
  GraphFunction f = GraphFunction::constant({1, 2}, 1.0);

  PoissonResult pr = poisson_solve(p4, r, q, f);
  CHECK(pr.lambda == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pr.f_l2 == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(pr.bound == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(pr.u_l2 == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(pr.bound_holds);
  CHECK(std::abs(pr.slack) <= 1e-12 * (1.0 + pr.bound));
}

TEST_CASE("poisson bound on a lopsided source") {
  WeightedGraph g = lattice_ball(2, 2);
  Region r = ball(g, 0, 2);
  GraphFunction q = GraphFunction::constant(g.vertices(), 0.1);
  GraphFunction f = GraphFunction::zero(r.interior);
  int i = 0;
  for (VertexId v : r.interior) f.set(v, 0.05 + 0.1 * (++i % 7));
  PoissonResult pr = poisson_solve(g, r, q, f);
  CHECK(pr.bound_holds);
  CHECK(pr.u_l2 <= pr.bound + 1e-9);
  for (VertexId v : r.interior) CHECK(pr.u.at(v) > 0.0);
}

TEST_CASE("zero potential existence run returns the constant") {
  WeightedGraph host = lattice_ball(1, 8);
  GraphFunction q = GraphFunction::zero(host.vertices());
  ExistenceExhaustion ex = existence_exhaustion(host, 0, {2, 4, 8}, q);
  CHECK(ex.positive);
  REQUIRE(ex.steps.size() == 3);
  for (const auto& [v, value] : ex.normalized.values()) {
    (void)v;
    CHECK(std::abs(value - 1.0) <= 1e-15);
  }
  for (std::size_t i = 1; i < ex.steps.size(); ++i)
    CHECK(ex.steps[i].sup_diff_prev <= 1e-15);
}

TEST_CASE("existence run with a genuine potential stays positive") {
  WeightedGraph host = regular_tree_ball(3, 5);
  GraphFunction q = GraphFunction::constant(host.vertices(), 0.25);
  ExistenceExhaustion ex = existence_exhaustion(host, 0, {2, 3, 4, 5}, q);
  CHECK(ex.positive);
  CHECK(ex.normalized.at(0) == doctest::Approx(1.0));
  for (const ExistenceStep& s : ex.steps) {
    CHECK(s.lambda > 0.0);
    CHECK(s.min_u > 0.0);
  }
}

TEST_CASE("superharmonic certificate on the line") {
  WeightedGraph host = lattice_ball(1, 5);
  Region r = exhaustion_region(host, 0, 5);
  GraphFunction phi = GraphFunction::zero(r.closure());
  for (VertexId v : r.closure()) {
    int hops = distance(host, 0, v);
    phi.set(v, 6.0 - hops);
  }
  SuperharmonicReport sr = superharmonic_certificate(host, r, phi, 2.0);
  CHECK(sr.superharmonic);
  CHECK(sr.max_laplacian <= 0.0);
  CHECK(sr.boundary_max == doctest::Approx(1.0));
  CHECK(sr.power_sum == doctest::Approx(288.0));
  CHECK(sr.vertices_checked == r.interior_size());

  phi.set(0, 0.5);  // a dip at the center makes lap(phi)(0) positive
  SuperharmonicReport bad = superharmonic_certificate(host, r, phi, 0.0);
  CHECK_FALSE(bad.superharmonic);
}
