#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "gp/generators.hpp"
#include "gp/graph.hpp"
#include "gp/spectral.hpp"

using namespace gp;

TEST_CASE("path eigenvalue closed form") {
  for (int n : {1, 2, 3, 10, 25}) {
    WeightedGraph p = path_graph(n + 2);
    std::vector<VertexId> interior;
    for (int v = 1; v <= n; ++v) interior.push_back(v);
    Region r = region_from_interior(p, interior);
    Lambda1Result lr = lambda1(p, r, GraphFunction::zero(p.vertices()));
    double expected = 1.0 - std::cos(std::numbers::pi / (n + 1));
    CHECK(lr.lambda == doctest::Approx(expected).epsilon(1e-9));
    CHECK(lr.positive);
    CHECK(lr.method == "dense");
    CHECK(lr.residual <= lr.residual_limit);
    CHECK(lr.eigenfunction.at(0) == 0.0);
    CHECK(lr.eigenfunction.sup_norm() == doctest::Approx(1.0));
  }
}

TEST_CASE("constant potential shifts the eigenvalue") {
  WeightedGraph p5 = path_graph(5);
  Region r = region_from_interior(p5, {1, 2, 3});
  GraphFunction q = GraphFunction::constant(p5.vertices(), 0.75);
  Lambda1Result base = lambda1(p5, r, GraphFunction::zero(p5.vertices()));
  Lambda1Result shifted = lambda1(p5, r, q);
  CHECK(shifted.lambda == doctest::Approx(base.lambda + 0.75).epsilon(1e-12));
}

TEST_CASE("dense and iterative routes agree") {
  WeightedGraph g = lattice_ball(2, 17);
  Region r = exhaustion_region(g, 0, 17);
  REQUIRE(r.interior_size() == 545);
  GraphFunction q = GraphFunction::zero(g.vertices());

  SolveOptions forced_dense;
  forced_dense.dense_eigen_max = 1000;
  Lambda1Result dense = lambda1(g, r, q, forced_dense);
  Lambda1Result iterative = lambda1(g, r, q);
  CHECK(dense.method == "dense");
  CHECK(iterative.method == "inverse-iteration");
  CHECK(iterative.iterations > 0);
  CHECK(iterative.lambda == doctest::Approx(dense.lambda).epsilon(1e-8));
}

TEST_CASE("negative potential still yields the smallest eigenvalue") {
  WeightedGraph p5 = path_graph(5);
  Region r = region_from_interior(p5, {1, 2, 3});
  GraphFunction q = GraphFunction::constant(p5.vertices(), -0.2);
  Lambda1Result lr = lambda1(p5, r, q);
  CHECK(lr.lambda == doctest::Approx(1.0 - std::cos(std::numbers::pi / 4) - 0.2));
  CHECK(lr.positive);
}

TEST_CASE("exhaustion eigenvalues decrease with the radius") {
  WeightedGraph host = lattice_ball(1, 12);
  GraphFunction q = GraphFunction::zero(host.vertices());
  Lambda1Exhaustion ex = lambda1_exhaustion(host, 0, {2, 4, 8, 12}, q);
  REQUIRE(ex.steps.size() == 4);
  CHECK(ex.monotone);
  CHECK(ex.last_value == ex.steps.back().lambda);
  for (std::size_t i = 1; i < ex.steps.size(); ++i)
    CHECK(ex.steps[i].lambda <= ex.steps[i - 1].lambda + 1e-12);
  // open ball of radius R on the line is a segment of 2R - 1 vertices
  double expected = 1.0 - std::cos(std::numbers::pi / (2 * 12));
  CHECK(ex.steps.back().lambda == doctest::Approx(expected).epsilon(1e-9));
  CHECK(ex.steps.back().interior_size == 23);
}

TEST_CASE("exhaustion validates its inputs") {
  WeightedGraph host = lattice_ball(1, 5);
  GraphFunction q = GraphFunction::zero(host.vertices());
  CHECK_THROWS_AS(lambda1_exhaustion(host, 0, {4, 2}, q), input_error);
  CHECK_THROWS_AS(lambda1_exhaustion(host, 0, {0}, q), input_error);
  // radius 6 exhausts the stored graph: no boundary shell remains
  CHECK_THROWS_AS(lambda1_exhaustion(host, 0, {7}, q), input_error);
}

TEST_CASE("tree exhaustion stays above the regular tree floor") {
  WeightedGraph host = regular_tree_ball(3, 6);
  GraphFunction q = GraphFunction::zero(host.vertices());
  Lambda1Exhaustion ex = lambda1_exhaustion(host, 0, {2, 4, 6}, q);
  double floor = 1.0 - 2.0 * std::sqrt(2.0) / 3.0;
  for (const Lambda1Step& s : ex.steps) CHECK(s.lambda >= floor - 1e-12);
}
