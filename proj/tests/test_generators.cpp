#include <cmath>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "gp/generators.hpp"
#include "gp/graph.hpp"
#include "gp/operators.hpp"

using namespace gp;

TEST_CASE("family shapes") {
  CHECK(path_graph(6).vertex_count() == 6);
  CHECK(path_graph(6).edge_count() == 5);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(star_graph(5).vertex_count() == 6);
  CHECK(degree(star_graph(5), 0) == doctest::Approx(5.0));
  CHECK_THROWS_AS(path_graph(1), input_error);
  CHECK_THROWS_AS(cycle_graph(2), input_error);
}

TEST_CASE("lattice balls carry one extra layer") {
  WeightedGraph line = lattice_ball(1, 3);
  CHECK(line.vertex_count() == 9);  // closed ball of radius 4 in Z
  REQUIRE(line.cover().has_value());
  CHECK(line.cover()->complete_radius == 3);
  CHECK(line.cover()->center == 0);
  CHECK(degree(line, 0) == doctest::Approx(2.0));

  WeightedGraph plane = lattice_ball(2, 1);
  CHECK(plane.vertex_count() == 13);  // 1 + 4 + 8

  WeightedGraph space = lattice_ball(3, 1);
  CHECK(space.vertex_count() == 25);  // 1 + 6 + 18
}

TEST_CASE("tree balls") {
  WeightedGraph t = regular_tree_ball(3, 1);
  CHECK(t.vertex_count() == 10);  // 1 + 3 + 6
  CHECK(degree(t, 0) == doctest::Approx(3.0));
  REQUIRE(t.cover().has_value());
  CHECK(t.cover()->complete_radius == 1);
  int leaves = 0;
  for (int i = 0; i < t.vertex_count(); ++i)
    if (t.neighbors(i).size() == 1) ++leaves;
  CHECK(leaves == 6);
}

TEST_CASE("vertex cap guards the big families") {
  CHECK_THROWS_AS(regular_tree_ball(3, 40), resource_error);
}

TEST_CASE("solution pairs solve their own equation") {
  WeightedGraph g = lattice_ball(2, 1);
  SolutionPair pair = sample_solution_pair(g, 99);
  for (VertexId v : g.vertices()) {
    CHECK(pair.u.at(v) > 0.0);
    CHECK(pair.u.at(v) >= std::exp(-1.0));
    CHECK(pair.u.at(v) < std::exp(1.0));
  }
  for (int i = 0; i < g.vertex_count(); ++i) {
    VertexId v = g.id_of(i);
    CHECK(std::abs(schrodinger(g, pair.q, pair.u, v)) < 1e-13);
  }

  SolutionPair again = sample_solution_pair(g, 99);
  for (VertexId v : g.vertices()) CHECK(again.u.at(v) == pair.u.at(v));
  SolutionPair other = sample_solution_pair(g, 100);
  CHECK(other.u.at(0) != pair.u.at(0));
}

TEST_CASE("perturbed weights keep the topology") {
  WeightedGraph base = lattice_ball(1, 2);
  WeightedGraph bumpy = perturb_weights(base, 7, 0.5, 2.0);
  CHECK(bumpy.vertex_count() == base.vertex_count());
  CHECK(bumpy.edge_count() == base.edge_count());
  REQUIRE(bumpy.cover().has_value());
  CHECK(bumpy.cover()->complete_radius == base.cover()->complete_radius);
  for (std::size_t e = 0; e < base.raw_edges().size(); ++e) {
    auto [x, y, mu] = bumpy.raw_edges()[e];
    auto [bx, by, bmu] = base.raw_edges()[e];
    CHECK(x == bx);
    CHECK(y == by);
    CHECK(mu >= 0.5);
    CHECK(mu < 2.0);
  }
  WeightedGraph again = perturb_weights(base, 7, 0.5, 2.0);
  CHECK(std::get<2>(again.raw_edges()[0]) == std::get<2>(bumpy.raw_edges()[0]));
  CHECK_THROWS_AS(perturb_weights(base, 7, -1.0, 2.0), input_error);
}
