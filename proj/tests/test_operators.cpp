#include <cmath>

#include "doctest.h"
#include "gp/generators.hpp"
#include "gp/graph.hpp"
#include "gp/operators.hpp"

using namespace gp;

namespace {

GraphFunction tent_on_p3() {
  GraphFunction u = GraphFunction::zero({0, 1, 2});
  u.set(0, 1.0);
  u.set(1, 2.0);
  u.set(2, 1.0);
  return u;
}

}  // namespace

TEST_CASE("laplacian and gradient on the tent") {
  WeightedGraph p3 = path_graph(3);
  GraphFunction u = tent_on_p3();
  CHECK(laplacian(p3, u, 1) == doctest::Approx(-1.0));
  CHECK(laplacian(p3, u, 0) == doctest::Approx(1.0));
  CHECK(grad_sq(p3, u, 1) == doctest::Approx(1.0));
  CHECK(grad_sq(p3, u, 0) == doctest::Approx(1.0));
}

TEST_CASE("laplacian sees edge weights through the degree") {
  WeightedGraph g = WeightedGraph::from_edges({{0, 1, 3.0}, {1, 2, 1.0}});
  GraphFunction u = tent_on_p3();
  // d_1 = 4: lap = (3/4)(1-2) + (1/4)(1-2)
  CHECK(laplacian(g, u, 1) == doctest::Approx(-1.0));
  CHECK(grad_sq(g, u, 1) == doctest::Approx(1.0));
  CHECK(laplacian(g, u, 0) == doctest::Approx(1.0));
}

TEST_CASE("integral and inner use the weighted degree") {
  WeightedGraph p3 = path_graph(3);
  GraphFunction u = tent_on_p3();
  CHECK(integral(p3, u) == doctest::Approx(6.0));
  CHECK(integral(p3, u, {1}) == doctest::Approx(4.0));
  CHECK(inner(p3, u, u) == doctest::Approx(10.0));
  CHECK(inner(p3, u, u, {0, 2}) == doctest::Approx(2.0));
}

TEST_CASE("schrodinger operator") {
  WeightedGraph p3 = path_graph(3);
  GraphFunction u = tent_on_p3();
  GraphFunction q = GraphFunction::constant({0, 1, 2}, 0.25);
  CHECK(schrodinger(p3, q, u, 1) == doctest::Approx(1.0 + 0.5));
  CHECK(schrodinger(p3, q, u, 0) == doctest::Approx(-1.0 + 0.25));
}

TEST_CASE("laplacian needs the whole neighborhood") {
  WeightedGraph p3 = path_graph(3);
  GraphFunction partial = GraphFunction::zero({0, 1});
  CHECK_THROWS_AS(laplacian(p3, partial, 1), input_error);
}

TEST_CASE("kato slacks on a sign change") {
  WeightedGraph p2 = path_graph(2);
  GraphFunction u = GraphFunction::zero({0, 1});
  u.set(0, 1.0);
  u.set(1, -1.0);
  KatoReport r = kato_check(p2, u);
  CHECK(r.vertices_checked == 2);
  CHECK(r.worst_gradient_slack == doctest::Approx(4.0));
  CHECK(r.worst_abs_slack == doctest::Approx(2.0));
  CHECK(r.worst_positive_part_slack == doctest::Approx(1.0));
  CHECK(r.tolerance == doctest::Approx(2e-12));
  CHECK(r.pass());
}

TEST_CASE("square identity is exact on the tent") {
  WeightedGraph p3 = path_graph(3);
  SquareIdentityReport r = square_identity_check(p3, tent_on_p3());
  CHECK(r.vertices_checked == 3);
  CHECK(r.max_identity_residual <= r.tolerance);
  CHECK(r.worst_conditional_slack >= -r.tolerance);
  CHECK(r.pass());
}

TEST_CASE("kato checks only where the neighborhood is covered") {
  WeightedGraph g = lattice_ball(1, 2);  // ids 0..6, rim ids 5 and 6
  GraphFunction u = GraphFunction::zero({0, 1, 2, 3, 4});
  int i = 0;
  for (VertexId v : {0, 1, 2, 3, 4}) u.set(v, (i++ % 2) ? -1.5 : 2.0);
  KatoReport r = kato_check(g, u);
  CHECK(r.vertices_checked == 3);  // ids 3 and 4 have a neighbor outside the domain
  CHECK(r.pass());
}
