#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "gp/generators.hpp"
#include "gp/graph.hpp"
#include "gp/green.hpp"
#include "gp/spectral.hpp"

using namespace gp;

namespace {

Region segment(const WeightedGraph& p, int n) {
  std::vector<VertexId> interior;
  for (int v = 1; v <= n; ++v) interior.push_back(v);
  return region_from_interior(p, interior);
}

}  // namespace

TEST_CASE("transition rows are substochastic and reversible") {
  WeightedGraph g = perturb_weights(lattice_ball(2, 1), 21, 0.5, 2.0);
  Region r = ball(g, 0, 1);
  TransitionMatrix tm = transition(g, r);
  int n = r.interior_size();
  for (int i = 0; i < n; ++i) {
    double row = tm.interior.row(i).sum() + tm.to_boundary.row(i).sum();
    CHECK(row == doctest::Approx(1.0).epsilon(1e-14));
  }
  Eigen::MatrixXd p = Eigen::MatrixXd(tm.interior);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double di = degree(g, r.interior[i]);
      double dj = degree(g, r.interior[j]);
      CHECK(di * p(i, j) == doctest::Approx(dj * p(j, i)).epsilon(1e-13));
    }
}

TEST_CASE("green matrix on the two point segment") {
  WeightedGraph p4 = path_graph(4);
  Region r = segment(p4, 2);
  GreenMatrix gm = green_direct(p4, r);
  CHECK(gm.values(0, 0) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  CHECK(gm.values(0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(gm.values(1, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(gm.values(1, 1) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("segment green closed form") {
  // unit path, interior 1..n: g(x,y) = 2 min(x,y) (n + 1 - max(x,y)) / (n + 1)
  for (int n : {1, 2, 3, 5, 8}) {
    WeightedGraph p = path_graph(n + 2);
    Region r = segment(p, n);
    GreenMatrix gm = green_direct(p, r);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double x = i + 1.0, y = j + 1.0;
        double expected = 2.0 * std::min(x, y) * (n + 1 - std::max(x, y)) / (n + 1);
        CHECK(gm.values(i, j) == doctest::Approx(expected).epsilon(1e-12));
      }
  }
}

TEST_CASE("defining identity and kernel symmetry under uneven weights") {
  WeightedGraph g = perturb_weights(regular_tree_ball(3, 2), 31, 0.5, 2.0);
  Region r = ball(g, 0, 2);
  int n = r.interior_size();
  GreenMatrix gm = green_direct(g, r);
  TransitionMatrix tm = transition(g, r);
  Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd residual = (eye - Eigen::MatrixXd(tm.interior)) * gm.values - eye;
  CHECK(residual.cwiseAbs().maxCoeff() <= 1e-10);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(gm.kernel_at(i, j) ==
            doctest::Approx(gm.kernel_at(j, i)).epsilon(1e-12));
  CHECK(gm.values.minCoeff() >= 0.0);
}

TEST_CASE("series agrees with the direct solve") {
  WeightedGraph g = perturb_weights(lattice_ball(2, 1), 41, 0.5, 2.0);
  Region r = ball(g, 0, 1);
  GreenMatrix direct = green_direct(g, r);
  GreenSeries series = green_series(g, r, 100000);
  CHECK(series.converged);
  CHECK(series.terms > 0);
  CHECK((series.green.values - direct.values).cwiseAbs().maxCoeff() <= 1e-10);
  for (std::size_t i = 1; i < series.partial_max.size(); ++i)
    CHECK(series.partial_max[i] >= series.partial_max[i - 1] - 1e-15);
}

TEST_CASE("column routes match the matrix") {
  WeightedGraph p6 = path_graph(6);
  Region r = segment(p6, 4);
  GreenMatrix gm = green_direct(p6, r);
  GreenColumn direct_col = green_column(p6, r, 2);
  GreenColumn series_col = green_series_column(p6, r, 2, 100000);
  CHECK(series_col.converged);
  for (int i = 0; i < 4; ++i) {
    CHECK(direct_col.values[i] == doctest::Approx(gm.values(i, 1)).epsilon(1e-12));
    CHECK(series_col.values[i] == doctest::Approx(gm.values(i, 1)).epsilon(1e-9));
  }
}

TEST_CASE("line exhaustion grows linearly") {
  WeightedGraph host = lattice_ball(1, 30);
  GreenExhaustion ex = green_exhaustion(host, 0, {5, 10, 20, 30}, {{0, 0}});
  CHECK(ex.monotone);
  CHECK(ex.classification == "GROWING");
  REQUIRE(ex.probes.size() == 1);
  const GreenExhaustionProbe& p = ex.probes[0];
  for (std::size_t i = 0; i < p.values.size(); ++i)
    CHECK(p.values[i] == doctest::Approx(static_cast<double>(ex.radii[i])).epsilon(1e-9));
  CHECK(p.fit.better == "linear");
  CHECK(p.fit.linear_slope == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("tree exhaustion converges") {
  WeightedGraph host = regular_tree_ball(3, 8);
  GreenExhaustion ex = green_exhaustion(host, 0, {2, 3, 4, 5, 6, 7, 8}, {{0, 0}, {0, 1}});
  CHECK(ex.monotone);
  CHECK(ex.classification == "CONVERGING");
  for (const GreenExhaustionProbe& p : ex.probes) {
    CHECK(p.classification == "CONVERGING");
    CHECK(p.gap_ratio <= 0.9);
    CHECK(p.values.back() < 2.0);
  }
}

TEST_CASE("eigen bound product is one on the segment") {
  WeightedGraph p4 = path_graph(4);
  Region r = segment(p4, 2);
  EigenBoundReport eb = eigen_bound_check(p4, r);
  CHECK(eb.lambda == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eb.max_row_sum == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(eb.product == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eb.pass());
}

TEST_CASE("eigen bound holds off the tight case") {
  WeightedGraph g = perturb_weights(lattice_ball(2, 2), 51, 0.5, 2.0);
  Region r = ball(g, 0, 2);
  EigenBoundReport eb = eigen_bound_check(g, r);
  CHECK(eb.product >= 1.0 - 1e-9);
  CHECK(eb.representation_residual <= eb.representation_limit);
}

TEST_CASE("probes across regions stay ordered") {
  WeightedGraph host = lattice_ball(3, 6);
  GreenExhaustion ex = green_exhaustion(host, 0, {2, 4, 6}, {{0, 0}, {0, 1}});
  CHECK(ex.monotone);
  for (const GreenExhaustionProbe& p : ex.probes) {
    for (std::size_t i = 1; i < p.values.size(); ++i)
      CHECK(p.values[i] >= p.values[i - 1] - 1e-12);
    CHECK(p.values.front() >= 0.0);
  }
}
