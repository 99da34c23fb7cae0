#include <benchmark/benchmark.h>

#include "gp/generators.hpp"
#include "gp/graph.hpp"
#include "gp/green.hpp"
#include "gp/operators.hpp"
#include "gp/spectral.hpp"

using namespace gp;

namespace {

void laplacian_sweep(benchmark::State& state) {
  WeightedGraph g = lattice_ball(2, static_cast<int>(state.range(0)));
  SolutionPair pair = sample_solution_pair(g, 1);
  for (auto _ : state) {
    double acc = 0.0;
    for (VertexId v : g.vertices()) acc += laplacian(g, pair.u, v);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * g.vertex_count());
}
BENCHMARK(laplacian_sweep)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void green_direct_ball(benchmark::State& state) {
  WeightedGraph g = lattice_ball(2, static_cast<int>(state.range(0)));
  Region r = ball(g, 0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    GreenMatrix gm = green_direct(g, r);
    benchmark::DoNotOptimize(gm.values.data());
  }
  state.counters["interior"] = r.interior_size();
}
BENCHMARK(green_direct_ball)->Arg(2)->Arg(4)->Arg(8);

void green_series_ball(benchmark::State& state) {
  WeightedGraph g = lattice_ball(2, static_cast<int>(state.range(0)));
  Region r = ball(g, 0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    GreenSeries gs = green_series(g, r, 100000);
    benchmark::DoNotOptimize(gs.green.values.data());
  }
  state.counters["interior"] = r.interior_size();
}
BENCHMARK(green_series_ball)->Arg(2)->Arg(4)->Arg(8);

void lambda1_route(benchmark::State& state) {
  int radius = static_cast<int>(state.range(0));
  WeightedGraph g = lattice_ball(2, radius);
  Region r = exhaustion_region(g, 0, radius);
  GraphFunction q = GraphFunction::zero(g.vertices());
  SolveOptions opts;
  opts.dense_eigen_max = state.range(1) ? 100000 : 0;
  for (auto _ : state) {
    Lambda1Result lr = lambda1(g, r, q, opts);
    benchmark::DoNotOptimize(lr.lambda);
  }
  state.counters["interior"] = r.interior_size();
  state.SetLabel(state.range(1) ? "dense" : "iterative");
}
BENCHMARK(lambda1_route)->Args({8, 1})->Args({8, 0})->Args({16, 1})->Args({16, 0});

}  // namespace

BENCHMARK_MAIN();
