#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "equicolor/formats.hpp"
#include "equicolor/generate.hpp"
#include "equicolor/oracle.hpp"
#include "equicolor/search.hpp"
#include "equicolor/solver.hpp"

using namespace equicolor;

namespace {

Graph window_graph(int n, std::uint64_t seed) {
  GenSpec spec = GenSpec::parse("gnp_window:" + std::to_string(n) + ":0.4");
  return generate(spec, seed);
}

void bm_graph6_roundtrip(benchmark::State& state) {
  Graph g = generate(GenSpec::parse("gnp:100:0.1"), 17);
  std::string line = to_graph6(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_graph6(line));
  }
}
BENCHMARK(bm_graph6_roundtrip);

void bm_local_search_closure(benchmark::State& state) {
  Graph g = window_graph(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_local_search(g, trivial_coloring(g)));
  }
}
BENCHMARK(bm_local_search_closure)->Arg(8)->Arg(10)->Arg(12);

void bm_full_pipeline(benchmark::State& state) {
  Graph g = window_graph(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(equitable_delta(g));
  }
}
BENCHMARK(bm_full_pipeline)->Arg(8)->Arg(10)->Arg(12);

void bm_oracle_decision(benchmark::State& state) {
  Graph g = window_graph(9, 11);
  int delta = g.max_degree();
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_equitable(g, delta));
  }
}
BENCHMARK(bm_oracle_decision);

void bm_fallback_large(benchmark::State& state) {
  Graph g = generate(GenSpec::parse("gnp:60:0.3"), 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hs_delta_plus_one(g));
  }
}
BENCHMARK(bm_fallback_large);

}  // namespace

BENCHMARK_MAIN();
