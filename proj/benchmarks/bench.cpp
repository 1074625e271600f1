#include <benchmark/benchmark.h>

#include "engelkit/corpus.hpp"
#include "engelkit/engel.hpp"
#include "engelkit/structure.hpp"

using namespace engelkit;

static void BM_EnumerateS6(benchmark::State& state) {
  std::vector<Perm> gens{parse_cycles("(1 2)", 6),
                         parse_cycles("(1 2 3 4 5 6)", 6)};
  for (auto _ : state) {
    auto elems = enumerate(6, gens);
    benchmark::DoNotOptimize(elems);
  }
}
BENCHMARK(BM_EnumerateS6)->Unit(benchmark::kMillisecond);

static void BM_GroupConstructS5(benchmark::State& state) {
  std::vector<Perm> gens{parse_cycles("(1 2)", 5),
                         parse_cycles("(1 2 3 4 5)", 5)};
  for (auto _ : state) {
    Group g(5, gens, "S5");
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_GroupConstructS5)->Unit(benchmark::kMillisecond);

static void BM_EngelProfileS4(benchmark::State& state) {
  Group g = builtin("symmetric(4)");
  Subgroup whole = whole_subgroup(g);
  for (auto _ : state) {
    EngelProfile prof = engel_profile(whole);
    benchmark::DoNotOptimize(prof.m);
  }
}
BENCHMARK(BM_EngelProfileS4)->Unit(benchmark::kMillisecond);

static void BM_EngelProfileF21(benchmark::State& state) {
  Group g = builtin("frobenius(7,3)");
  Subgroup whole = whole_subgroup(g);
  for (auto _ : state) {
    EngelProfile prof = engel_profile(whole);
    benchmark::DoNotOptimize(prof.m);
  }
}
BENCHMARK(BM_EngelProfileF21)->Unit(benchmark::kMillisecond);

static void BM_NilpotentResidualS6(benchmark::State& state) {
  Group g = builtin("symmetric(6)");
  Subgroup whole = whole_subgroup(g);
  for (auto _ : state) {
    Subgroup r = nilpotent_residual(whole);
    benchmark::DoNotOptimize(r.order());
  }
}
BENCHMARK(BM_NilpotentResidualS6)->Unit(benchmark::kMillisecond);

static void BM_Sylow2S6(benchmark::State& state) {
  Group g = builtin("symmetric(6)");
  Subgroup whole = whole_subgroup(g);
  for (auto _ : state) {
    Subgroup s = sylow(whole, 2);
    benchmark::DoNotOptimize(s.order());
  }
}
BENCHMARK(BM_Sylow2S6)->Unit(benchmark::kMillisecond);

static void BM_QuotientS4byV4(benchmark::State& state) {
  Group g = builtin("symmetric(4)");
  Subgroup v4 = subgroup(
      g, std::vector<Perm>{parse_cycles("(1 2)(3 4)", 4),
                           parse_cycles("(1 3)(2 4)", 4)});
  for (auto _ : state) {
    Quotient q = quotient(g, v4);
    benchmark::DoNotOptimize(q.action().order());
  }
}
BENCHMARK(BM_QuotientS4byV4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
