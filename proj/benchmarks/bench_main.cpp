#include <benchmark/benchmark.h>

#include <cstdint>

#include "schelling/evaluate.hpp"
#include "schelling/generators.hpp"
#include "schelling/hardness.hpp"
#include "schelling/optimality.hpp"
#include "schelling/positivity.hpp"
#include "schelling/welfare.hpp"

using namespace schelling;

namespace {

Instance random_connected_instance(int t, int m, int r, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.family = Family::random_connected;
  spec.t = t;
  spec.m = m;
  spec.r = r;
  spec.b = t - r;
  spec.seed = seed;
  return gen_random(spec);
}

void BM_Evaluate(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  Instance instance = random_connected_instance(t, 3 * t, t / 2, 99);
  Placement placement = uniform_random_assignment(instance, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(instance, placement));
  }
}
BENCHMARK(BM_Evaluate)->Arg(16)->Arg(64)->Arg(256);

void BM_DerandomizedAssignment(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  Instance instance = random_connected_instance(t, 2 * t, t / 2, 100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(derandomized_assignment(instance));
  }
}
BENCHMARK(BM_DerandomizedAssignment)->Arg(8)->Arg(12);

void BM_PlacementEnumeration(benchmark::State& state) {
  GeneratorSpec spec;
  spec.family = Family::fig5_gadget;
  Instance instance = gen_named(spec);
  for (auto _ : state) {
    Rat best(0);
    for_each_placement(instance, [&](const Placement& placement) {
      Rat sw = social_welfare(instance, placement);
      if (sw > best) best = sw;
    });
    benchmark::DoNotOptimize(best);
  }
}
BENCHMARK(BM_PlacementEnumeration);

void BM_TreePositiveDP(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  GeneratorSpec spec;
  spec.family = Family::random_tree;
  spec.t = t;
  spec.r = t / 3;
  spec.b = t / 3;
  spec.seed = 55;
  Instance instance = gen_random(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tree_all_positive(instance));
  }
}
BENCHMARK(BM_TreePositiveDP)->Arg(20)->Arg(40)->Arg(80);

void BM_AllPositiveSwap(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  GeneratorSpec spec;
  spec.family = Family::random_min_degree2;
  spec.t = t;
  spec.m = t + t / 2;
  spec.r = t / 2;
  spec.b = t - t / 2;
  spec.seed = 77;
  Instance instance = gen_random(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_positive_swap(instance));
  }
}
BENCHMARK(BM_AllPositiveSwap)->Arg(12)->Arg(16);

void BM_AllPositiveConstructive(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  GeneratorSpec spec;
  spec.family = Family::random_min_degree2;
  spec.t = t;
  spec.m = t + t / 2;
  spec.r = t / 2;
  spec.b = t - t / 2;
  spec.seed = 77;
  Instance instance = gen_random(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_positive_constructive(instance));
  }
}
BENCHMARK(BM_AllPositiveConstructive)->Arg(12)->Arg(16)->Arg(32);

void BM_CliqueDecision(benchmark::State& state) {
  GeneratorSpec spec;
  spec.family = Family::complete;
  spec.t = 9;
  spec.r = 4;
  spec.b = 5;
  // Worst case for the decision: threshold unreachable forces a full scan.
  Instance instance = gen_named(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_welfare_threshold(instance, Rat(10)));
  }
}
BENCHMARK(BM_CliqueDecision);

}  // namespace

BENCHMARK_MAIN();
