// Serial reference kernels against their OpenMP versions.

#include "permsep/constructions.hpp"
#include "permsep/kernels.hpp"
#include "permsep/labelled_graph.hpp"
#include "permsep/solver.hpp"
#include "permsep/strip.hpp"
#include "permsep/verify.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace permsep;

const std::vector<Permutation>& strip_family_2_4() {
  static const std::vector<Permutation> f = strip_family(StripParams{2, 4});
  return f;
}

const std::vector<Permutation>& pow2_family_13_1() {
  static const std::vector<Permutation> f = pow2_family(13, 1).family;
  return f;
}

// jobs: 1 = serial reference, 0 = all OpenMP threads.
void BM_VerifyStrip(benchmark::State& state) {
  const auto& f = strip_family_2_4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_family(f, 11, VerifyMode::exhaustive(), static_cast<int>(state.range(0))));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 32640);
}
BENCHMARK(BM_VerifyStrip)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_VerifyPow2(benchmark::State& state) {
  const auto& f = pow2_family_13_1();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_family(f, 3, VerifyMode::exhaustive(), static_cast<int>(state.range(0))));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 204480);
}
BENCHMARK(BM_VerifyPow2)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_VerifySampled(benchmark::State& state) {
  const auto& f = pow2_family_13_1();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_family(f, 3, VerifyMode::sampled(1, 1'000'000), static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_VerifySampled)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_BuildGraph(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_graph(7, 4, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BuildGraph)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_ZSwapAll(benchmark::State& state) {
  std::vector<Grid> grids;
  Vertex next = 2;
  for (int i = 0; i < 14; ++i) {
    grids.emplace_back(4, 2, std::vector<Vertex>{next, next + 1, next + 2, next + 3, next + 4,
                                                 next + 5, next + 6, next + 7});
    next += 8;
  }
  const LabelledGraph g(std::move(grids), Vertex{1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(z_swap_all(g, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ZSwapAll)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
