#include <benchmark/benchmark.h>

#include "xxzge/hamiltonian.hpp"
#include "xxzge/scan.hpp"
#include "xxzge/sweep.hpp"

using namespace xxzge;

namespace {

void BM_BuildXXZ(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto h = build_xxz(n, 1.0, 1e-3);
    benchmark::DoNotOptimize(h.data());
  }
}
BENCHMARK(BM_BuildXXZ)->Arg(4)->Arg(8)->Arg(10)->Arg(12);

void BM_GroundState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto h = build_xxz(n, 0.5);
  for (auto _ : state) {
    auto sol = ground_state(h, n);
    benchmark::DoNotOptimize(sol.energy);
  }
}
BENCHMARK(BM_GroundState)->Arg(4)->Arg(6)->Arg(8);

void BM_ConditionalLocal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GroundSolution sol = ground_state(n, 0.5);
  std::mt19937_64 rng(1);
  const ProductState psi = random_product_state(n, rng);
  for (auto _ : state) {
    auto v = conditional_local(sol.state, psi, 1 + state.iterations() % n);
    benchmark::DoNotOptimize(v.data());
  }
}
BENCHMARK(BM_ConditionalLocal)->Arg(4)->Arg(8)->Arg(10);

void BM_MaxOverlap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GroundSolution sol = ground_state(n, 0.5);
  for (auto _ : state) {
    auto ge = max_overlap(sol.state);
    benchmark::DoNotOptimize(ge.lambda_max);
  }
}
BENCHMARK(BM_MaxOverlap)->Arg(4)->Arg(6);

void BM_GammaScanRow(benchmark::State& state) {
  for (auto _ : state) {
    auto table = gamma_scan({0.5}, 4);
    benchmark::DoNotOptimize(table.rows.front().e_log2);
  }
}
BENCHMARK(BM_GammaScanRow);

}  // namespace

BENCHMARK_MAIN();
