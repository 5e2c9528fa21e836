#include <benchmark/benchmark.h>

#include <random>

#include "lamcoord/lamcoord.hpp"

namespace {

using namespace lamcoord;

// A decodable tuple on N_{k,n}: random entries with t_s matched to psi_s.
DynnikovCoords random_rho(int k, int n, std::uint64_t seed) {
  const auto sig = signature(k, n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> d(-20, 20);
  std::vector<Int> v(static_cast<std::size_t>(sig.dynnikov_length()));
  for (auto& x : v) x = d(rng);
  DynnikovCoords rho = unflatten(sig, v);
  for (int s = 1; s <= k - 1; ++s) {
    auto& t = rho.t[static_cast<std::size_t>(s - 1)];
    if ((t - psi_from_dynnikov(rho, s)) % 2 != 0) ++t;
  }
  return rho;
}

void BM_Decode(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const DynnikovCoords rho = random_rho(size, size, 1);
  for (auto _ : state) benchmark::DoNotOptimize(decode(rho));
  state.SetComplexityN(size);
}
BENCHMARK(BM_Decode)->RangeMultiplier(4)->Range(2, 512)->Complexity();

void BM_Encode(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const TriangleCoords tau = decode(random_rho(size, size, 2)).tau;
  for (auto _ : state) benchmark::DoNotOptimize(encode(tau));
  state.SetComplexityN(size);
}
BENCHMARK(BM_Encode)->RangeMultiplier(4)->Range(2, 512)->Complexity();

void BM_Validate(benchmark::State& state) {
  const TriangleCoords tau = make_triangle(signature(2, 3), {4, 2, 2, 6}, {2, 6, 8, 4}, {8}, {1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(validate(tau));
}
BENCHMARK(BM_Validate);

void BM_BuildAndTrace(benchmark::State& state) {
  const TriangleCoords tau = decode(random_rho(3, 4, static_cast<std::uint64_t>(state.range(0)))).tau;
  Int slots = 0;
  for (Int b : tau.beta) slots += b;
  for (auto _ : state) benchmark::DoNotOptimize(trace(build_diagram(tau)));
  state.counters["slots"] = static_cast<double>(slots);
}
BENCHMARK(BM_BuildAndTrace)->DenseRange(1, 3);

void BM_RenderN23(benchmark::State& state) {
  const StrandDiagram d = build_diagram(make_triangle(signature(2, 3), {4, 2, 2, 6}, {2, 6, 8, 4}, {8}, {1, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(render_svg(d));
}
BENCHMARK(BM_RenderN23);

void BM_IndependentTrace(benchmark::State& state) {
  const TriangleCoords tau = make_triangle(signature(2, 3), {4, 2, 2, 6}, {2, 6, 8, 4}, {8}, {1, 1});
  const RegionCensus c = census(tau);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::independent_trace(tau.sig, c, ++seed));
}
BENCHMARK(BM_IndependentTrace);

void BM_CheckBijection(benchmark::State& state) {
  const oracle::EnumerationBudget budget{signature(2, 2), state.range(0), 4, oracle::kDefaultWorkCeiling};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::check_bijection(budget));
}
BENCHMARK(BM_CheckBijection)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
