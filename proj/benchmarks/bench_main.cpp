// SPDX-License-Identifier: Apache-2.0
#include <polygap/inscribed.hpp>
#include <polygap/random_polygon.hpp>
#include <polygap/symcheck.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace polygap;

// Args: n, m. Polygon fixed per (n, seed) so runs are comparable.
template <class T>
ConvexPolygon<T> bench_polygon(std::size_t n);

template <>
ConvexPolygon<double> bench_polygon<double>(std::size_t n) {
  return random_convex_polygon(n, std::uint64_t{7});
}

template <>
ConvexPolygon<Rational> bench_polygon<Rational>(std::size_t n) {
  return random_convex_polygon_exact(n, std::uint64_t{7});
}

template <class T>
void BM_InscribedDp(benchmark::State& state) {
  const auto polygon = bench_polygon<T>(static_cast<std::size_t>(state.range(0)));
  const auto m = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(max_inscribed_dp(polygon, m));
}

template <class T>
void BM_InscribedBruteForce(benchmark::State& state) {
  const auto polygon = bench_polygon<T>(static_cast<std::size_t>(state.range(0)));
  const auto m = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(max_inscribed_bruteforce(polygon, m));
}

void InscribedArgs(benchmark::internal::Benchmark* b) {
  for (int n : {8, 12, 16}) b->Args({n, n / 2});
}

BENCHMARK(BM_InscribedDp<double>)->Apply(InscribedArgs);
BENCHMARK(BM_InscribedDp<Rational>)->Apply(InscribedArgs);
BENCHMARK(BM_InscribedBruteForce<double>)->Apply(InscribedArgs);
BENCHMARK(BM_InscribedBruteForce<Rational>)->Apply(InscribedArgs);

void BM_InscribedDpLarge(benchmark::State& state) {
  const auto polygon = bench_polygon<double>(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_inscribed_dp(polygon, 5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InscribedDpLarge)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_Certificates(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_all_certificates());
}
BENCHMARK(BM_Certificates)->Unit(benchmark::kMillisecond);

void BM_RandomPolygon(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(random_convex_polygon_exact(n, rng));
}
BENCHMARK(BM_RandomPolygon)->Arg(6)->Arg(12)->Arg(48);

}  // namespace

BENCHMARK_MAIN();
