// Serial reference against the OpenMP kernel for each parallel hot spot.
// Argument 0 selects Exec::Serial, 1 selects Exec::Parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "flowalg/circulation.hpp"
#include "flowalg/corpus.hpp"
#include "flowalg/flow_lattice.hpp"
#include "flowalg/kirchhoff.hpp"
#include "flowalg/named_graphs.hpp"
#include "flowalg/tutte.hpp"

using namespace flowalg;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

Circulation random_table(std::size_t m, std::uint32_t seed) {
  std::mt19937 rng(seed);
  Circulation c(Ring::rationals(), m);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) c.set(EdgeSubset(s), Rational(static_cast<long>(rng() % 7) - 3));
  return c;
}

void BM_Multiply(benchmark::State& state) {
  const auto a = random_table(12, 1), b = random_table(12, 2);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b, mode(state)));
}

void BM_CorankNullity(benchmark::State& state) {
  const Graph g = named::complete(6);
  for (auto _ : state) benchmark::DoNotOptimize(tutte_corank_nullity(g, mode(state)));
}

void BM_RankSequence(benchmark::State& state) {
  const Graph g = named::complete(5);
  for (auto _ : state) benchmark::DoNotOptimize(rank_sequence(g, mode(state)));
}

void BM_MonomialDimensions(benchmark::State& state) {
  const Graph g = named::complete(5);
  for (auto _ : state) benchmark::DoNotOptimize(monomial_dimensions(g, mode(state)));
}

void BM_ThetaEnumerate(benchmark::State& state) {
  const Graph g = named::gray_left();
  for (auto _ : state) benchmark::DoNotOptimize(theta_enumerate(g, 12, mode(state)));
}

void BM_Corpus(benchmark::State& state) {
  corpus::Options o;
  o.max_edges = 4;
  o.flip_trials = 5;
  o.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(corpus::run(o));
}

}  // namespace

BENCHMARK(BM_Multiply)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorankNullity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSequence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonomialDimensions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaEnumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Corpus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
