#include <random>

#include <benchmark/benchmark.h>

#include "tropicurve/classify.hpp"
#include "tropicurve/fixtures.hpp"
#include "tropicurve/intersect.hpp"

using namespace tropicurve;

namespace {

FixtureSpec honeycomb(int d) {
  FixtureSpec spec;
  spec.degree = d;
  return spec;
}

// Full support on d Delta_2 with integer coefficients in [-20, 0].
TropicalPolynomial random_full(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<long> coefficient(-20, 0);
  std::vector<Term> terms;
  for (int x = 0; x <= d; ++x) {
    for (int y = 0; x + y <= d; ++y) terms.push_back({{x, y}, Rational(coefficient(rng))});
  }
  return TropicalPolynomial(terms);
}

void BM_dual_subdivision(benchmark::State& state) {
  const auto f = generate(honeycomb(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(dual_subdivision(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_dual_subdivision)->DenseRange(2, 10, 2)->Complexity();

void BM_build_curve_random(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto f = random_full(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_curve(f));
}
BENCHMARK(BM_build_curve_random)->Arg(3)->Arg(6)->Arg(9);

void BM_harnack(benchmark::State& state, HarnackOracle oracle) {
  const auto c = build_curve(generate(honeycomb(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(is_harnack(c, oracle));
}
// The loop oracle enumerates simple cycles, which grows quickly with the genus.
BENCHMARK_CAPTURE(BM_harnack, csp, HarnackOracle::kConstraintSolver)->DenseRange(2, 6);
BENCHMARK_CAPTURE(BM_harnack, loops, HarnackOracle::kLoops)->DenseRange(2, 4);

void BM_top_type(benchmark::State& state) {
  FixtureSpec spec;
  spec.family = Family::kOneNode;
  spec.degree = static_cast<int>(state.range(0));
  const auto c = build_curve(generate(spec));
  for (auto _ : state) benchmark::DoNotOptimize(top_type(c));
}
BENCHMARK(BM_top_type)->DenseRange(3, 6);

void BM_stable_intersection(benchmark::State& state) {
  const auto d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const auto a = build_curve(random_full(rng, d));
  const auto b = build_curve(random_full(rng, d));
  for (auto _ : state) benchmark::DoNotOptimize(stable_intersection(a, b));
}
BENCHMARK(BM_stable_intersection)->Arg(2)->Arg(4)->Arg(6);

void BM_mixed_volume(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> coord(0, 50);
  std::vector<LatticePoint> a, b;
  for (int i = 0; i < state.range(0); ++i) {
    a.push_back({coord(rng), coord(rng)});
    b.push_back({coord(rng), coord(rng)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(mixed_volume(a, b));
}
BENCHMARK(BM_mixed_volume)->Arg(16)->Arg(256);

}  // namespace
BENCHMARK_MAIN();
