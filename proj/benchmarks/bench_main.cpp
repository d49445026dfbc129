#include "orbitalg/orbit.hpp"
#include "orbitalg/sampling.hpp"
#include "orbitalg/structure.hpp"

#include <benchmark/benchmark.h>

#include <memory>

namespace {

using namespace orbitalg;

std::shared_ptr<const LieAlgebra> sl2r() {
  static const auto g = std::make_shared<const LieAlgebra>(builtin_algebra("sl2r"));
  return g;
}

void BM_RankRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PolynomialSampler sampler(1);
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(static_cast<long>(sampler.uniform(19)) - 9);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRandom)->Arg(16)->Arg(32)->Arg(64);

void BM_FreeBracket(benchmark::State& state) {
  const auto ctx = PoissonContext::free(sl2r());
  PolynomialSampler sampler(2);
  const auto deg = static_cast<std::uint32_t>(state.range(0));
  const auto f = sampler.sample_nonconstant(3, deg, 8), g = sampler.sample_nonconstant(3, deg, 8);
  for (auto _ : state) benchmark::DoNotOptimize(ctx.bracket(f, g));
}
BENCHMARK(BM_FreeBracket)->Arg(2)->Arg(4)->Arg(6);

void BM_QuotientBracket(benchmark::State& state) {
  const auto orbit = casimir_orbit(sl2r(), 1);
  PolynomialSampler sampler(3);
  const auto deg = static_cast<std::uint32_t>(state.range(0));
  const auto f = orbit.context().reduce(sampler.sample_nonconstant(3, deg, 8));
  const auto g = orbit.context().reduce(sampler.sample_nonconstant(3, deg, 8));
  for (auto _ : state) benchmark::DoNotOptimize(orbit.context().bracket(f, g));
}
BENCHMARK(BM_QuotientBracket)->Arg(2)->Arg(4)->Arg(6);

void BM_DerivedSpanHyperboloid(benchmark::State& state) {
  const auto orbit = casimir_orbit(sl2r(), 1);
  const auto bound = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(derived_span_upto(orbit.context(), bound).rank);
}
BENCHMARK(BM_DerivedSpanHyperboloid)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ConeClosure(benchmark::State& state) {
  const auto orbit = casimir_orbit(sl2r(), 0);
  const auto bound = static_cast<std::uint32_t>(state.range(0));
  const Polynomial z = Polynomial::variable(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(poisson_ideal_closure(orbit.context(), {z}, bound).span.rank);
}
BENCHMARK(BM_ConeClosure)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_SplittingCheck(benchmark::State& state) {
  const auto degree = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_prop1(*sl2r(), degree).pass());
}
BENCHMARK(BM_SplittingCheck)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
