#include <benchmark/benchmark.h>

#include "corpus.hpp"
#include "subshift/auxiliary.hpp"
#include "subshift/classify.hpp"
#include "subshift/measures.hpp"

using namespace subshift;

namespace {

struct Setup {
  Substitution sigma;
  ComponentChain chain;
  SpectralProfile spectral;
  explicit Setup(Substitution s)
      : sigma(std::move(s)), chain(component_chain(sigma)), spectral(chain) {}
};

void BM_Expand(benchmark::State& state) {
  auto s = corpus::ex532();
  for (auto _ : state) benchmark::DoNotOptimize(apply(s, "c", unsigned(state.range(0))));
}
BENCHMARK(BM_Expand)->DenseRange(8, 16, 4);

void BM_Stream(benchmark::State& state) {
  auto s = corpus::ex532();
  for (auto _ : state) {
    PowerStream ps(s, "c", 30);
    std::size_t n = 0;
    while (n < std::size_t(state.range(0)) && ps.next()) ++n;
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_Stream)->Arg(1 << 16)->Arg(1 << 20);

void BM_Language(benchmark::State& state) {
  auto s = corpus::ex44ii();
  for (auto _ : state) benchmark::DoNotOptimize(language(s, std::size_t(state.range(0))));
}
BENCHMARK(BM_Language)->DenseRange(2, 6, 2);

void BM_AuxiliaryMatrix(benchmark::State& state) {
  auto s = corpus::ex532();
  auto chain = component_chain(s);
  for (auto _ : state)
    benchmark::DoNotOptimize(AuxiliarySubstitution(s, chain, std::size_t(state.range(0))).matrix());
}
BENCHMARK(BM_AuxiliaryMatrix)->DenseRange(1, 4, 1);

void BM_Spectral(benchmark::State& state) {
  auto s = corpus::ex532();
  auto chain = component_chain(s);
  for (auto _ : state) benchmark::DoNotOptimize(SpectralProfile(chain).equality_classes());
}
BENCHMARK(BM_Spectral);

void BM_Classify(benchmark::State& state) {
  Setup x(corpus::ex39i());
  for (auto _ : state) benchmark::DoNotOptimize(classify(x.sigma, x.chain, x.spectral));
}
BENCHMARK(BM_Classify);

void BM_CylinderTable(benchmark::State& state) {
  Setup x(corpus::ex532());
  for (auto _ : state)
    benchmark::DoNotOptimize(
        cylinder_table(x.sigma, x.chain, x.spectral, 2, std::size_t(state.range(0))));
}
BENCHMARK(BM_CylinderTable)->DenseRange(1, 3, 1);

void BM_CountInPower(benchmark::State& state) {
  auto s = corpus::ex532();
  for (auto _ : state)
    benchmark::DoNotOptimize(count_in_power(s, "ad", "c", unsigned(state.range(0))));
}
BENCHMARK(BM_CountInPower)->Arg(20)->Arg(60)->Arg(200);

void BM_Empirical(benchmark::State& state) {
  Setup x(corpus::ex532());
  for (auto _ : state)
    benchmark::DoNotOptimize(
        empirical_frequency(x.sigma, x.chain, x.spectral, 2, "a", std::uint64_t(state.range(0))));
}
BENCHMARK(BM_Empirical)->Arg(100000)->Arg(1000000);

}  // namespace
BENCHMARK_MAIN();
