#include <benchmark/benchmark.h>

#include "coxdesc/classical.hpp"
#include "coxdesc/descent_algebra.hpp"
#include "coxdesc/enumeration.hpp"
#include "coxdesc/subalgebra.hpp"

using namespace coxdesc;

namespace {

const char* const kTypes[] = {"A5", "B5", "D6", "H3", "F4", "E6"};

void BM_EnumerateGroup(benchmark::State& state) {
  const auto sys = CoxeterSystem::build(CoxeterType::parse(kTypes[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_group(sys).size());
  state.SetLabel(sys.type().label());
}
BENCHMARK(BM_EnumerateGroup)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

// Builds the descent-class table and every product x_J x_K.
void BM_AllSolomonProducts(benchmark::State& state) {
  const auto sys = CoxeterSystem::build(CoxeterType::parse(kTypes[state.range(0)]));
  for (auto _ : state) {
    const DescentAlgebra alg(sys);
    std::size_t terms = 0;
    for (SubsetMask J : all_subsets(sys.rank())) {
      for (SubsetMask K : all_subsets(sys.rank())) terms += alg.solomon_product(J, K).terms().size();
    }
    benchmark::DoNotOptimize(terms);
  }
  state.SetLabel(sys.type().label());
}
BENCHMARK(BM_AllSolomonProducts)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_MinimalPolynomialMaximal(benchmark::State& state) {
  const auto sys = CoxeterSystem::build(CoxeterType::parse(kTypes[state.range(0)]));
  const DescentAlgebra alg(sys);
  for (auto _ : state) {
    for (int s = 1; s <= sys.rank(); ++s) {
      benchmark::DoNotOptimize(minimal_polynomial(alg, SubsetMask::full(sys.rank()).without(s)).degree());
    }
  }
  state.SetLabel(sys.type().label());
}
BENCHMARK(BM_MinimalPolynomialMaximal)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_WitnessSearchE8(benchmark::State& state) {
  const auto sys = CoxeterSystem::build(CoxeterType::parse("E8"));
  for (auto _ : state) benchmark::DoNotOptimize(commutation_witness(sys, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WitnessSearchE8)->DenseRange(1, 8)->Unit(benchmark::kMillisecond);

void BM_ClosedFormTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chain_table_csv(Family::B, n).size());
}
BENCHMARK(BM_ClosedFormTable)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
