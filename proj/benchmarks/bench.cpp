#include <benchmark/benchmark.h>

#include "rootadj/hochschild.hpp"
#include "rootadj/ktheory.hpp"
#include "rootadj/root_adjunction.hpp"
#include "rootadj/splitting.hpp"

using namespace rootadj;

static void BM_EnumerateKuBasis(benchmark::State& state) {
  Preset ku = makePreset("ku", 5);
  const long long hi = state.range(0);
  for (auto _ : state) {
    BasisTable t = enumerateBasis(ku.algebra, 0, hi);
    benchmark::DoNotOptimize(t.totalRank());
  }
}
BENCHMARK(BM_EnumerateKuBasis)->Arg(100)->Arg(400);

static void BM_HochschildTable(benchmark::State& state) {
  AlgebraBuilder b(CoefficientRing::Kind::ZpLocal, 5, 0);
  b.gen("v1", 8, 1).gen("s4", 4, 1);
  PresentedAlgebra alg = b.build();
  HKRModule h = hh(alg);
  for (auto _ : state) {
    BasisTable t = hkrBasis(h, 0, state.range(0));
    benchmark::DoNotOptimize(t.totalRank());
  }
}
BENCHMARK(BM_HochschildTable)->Arg(60)->Arg(120);

static void BM_RootRewriteProducts(benchmark::State& state) {
  Preset ku = makePreset("ku", 11);
  const PresentedAlgebra& alg = ku.algebra;
  Element u = generatorElement(alg, alg.requireGen("u"));
  for (auto _ : state) {
    Element x = power(alg, u, state.range(0));
    benchmark::DoNotOptimize(x.terms.size());
  }
}
BENCHMARK(BM_RootRewriteProducts)->Arg(32)->Arg(96);

static void BM_KoReassembly(benchmark::State& state) {
  NamedModuleTable ku = tableKKu(7);
  NamedModuleTable ko = tableKKo(7);
  std::set<long long> evens{0, 2, 4};
  for (auto _ : state) {
    BasisTable lhs = reassemble(ku, evens, -10, state.range(0));
    BasisTable rhs = halveWeights(enumerateTable(ko, -10, state.range(0)));
    benchmark::DoNotOptimize(tableDiff(lhs, rhs).empty());
  }
}
BENCHMARK(BM_KoReassembly)->Arg(200)->Arg(400);

static void BM_FrobeniusOrbits(benchmark::State& state) {
  for (auto _ : state) {
    OrbitPartition part = frobeniusOrbits(state.range(0), 5);
    benchmark::DoNotOptimize(part.blocks.size());
  }
}
BENCHMARK(BM_FrobeniusOrbits)->Arg(24)->Arg(5040);

BENCHMARK_MAIN();
