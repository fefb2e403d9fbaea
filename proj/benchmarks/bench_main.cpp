#include <benchmark/benchmark.h>

#include "piwb/delta.hpp"
#include "piwb/evalalg.hpp"
#include "piwb/tideal.hpp"
#include "piwb/young.hpp"

using namespace piwb;

static void BM_CapelliExpansion(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    Poly c = capelli(k);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CapelliExpansion)->DenseRange(3, 6);

static void BM_DeltaLayer(benchmark::State& state) {
  Poly f = tfree_double_product(2);
  Poly z = Poly::var(Var::z());
  for (auto _ : state) {
    Poly d = delta(f, VarKind::X, 2, 1, z);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DeltaLayer);

static void BM_MembershipFastTier(benchmark::State& state) {
  Poly f = tfree_double_product(2);
  Poly z = Poly::var(Var::z());
  Poly query = delta(f, VarKind::X, 2, 1, z) - delta(f, VarKind::Y, 2, 1, z);
  ComponentSpec spec{3, multidegree(query).degree};
  for (auto _ : state) {
    MembershipCertificate cert = certify_membership(query, spec);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_MembershipFastTier);

static void BM_FullSpanDim24(benchmark::State& state) {
  ComponentSpec spec{2, multidegree(capelli(2)).degree};
  for (auto _ : state) {
    SpanBasis basis = component_span(spec);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_FullSpanDim24);

static void BM_SymmetrizerIdealDim(benchmark::State& state) {
  Tableau t = Tableau::row_major(Partition({3, 2}));
  GroupAlgElem a = young_symmetrizer(t);
  for (auto _ : state) {
    unsigned d = left_ideal_dimension(a);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_SymmetrizerIdealDim);

static void BM_CodimensionM2(benchmark::State& state) {
  FiniteAlgebra m2 = FiniteAlgebra::matrix_algebra(2);
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    CodimensionResult r = codimension(m2, n);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CodimensionM2)->DenseRange(2, 4);

BENCHMARK_MAIN();
