#include <benchmark/benchmark.h>

#include "pcla/oracle.hpp"
#include "pcla/reduction.hpp"
#include "pcla/verify.hpp"

namespace {

pcla::CommutationGraph one_edge_graph() {
  return pcla::CommutationGraph({"x", "y", "z"},
                                std::vector<std::pair<int, int>>{{0, 1}});
}

void BM_EnumerateBasis(benchmark::State& state) {
  const pcla::CommutationGraph g = one_edge_graph();
  const pcla::GeneratorOrder o = pcla::GeneratorOrder::declaration(3);
  const int dmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto basis = pcla::enumerate_pcls(o, g, dmax);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_EnumerateBasis)->DenseRange(4, 10, 2);

void BM_BuildReduction(benchmark::State& state) {
  const pcla::CommutationGraph g = one_edge_graph();
  const pcla::GeneratorOrder o = pcla::GeneratorOrder::declaration(3);
  const int dmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto table = pcla::build_reduction(g, o, dmax);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_BuildReduction)->DenseRange(4, 8, 2);

void BM_Bracket(benchmark::State& state) {
  const pcla::CommutationGraph g = one_edge_graph();
  const pcla::GeneratorOrder o = pcla::GeneratorOrder::declaration(3);
  const int dmax = static_cast<int>(state.range(0));
  const pcla::ReductionTable t = pcla::build_reduction(g, o, dmax);
  pcla::VerifyRng rng(1);
  const pcla::LieElement a = pcla::random_nf_element(t, rng, dmax / 2, 4);
  const pcla::LieElement b = pcla::random_nf_element(t, rng, dmax - dmax / 2, 4);
  pcla::FreeBracketCache cache;
  for (auto _ : state) {
    auto p = pcla::bracket(t, a, b, cache);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_Bracket)->DenseRange(4, 8, 2);

void BM_BruteForceCentralizer(benchmark::State& state) {
  const pcla::CommutationGraph g = one_edge_graph();
  const pcla::GeneratorOrder o = pcla::GeneratorOrder::declaration(3);
  const pcla::ReductionTable t = pcla::build_reduction(g, o, 6);
  pcla::VerifyRng rng(2);
  pcla::LieElement e = pcla::random_nf_element(t, rng, 2, 3);
  for (auto _ : state) {
    auto k = pcla::brute_force_centralizer(t, e, 4);
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_BruteForceCentralizer);

void BM_DimensionCheck(benchmark::State& state) {
  const pcla::CommutationGraph g = one_edge_graph();
  const pcla::GeneratorOrder o = pcla::GeneratorOrder::declaration(3);
  const int nmax = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(pcla::dimension_check(g, o, nmax));
}
BENCHMARK(BM_DimensionCheck)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
