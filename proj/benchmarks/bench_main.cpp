#include <benchmark/benchmark.h>

#include "clusteraut/automorphism.hpp"
#include "clusteraut/folding.hpp"
#include "clusteraut/universal.hpp"

using namespace clusteraut;

namespace {

const char* const kTypes[] = {"A3", "B3", "D4", "A5", "D5", "F4", "E6"};

ExchangeGraph graph_of(const DynkinType& t) {
  return exchange_graph(initial_seed(bipartite_matrix(t)), default_cap(t));
}

void BM_Mutation(benchmark::State& state) {
  auto b = bipartite_matrix(DynkinType::parse("E6"));
  std::size_t k = 0;
  for (auto _ : state) {
    b = mutate_matrix(b, k);
    k = (k + 1) % b.n();
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_Mutation);

void BM_TauGroup(benchmark::State& state) {
  RootSystem rs(DynkinType::parse(kTypes[state.range(0)]));
  const auto eps = rs.canonical_sign();
  for (auto _ : state) benchmark::DoNotOptimize(tau_group(rs, eps));
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_TauGroup)->DenseRange(0, 6);

void BM_ExchangeGraph(benchmark::State& state) {
  const auto t = DynkinType::parse(kTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(graph_of(t));
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_ExchangeGraph)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_AutGroup(benchmark::State& state) {
  const auto g = graph_of(DynkinType::parse(kTypes[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(aut_group(g));
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_AutGroup)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_Fold(benchmark::State& state) {
  const auto t = DynkinType::parse(kTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(fold_report(t));
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_Fold)->Arg(0)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_AutUniv(benchmark::State& state) {
  const auto t = DynkinType::parse(kTypes[state.range(0)]);
  RootSystem rs(t);
  const auto u = universal_matrix(bipartite_matrix(t), rs, rs.canonical_sign());
  for (auto _ : state) benchmark::DoNotOptimize(aut_univ(u, default_cap(t)));
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_AutUniv)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_LaurentSubstitute(benchmark::State& state) {
  const auto g = graph_of(DynkinType::parse("D4"));
  std::vector<LaurentPoly> images;
  const auto& cluster = g.seed(g.size() / 2).cluster;
  for (auto v : cluster) images.push_back(g.variable(v));
  for (auto _ : state)
    for (const auto& x : g.variables()) benchmark::DoNotOptimize(substitute(x, images));
}
BENCHMARK(BM_LaurentSubstitute)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
