#include <vector>

#include <benchmark/benchmark.h>

#include "gtm/census.hpp"
#include "gtm/labeling.hpp"
#include "gtm/matroid.hpp"
#include "gtm/oracle.hpp"

namespace {

gtm::Multigraph complete_graph(int n) {
  std::vector<gtm::Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int w = u + 1; w <= n; ++w) edges.push_back({u, w});
  }
  return gtm::Multigraph::with_vertex_count(n, std::move(edges));
}

void BM_MaxHeightFullDegrees(benchmark::State& state) {
  const gtm::Multigraph g = complete_graph(static_cast<int>(state.range(0)));
  const gtm::AlphaVector alpha = gtm::AlphaVector::full_degrees(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtm::max_height(g, alpha).height);
  }
}
BENCHMARK(BM_MaxHeightFullDegrees)->Arg(4)->Arg(6)->Arg(8);

void BM_EnumerateClasses(benchmark::State& state) {
  const gtm::Multigraph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtm::enumerate_classes(g).size());
  }
}
BENCHMARK(BM_EnumerateClasses)->Arg(4)->Arg(5)->Arg(6);

void BM_CountBasesAfterDeletion(benchmark::State& state) {
  const gtm::Multigraph g = complete_graph(6);
  const std::vector<gtm::Vertex> w{5, 6};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtm::count_bases(g, w));
  }
}
BENCHMARK(BM_CountBasesAfterDeletion);

void BM_RankQuery(benchmark::State& state) {
  const gtm::Multigraph g = complete_graph(6);
  const gtm::TransversalMatroid m(g);
  // alternating slots, a mid-size subset with both matched and crowded vertices
  gtm::GroundSet x;
  const gtm::GroundSet& ground = m.ground();
  for (std::size_t i = 0; i < ground.size(); i += 2) x.push_back(ground[i]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.rank(x));
  }
}
BENCHMARK(BM_RankQuery);

void BM_OracleBasisSweep(benchmark::State& state) {
  const gtm::Multigraph g = complete_graph(4);
  const gtm::TransversalMatroid m(g);
  const gtm::oracle::SetSystem sys =
      gtm::oracle::make_system(m.primal_presentation(), m.ground());
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtm::oracle::enumerate_bases(sys).size());
  }
}
BENCHMARK(BM_OracleBasisSweep);

void BM_SelfDualCheck(benchmark::State& state) {
  const gtm::Multigraph g = complete_graph(4);
  const gtm::TransversalMatroid m(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtm::check_self_dual(m));
  }
}
BENCHMARK(BM_SelfDualCheck);

} // namespace

BENCHMARK_MAIN();
