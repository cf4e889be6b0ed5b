#include <benchmark/benchmark.h>

#include "rainbow/campaign.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/kelmans.hpp"
#include "rainbow/lifting.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/spectral.hpp"

using namespace rainbow;

namespace {

GraphFamily size_family(int n, std::uint64_t seed) {
  auto rng = stream_rng(seed, 0);
  std::vector<Graph> graphs;
  for (int i = 0; i < n; ++i) {
    graphs.push_back(random_graph_in_size_range(n, static_cast<int>(extremal_size(n)) + 1,
                                                static_cast<int>(binomial2(n)), rng));
  }
  return GraphFamily(std::move(graphs));
}

void BM_SpectralRadius(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto rng = stream_rng(1, 0);
  const auto g = random_graph(n, 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).value);
}
BENCHMARK(BM_SpectralRadius)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ThresholdDecision(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = extremal_graph(n);
  for (auto _ : state) benchmark::DoNotOptimize(compare_largest_eigenvalue(g, n - 2, SpectralMatrix::adjacency));
}
BENCHMARK(BM_ThresholdDecision)->Arg(8)->Arg(32)->Arg(64);

void BM_ExactThresholdCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = integer_adjacency(disjoint_union(complete_graph(n - 1), complete_graph(1)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_eigenvalue_count(a, n - 2));
}
BENCHMARK(BM_ExactThresholdCount)->Arg(8)->Arg(16)->Arg(32);

void BM_KelmansFixpoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto rng = stream_rng(2, 0);
  const auto g = random_graph(n, 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kelmans_fixpoint(g));
}
BENCHMARK(BM_KelmansFixpoint)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_KelmansFamily(benchmark::State& state) {
  const auto f = size_family(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(kelmans_family(f));
}
BENCHMARK(BM_KelmansFamily)->Arg(8)->Arg(16)->Arg(32);

void BM_Solver(benchmark::State& state) {
  const auto f = size_family(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(find_rainbow_hamiltonian_cycle(f));
}
BENCHMARK(BM_Solver)->Arg(6)->Arg(8)->Arg(12)->Arg(16);

void BM_SolverNoCycle(benchmark::State& state) {
  const auto f = uniform_family(extremal_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(find_rainbow_hamiltonian_cycle(f));
}
BENCHMARK(BM_SolverNoCycle)->Arg(6)->Arg(8)->Arg(12);

void BM_LiftFull(benchmark::State& state) {
  const auto f = size_family(static_cast<int>(state.range(0)), 5);
  const auto r = construct_cycle_size_condition_detailed(f);
  for (auto _ : state) benchmark::DoNotOptimize(lift_full(f, r.transcript, r.transformed_cycle));
}
BENCHMARK(BM_LiftFull)->Arg(8)->Arg(16)->Arg(32);

void BM_SizeConstruction(benchmark::State& state) {
  const auto f = size_family(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(construct_cycle_size_condition(f));
}
BENCHMARK(BM_SizeConstruction)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_SampledCampaign(benchmark::State& state) {
  CampaignOptions o;
  o.theorem = TheoremId::rainbow_size;
  o.n = 6;
  o.samples = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(o));
}
BENCHMARK(BM_SampledCampaign)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
