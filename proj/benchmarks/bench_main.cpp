#include <benchmark/benchmark.h>

#include "bohr/explorer.hpp"
#include "bohr/inequalities.hpp"

namespace {

using namespace bohr;

void BM_EigHermitian(benchmark::State& state) {
  const HermitianMatrix h = random_hermitian(state.range(0), std::uint64_t{1});
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(h));
}
BENCHMARK(BM_EigHermitian)->DenseRange(2, 8, 2)->Arg(16)->Arg(32);

void BM_MatrixPower(benchmark::State& state) {
  const HermitianMatrix a = random_psd(state.range(0), std::uint64_t{2});
  for (auto _ : state) benchmark::DoNotOptimize(matrix_power(a, 1.5));
}
BENCHMARK(BM_MatrixPower)->DenseRange(2, 8, 2)->Arg(16)->Arg(32);

void BM_FieldBohr(benchmark::State& state) {
  const Index d = state.range(0);
  CounterRng rng(3);
  std::vector<FieldEntry> entries;
  for (int i = 0; i < 4; ++i) {
    entries.push_back(FieldEntry{1, rng.log_uniform(0.1, 10), random_psd(d, rng),
                                 congruence_map(random_contraction(d, rng))});
  }
  const WeightedField f(entries);
  for (auto _ : state) benchmark::DoNotOptimize(field_bohr(f, 1.5));
}
BENCHMARK(BM_FieldBohr)->Arg(2)->Arg(4)->Arg(6);

void BM_SearchTrials(benchmark::State& state) {
  const std::string target = search_targets()[static_cast<std::size_t>(state.range(0))];
  TrialConfig c = default_config(target, 4, 100);
  c.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_search(c));
  state.SetLabel(target);
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_SearchTrials)->DenseRange(0, 9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
