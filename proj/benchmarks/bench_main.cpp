#include <benchmark/benchmark.h>

#include <random>

#include "rotsym/boolfn.hpp"
#include "rotsym/folding.hpp"
#include "rotsym/orbits.hpp"
#include "rotsym/permclass.hpp"
#include "rotsym/search.hpp"

using namespace rotsym;

namespace {

TruthTable random_table(unsigned n, std::mt19937_64& rng) {
  TruthTable f(n);
  for (std::size_t x = 0; x < f.size(); ++x) f.set(x, rng() & 1);
  return f;
}

void BM_WalshTransform(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto f = random_table(static_cast<unsigned>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(walsh_transform(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_WalshTransform)->DenseRange(9, 15, 2);

void BM_Analyze(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto f = random_table(static_cast<unsigned>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(f));
}
BENCHMARK(BM_Analyze)->Arg(9)->Arg(13);

void BM_FoldedWalsh(benchmark::State& state) {
  const auto p = shared_orbit_partition(dsbf_group(9, 3));
  const auto m = fold_matrix(p);
  std::mt19937_64 rng(3);
  FoldedFunction ff{p, std::vector<std::uint8_t>(m.dim())};
  for (auto& v : ff.values) v = rng() & 1;
  for (auto _ : state) benchmark::DoNotOptimize(folded_walsh(ff, m));
}
BENCHMARK(BM_FoldedWalsh);

void BM_SearchStep(benchmark::State& state) {
  const char* groups[] = {"k-dsbf:3", "k-rsbf:3", "(8,7,3,0,1,6,2,4,5)+tau"};
  const SearchSpace space(parse_group(groups[state.range(0)], 9), CostKind::Flatness);
  std::mt19937_64 rng(4);
  std::vector<std::uint8_t> v(space.dim());
  for (auto& b : v) b = rng() & 1;
  auto s = make_state(space, v);
  for (auto _ : state) benchmark::DoNotOptimize(step(space, s));
  state.SetLabel(std::to_string(space.dim()) + " orbits");
}
BENCHMARK(BM_SearchStep)->DenseRange(0, 2);

void BM_Classify9(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify(9));
}
BENCHMARK(BM_Classify9)->Unit(benchmark::kMillisecond);

void BM_OrbitPartition(benchmark::State& state) {
  const auto g = dsbf_group(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_partition(g));
}
BENCHMARK(BM_OrbitPartition)->Arg(9)->Arg(13)->Arg(15);

}  // namespace
BENCHMARK_MAIN();
