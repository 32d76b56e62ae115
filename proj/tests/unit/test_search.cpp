#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rotsym/corpus.hpp"
#include "rotsym/search.hpp"

using namespace rotsym;

namespace {

SearchConfig small_config() {
  SearchConfig cfg;
  cfg.group = dsbf_group(9, 3);
  cfg.runs = 4;
  cfg.max_iterations = 500;
  cfg.rng_seed = 99;
  cfg.threads = 1;
  return cfg;
}

}  // namespace

TEST(Cost, Thresholds) {
  EXPECT_EQ(peak_threshold(9, 242), 28);
  EXPECT_EQ(peak_threshold(9, std::nullopt), 24);
  EXPECT_EQ(peak_threshold(8, std::nullopt), 16);
  EXPECT_EQ(parse_cost("peak"), CostKind::Peak);
  EXPECT_FALSE(parse_cost("steep").has_value());
  EXPECT_EQ(to_string(CostKind::Flatness), "flatness");
}

TEST(Cost, Values) {
  const std::vector<std::int32_t> spectrum{4, -2, 0};
  const std::vector<std::uint32_t> sizes{1, 2, 3};
  // level 2^2 = 4: (16-4)^2 + 2 (4-4)^2 + 3 (0-4)^2
  EXPECT_DOUBLE_EQ(cost(spectrum, sizes, {CostKind::Flatness, 2, 0}), 144 + 0 + 48);
  // threshold 1: (4-1)^4 + 2 (2-1)^4 + 0
  EXPECT_DOUBLE_EQ(cost(spectrum, sizes, {CostKind::Peak, 2, 1}), 81 + 2);
  EXPECT_THROW(cost(spectrum, std::vector<std::uint32_t>{1}, {}), std::invalid_argument);
}

TEST(Step, FlatOptimumStillMoves) {
  // x0 x1 is bent: every Walsh value is +-2, so the flatness cost is already 0.
  const SearchSpace space(trivial_group(2), CostKind::Flatness, std::nullopt, 0, 1);
  auto state = make_state(space, {0, 0, 0, 1});
  EXPECT_DOUBLE_EQ(state.cost, 0);
  const auto move = step(space, state);
  EXPECT_GT(state.cost, 0);
  EXPECT_EQ(state.last_move, move);
  std::vector<std::uint8_t> expected{0, 0, 0, 1};
  expected[move] ^= 1;
  EXPECT_EQ(state.values, expected);
  // the next step does not undo the forced move
  EXPECT_NE(step(space, state), move);
}

TEST(Step, SpectrumStaysExact) {
  std::mt19937_64 rng(1);
  for (auto kind : {CostKind::Flatness, CostKind::Peak}) {
    const SearchSpace space(dsbf_group(9, 3), kind, 240, 0, 10);
    std::vector<std::uint8_t> v(space.dim());
    for (auto& b : v) b = rng() & 1;
    auto state = make_state(space, v);
    for (int s = 0; s < 300; ++s) {
      step(space, state);
      const auto fresh = make_state(space, state.values);
      ASSERT_EQ(state.spectrum, fresh.spectrum);
      ASSERT_NEAR(state.cost, fresh.cost, 1e-9 * std::max(1.0, fresh.cost));
    }
  }
}

TEST(Step, TenureIsRespected) {
  std::mt19937_64 rng(2);
  const std::size_t tenure = 7;
  const SearchSpace space(dsbf_group(9, 3), CostKind::Flatness, std::nullopt, 0, tenure);
  std::vector<std::uint8_t> v(space.dim());
  for (auto& b : v) b = rng() & 1;
  auto state = make_state(space, v);
  std::vector<std::size_t> moves;
  for (int s = 0; s < 400; ++s) moves.push_back(step(space, state));
  for (std::size_t a = 0; a < moves.size(); ++a) {
    for (std::size_t b = a + 1; b < std::min(moves.size(), a + tenure); ++b) {
      ASSERT_NE(moves[a], moves[b]) << a << " " << b;
    }
  }
}

TEST(Step, WindowPrefersLowerPeak) {
  std::mt19937_64 rng(3);
  const SearchSpace space(dsbf_group(9, 3), CostKind::Flatness, std::nullopt, 1e12, 10);
  std::vector<std::uint8_t> v(space.dim());
  for (auto& b : v) b = rng() & 1;
  auto state = make_state(space, v);
  // with an unbounded window every move competes on peak alone
  auto before = state;
  const auto move = step(space, state);
  const auto after_peak = 512 - 2 * state_nonlinearity(state, 9);
  for (std::size_t i = 0; i < space.dim(); ++i) {
    auto trial = before.values;
    trial[i] ^= 1;
    const auto t = make_state(space, trial);
    EXPECT_GE(512 - 2 * state_nonlinearity(t, 9), after_peak) << i << " vs " << move;
  }
}

TEST(Perturb, FlipsExactlyTheRequestedOrbits) {
  std::mt19937_64 rng(4);
  const auto p = shared_orbit_partition(dsbf_group(9, 3));
  const auto f = rotsym::testing::random_invariant(*p, rng);
  for (std::size_t flips : {0u, 1u, 17u, 104u}) {
    const auto g = perturb(f, p, flips, rng);
    ASSERT_TRUE(is_invariant(g, *p));
    const auto a = fold(f, p).values, b = fold(g, p).values;
    std::size_t diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i) diff += a[i] != b[i];
    EXPECT_EQ(diff, flips);
  }
  EXPECT_THROW(perturb(f, p, 105, rng), std::invalid_argument);
  TruthTable odd(9);
  odd.set(1, true);
  EXPECT_THROW(perturb(odd, p, 1, rng), FoldError);
}

TEST(Search, DeterministicAcrossThreadCounts) {
  auto cfg = small_config();
  const auto a = run_search(cfg);
  cfg.threads = 3;
  const auto b = run_search(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].best_function, b[i].best_function);
    EXPECT_EQ(a[i].run_index, b[i].run_index);
    EXPECT_EQ(a[i].iteration_found, b[i].iteration_found);
  }
  cfg.rng_seed = 100;
  EXPECT_NE(run_search(cfg).front().best_function, a.front().best_function);
}

TEST(Search, ResultsAreInvariantAndSorted) {
  auto cfg = small_config();
  cfg.record_trace = true;
  const auto results = run_search(cfg);
  const auto p = orbit_partition(cfg.group);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    EXPECT_TRUE(is_invariant(r.best_function, p));
    EXPECT_EQ(r.report, analyze(r.best_function));
    EXPECT_LE(r.iteration_found, cfg.max_iterations);
    ASSERT_EQ(r.trace.size(), cfg.max_iterations + 1);
    EXPECT_TRUE(std::is_sorted(r.trace.begin(), r.trace.end()));
    EXPECT_EQ(r.trace.back(), r.report.nonlinearity);
    EXPECT_EQ(r.trace[r.iteration_found], r.report.nonlinearity);
    if (i) EXPECT_GE(results[i - 1].report.nonlinearity, r.report.nonlinearity);
  }
}

TEST(Search, SeededAtTargetStopsImmediately) {
  SearchConfig cfg;
  cfg.group = dsbf_group(9, 3);
  cfg.initial_function = corpus_entry("dsbf3-d40").table();
  cfg.target_nl = 242;
  cfg.record_trace = true;
  const auto results = run_search(cfg);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].report.nonlinearity, 242);
  EXPECT_EQ(results[0].iteration_found, 0u);
  EXPECT_EQ(results[0].trace.size(), 1u);
  EXPECT_EQ(results[0].best_function, *cfg.initial_function);
}

TEST(Search, PerturbedSeedStaysInClass) {
  SearchConfig cfg;
  cfg.group = dsbf_group(9, 3);
  cfg.initial_function = corpus_entry("dsbf3-d32").table();
  cfg.perturb_flips = 5;
  cfg.runs = 2;
  cfg.max_iterations = 200;
  const auto results = run_search(cfg);
  for (const auto& r : results) EXPECT_TRUE(is_invariant(r.best_function, orbit_partition(cfg.group)));
}

TEST(Search, RejectsBadConfig) {
  auto cfg = small_config();
  cfg.runs = 0;
  EXPECT_THROW(run_search(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.max_iterations = 0;
  EXPECT_THROW(run_search(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.initial_function = TruthTable(8);
  EXPECT_THROW(run_search(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.tabu_tenure = 0;
  EXPECT_THROW(run_search(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.initial_function = TruthTable(9);
  cfg.initial_function->set(1, true);
  EXPECT_THROW(run_search(cfg), FoldError);
}

TEST(Search, RunGeneratorsAreIndependent) {
  auto a = run_rng(5, 0), b = run_rng(5, 1), c = run_rng(5, 0);
  const auto x = a();
  EXPECT_NE(x, b());
  EXPECT_EQ(x, c());
}
