#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rotsym/folding.hpp"

using namespace rotsym;
using rotsym::testing::random_function;
using rotsym::testing::random_invariant;

TEST(Fold, RoundTrip) {
  std::mt19937_64 rng(1);
  const auto p = shared_orbit_partition(dsbf_group(9, 3));
  for (int t = 0; t < 20; ++t) {
    const auto f = random_invariant(*p, rng);
    ASSERT_TRUE(is_invariant(f, *p));
    const auto ff = fold(f, p);
    EXPECT_EQ(ff.values.size(), 104u);
    EXPECT_EQ(unfold(ff), f);
  }
}

TEST(Fold, ReportsFirstBadOrbit) {
  const auto p = shared_orbit_partition(rsbf_group(5));
  TruthTable f(5);
  f.set(0b00011, true);  // orbit of weight-2 adjacent pairs, only one member set
  const auto bad = find_fold_violation(f, *p);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(p->reps[*bad], 0b00011u);
  try {
    fold(f, p);
    FAIL();
  } catch (const FoldError& e) {
    EXPECT_EQ(e.orbit(), *bad);
    EXPECT_EQ(e.representative(), 0b00011u);
  }
  EXPECT_FALSE(find_fold_violation(TruthTable(5), *p).has_value());
  EXPECT_THROW(find_fold_violation(TruthTable(4), *p), std::invalid_argument);
}

TEST(Fold, FoldedWalshMatchesFull) {
  std::mt19937_64 rng(2);
  for (const char* name : {"rsbf", "dsbf", "k-rsbf:3", "k-dsbf:3"}) {
    const auto p = shared_orbit_partition(parse_group(name, 9));
    const auto m = fold_matrix(p);
    for (int t = 0; t < 100; ++t) {
      const auto f = random_invariant(*p, rng);
      const auto folded = folded_walsh(fold(f, p), m);
      const auto full = walsh_transform(f);
      for (std::size_t j = 0; j < m.dim(); ++j) {
        ASSERT_EQ(folded[j], full.values[p->reps[j]]) << name;
      }
    }
  }
}

TEST(Fold, MatrixRowsSumOverOrbits) {
  const auto p = shared_orbit_partition(dsbf_group(6));
  const auto m = fold_matrix(p);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      int s = 0;
      for (std::size_t x = 0; x < p->orbit_of.size(); ++x) {
        if (p->orbit_of[x] == i) s += rotsym::testing::parity(x & p->reps[j]) ? -1 : 1;
      }
      ASSERT_EQ(m.at(i, j), s);
    }
  }
  // column 0 (the zero vector) counts orbit sizes
  for (std::size_t i = 0; i < m.dim(); ++i) EXPECT_EQ(m.at(i, 0), static_cast<int>(p->sizes[i]));
}

TEST(Fold, MismatchedPartitionRejected) {
  const auto a = shared_orbit_partition(rsbf_group(6));
  const auto b = shared_orbit_partition(dsbf_group(6));
  const auto ma = fold_matrix(a);
  const auto ff = fold(TruthTable(6), b);
  EXPECT_THROW(folded_walsh(ff, ma), std::invalid_argument);
  // an equal partition built separately is accepted
  const auto ff2 = fold(TruthTable(6), shared_orbit_partition(rsbf_group(6)));
  EXPECT_NO_THROW(folded_walsh(ff2, ma));
}

TEST(Fold, IncrementalUpdateTracksRecomputation) {
  std::mt19937_64 rng(3);
  const auto p = shared_orbit_partition(dsbf_group(9, 3));
  const auto m = fold_matrix(p);
  auto ff = fold(random_invariant(*p, rng), p);
  auto spectrum = folded_walsh(ff, m);
  for (int step = 0; step < 1000; ++step) {
    const std::size_t i = rng() % m.dim();
    folded_walsh_delta(spectrum, m, i, ff.values[i] ? -1 : 1);
    ff.values[i] ^= 1;
    ASSERT_EQ(spectrum, folded_walsh(ff, m)) << "step " << step;
  }
}

TEST(Fold, TrivialGroupGivesFullSpectrum) {
  std::mt19937_64 rng(4);
  const auto p = shared_orbit_partition(trivial_group(5));
  const auto f = random_function(5, rng);
  const auto folded = folded_walsh(fold(f, p), fold_matrix(p));
  EXPECT_EQ(folded, walsh_transform(f).values);
}
