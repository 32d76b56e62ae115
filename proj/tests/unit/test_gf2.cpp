#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rotsym/gf2.hpp"

using namespace rotsym;
using namespace rotsym::gf2;

namespace {

/// Irreducibility by trial multiplication of every pair of lower-degree factors.
bool brute_irreducible(Poly p) {
  const int d = poly_degree(p);
  if (d < 1) return false;
  for (Poly a = 2; a < (Poly{1} << d); ++a) {
    for (Poly b = 2; b < (Poly{1} << d); ++b) {
      if (poly_mul(a, b) == p) return false;
    }
  }
  return true;
}

/// Rank as the log2 of the number of distinct images.
unsigned brute_rank(const Matrix& m) {
  std::set<std::uint32_t> images;
  for (std::uint32_t x = 0; x < (1u << m.size()); ++x) images.insert(m.apply(x));
  unsigned r = 0;
  while ((1u << r) < images.size()) ++r;
  return r;
}

}  // namespace

TEST(Gf2Poly, Arithmetic) {
  EXPECT_EQ(poly_mul(0b11, 0b11), 0b101u);  // (x+1)^2 = x^2+1
  EXPECT_EQ(poly_mod(0b1000, 0b1011), 0b11u);  // x^3 mod x^3+x+1 = x+1
  EXPECT_EQ(poly_to_string(0b1011), "x^3+x+1");
  EXPECT_EQ(poly_to_string(1), "1");
  EXPECT_EQ(poly_degree(0), -1);
  EXPECT_THROW(poly_mod(5, 0), std::domain_error);
}

TEST(Gf2Poly, IrreducibilityMatchesTrialFactoring) {
  for (Poly p = 2; p < 512; ++p) ASSERT_EQ(is_irreducible(p), brute_irreducible(p)) << p;
}

TEST(Gf2Poly, IrreduciblesDividingCyclotomics) {
  EXPECT_EQ(irreducibles_dividing(3), (std::vector<Poly>{0b11, 0b111}));
  const auto nine = irreducibles_dividing(9);
  for (Poly p : nine) {
    bool divides = false;
    for (unsigned l = 1; l <= 9; ++l) divides = divides || poly_mod((1u << l) | 1u, p) == 0;
    EXPECT_TRUE(divides && brute_irreducible(p)) << poly_to_string(p);
  }
  for (Poly p = 2; p < 1024; ++p) {
    if (!brute_irreducible(p)) continue;
    bool divides = false;
    for (unsigned l = 1; l <= 9; ++l) divides = divides || poly_mod((1u << l) | 1u, p) == 0;
    EXPECT_EQ(divides, std::find(nine.begin(), nine.end(), p) != nine.end()) << p;
  }
}

TEST(Gf2Matrix, RankAndInverse) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const unsigned n = 1 + t % 8;
    const auto m = Matrix::random(n, rng);
    const unsigned r = rank(m);
    ASSERT_EQ(r, brute_rank(m));
    if (r == n) {
      EXPECT_EQ(inverse(m) * m, Matrix::identity(n));
      EXPECT_EQ(m * inverse(m), Matrix::identity(n));
    } else {
      EXPECT_THROW(inverse(m), std::domain_error);
    }
  }
}

TEST(Gf2Matrix, PolyevalAndPower) {
  std::mt19937_64 rng(2);
  const auto m = Matrix::random(5, rng);
  EXPECT_EQ(power(m, 3), m * m * m);
  EXPECT_EQ(power(m, 0), Matrix::identity(5));
  // x^2 + x + 1
  EXPECT_EQ(polyeval(0b111, m), m * m + m + Matrix::identity(5));
}

TEST(Gf2Matrix, PermutationMatrixAgreesWithCoordinateAction) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto p = rotsym::testing::random_perm(7, rng);
    const auto m = perm_matrix(p);
    for (std::uint32_t x = 0; x < 128; ++x) ASSERT_EQ(m.apply(x), p.apply(x));
    const auto q = rotsym::testing::random_perm(7, rng);
    EXPECT_EQ(perm_matrix(p * q), m * perm_matrix(q));
  }
}
