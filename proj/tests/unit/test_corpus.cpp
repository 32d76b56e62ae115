#include <gtest/gtest.h>

#include "rotsym/corpus.hpp"
#include "rotsym/folding.hpp"

using namespace rotsym;

TEST(Corpus, EmbeddedEntries) {
  const auto& corpus = published_corpus();
  ASSERT_EQ(corpus.size(), 7u);
  for (const auto& e : corpus) {
    EXPECT_EQ(e.table().num_vars(), e.n) << e.id;
    EXPECT_EQ(encode_hex(e.table()), e.hex) << e.id;
  }
  EXPECT_EQ(corpus_entry("dsbf11-994").n, 11u);
  EXPECT_EQ(corpus_entry("dsbf13-4036").n, 13u);
  EXPECT_THROW(corpus_entry("nope"), std::out_of_range);
}

TEST(Corpus, EveryClaimHolds) {
  for (const auto& e : published_corpus()) {
    const auto v = verify_entry(e);
    for (const auto& c : v.checks) EXPECT_TRUE(c.passed) << e.id << ": " << c.what << " " << c.detail;
    EXPECT_GE(v.checks.size(), 4u);
  }
}

TEST(Corpus, PublishedValues) {
  struct Claim {
    const char* id;
    int nl, delta, deg;
  };
  const Claim claims[] = {{"dsbf3-d40", 242, 40, 7},     {"dsbf3-d32", 242, 32, 7},
                          {"rsbf3-d56", 242, 56, 7},     {"perm104-d48", 242, 48, 7},
                          {"perm74-d64", 242, 64, 7},    {"dsbf11-994", 994, 200, 9},
                          {"dsbf13-4036", 4036, 208, 10}};
  for (const auto& c : claims) {
    const auto r = analyze(corpus_entry(c.id).table());
    EXPECT_EQ(r.nonlinearity, c.nl) << c.id;
    EXPECT_EQ(r.absolute_indicator, c.delta) << c.id;
    EXPECT_EQ(r.degree, c.deg) << c.id;
    if (corpus_entry(c.id).n == 9) EXPECT_EQ(r.walsh_zero_count, 0u) << c.id;
  }
}

TEST(Corpus, ReversedLabelsMatter) {
  const auto& e = corpus_entry("perm104-d48");
  ASSERT_TRUE(e.reversed_labels);
  const auto tt = e.table();
  const auto as_listed = orbit_partition(parse_group("(0,2,1,4,5,6,7,8,3)", 9));
  const auto renamed = orbit_partition(e.group("(0,2,1,4,5,6,7,8,3)"));
  EXPECT_FALSE(is_invariant(tt, as_listed));
  EXPECT_TRUE(is_invariant(tt, renamed));
  EXPECT_EQ(as_listed.orbit_count(), renamed.orbit_count());
}

TEST(Corpus, BitFlipIsDetected) {
  for (const auto& original : published_corpus()) {
    for (std::size_t x : {std::size_t{0}, std::size_t{5}, original.table().size() - 1}) {
      auto e = original;
      auto tt = e.table();
      tt.flip(x);
      e.hex = encode_hex(tt);
      EXPECT_FALSE(verify_entry(e).passed()) << e.id << " bit " << x;
    }
  }
}

TEST(Corpus, BentConcatenation) {
  for (const auto& e : published_corpus()) {
    if (e.n != 9) continue;
    const auto v = verify_bent_concatenation(e);
    EXPECT_TRUE(v.passed()) << e.id;
    const auto tt = e.table();
    EXPECT_EQ(nonlinearity(walsh_transform(direct_sum(tt, inner_product_bent(2)))), 996);
    EXPECT_EQ(nonlinearity(walsh_transform(direct_sum(tt, inner_product_bent(4)))), 4040);
  }
}

TEST(Corpus, Parser) {
  const auto entries = parse_corpus(R"(
# comment
[a]
n = 3
nl = 2
abs_indicator = 8
degree = 2
invariant = rsbf ; tau
source = test
hex =
17
)");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].hex, "17");
  EXPECT_EQ(entries[0].claimed.invariant, (std::vector<std::string>{"rsbf", "tau"}));
  EXPECT_TRUE(verify_entry(entries[0]).passed());
  EXPECT_THROW(parse_corpus("n = 3\n"), std::invalid_argument);
  EXPECT_THROW(parse_corpus("[a]\nn = x\n"), std::invalid_argument);
  EXPECT_THROW(parse_corpus("[a]\nlabels = sideways\n"), std::invalid_argument);
}
