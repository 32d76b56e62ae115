#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "rotsym/corpus.hpp"
#include "rotsym/results.hpp"

using namespace rotsym;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("rotsym_test_" + name);
  std::filesystem::remove(p);
  return p;
}

ResultRecord corpus_record() {
  const auto& e = corpus_entry("dsbf3-d40");
  ResultRecord r;
  r.n = 9;
  r.group = "k-dsbf:3";
  r.hex = e.hex;
  r.nl = 242;
  r.abs_indicator = 40;
  r.degree = 7;
  r.seed = 5;
  r.run = 3;
  r.iteration = 17;
  r.cost = "flatness";
  return r;
}

}  // namespace

TEST(Records, JsonLineIsStable) {
  const auto r = corpus_record();
  const auto line = to_json_line(r);
  EXPECT_EQ(line.rfind("{\"n\":9,\"group\":\"k-dsbf:3\",\"hex\":\"", 0), 0u);
  EXPECT_NE(line.find("\"seed\":5,\"run\":3,\"iteration\":17,\"cost\":\"flatness\"}"),
            std::string::npos);
  EXPECT_EQ(line.find("wall_time_s"), std::string::npos);
  EXPECT_EQ(parse_record_line(line), r);
  auto timed = r;
  timed.wall_time_s = 0.25;
  EXPECT_EQ(parse_record_line(to_json_line(timed)), timed);
  EXPECT_THROW(parse_record_line("{\"n\":9}"), std::invalid_argument);
  EXPECT_THROW(parse_record_line("not json"), std::invalid_argument);
}

TEST(Records, AppendAndRead) {
  const auto path = temp_file("append.jsonl");
  const auto r = corpus_record();
  append_records(path, {r});
  append_records(path, {r, r});
  const auto back = read_records(path);
  ASSERT_EQ(back.size(), 3u);
  EXPECT_EQ(back[2], r);
  EXPECT_THROW(read_records(temp_file("missing.jsonl")), std::runtime_error);
  std::filesystem::remove(path);
}

TEST(Records, RevalidationFindsDrift) {
  auto good = corpus_record();
  EXPECT_TRUE(revalidate({good}).empty());
  auto wrong_nl = good;
  wrong_nl.nl = 241;
  auto wrong_group = good;
  wrong_group.group = "rsbf";
  auto wrong_deg = good;
  wrong_deg.degree = 6;
  const auto issues = revalidate({good, wrong_nl, wrong_group, wrong_deg});
  ASSERT_EQ(issues.size(), 3u);
  EXPECT_EQ(issues[0].index, 1u);
  EXPECT_EQ(issues[1].index, 2u);
  EXPECT_EQ(issues[2].index, 3u);
}

TEST(Records, FromSearchResult) {
  SearchConfig cfg;
  cfg.group = dsbf_group(9, 3);
  cfg.max_iterations = 50;
  cfg.rng_seed = 12;
  const auto results = run_search(cfg);
  const auto rec = make_record(results.front(), cfg, false);
  EXPECT_EQ(rec.group, "k-dsbf:3");
  EXPECT_EQ(rec.seed, 12u);
  EXPECT_FALSE(rec.wall_time_s.has_value());
  EXPECT_TRUE(make_record(results.front(), cfg, true).wall_time_s.has_value());
  EXPECT_TRUE(revalidate({rec}).empty());
}
