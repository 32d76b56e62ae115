#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotsym/search.hpp"

namespace rotsym {

/// One search result as persisted: a single JSON object per line with stable
/// field order.
struct ResultRecord {
  unsigned n = 0;
  std::string group;
  std::string hex;
  int nl = 0;
  int abs_indicator = 0;
  int degree = 0;
  std::uint64_t seed = 0;
  std::size_t run = 0;
  std::size_t iteration = 0;
  std::string cost;
  /// Only written when timing output is requested, so that repeated campaigns
  /// produce byte-identical files.
  std::optional<double> wall_time_s;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

ResultRecord make_record(const SearchResult& result, const SearchConfig& cfg, bool with_timing);

std::string to_json_line(const ResultRecord& record);
/// Throws std::invalid_argument on malformed input.
ResultRecord parse_record_line(std::string_view line);

/// Blank lines are skipped.
std::vector<ResultRecord> read_records(const std::filesystem::path& path);
void append_records(const std::filesystem::path& path, const std::vector<ResultRecord>& records);

struct RevalidationIssue {
  std::size_t index = 0;
  std::string reason;
};

/// Recomputes every record's report (and its group invariance) from the hex
/// string; an empty result means no drift.
std::vector<RevalidationIssue> revalidate(const std::vector<ResultRecord>& records);

}  // namespace rotsym
