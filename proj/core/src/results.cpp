#include "rotsym/results.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "rotsym/folding.hpp"

namespace rotsym {

ResultRecord make_record(const SearchResult& result, const SearchConfig& cfg, bool with_timing) {
  ResultRecord r;
  r.n = cfg.group.n;
  r.group = cfg.group.name;
  r.hex = encode_hex(result.best_function);
  r.nl = result.report.nonlinearity;
  r.abs_indicator = result.report.absolute_indicator;
  r.degree = result.report.degree;
  r.seed = cfg.rng_seed;
  r.run = result.run_index;
  r.iteration = result.iteration_found;
  r.cost = to_string(cfg.cost);
  if (with_timing) r.wall_time_s = result.elapsed_seconds;
  return r;
}

std::string to_json_line(const ResultRecord& record) {
  nlohmann::ordered_json j;
  j["n"] = record.n;
  j["group"] = record.group;
  j["hex"] = record.hex;
  j["nl"] = record.nl;
  j["abs_indicator"] = record.abs_indicator;
  j["degree"] = record.degree;
  j["seed"] = record.seed;
  j["run"] = record.run;
  j["iteration"] = record.iteration;
  j["cost"] = record.cost;
  if (record.wall_time_s) j["wall_time_s"] = *record.wall_time_s;
  return j.dump();
}

ResultRecord parse_record_line(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
    ResultRecord r;
    r.n = j.at("n").get<unsigned>();
    r.group = j.at("group").get<std::string>();
    r.hex = j.at("hex").get<std::string>();
    r.nl = j.at("nl").get<int>();
    r.abs_indicator = j.at("abs_indicator").get<int>();
    r.degree = j.at("degree").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.run = j.at("run").get<std::size_t>();
    r.iteration = j.at("iteration").get<std::size_t>();
    r.cost = j.value("cost", std::string{});
    if (j.contains("wall_time_s")) r.wall_time_s = j["wall_time_s"].get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad result record: ") + e.what());
  }
}

std::vector<ResultRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open results file " + path.string());
  std::vector<ResultRecord> out;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_record_line(line));
  }
  return out;
}

void append_records(const std::filesystem::path& path, const std::vector<ResultRecord>& records) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open results file " + path.string());
  for (const auto& r : records) out << to_json_line(r) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<RevalidationIssue> revalidate(const std::vector<ResultRecord>& records) {
  std::vector<RevalidationIssue> issues;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    try {
      const auto tt = decode_hex(rec.hex, rec.n);
      const auto rep = analyze(tt);
      std::string drift;
      if (rep.nonlinearity != rec.nl) drift += " nl " + std::to_string(rec.nl) + "->" + std::to_string(rep.nonlinearity);
      if (rep.absolute_indicator != rec.abs_indicator) {
        drift += " abs_indicator " + std::to_string(rec.abs_indicator) + "->" +
                 std::to_string(rep.absolute_indicator);
      }
      if (rep.degree != rec.degree) drift += " degree " + std::to_string(rec.degree) + "->" + std::to_string(rep.degree);
      if (!is_invariant(tt, orbit_partition(parse_group(rec.group, rec.n)))) {
        drift += " not invariant under " + rec.group;
      }
      if (!drift.empty()) issues.push_back({i, "drift:" + drift});
    } catch (const std::exception& e) {
      issues.push_back({i, e.what()});
    }
  }
  return issues;
}

}  // namespace rotsym
