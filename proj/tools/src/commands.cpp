#include "rotsym_cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rotsym/boolfn.hpp"
#include "rotsym/corpus.hpp"
#include "rotsym/folding.hpp"
#include "rotsym/orbits.hpp"
#include "rotsym/permclass.hpp"
#include "rotsym/results.hpp"
#include "rotsym/search.hpp"

namespace rotsym::cli {

namespace {

/// Thrown by command bodies for bad input; maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string report_line(const FunctionReport& r) {
  std::ostringstream os;
  os << "nl=" << r.nonlinearity << " Δ=" << r.absolute_indicator << " deg=" << r.degree
     << " balanced=" << (r.balanced ? "yes" : "no") << " walsh_zeros=" << r.walsh_zero_count;
  return os.str();
}

template <class Seq>
std::string join(const Seq& values) {
  std::string s;
  for (const auto& v : values) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

TruthTable decode_input(const std::string& hex, unsigned n) {
  return n ? decode_hex(hex, n) : decode_hex_auto(hex);
}

// --- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
  std::string hex;
  std::string file;
  unsigned n = 0;
  bool spectra = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  if (a.hex.empty() == a.file.empty()) throw UsageError("analyze: give exactly one of HEX or --file");
  const std::string text = a.file.empty() ? a.hex : read_file(a.file);
  const auto tt = decode_input(text, a.n);
  const auto r = analyze(tt);
  out << report_line(r) << '\n';
  out << "n=" << r.n << " weight=" << r.weight << '\n';
  if (a.spectra) {
    out << "walsh: " << join(walsh_transform(tt).values) << '\n';
    out << "autocorrelation: " << join(autocorrelation(tt).values) << '\n';
  }
  return kExitOk;
}

// --- verify-corpus ---------------------------------------------------------

int print_verification(const EntryVerification& v, std::ostream& out) {
  out << (v.passed() ? "PASS " : "FAIL ") << v.id << '\n';
  for (const auto& c : v.checks) {
    out << "  " << (c.passed ? "ok   " : "FAIL ") << c.what << ": " << c.detail << '\n';
  }
  return v.passed() ? 1 : 0;
}

int cmd_verify_corpus(const std::string& corpus_file, std::ostream& out) {
  std::vector<CorpusEntry> parsed;
  if (!corpus_file.empty()) {
    try {
      parsed = parse_corpus(read_file(corpus_file));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const auto& corpus = corpus_file.empty() ? published_corpus() : parsed;

  int passed = 0;
  int concat_total = 0;
  int concat_passed = 0;
  for (const auto& e : corpus) passed += print_verification(verify_entry(e), out);
  for (const auto& e : corpus) {
    if (e.n != 9) continue;
    ++concat_total;
    try {
      concat_passed += print_verification(verify_bent_concatenation(e), out);
    } catch (const std::invalid_argument& ex) {
      out << "FAIL " << e.id << "+bent\n  FAIL decode: " << ex.what() << '\n';
    }
  }
  out << passed << "/" << corpus.size() << " entries pass, " << concat_passed << "/"
      << concat_total << " concatenations pass\n";
  const bool ok = passed == static_cast<int>(corpus.size()) && concat_passed == concat_total;
  return ok ? kExitOk : kExitVerifyFailed;
}

// --- counts ----------------------------------------------------------------

int cmd_counts(unsigned n, std::vector<unsigned> ks, std::ostream& out) {
  if (n < 1 || n > kMaxVars) throw UsageError("counts: n must be in 1.." + std::to_string(kMaxVars));
  if (ks.empty()) {
    for (unsigned k = 2; k < n; ++k) {
      if (n % k == 0) ks.push_back(k);
    }
  }
  for (unsigned k : ks) {
    if (k == 0 || n % k != 0) {
      throw UsageError("counts: k = " + std::to_string(k) + " does not divide n = " +
                       std::to_string(n));
    }
  }
  ks.insert(ks.begin(), 1u);
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  bool ok = true;
  auto row = [&](const std::string& label, std::uint64_t closed, const GroupSpec& g) {
    const auto enumerated = orbit_partition(g).orbit_count();
    const auto burnside = burnside_count(g);
    const bool match = closed == enumerated && closed == burnside;
    ok = ok && match;
    out << std::left << std::setw(10) << label << std::right << " closed=" << std::setw(6)
        << closed << " enumerated=" << std::setw(6) << enumerated << " burnside=" << std::setw(6)
        << burnside << "  " << (match ? "ok" : "MISMATCH") << '\n';
  };
  const std::string ns = std::to_string(n);
  for (unsigned k : ks) {
    const std::string sub = k == 1 ? ns : ns + "," + std::to_string(k);
    row("g_" + sub, count_k_rsbf(n, k), rsbf_group(n, k));
    row("d_" + sub, count_k_dsbf(n, k), dsbf_group(n, k));
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

// --- classify --------------------------------------------------------------

struct ClassifyArgs {
  unsigned n = 9;
  std::string results;
  bool audit = false;
  bool json = false;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  if (a.n < 1 || a.n > kMaxClassifyVars) {
    throw UsageError("classify: n must be in 1.." + std::to_string(kMaxClassifyVars));
  }
  const auto classes = class_report(a.n);

  BestNlByClass best;
  std::size_t skipped = 0;
  if (!a.results.empty()) {
    for (const auto& rec : read_records(a.results)) {
      if (rec.n != a.n) {
        ++skipped;
        continue;
      }
      const auto g = parse_group(rec.group, rec.n);
      const auto c = g.generators.size() == 1 ? find_class(classes, g.generators.front())
                                              : std::nullopt;
      if (!c) {
        ++skipped;
        continue;
      }
      auto [it, fresh] = best.emplace(*c, rec.nl);
      if (!fresh) it->second = std::max(it->second, rec.nl);
    }
  }

  out << (a.json ? class_records_jsonl(classes, best) : render_class_table(classes, best));
  if (skipped && !a.json) {
    out << skipped << " records not generated by a single permutation were not merged\n";
  }
  if (a.audit) {
    const auto rep = audit_classification(a.n, classes);
    out << "audit: " << rep.permutations << " permutations fingerprinted, " << rep.mismatches
        << " mismatches\n";
    if (rep.mismatches) return kExitVerifyFailed;
  }
  return kExitOk;
}

// --- search ----------------------------------------------------------------

struct SearchArgs {
  unsigned n = 0;
  std::string group;
  std::size_t runs = 1;
  std::uint64_t seed = 1;
  std::size_t iterations = 20'000;
  std::string cost = "flatness";
  int target_nl = 0;
  std::string out;
  std::string trace;
  std::size_t tabu = 10;
  double window = 0;
  unsigned threads = 0;
  std::string init;
  std::size_t perturb = 0;
  bool timing = false;
};

/// Keys accepted in a search config file; each mirrors the flag of the same name.
const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "n",  "group", "runs",   "seed",    "iterations", "cost",    "target-nl", "out",
      "trace", "tabu", "window", "threads", "init",       "perturb", "timing"};
  return keys;
}

/// Flag tokens for every key=value line of a flat config file.
std::vector<std::string> config_tokens(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> tokens;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (key == "timing") {
      if (value == "true" || value == "1") tokens.push_back("--timing");
      else if (value != "false" && value != "0") throw UsageError("timing must be true or false");
      continue;
    }
    tokens.push_back("--" + key + "=" + value);
  }
  return tokens;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
  if (a.group.empty()) throw UsageError("search: --group is required");
  if (a.n == 0) throw UsageError("search: --n is required");
  SearchConfig cfg;
  try {
    cfg.group = parse_group(a.group, a.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto kind = parse_cost(a.cost);
  if (!kind) throw UsageError("search: unknown cost '" + a.cost + "'");
  cfg.cost = *kind;
  cfg.runs = a.runs;
  cfg.max_iterations = a.iterations;
  cfg.rng_seed = a.seed;
  cfg.tabu_tenure = a.tabu;
  cfg.deviation_window = a.window;
  cfg.threads = a.threads;
  cfg.perturb_flips = a.perturb;
  cfg.record_trace = !a.trace.empty();
  if (a.target_nl > 0) cfg.target_nl = a.target_nl;
  if (!a.init.empty()) cfg.initial_function = decode_hex(a.init, a.n);

  const auto results = run_search(cfg);

  std::vector<ResultRecord> records;
  for (const auto& r : results) records.push_back(make_record(r, cfg, a.timing));
  if (!a.out.empty()) append_records(a.out, records);
  if (!a.trace.empty()) {
    std::ofstream t(a.trace, std::ios::app);
    if (!t) throw UsageError("cannot open '" + a.trace + "'");
    for (const auto& r : results) {
      nlohmann::ordered_json j;
      j["run"] = r.run_index;
      j["best_nl"] = r.trace;
      t << j.dump() << '\n';
    }
  }

  const auto orbits = orbit_partition(cfg.group).orbit_count();
  out << "group=" << cfg.group.name << " n=" << a.n << " orbits=" << orbits
      << " runs=" << cfg.runs << " iterations=" << cfg.max_iterations
      << " cost=" << to_string(cfg.cost) << " seed=" << cfg.rng_seed << '\n';
  std::map<int, std::size_t, std::greater<>> per_nl;
  for (const auto& r : results) ++per_nl[r.report.nonlinearity];
  out << "nl     runs\n";
  for (const auto& [nl, count] : per_nl) {
    out << std::left << std::setw(6) << nl << ' ' << count << '\n';
  }
  const auto& best = results.front();
  out << "best: " << report_line(best.report) << " run=" << best.run_index
      << " iteration=" << best.iteration_found << '\n'
      << encode_hex(best.best_function) << '\n';
  return kExitOk;
}

// --- concat / revalidate ---------------------------------------------------

int cmd_concat(const std::string& hex, unsigned n, unsigned bent, std::ostream& out) {
  if (bent != 2 && bent != 4) throw UsageError("concat: --bent must be 2 or 4");
  const auto f = decode_hex(hex, n);
  if (n + bent > kMaxVars) throw UsageError("concat: result would exceed " + std::to_string(kMaxVars) + " variables");
  const auto h = direct_sum(f, inner_product_bent(bent));
  out << encode_hex(h) << '\n' << report_line(analyze(h)) << '\n';
  return kExitOk;
}

int cmd_revalidate(const std::string& path, std::ostream& out) {
  if (!std::filesystem::exists(path)) throw UsageError("cannot open '" + path + "'");
  const auto records = read_records(path);
  const auto issues = revalidate(records);
  for (const auto& i : issues) out << "record " << i.index << ": " << i.reason << '\n';
  out << records.size() << " records, " << issues.size() << " with drift\n";
  return issues.empty() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analysis and search of permutation-invariant Boolean functions", "rotsym"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Nonlinearity, absolute indicator and degree");
  analyze_cmd->add_option("hex", an.hex, "Hex truth table");
  analyze_cmd->add_option("--file", an.file, "Read the hex truth table from a file");
  analyze_cmd->add_option("--n", an.n, "Variable count (inferred from the length by default)");
  analyze_cmd->add_flag("--spectra", an.spectra, "Also print Walsh and autocorrelation spectra");

  std::string corpus_file;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Re-derive every claim of the embedded corpus");
  verify_cmd->add_option("--corpus", corpus_file, "Check this corpus file instead");

  unsigned counts_n = 0;
  std::vector<unsigned> counts_k;
  auto* counts_cmd = app.add_subcommand("counts", "Closed-form versus enumerated orbit counts");
  counts_cmd->add_option("--n", counts_n, "Variable count")->required();
  counts_cmd->add_option("--k", counts_k, "Shift step(s); all proper divisors by default");

  ClassifyArgs cl;
  auto* classify_cmd = app.add_subcommand("classify", "Classes of coordinate permutations");
  classify_cmd->add_option("--n", cl.n, "Variable count")->capture_default_str();
  classify_cmd->add_option("--results", cl.results, "Merge best nl per class from a results file");
  classify_cmd->add_flag("--audit", cl.audit, "Fingerprint all n! permutations again");
  classify_cmd->add_flag("--json", cl.json, "One JSON record per class");

  SearchArgs sa;
  std::string config_path;
  auto* search_cmd = app.add_subcommand("search", "Heuristic search over an invariance class");
  search_cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  search_cmd->add_option("--config", config_path, "Flat key=value file mirroring the flags");
  search_cmd->add_option("--n", sa.n, "Variable count");
  search_cmd->add_option("--group", sa.group, "Group description, e.g. k-dsbf:3");
  search_cmd->add_option("--runs", sa.runs, "Independent runs")->capture_default_str();
  search_cmd->add_option("--seed", sa.seed, "Campaign seed")->capture_default_str();
  search_cmd->add_option("--iterations", sa.iterations, "Steps per run")->capture_default_str();
  search_cmd->add_option("--cost", sa.cost, "flatness or peak")->capture_default_str();
  search_cmd->add_option("--target-nl", sa.target_nl, "Stop a run once this nl is reached");
  search_cmd->add_option("--out", sa.out, "Append one JSON record per run to this file");
  search_cmd->add_option("--trace", sa.trace, "Append per-run best-nl traces to this file");
  search_cmd->add_option("--tabu", sa.tabu, "Steps before a flipped orbit may flip again")
      ->capture_default_str();
  search_cmd->add_option("--window", sa.window, "Cost window in which nl decides the move");
  search_cmd->add_option("--threads", sa.threads, "Worker threads (0 = all cores)");
  search_cmd->add_option("--init", sa.init, "Start every run from this hex truth table");
  search_cmd->add_option("--perturb", sa.perturb, "Random orbit flips applied to --init");
  search_cmd->add_flag("--timing", sa.timing, "Add wall_time_s to the records");

  std::string concat_hex;
  unsigned concat_n = 9;
  unsigned concat_bent = 2;
  auto* concat_cmd = app.add_subcommand("concat", "Direct sum with an inner-product bent function");
  concat_cmd->add_option("hex", concat_hex, "Hex truth table")->required();
  concat_cmd->add_option("--n", concat_n, "Variable count of the input")->capture_default_str();
  concat_cmd->add_option("--bent", concat_bent, "Bent function size, 2 or 4")->capture_default_str();

  std::string revalidate_path;
  auto* revalidate_cmd = app.add_subcommand("revalidate", "Recompute every stored result record");
  revalidate_cmd->add_option("file", revalidate_path, "Results file")->required();

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);

  try {
    // Config values go in front of the command-line flags, which then win.
    if (!args.empty() && args.back() == "search") {
      for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
        else if (args[i] == "--config" && i > 0) path = args[i - 1];
        if (path.empty()) continue;
        auto tokens = config_tokens(path);
        args.insert(args.end() - 1, tokens.rbegin(), tokens.rend());
        break;
      }
    }
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(an, out);
    if (*verify_cmd) return cmd_verify_corpus(corpus_file, out);
    if (*counts_cmd) return cmd_counts(counts_n, counts_k, out);
    if (*classify_cmd) return cmd_classify(cl, out);
    if (*search_cmd) return cmd_search(sa, out);
    if (*concat_cmd) return cmd_concat(concat_hex, concat_n, concat_bent, out);
    if (*revalidate_cmd) return cmd_revalidate(revalidate_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace rotsym::cli
