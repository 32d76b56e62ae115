#include "rotsym/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "rotsym/folding.hpp"
#include "rotsym/orbits.hpp"

namespace rotsym {

namespace detail {
extern const char* const kPublishedCorpusText;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int to_int(const std::string& v, const std::string& key) {
  int out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) {
    throw std::invalid_argument("corpus: bad integer for '" + key + "': '" + v + "'");
  }
  return out;
}

std::vector<std::string> split_groups(const std::string& v) {
  std::vector<std::string> out;
  std::string_view rest = v;
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    auto item = trim(rest.substr(0, semi));
    if (!item.empty()) out.push_back(std::move(item));
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  return out;
}

void finish(std::vector<CorpusEntry>& out, std::optional<CorpusEntry>& cur) {
  if (!cur) return;
  if (cur->n == 0 || cur->hex.empty()) {
    throw std::invalid_argument("corpus entry '" + cur->id + "' lacks n or hex");
  }
  out.push_back(std::move(*cur));
  cur.reset();
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::optional<CorpusEntry> cur;
  bool in_hex = false;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    const std::string line = trim(raw);
    if (line.empty()) {
      in_hex = false;
      continue;
    }
    if (line.front() == '#') continue;
    if (line.front() == '[') {
      finish(out, cur);
      in_hex = false;
      if (line.back() != ']') throw std::invalid_argument("corpus: bad header '" + line + "'");
      cur.emplace();
      cur->id = line.substr(1, line.size() - 2);
      continue;
    }
    if (!cur) throw std::invalid_argument("corpus: data before first entry header");
    const auto eq = line.find('=');
    if (in_hex && eq == std::string::npos) {
      cur->hex += line;
      continue;
    }
    if (eq == std::string::npos) throw std::invalid_argument("corpus: expected key = value");
    in_hex = false;
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "n") cur->n = static_cast<unsigned>(to_int(value, key));
    else if (key == "nl") cur->claimed.nonlinearity = to_int(value, key);
    else if (key == "abs_indicator") cur->claimed.absolute_indicator = to_int(value, key);
    else if (key == "degree") cur->claimed.degree = to_int(value, key);
    else if (key == "walsh_zeros") cur->claimed.walsh_zero_count = static_cast<std::size_t>(to_int(value, key));
    else if (key == "invariant") cur->claimed.invariant = split_groups(value);
    else if (key == "not_invariant") cur->claimed.not_invariant = split_groups(value);
    else if (key == "source") cur->source = value;
    else if (key == "labels") {
      if (value != "reversed" && value != "natural") {
        throw std::invalid_argument("corpus: labels must be 'natural' or 'reversed'");
      }
      cur->reversed_labels = value == "reversed";
    } else if (key == "hex") {
      cur->hex = value;
      in_hex = true;
    } else {
      throw std::invalid_argument("corpus: unknown key '" + key + "'");
    }
  }
  finish(out, cur);
  return out;
}

const std::vector<CorpusEntry>& published_corpus() {
  static const std::vector<CorpusEntry> corpus = parse_corpus(detail::kPublishedCorpusText);
  return corpus;
}

const CorpusEntry& corpus_entry(std::string_view id) {
  const auto& c = published_corpus();
  auto it = std::find_if(c.begin(), c.end(), [&](const CorpusEntry& e) { return e.id == id; });
  if (it == c.end()) throw std::out_of_range("no corpus entry '" + std::string(id) + "'");
  return *it;
}

GroupSpec CorpusEntry::group(const std::string& description) const {
  auto g = parse_group(description, n);
  return reversed_labels ? conjugate(g, tau(n)) : g;
}

bool EntryVerification::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

namespace {

CheckOutcome compare(std::string what, long long expected, long long actual) {
  return {std::move(what), expected == actual,
          "expected " + std::to_string(expected) + ", got " + std::to_string(actual)};
}

}  // namespace

EntryVerification verify_entry(const CorpusEntry& entry) {
  EntryVerification v{entry.id, {}};
  std::optional<TruthTable> tt;
  try {
    tt = entry.table();
  } catch (const std::exception& e) {
    v.checks.push_back({"decode", false, e.what()});
    return v;
  }
  const auto r = analyze(*tt);
  v.checks.push_back(compare("nl", entry.claimed.nonlinearity, r.nonlinearity));
  v.checks.push_back(compare("abs_indicator", entry.claimed.absolute_indicator, r.absolute_indicator));
  v.checks.push_back(compare("degree", entry.claimed.degree, r.degree));
  if (entry.claimed.walsh_zero_count) {
    v.checks.push_back(compare("walsh_zeros", static_cast<long long>(*entry.claimed.walsh_zero_count),
                               static_cast<long long>(r.walsh_zero_count)));
  }
  for (const auto& g : entry.claimed.invariant) {
    const auto part = orbit_partition(entry.group(g));
    const auto bad = find_fold_violation(*tt, part);
    v.checks.push_back({"invariant under " + g, !bad.has_value(),
                        bad ? "not constant on orbit " + std::to_string(*bad)
                            : std::to_string(part.orbit_count()) + " orbits"});
  }
  for (const auto& g : entry.claimed.not_invariant) {
    const auto part = orbit_partition(entry.group(g));
    const bool inv = is_invariant(*tt, part);
    v.checks.push_back({"not invariant under " + g, !inv, inv ? "unexpectedly invariant" : "ok"});
  }
  return v;
}

EntryVerification verify_bent_concatenation(const CorpusEntry& entry) {
  EntryVerification v{entry.id + "+bent", {}};
  const auto tt = entry.table();
  const auto h11 = direct_sum(tt, inner_product_bent(2));
  const auto h13 = direct_sum(tt, inner_product_bent(4));
  // max|W| multiplies by 2^{m/2} under a direct sum with an m-variable bent function
  auto expected = [&](unsigned m) {
    const long long gap = (1LL << (entry.n - 1)) - entry.claimed.nonlinearity;
    return (1LL << (entry.n + m - 1)) - (1LL << (m / 2)) * gap;
  };
  v.checks.push_back(compare("nl with 2-variable bent", expected(2), nonlinearity(walsh_transform(h11))));
  v.checks.push_back(compare("nl with 4-variable bent", expected(4), nonlinearity(walsh_transform(h13))));
  return v;
}

}  // namespace rotsym
