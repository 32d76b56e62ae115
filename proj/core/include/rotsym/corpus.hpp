#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotsym/boolfn.hpp"
#include "rotsym/orbits.hpp"

namespace rotsym {

struct CorpusClaims {
  int nonlinearity = 0;
  int absolute_indicator = 0;
  int degree = 0;
  std::optional<std::size_t> walsh_zero_count;
  /// Group descriptions (parse_group syntax) the function must be invariant under.
  std::vector<std::string> invariant;
  /// Groups the function must NOT be invariant under.
  std::vector<std::string> not_invariant;
};

struct CorpusEntry {
  std::string id;
  unsigned n = 0;
  std::string hex;
  CorpusClaims claimed;
  std::string source;
  /// The published permutation tuples number the variables from the most
  /// significant index bit; such tuples are conjugated by the reflection
  /// before use.
  bool reversed_labels = false;

  TruthTable table() const { return decode_hex(hex, n); }
  /// A claimed group description resolved to this project's variable labels.
  GroupSpec group(const std::string& description) const;
};

/// Parses the corpus text format (see data/published_corpus.txt).
std::vector<CorpusEntry> parse_corpus(std::string_view text);

/// The embedded corpus of published truth tables.
const std::vector<CorpusEntry>& published_corpus();
const CorpusEntry& corpus_entry(std::string_view id);

struct CheckOutcome {
  std::string what;
  bool passed = false;
  std::string detail;
};

struct EntryVerification {
  std::string id;
  std::vector<CheckOutcome> checks;

  bool passed() const noexcept;
};

/// Re-derives every claim of an entry from its hex string.
EntryVerification verify_entry(const CorpusEntry& entry);

/// Direct sums of an entry with the 2- and 4-variable inner-product bent
/// functions; nl must be 2^{n+m-1} - 2^{m/2} (2^{n-1} - nl(f)), which is 996
/// and 4040 for a 9-variable nl-242 function.
EntryVerification verify_bent_concatenation(const CorpusEntry& entry);

}  // namespace rotsym
