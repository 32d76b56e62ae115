#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rotsym/gf2.hpp"
#include "rotsym/orbits.hpp"

namespace rotsym {

struct FingerprintEntry {
  gf2::Poly poly = 0;
  unsigned power = 0;
  unsigned rank = 0;

  friend bool operator==(const FingerprintEntry&, const FingerprintEntry&) = default;
  friend auto operator<=>(const FingerprintEntry&, const FingerprintEntry&) = default;
};

/// rank(p(A)^k) for every irreducible p in the support set that divides the
/// characteristic polynomial of A, and k = 1..n. Two matrices whose
/// characteristic polynomials factor over that support set are similar iff
/// their fingerprints are equal (elementary divisors are recoverable from the
/// rank sequences).
struct SimilarityFingerprint {
  std::vector<FingerprintEntry> entries;

  friend bool operator==(const SimilarityFingerprint&, const SimilarityFingerprint&) = default;
  friend auto operator<=>(const SimilarityFingerprint&, const SimilarityFingerprint&) = default;
};

/// Throws std::domain_error for a singular matrix.
SimilarityFingerprint fingerprint(const gf2::Matrix& m);
SimilarityFingerprint fingerprint(const CoordPerm& p);

/// One class of coordinate permutations under conjugation by invertible
/// linear maps.
struct PermClassRecord {
  CoordPerm representative;
  std::uint64_t class_size = 0;
  /// Largest orbit of <representative> on {0,1}^n; equals its order.
  std::uint64_t max_orbit = 0;
  std::uint64_t orbit_count = 0;
  std::vector<std::vector<unsigned>> cycle_types;
  SimilarityFingerprint fp;
};

inline constexpr unsigned kMaxClassifyVars = 10;

/// All n! permutations bucketed by cycle type, then buckets with equal
/// fingerprints merged. Records come out in first-encounter order of the
/// lexicographic permutation scan.
std::vector<PermClassRecord> classify(unsigned n);

struct AuditReport {
  std::uint64_t permutations = 0;
  std::uint64_t mismatches = 0;
};

/// Fingerprints every one of the n! permutations and checks each against the
/// class assigned to its cycle type.
AuditReport audit_classification(unsigned n, const std::vector<PermClassRecord>& classes);

/// classify(n) sorted by (max_orbit, orbit_count, representative).
std::vector<PermClassRecord> class_report(unsigned n);

/// Index of the class containing p, if any.
std::optional<std::size_t> find_class(const std::vector<PermClassRecord>& classes,
                                      const CoordPerm& p);

/// Best nonlinearity seen per class index.
using BestNlByClass = std::map<std::size_t, int>;

std::string render_class_table(const std::vector<PermClassRecord>& classes,
                               const BestNlByClass& best = {});
/// One JSON object per class, one per line.
std::string class_records_jsonl(const std::vector<PermClassRecord>& classes,
                                const BestNlByClass& best = {});

}  // namespace rotsym
