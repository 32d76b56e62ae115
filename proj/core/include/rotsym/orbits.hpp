#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rotsym/boolfn.hpp"

namespace rotsym {

/// A permutation of input coordinates, stored positionally: output position j
/// carries input variable map[j]. The tuple "(x_0, x_2, x_1, ...)" is stored
/// as map = {0, 2, 1, ...}.
class CoordPerm {
public:
  static CoordPerm identity(unsigned n);
  /// Throws std::invalid_argument unless `map` is a permutation of 0..n-1.
  explicit CoordPerm(std::vector<std::uint8_t> map);

  unsigned num_vars() const noexcept { return static_cast<unsigned>(map_.size()); }
  std::span<const std::uint8_t> map() const noexcept { return map_; }
  std::uint8_t operator[](unsigned j) const noexcept { return map_[j]; }

  /// Permutes the bits of x: bit j of the result is bit map[j] of x.
  std::size_t apply(std::size_t x) const noexcept;

  /// (p * q).apply(x) == p.apply(q.apply(x)).
  friend CoordPerm operator*(const CoordPerm& p, const CoordPerm& q);
  CoordPerm inverse() const;

  bool is_identity() const noexcept;
  /// Cycle lengths, sorted descending.
  std::vector<unsigned> cycle_type() const;
  std::size_t cycle_count() const noexcept;
  /// Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const;

  /// "(0,2,1,...)".
  std::string to_string() const;

  friend bool operator==(const CoordPerm&, const CoordPerm&) = default;
  friend auto operator<=>(const CoordPerm&, const CoordPerm&) = default;

private:
  std::vector<std::uint8_t> map_;
};

/// Left i-cyclic shift: (x_0, ..., x_{n-1}) -> (x_{i mod n}, ..., x_{(n-1+i) mod n}).
CoordPerm rho(unsigned n, unsigned i);
/// Reflection: (x_0, ..., x_{n-1}) -> (x_{n-1}, ..., x_0).
CoordPerm tau(unsigned n);

struct GroupSpec {
  unsigned n = 0;
  std::vector<CoordPerm> generators;
  std::string name;
};

/// Parses a group description on n variables. Terms are joined with '+':
///   rsbf, dsbf, k-rsbf:K, k-dsbf:K, tau, rho:I, identity,
///   "(a,b,...)" or "perm:(a,b,...)" for an explicit permutation tuple.
/// "k-dsbf:n" is the reflection alone. Throws std::invalid_argument.
GroupSpec parse_group(std::string_view text, unsigned n);

/// Generators replaced by by^{-1} * g * by. Conjugating by tau(n) renames
/// variable j to n-1-j.
GroupSpec conjugate(const GroupSpec& g, const CoordPerm& by);

GroupSpec rsbf_group(unsigned n, unsigned k = 1);
GroupSpec dsbf_group(unsigned n, unsigned k = 1);
GroupSpec trivial_group(unsigned n);

/// Partition of {0,1}^n into orbits of the group generated by a GroupSpec.
struct OrbitPartition {
  unsigned n = 0;
  /// Lexicographically first (smallest index) element of each orbit; ascending.
  std::vector<std::uint32_t> reps;
  /// Orbit ordinal of each of the 2^n inputs.
  std::vector<std::uint32_t> orbit_of;
  std::vector<std::uint32_t> sizes;

  std::size_t orbit_count() const noexcept { return reps.size(); }
  std::uint32_t max_orbit_size() const noexcept;
};

/// Breadth-first closure from each unvisited index under the generators; the
/// group itself is never materialized.
OrbitPartition orbit_partition(const GroupSpec& g);
std::shared_ptr<const OrbitPartition> shared_orbit_partition(const GroupSpec& g);

/// Every element of the generated group. Throws std::length_error past `cap`.
std::vector<CoordPerm> group_closure(const GroupSpec& g, std::size_t cap = 1'000'000);

/// Orbit count as the average of 2^{#cycles} over the materialized group.
std::uint64_t burnside_count(const GroupSpec& g, std::size_t cap = 1'000'000);

std::uint64_t euler_phi(std::uint64_t t);

/// Closed-form number of k-RSBF orbits; throws if k does not divide n.
std::uint64_t count_k_rsbf(unsigned n, unsigned k);
/// Closed-form number of k-DSBF orbits; throws if k does not divide n.
std::uint64_t count_k_dsbf(unsigned n, unsigned k);

}  // namespace rotsym
