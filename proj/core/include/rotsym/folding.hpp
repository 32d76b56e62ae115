#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rotsym/boolfn.hpp"
#include "rotsym/orbits.hpp"

namespace rotsym {

/// A group-invariant function stored as one output bit per orbit,
/// (f(L_0), ..., f(L_{|G|-1})) in representative order.
struct FoldedFunction {
  std::shared_ptr<const OrbitPartition> partition;
  std::vector<std::uint8_t> values;
};

/// Thrown by fold() when the table is not constant on some orbit.
class FoldError : public std::runtime_error {
public:
  FoldError(std::size_t orbit, std::uint32_t representative);
  std::size_t orbit() const noexcept { return orbit_; }
  std::uint32_t representative() const noexcept { return rep_; }

private:
  std::size_t orbit_;
  std::uint32_t rep_;
};

/// First orbit on which `tt` is not constant, if any.
std::optional<std::size_t> find_fold_violation(const TruthTable& tt, const OrbitPartition& p);
bool is_invariant(const TruthTable& tt, const OrbitPartition& p);

FoldedFunction fold(const TruthTable& tt, std::shared_ptr<const OrbitPartition> p);
TruthTable unfold(const FoldedFunction& ff);

/// M[i][j] = sum over x in orbit i of (-1)^<x, L_j>, stored row-major.
class FoldMatrix {
public:
  /// Largest orbit count for which a matrix is built.
  static constexpr std::size_t kMaxOrbits = 4096;

  explicit FoldMatrix(std::shared_ptr<const OrbitPartition> p);

  const std::shared_ptr<const OrbitPartition>& partition() const noexcept { return partition_; }
  std::size_t dim() const noexcept { return dim_; }
  std::int32_t at(std::size_t i, std::size_t j) const noexcept { return entries_[i * dim_ + j]; }
  std::span<const std::int32_t> row(std::size_t i) const noexcept {
    return {entries_.data() + i * dim_, dim_};
  }

private:
  std::shared_ptr<const OrbitPartition> partition_;
  std::size_t dim_;
  std::vector<std::int32_t> entries_;
};

FoldMatrix fold_matrix(std::shared_ptr<const OrbitPartition> p);

/// W_f(L_j) = sum_i (-1)^{f(L_i)} M[i][j]. Throws std::invalid_argument when
/// `ff` and `m` were built over different partitions.
std::vector<std::int32_t> folded_walsh(const FoldedFunction& ff, const FoldMatrix& m);

/// Updates `spectrum` in place for flipping f(L_i), where `sign` is
/// (-1)^{f(L_i)} before the flip: each W(L_j) gains -2 * sign * M[i][j].
void folded_walsh_delta(std::span<std::int32_t> spectrum, const FoldMatrix& m, std::size_t orbit,
                        int sign);

}  // namespace rotsym
