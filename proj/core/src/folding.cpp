#include "rotsym/folding.hpp"

#include <bit>
#include <string>

namespace rotsym {

FoldError::FoldError(std::size_t orbit, std::uint32_t representative)
    : std::runtime_error("function is not constant on orbit " + std::to_string(orbit) +
                         " (representative " + std::to_string(representative) + ")"),
      orbit_(orbit),
      rep_(representative) {}

std::optional<std::size_t> find_fold_violation(const TruthTable& tt, const OrbitPartition& p) {
  if (tt.num_vars() != p.n) throw std::invalid_argument("fold: variable count mismatch");
  std::optional<std::size_t> first;
  for (std::size_t x = 0; x < tt.size(); ++x) {
    const auto orbit = p.orbit_of[x];
    if (tt[x] != tt[p.reps[orbit]] && (!first || orbit < *first)) first = orbit;
  }
  return first;
}

bool is_invariant(const TruthTable& tt, const OrbitPartition& p) {
  return !find_fold_violation(tt, p).has_value();
}

FoldedFunction fold(const TruthTable& tt, std::shared_ptr<const OrbitPartition> p) {
  if (!p) throw std::invalid_argument("fold: null partition");
  if (auto bad = find_fold_violation(tt, *p)) throw FoldError(*bad, p->reps[*bad]);
  FoldedFunction ff{p, std::vector<std::uint8_t>(p->orbit_count())};
  for (std::size_t i = 0; i < ff.values.size(); ++i) ff.values[i] = tt[p->reps[i]] ? 1 : 0;
  return ff;
}

TruthTable unfold(const FoldedFunction& ff) {
  const auto& p = *ff.partition;
  if (ff.values.size() != p.orbit_count()) {
    throw std::invalid_argument("unfold: folded vector length does not match partition");
  }
  std::vector<std::uint8_t> bits(p.orbit_of.size());
  for (std::size_t x = 0; x < bits.size(); ++x) bits[x] = ff.values[p.orbit_of[x]];
  return TruthTable(p.n, std::move(bits));
}

FoldMatrix::FoldMatrix(std::shared_ptr<const OrbitPartition> p)
    : partition_(std::move(p)), dim_(partition_ ? partition_->orbit_count() : 0) {
  if (!partition_) throw std::invalid_argument("fold matrix: null partition");
  if (dim_ > kMaxOrbits) {
    throw std::length_error("fold matrix: " + std::to_string(dim_) + " orbits exceeds cap of " +
                            std::to_string(kMaxOrbits));
  }
  entries_.assign(dim_ * dim_, 0);
  const auto& part = *partition_;
  for (std::size_t x = 0; x < part.orbit_of.size(); ++x) {
    std::int32_t* row = entries_.data() + std::size_t{part.orbit_of[x]} * dim_;
    for (std::size_t j = 0; j < dim_; ++j) {
      row[j] += (std::popcount(x & part.reps[j]) & 1) ? -1 : 1;
    }
  }
}

FoldMatrix fold_matrix(std::shared_ptr<const OrbitPartition> p) { return FoldMatrix(std::move(p)); }

namespace {

bool same_partition(const OrbitPartition* a, const OrbitPartition* b) {
  if (a == b) return true;
  return a && b && a->n == b->n && a->reps == b->reps;
}

}  // namespace

std::vector<std::int32_t> folded_walsh(const FoldedFunction& ff, const FoldMatrix& m) {
  if (!same_partition(ff.partition.get(), m.partition().get())) {
    throw std::invalid_argument("folded_walsh: function and matrix use different partitions");
  }
  if (ff.values.size() != m.dim()) throw std::invalid_argument("folded_walsh: length mismatch");
  std::vector<std::int32_t> spectrum(m.dim(), 0);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const auto row = m.row(i);
    if (ff.values[i]) {
      for (std::size_t j = 0; j < row.size(); ++j) spectrum[j] -= row[j];
    } else {
      for (std::size_t j = 0; j < row.size(); ++j) spectrum[j] += row[j];
    }
  }
  return spectrum;
}

void folded_walsh_delta(std::span<std::int32_t> spectrum, const FoldMatrix& m, std::size_t orbit,
                        int sign) {
  const auto row = m.row(orbit);
  const std::int32_t scale = -2 * sign;
  for (std::size_t j = 0; j < row.size(); ++j) spectrum[j] += scale * row[j];
}

}  // namespace rotsym
