#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rotsym/boolfn.hpp"
#include "rotsym/folding.hpp"
#include "rotsym/orbits.hpp"

namespace rotsym {

enum class CostKind {
  /// sum_j mult_j * (W(L_j)^2 - 2^n)^2
  Flatness,
  /// sum_j mult_j * max(0, |W(L_j)| - T)^4, T = 2^n - 2 * target_nl
  Peak,
};

std::optional<CostKind> parse_cost(std::string_view name);
std::string to_string(CostKind kind);

struct CostParams {
  CostKind kind = CostKind::Flatness;
  unsigned n = 0;
  /// Spectrum magnitude allowed without penalty by the Peak cost.
  std::int64_t threshold = 0;
};

/// Peak threshold for a target nonlinearity; without a target the smallest
/// even value >= 2^{n/2} (the flat-spectrum magnitude) is used.
std::int64_t peak_threshold(unsigned n, std::optional<int> target_nl);

/// Orbit-weighted cost of a folded spectrum; lower is better.
double cost(std::span<const std::int32_t> spectrum, std::span<const std::uint32_t> sizes,
            const CostParams& params);

struct SearchConfig {
  GroupSpec group;
  std::size_t runs = 1;
  std::size_t max_iterations = 20'000;
  std::uint64_t rng_seed = 1;
  CostKind cost = CostKind::Flatness;
  /// 0 disables. Otherwise neighbors whose cost is within this much of the
  /// current cost compete on nonlinearity before the cheapest move is forced.
  double deviation_window = 0;
  /// A flipped orbit may not be flipped again for this many steps. 1 only
  /// forbids undoing the previous move.
  std::size_t tabu_tenure = 10;
  std::optional<TruthTable> initial_function;
  /// Orbits flipped at random in the initial function of every run.
  std::size_t perturb_flips = 0;
  std::optional<int> target_nl;
  bool record_trace = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Read-only data shared by every trajectory over one invariance class.
class SearchSpace {
public:
  SearchSpace(const GroupSpec& group, CostKind kind, std::optional<int> target_nl = {},
              double deviation_window = 0, std::size_t tabu_tenure = 10);

  unsigned num_vars() const noexcept { return partition_->n; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  const std::shared_ptr<const OrbitPartition>& partition() const noexcept { return partition_; }
  const FoldMatrix& matrix() const noexcept { return matrix_; }
  const CostParams& cost_params() const noexcept { return params_; }
  double deviation_window() const noexcept { return window_; }
  std::size_t tabu_tenure() const noexcept { return tenure_; }
  std::span<const std::uint32_t> sizes() const noexcept { return partition_->sizes; }
  /// Orbit sizes as doubles, for the cost kernels.
  std::span<const double> weights() const noexcept { return weights_; }

private:
  std::shared_ptr<const OrbitPartition> partition_;
  FoldMatrix matrix_;
  CostParams params_;
  double window_;
  std::size_t tenure_;
  std::vector<double> weights_;
};

struct SearchState {
  std::vector<std::uint8_t> values;
  std::vector<std::int32_t> spectrum;
  double cost = 0;
  std::optional<std::size_t> last_move;
  /// Steps taken so far, and the step at which each orbit was last flipped.
  std::uint64_t clock = 0;
  std::vector<std::uint64_t> flipped_at;
};

SearchState make_state(const SearchSpace& space, std::vector<std::uint8_t> values);

/// Nonlinearity of the function the state encodes.
int state_nonlinearity(const SearchState& state, unsigned n) noexcept;

/// Scans every single-orbit flip not forbidden by the tabu tenure, takes the
/// cheapest one even when it is uphill, and returns the flipped orbit. When
/// every orbit is forbidden the least recently flipped one is taken.
std::size_t step(const SearchSpace& space, SearchState& state);

/// Deterministic per-run generator derived from (seed, run_index).
std::mt19937_64 run_rng(std::uint64_t seed, std::size_t run_index);

/// Flips `flips` distinct random orbits. Throws if flips > orbit count or if
/// `tt` is not invariant under the partition.
TruthTable perturb(const TruthTable& tt, const std::shared_ptr<const OrbitPartition>& p,
                   std::size_t flips, std::mt19937_64& rng);

struct SearchResult {
  TruthTable best_function;
  FunctionReport report;
  std::size_t run_index = 0;
  std::size_t iteration_found = 0;
  double elapsed_seconds = 0;
  /// Best nonlinearity after each iteration, starting with the initial state.
  std::vector<int> trace;
};

SearchResult run_trajectory(const SearchSpace& space, const SearchConfig& cfg,
                            std::size_t run_index);

/// Independent trajectories, best-of-run each, sorted by nonlinearity
/// descending then run index.
std::vector<SearchResult> run_search(const SearchConfig& cfg);

}  // namespace rotsym
