#include "rotsym/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace rotsym {

std::optional<CostKind> parse_cost(std::string_view name) {
  if (name == "flatness") return CostKind::Flatness;
  if (name == "peak") return CostKind::Peak;
  return std::nullopt;
}

std::string to_string(CostKind kind) {
  return kind == CostKind::Flatness ? "flatness" : "peak";
}

std::int64_t peak_threshold(unsigned n, std::optional<int> target_nl) {
  if (target_nl) return (std::int64_t{1} << n) - 2 * std::int64_t{*target_nl};
  std::int64_t t = static_cast<std::int64_t>(std::ceil(std::sqrt(std::ldexp(1.0, int(n)))));
  return t + (t & 1);
}

namespace {

// Cost of spectrum + scale * row, or of the spectrum itself when row is empty.
template <CostKind Kind, bool TrackPeak>
double flip_cost(std::span<const std::int32_t> spectrum, const std::int32_t* row,
                 std::int32_t scale, std::span<const double> weights, double level,
                 double threshold, std::int32_t* peak = nullptr) {
  const std::size_t dim = spectrum.size();
  double acc0 = 0, acc1 = 0;
  std::int32_t top = 0;
  std::size_t j = 0;
  auto term = [&](std::size_t k) {
    const std::int32_t t = row ? spectrum[k] + scale * row[k] : spectrum[k];
    if constexpr (TrackPeak) top = std::max(top, std::abs(t));
    if constexpr (Kind == CostKind::Flatness) {
      const double u = static_cast<double>(t) * t - level;
      return weights[k] * u * u;
    } else {
      const double e = std::max(0.0, std::abs(static_cast<double>(t)) - threshold);
      const double e2 = e * e;
      return weights[k] * e2 * e2;
    }
  };
  for (; j + 1 < dim; j += 2) {
    acc0 += term(j);
    acc1 += term(j + 1);
  }
  if (j < dim) acc0 += term(j);
  if constexpr (TrackPeak) *peak = top;
  return acc0 + acc1;
}

template <CostKind Kind>
double dispatch_cost(std::span<const std::int32_t> spectrum, std::span<const double> weights,
                     const CostParams& params) {
  return flip_cost<Kind, false>(spectrum, nullptr, 0, weights, std::ldexp(1.0, int(params.n)),
                                static_cast<double>(params.threshold));
}

double state_cost(std::span<const std::int32_t> spectrum, std::span<const double> weights,
                  const CostParams& params) {
  return params.kind == CostKind::Flatness
             ? dispatch_cost<CostKind::Flatness>(spectrum, weights, params)
             : dispatch_cost<CostKind::Peak>(spectrum, weights, params);
}

std::int32_t max_abs(std::span<const std::int32_t> v) {
  std::int32_t top = 0;
  for (auto x : v) top = std::max(top, std::abs(x));
  return top;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform in [0, bound) by rejection; std distributions are not portable
// across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

template <CostKind Kind, bool Windowed>
std::size_t best_move(const SearchSpace& space, const SearchState& state) {
  const auto& m = space.matrix();
  const std::size_t dim = m.dim();
  const auto weights = space.weights();
  const double level = std::ldexp(1.0, int(space.num_vars()));
  const double threshold = static_cast<double>(space.cost_params().threshold);

  std::size_t best = dim;
  double best_cost = std::numeric_limits<double>::infinity();
  std::size_t best_window = dim;
  std::int32_t best_window_peak = std::numeric_limits<std::int32_t>::max();
  double best_window_cost = std::numeric_limits<double>::infinity();

  const std::uint64_t tenure = space.tabu_tenure();
  std::size_t oldest = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (state.flipped_at[i] < state.flipped_at[oldest]) oldest = i;
    if (state.flipped_at[i] != 0 && state.clock - state.flipped_at[i] < tenure) continue;
    const std::int32_t scale = state.values[i] ? 2 : -2;
    std::int32_t peak = 0;
    const double c = flip_cost<Kind, Windowed>(state.spectrum, m.row(i).data(), scale, weights,
                                               level, threshold, &peak);
    if (c < best_cost) {
      best_cost = c;
      best = i;
    }
    if constexpr (Windowed) {
      if (c <= state.cost + space.deviation_window() &&
          (peak < best_window_peak || (peak == best_window_peak && c < best_window_cost))) {
        best_window = i;
        best_window_peak = peak;
        best_window_cost = c;
      }
    }
  }
  if constexpr (Windowed) {
    if (best_window < dim) return best_window;
  }
  return best < dim ? best : oldest;
}

}  // namespace

double cost(std::span<const std::int32_t> spectrum, std::span<const std::uint32_t> sizes,
            const CostParams& params) {
  if (spectrum.size() != sizes.size()) throw std::invalid_argument("cost: length mismatch");
  std::vector<double> weights(sizes.begin(), sizes.end());
  return state_cost(spectrum, weights, params);
}

SearchSpace::SearchSpace(const GroupSpec& group, CostKind kind, std::optional<int> target_nl,
                         double deviation_window, std::size_t tabu_tenure)
    : partition_(shared_orbit_partition(group)),
      matrix_(partition_),
      params_{kind, group.n, peak_threshold(group.n, target_nl)},
      window_(deviation_window),
      tenure_(tabu_tenure),
      weights_(partition_->sizes.begin(), partition_->sizes.end()) {
  if (deviation_window < 0) throw std::invalid_argument("deviation window must be >= 0");
  if (tabu_tenure < 1) throw std::invalid_argument("tabu tenure must be >= 1");
}

SearchState make_state(const SearchSpace& space, std::vector<std::uint8_t> values) {
  if (values.size() != space.dim()) throw std::invalid_argument("state: wrong folded length");
  SearchState s;
  s.spectrum = folded_walsh(FoldedFunction{space.partition(), values}, space.matrix());
  s.values = std::move(values);
  s.flipped_at.assign(s.values.size(), 0);
  s.cost = state_cost(s.spectrum, space.weights(), space.cost_params());
  return s;
}

int state_nonlinearity(const SearchState& state, unsigned n) noexcept {
  return static_cast<int>(((std::int64_t{1} << n) - max_abs(state.spectrum)) / 2);
}

std::size_t step(const SearchSpace& space, SearchState& state) {
  const bool windowed = space.deviation_window() > 0;
  std::size_t move;
  if (space.cost_params().kind == CostKind::Flatness) {
    move = windowed ? best_move<CostKind::Flatness, true>(space, state)
                    : best_move<CostKind::Flatness, false>(space, state);
  } else {
    move = windowed ? best_move<CostKind::Peak, true>(space, state)
                    : best_move<CostKind::Peak, false>(space, state);
  }
  const int sign = state.values[move] ? -1 : 1;
  folded_walsh_delta(state.spectrum, space.matrix(), move, sign);
  state.values[move] ^= 1;
  state.cost = state_cost(state.spectrum, space.weights(), space.cost_params());
  state.last_move = move;
  state.flipped_at[move] = ++state.clock;
  return move;
}

std::mt19937_64 run_rng(std::uint64_t seed, std::size_t run_index) {
  std::uint64_t s = seed ^ (0xD1B54A32D192ED03ull * (std::uint64_t{run_index} + 1));
  const std::uint64_t a = splitmix64(s);
  const std::uint64_t b = splitmix64(s);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

TruthTable perturb(const TruthTable& tt, const std::shared_ptr<const OrbitPartition>& p,
                   std::size_t flips, std::mt19937_64& rng) {
  auto ff = fold(tt, p);
  const std::size_t dim = ff.values.size();
  if (flips > dim) {
    throw std::invalid_argument("perturb: " + std::to_string(flips) + " flips requested but only " +
                                std::to_string(dim) + " orbits");
  }
  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t k = 0; k < flips; ++k) {
    const std::size_t pick = k + uniform_below(rng, dim - k);
    std::swap(order[k], order[pick]);
    ff.values[order[k]] ^= 1;
  }
  return unfold(ff);
}

SearchResult run_trajectory(const SearchSpace& space, const SearchConfig& cfg,
                            std::size_t run_index) {
  const auto start = std::chrono::steady_clock::now();
  auto rng = run_rng(cfg.rng_seed, run_index);
  const unsigned n = space.num_vars();

  std::vector<std::uint8_t> init;
  if (cfg.initial_function) {
    TruthTable seed_tt = *cfg.initial_function;
    if (cfg.perturb_flips > 0) seed_tt = perturb(seed_tt, space.partition(), cfg.perturb_flips, rng);
    init = fold(seed_tt, space.partition()).values;
  } else {
    init.resize(space.dim());
    for (auto& v : init) v = static_cast<std::uint8_t>(rng() >> 63);
  }

  SearchState state = make_state(space, std::move(init));
  int best_nl = state_nonlinearity(state, n);
  std::vector<std::uint8_t> best_values = state.values;
  std::size_t best_iter = 0;
  std::vector<int> trace;
  if (cfg.record_trace) trace.push_back(best_nl);

  const bool reached = cfg.target_nl && best_nl >= *cfg.target_nl;
  for (std::size_t it = 1; !reached && it <= cfg.max_iterations; ++it) {
    step(space, state);
    const int nl = state_nonlinearity(state, n);
    if (nl > best_nl) {
      best_nl = nl;
      best_values = state.values;
      best_iter = it;
    }
    if (cfg.record_trace) trace.push_back(best_nl);
    if (cfg.target_nl && best_nl >= *cfg.target_nl) break;
  }

  SearchResult result{unfold(FoldedFunction{space.partition(), std::move(best_values)}), {}, run_index,
                      best_iter, 0, std::move(trace)};
  result.report = analyze(result.best_function);
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SearchResult> run_search(const SearchConfig& cfg) {
  if (cfg.runs < 1) throw std::invalid_argument("search: runs must be >= 1");
  if (cfg.max_iterations < 1) throw std::invalid_argument("search: iterations must be >= 1");
  if (cfg.initial_function && cfg.initial_function->num_vars() != cfg.group.n) {
    throw std::invalid_argument("search: initial function has the wrong variable count");
  }
  const SearchSpace space(cfg.group, cfg.cost, cfg.target_nl, cfg.deviation_window,
                          cfg.tabu_tenure);

  std::vector<std::optional<SearchResult>> slots(cfg.runs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t r = next++; r < cfg.runs; r = next++) {
      try {
        slots[r] = run_trajectory(space, cfg, r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.runs));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SearchResult> results;
  results.reserve(cfg.runs);
  for (auto& s : slots) results.push_back(std::move(*s));
  std::sort(results.begin(), results.end(), [](const SearchResult& a, const SearchResult& b) {
    if (a.report.nonlinearity != b.report.nonlinearity) {
      return a.report.nonlinearity > b.report.nonlinearity;
    }
    return a.run_index < b.run_index;
  });
  return results;
}

}  // namespace rotsym
