#include "rotsym/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rotsym {

namespace {

void check_num_vars(unsigned n) {
  if (n < 1 || n > kMaxVars) {
    throw std::invalid_argument("variable count must be in [1, " + std::to_string(kMaxVars) +
                                "], got " + std::to_string(n));
  }
}

template <typename T>
void butterfly(std::span<T> a) noexcept {
  const std::size_t size = a.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const T u = a[j];
        const T v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
    }
  }
}

}  // namespace

TruthTable::TruthTable(unsigned num_vars) : n_(num_vars) {
  check_num_vars(num_vars);
  bits_.assign(std::size_t{1} << num_vars, 0);
}

TruthTable::TruthTable(unsigned num_vars, std::vector<std::uint8_t> bits)
    : n_(num_vars), bits_(std::move(bits)) {
  check_num_vars(num_vars);
  if (bits_.size() != (std::size_t{1} << num_vars)) {
    throw std::invalid_argument("truth table of " + std::to_string(num_vars) +
                                " variables needs " +
                                std::to_string(std::size_t{1} << num_vars) + " entries, got " +
                                std::to_string(bits_.size()));
  }
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("truth table entries must be 0 or 1");
  }
}

std::size_t TruthTable::weight() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::int32_t WalshSpectrum::max_abs() const noexcept {
  std::int32_t best = 0;
  for (auto v : values) best = std::max(best, std::abs(v));
  return best;
}

void fast_walsh_hadamard(std::span<std::int64_t> values) noexcept { butterfly(values); }
void fast_walsh_hadamard(std::span<std::int32_t> values) noexcept { butterfly(values); }

WalshSpectrum walsh_transform(const TruthTable& tt) {
  WalshSpectrum ws{tt.num_vars(), std::vector<std::int32_t>(tt.size())};
  const auto bits = tt.bits();
  for (std::size_t x = 0; x < bits.size(); ++x) ws.values[x] = bits[x] ? -1 : 1;
  butterfly(std::span<std::int32_t>(ws.values));
  return ws;
}

int nonlinearity(const WalshSpectrum& ws) {
  const std::int64_t full = std::int64_t{1} << ws.n;
  return static_cast<int>((full - ws.max_abs()) / 2);
}

AutocorrSpectrum autocorrelation(const TruthTable& tt) {
  const auto ws = walsh_transform(tt);
  std::vector<std::int64_t> sq(ws.values.size());
  for (std::size_t i = 0; i < sq.size(); ++i) {
    sq[i] = std::int64_t{ws.values[i]} * ws.values[i];
  }
  butterfly(std::span<std::int64_t>(sq));
  // Inverse transform: forward butterfly, then divide by 2^n.
  const unsigned shift = tt.num_vars();
  AutocorrSpectrum ac{tt.num_vars(), std::vector<std::int32_t>(sq.size())};
  for (std::size_t d = 0; d < sq.size(); ++d) {
    ac.values[d] = static_cast<std::int32_t>(sq[d] >> shift);
  }
  return ac;
}

int absolute_indicator(const AutocorrSpectrum& ac) {
  if (ac.values.size() < 2) {
    throw std::invalid_argument("absolute indicator needs at least one nonzero shift");
  }
  std::int32_t best = 0;
  for (std::size_t d = 1; d < ac.values.size(); ++d) best = std::max(best, std::abs(ac.values[d]));
  return best;
}

namespace {

std::vector<std::uint8_t> moebius(std::vector<std::uint8_t> a) {
  const std::size_t size = a.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; ++i) {
      if (i & h) a[i] ^= a[i ^ h];
    }
  }
  return a;
}

}  // namespace

Anf anf(const TruthTable& tt) {
  return Anf{tt.num_vars(), moebius({tt.bits().begin(), tt.bits().end()})};
}

TruthTable anf_inverse(const Anf& a) { return TruthTable(a.n, moebius(a.coeffs)); }

int degree(const Anf& a) {
  int best = 0;
  for (std::size_t m = 0; m < a.coeffs.size(); ++m) {
    if (a.coeffs[m]) best = std::max(best, std::popcount(m));
  }
  return best;
}

std::vector<std::size_t> walsh_zeros(const WalshSpectrum& ws) {
  std::vector<std::size_t> zeros;
  for (std::size_t w = 1; w < ws.values.size(); ++w) {
    if (ws.values[w] == 0) zeros.push_back(w);
  }
  return zeros;
}

TruthTable add_linear(const TruthTable& tt, std::size_t u) {
  if (u >= tt.size()) throw std::invalid_argument("linear mask out of range");
  TruthTable out = tt;
  for (std::size_t x = 0; x < tt.size(); ++x) {
    if (std::popcount(x & u) & 1) out.flip(x);
  }
  return out;
}

TruthTable complement(const TruthTable& tt) {
  TruthTable out = tt;
  for (std::size_t x = 0; x < tt.size(); ++x) out.flip(x);
  return out;
}

TruthTable direct_sum(const TruthTable& f, const TruthTable& g) {
  const unsigned n = f.num_vars() + g.num_vars();
  if (n > kMaxVars) {
    throw std::invalid_argument("direct sum would have " + std::to_string(n) +
                                " variables, limit is " + std::to_string(kMaxVars));
  }
  std::vector<std::uint8_t> bits(std::size_t{1} << n);
  const std::size_t low = f.size();
  for (std::size_t y = 0; y < g.size(); ++y) {
    for (std::size_t x = 0; x < low; ++x) {
      bits[y * low + x] = static_cast<std::uint8_t>(f[x] ^ g[y]);
    }
  }
  return TruthTable(n, std::move(bits));
}

TruthTable inner_product_bent(unsigned num_vars) {
  if (num_vars == 0 || num_vars % 2 != 0) {
    throw std::invalid_argument("inner-product bent function needs an even variable count");
  }
  TruthTable tt(num_vars);
  for (std::size_t x = 0; x < tt.size(); ++x) {
    int acc = 0;
    for (unsigned j = 0; j < num_vars; j += 2) acc ^= ((x >> j) & (x >> (j + 1)) & 1);
    tt.set(x, acc != 0);
  }
  return tt;
}

FunctionReport analyze(const TruthTable& tt) {
  const auto ws = walsh_transform(tt);
  FunctionReport r;
  r.n = tt.num_vars();
  r.nonlinearity = nonlinearity(ws);
  r.absolute_indicator = tt.size() > 1 ? absolute_indicator(autocorrelation(tt)) : 0;
  r.degree = degree(anf(tt));
  r.weight = tt.weight();
  r.balanced = ws.values[0] == 0;
  r.walsh_zero_count = walsh_zeros(ws).size();
  return r;
}

}  // namespace rotsym
