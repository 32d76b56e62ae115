#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rotsym {

/// Largest supported variable count. Spectra stay far inside int32 range and
/// a table is at most 64 Ki entries.
inline constexpr unsigned kMaxVars = 16;

/// Evaluation vector of an n-variable Boolean function.
///
/// Entry i is f(x) where bit j of i is the value of x_j, so index order is
/// f(0,...,0), f(1,0,...,0), f(0,1,0,...,0), ... , f(1,...,1).
class TruthTable {
public:
  /// The all-zero function on `num_vars` variables.
  explicit TruthTable(unsigned num_vars);
  /// Takes ownership of `bits`; every entry must be 0 or 1 and the length 2^n.
  TruthTable(unsigned num_vars, std::vector<std::uint8_t> bits);

  unsigned num_vars() const noexcept { return n_; }
  std::size_t size() const noexcept { return bits_.size(); }

  bool operator[](std::size_t x) const noexcept { return bits_[x] != 0; }
  void set(std::size_t x, bool value) noexcept { bits_[x] = value ? 1 : 0; }
  void flip(std::size_t x) noexcept { bits_[x] ^= 1; }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::size_t weight() const noexcept;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
  unsigned n_;
  std::vector<std::uint8_t> bits_;
};

struct WalshSpectrum {
  unsigned n = 0;
  std::vector<std::int32_t> values;

  std::int32_t max_abs() const noexcept;
};

struct AutocorrSpectrum {
  unsigned n = 0;
  std::vector<std::int32_t> values;
};

/// ANF coefficients; index m is the coefficient of prod_{j in m} x_j.
struct Anf {
  unsigned n = 0;
  std::vector<std::uint8_t> coeffs;

  friend bool operator==(const Anf&, const Anf&) = default;
};

struct FunctionReport {
  unsigned n = 0;
  int nonlinearity = 0;
  int absolute_indicator = 0;
  int degree = 0;
  std::size_t weight = 0;
  bool balanced = false;
  /// Number of w != 0 with W_f(w) = 0.
  std::size_t walsh_zero_count = 0;

  friend bool operator==(const FunctionReport&, const FunctionReport&) = default;
};

// ---------------------------------------------------------------------------
// hex interchange

/// Nibble-to-index order used when reading a hex truth table.
enum class BitOrder {
  /// Hex digit c covers indices 4c..4c+3, nibble MSB first. Project default;
  /// the only order under which the published tables have their stated
  /// symmetries.
  MsbFirst,
  /// Same digit placement, nibble LSB first.
  LsbFirst,
};

/// Parses a hex truth table. Whitespace is ignored. Throws std::invalid_argument
/// on a wrong digit count (message "expected K hex digits, got M") or a
/// non-hex character.
TruthTable decode_hex(std::string_view hex, unsigned num_vars,
                      BitOrder order = BitOrder::MsbFirst);

/// Infers n from the digit count (4 * digits = 2^n) and decodes.
TruthTable decode_hex_auto(std::string_view hex, BitOrder order = BitOrder::MsbFirst);

/// Uppercase, no separators, MsbFirst order. Requires n >= 2.
std::string encode_hex(const TruthTable& tt);

// ---------------------------------------------------------------------------
// spectra and algebraic form

/// In-place butterfly Walsh-Hadamard transform on an arbitrary integer vector.
void fast_walsh_hadamard(std::span<std::int64_t> values) noexcept;
void fast_walsh_hadamard(std::span<std::int32_t> values) noexcept;

WalshSpectrum walsh_transform(const TruthTable& tt);

/// (2^n - max|W|) / 2.
int nonlinearity(const WalshSpectrum& ws);

/// Computed through the squared Walsh spectrum; equals the defining sum.
AutocorrSpectrum autocorrelation(const TruthTable& tt);
int absolute_indicator(const AutocorrSpectrum& ac);

/// Binary Moebius transform. It is its own inverse, so applying it to an
/// Anf's coefficient vector gives back the truth table.
Anf anf(const TruthTable& tt);
TruthTable anf_inverse(const Anf& a);
/// Largest monomial weight with a nonzero coefficient; 0 for the zero function.
int degree(const Anf& a);

/// Ascending list of w != 0 with W(w) = 0.
std::vector<std::size_t> walsh_zeros(const WalshSpectrum& ws);

// ---------------------------------------------------------------------------
// constructions

/// g(x) xor <x,u>.
TruthTable add_linear(const TruthTable& tt, std::size_t u);
TruthTable complement(const TruthTable& tt);

/// h(x, y) = f(x) xor g(y) on f.n + g.n variables, f's variables in the low
/// bit positions.
TruthTable direct_sum(const TruthTable& f, const TruthTable& g);

/// x_0 x_1 xor x_2 x_3 xor ... on an even number of variables.
TruthTable inner_product_bent(unsigned num_vars);

FunctionReport analyze(const TruthTable& tt);

}  // namespace rotsym
