#include <bit>
#include <cctype>
#include <stdexcept>
#include <string>

#include "rotsym/boolfn.hpp"

namespace rotsym {

namespace {

std::string strip_whitespace(std::string_view hex) {
  std::string digits;
  digits.reserve(hex.size());
  for (char c : hex) {
    if (!std::isspace(static_cast<unsigned char>(c))) digits.push_back(c);
  }
  return digits;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

TruthTable decode_digits(const std::string& digits, unsigned num_vars, BitOrder order) {
  std::vector<std::uint8_t> bits(std::size_t{1} << num_vars);
  for (std::size_t c = 0; c < digits.size(); ++c) {
    const int v = hex_value(digits[c]);
    if (v < 0) {
      throw std::invalid_argument(std::string("invalid hex character '") + digits[c] +
                                  "' at position " + std::to_string(c));
    }
    for (unsigned k = 0; k < 4; ++k) {
      const unsigned shift = order == BitOrder::MsbFirst ? 3 - k : k;
      bits[4 * c + k] = static_cast<std::uint8_t>((v >> shift) & 1);
    }
  }
  return TruthTable(num_vars, std::move(bits));
}

}  // namespace

TruthTable decode_hex(std::string_view hex, unsigned num_vars, BitOrder order) {
  if (num_vars < 2 || num_vars > kMaxVars) {
    throw std::invalid_argument("hex truth tables need 2 <= n <= " + std::to_string(kMaxVars));
  }
  const std::string digits = strip_whitespace(hex);
  const std::size_t expected = (std::size_t{1} << num_vars) / 4;
  if (digits.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " hex digits, got " +
                                std::to_string(digits.size()));
  }
  return decode_digits(digits, num_vars, order);
}

TruthTable decode_hex_auto(std::string_view hex, BitOrder order) {
  const std::string digits = strip_whitespace(hex);
  const std::size_t entries = digits.size() * 4;
  if (digits.empty() || !std::has_single_bit(entries) || entries < 4 ||
      entries > (std::size_t{1} << kMaxVars)) {
    throw std::invalid_argument("hex length " + std::to_string(digits.size()) +
                                " does not match any variable count in [2, " +
                                std::to_string(kMaxVars) + "]");
  }
  return decode_digits(digits, static_cast<unsigned>(std::countr_zero(entries)), order);
}

std::string encode_hex(const TruthTable& tt) {
  if (tt.num_vars() < 2) throw std::invalid_argument("hex encoding needs n >= 2");
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out(tt.size() / 4, '0');
  for (std::size_t c = 0; c < out.size(); ++c) {
    const int v = (tt[4 * c] << 3) | (tt[4 * c + 1] << 2) | (tt[4 * c + 2] << 1) | tt[4 * c + 3];
    out[c] = kDigits[v];
  }
  return out;
}

}  // namespace rotsym
