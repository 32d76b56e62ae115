#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rotsym/orbits.hpp"

namespace rotsym::gf2 {

/// Polynomial over the two-element field; bit i is the coefficient of x^i.
using Poly = std::uint32_t;

int poly_degree(Poly p) noexcept;
Poly poly_mul(Poly a, Poly b) noexcept;
Poly poly_mod(Poly a, Poly m);
bool is_irreducible(Poly p);
/// "x^3+x+1".
std::string poly_to_string(Poly p);

/// Square matrix with at most 16 rows; row r is a bit mask over columns.
class Matrix {
public:
  explicit Matrix(unsigned n);  // zero matrix
  Matrix(unsigned n, std::vector<std::uint32_t> rows);
  static Matrix identity(unsigned n);
  /// Uniform over all n x n matrices (not necessarily invertible).
  static Matrix random(unsigned n, std::mt19937_64& rng);

  unsigned size() const noexcept { return n_; }
  std::uint32_t row(unsigned r) const noexcept { return rows_[r]; }
  bool at(unsigned r, unsigned c) const noexcept { return (rows_[r] >> c) & 1u; }
  void set(unsigned r, unsigned c, bool v) noexcept;

  /// Matrix-vector product with x read as a column bit vector.
  std::uint32_t apply(std::uint32_t x) const noexcept;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  unsigned n_;
  std::vector<std::uint32_t> rows_;
};

unsigned rank(const Matrix& m);
/// Throws std::domain_error for a singular matrix.
Matrix inverse(const Matrix& m);
/// Horner evaluation p(m).
Matrix polyeval(Poly p, const Matrix& m);
Matrix power(const Matrix& m, unsigned k);

/// Row j has its single 1 in column map[j], so apply() agrees with
/// CoordPerm::apply on index bit vectors.
Matrix perm_matrix(const CoordPerm& p);

/// Irreducible polynomials dividing x^l + 1 for some 1 <= l <= n, ascending.
std::vector<Poly> irreducibles_dividing(unsigned n);

}  // namespace rotsym::gf2
