#include "rotsym/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace rotsym::gf2 {

int poly_degree(Poly p) noexcept { return p == 0 ? -1 : 31 - std::countl_zero(p); }

Poly poly_mul(Poly a, Poly b) noexcept {
  Poly r = 0;
  for (; b; b >>= 1, a <<= 1) {
    if (b & 1) r ^= a;
  }
  return r;
}

Poly poly_mod(Poly a, Poly m) {
  if (m == 0) throw std::domain_error("polynomial division by zero");
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

bool is_irreducible(Poly p) {
  const int d = poly_degree(p);
  if (d < 1) return false;
  for (Poly q = 2; poly_degree(q) <= d / 2; ++q) {
    if (poly_mod(p, q) == 0) return false;
  }
  return true;
}

std::string poly_to_string(Poly p) {
  if (p == 0) return "0";
  std::string s;
  for (int i = poly_degree(p); i >= 0; --i) {
    if (!((p >> i) & 1)) continue;
    if (!s.empty()) s += '+';
    if (i == 0) s += '1';
    else if (i == 1) s += 'x';
    else s += "x^" + std::to_string(i);
  }
  return s;
}

Matrix::Matrix(unsigned n) : n_(n), rows_(n, 0) {
  if (n == 0 || n > 16) throw std::invalid_argument("gf2 matrix size must be in [1, 16]");
}

Matrix::Matrix(unsigned n, std::vector<std::uint32_t> rows) : n_(n), rows_(std::move(rows)) {
  if (n == 0 || n > 16 || rows_.size() != n) throw std::invalid_argument("bad gf2 matrix shape");
  const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  for (auto r : rows_) {
    if (r & ~mask) throw std::invalid_argument("gf2 matrix row wider than n");
  }
}

Matrix Matrix::identity(unsigned n) {
  Matrix m(n);
  for (unsigned r = 0; r < n; ++r) m.rows_[r] = std::uint32_t{1} << r;
  return m;
}

Matrix Matrix::random(unsigned n, std::mt19937_64& rng) {
  Matrix m(n);
  const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  for (auto& r : m.rows_) r = static_cast<std::uint32_t>(rng()) & mask;
  return m;
}

void Matrix::set(unsigned r, unsigned c, bool v) noexcept {
  if (v) rows_[r] |= std::uint32_t{1} << c;
  else rows_[r] &= ~(std::uint32_t{1} << c);
}

std::uint32_t Matrix::apply(std::uint32_t x) const noexcept {
  std::uint32_t y = 0;
  for (unsigned r = 0; r < n_; ++r) y |= static_cast<std::uint32_t>(std::popcount(rows_[r] & x) & 1) << r;
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("gf2 matrix size mismatch");
  Matrix c(a.n_);
  for (unsigned i = 0; i < a.n_; ++i) {
    std::uint32_t acc = 0;
    for (std::uint32_t bits = a.rows_[i]; bits; bits &= bits - 1) {
      acc ^= b.rows_[std::countr_zero(bits)];
    }
    c.rows_[i] = acc;
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("gf2 matrix size mismatch");
  Matrix c(a.n_);
  for (unsigned i = 0; i < a.n_; ++i) c.rows_[i] = a.rows_[i] ^ b.rows_[i];
  return c;
}

unsigned rank(const Matrix& m) {
  std::vector<std::uint32_t> rows(m.size());
  for (unsigned r = 0; r < m.size(); ++r) rows[r] = m.row(r);
  unsigned rk = 0;
  for (unsigned col = 0; col < m.size() && rk < rows.size(); ++col) {
    const std::uint32_t bit = std::uint32_t{1} << col;
    unsigned pivot = rk;
    while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rk], rows[pivot]);
    for (unsigned r = 0; r < rows.size(); ++r) {
      if (r != rk && (rows[r] & bit)) rows[r] ^= rows[rk];
    }
    ++rk;
  }
  return rk;
}

Matrix inverse(const Matrix& m) {
  const unsigned n = m.size();
  std::vector<std::uint32_t> a(n);
  std::vector<std::uint32_t> inv(n);
  for (unsigned r = 0; r < n; ++r) {
    a[r] = m.row(r);
    inv[r] = std::uint32_t{1} << r;
  }
  for (unsigned col = 0; col < n; ++col) {
    const std::uint32_t bit = std::uint32_t{1} << col;
    unsigned pivot = col;
    while (pivot < n && !(a[pivot] & bit)) ++pivot;
    if (pivot == n) throw std::domain_error("gf2 matrix is singular");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (unsigned r = 0; r < n; ++r) {
      if (r != col && (a[r] & bit)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return Matrix(n, std::move(inv));
}

Matrix polyeval(Poly p, const Matrix& m) {
  const unsigned n = m.size();
  Matrix acc(n);
  const Matrix id = Matrix::identity(n);
  for (int i = poly_degree(p); i >= 0; --i) {
    acc = acc * m;
    if ((p >> i) & 1) acc = acc + id;
  }
  return acc;
}

Matrix power(const Matrix& m, unsigned k) {
  Matrix result = Matrix::identity(m.size());
  Matrix base = m;
  for (; k; k >>= 1) {
    if (k & 1) result = result * base;
    base = base * base;
  }
  return result;
}

Matrix perm_matrix(const CoordPerm& p) {
  Matrix m(p.num_vars());
  for (unsigned j = 0; j < p.num_vars(); ++j) m.set(j, p[j], true);
  return m;
}

std::vector<Poly> irreducibles_dividing(unsigned n) {
  if (n == 0 || n > 16) throw std::invalid_argument("irreducibles_dividing: n must be in [1, 16]");
  std::vector<Poly> out;
  for (Poly p = 2; poly_degree(p) <= static_cast<int>(n); ++p) {
    if (!is_irreducible(p)) continue;
    for (unsigned l = 1; l <= n; ++l) {
      const Poly xl1 = (Poly{1} << l) | 1u;
      if (poly_mod(xl1, p) == 0) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

}  // namespace rotsym::gf2
