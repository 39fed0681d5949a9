#include "astoric/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "astoric/errors.hpp"

namespace astoric {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

RationalVector to_rational(const LatticePoint& v) { return RationalVector(v.begin(), v.end()); }

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RationalVector& a, const LatticePoint& v) {
  if (a.size() != v.size()) throw InvalidInput("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(v[i]);
  return s;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool is_zero(const LatticePoint& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

LatticePoint primitive_vector(const RationalVector& v) {
  if (is_zero(v)) throw InvalidInput("primitive vector of zero");
  std::int64_t l = 1;
  for (const auto& x : v) l = checked::mul(l / gcd64(l, x.den()), x.den());
  LatticePoint r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = checked::mul(v[i].num(), l / v[i].den());
  return primitive_vector(r);
}

LatticePoint primitive_vector(const LatticePoint& v) {
  std::int64_t g = 0;
  for (auto x : v) g = gcd64(g, x);
  if (g == 0) throw InvalidInput("primitive vector of zero");
  LatticePoint r(v);
  for (auto& x : r) x /= g;
  return r;
}

bool divisible_by(const LatticePoint& v, std::int64_t p) {
  for (auto x : v)
    if (x % p != 0) return false;
  return true;
}

std::int64_t determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m)
    if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
  // Bareiss: every intermediate entry is a minor, hence an exact integer
  int sign = 1;
  __int128 prev = 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[s], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  __int128 d = a[n - 1][n - 1] * sign;
  if (d > INT64_MAX || d < INT64_MIN) throw ArithmeticOverflow("determinant out of 64-bit range");
  return static_cast<std::int64_t>(d);
}

std::vector<LatticePoint> kernel_lattice_basis(const LatticePoint& a) {
  const std::size_t n = a.size();
  if (is_zero(a)) throw InvalidInput("kernel of the zero functional");
  // Columns of u start as the identity; row holds a . u. Euclid on pairs
  // of entries moves the gcd into slot 0 and zeros the rest, keeping u
  // unimodular, so the remaining columns span the kernel lattice.
  IntMatrix u(n, LatticePoint(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  LatticePoint row = a;
  auto col_axpy = [&](std::size_t dst, std::size_t src, std::int64_t k) {  // col dst -= k * col src
    for (std::size_t r = 0; r < n; ++r) u[r][dst] = checked::sub(u[r][dst], checked::mul(k, u[r][src]));
    row[dst] = checked::sub(row[dst], checked::mul(k, row[src]));
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t r = 0; r < n; ++r) std::swap(u[r][x], u[r][y]);
    std::swap(row[x], row[y]);
  };
  for (std::size_t j = 1; j < n; ++j) {
    while (row[j] != 0) {
      if (row[0] == 0) {
        col_swap(0, j);
        continue;
      }
      col_axpy(j, 0, row[j] / row[0]);
      if (row[j] != 0) col_swap(0, j);
    }
  }
  std::vector<LatticePoint> basis;
  for (std::size_t j = 1; j < n; ++j) {
    LatticePoint v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = u[r][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& m, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<RationalVector> null_space(const std::vector<RationalVector>& rows, std::size_t n) {
  std::vector<RationalVector> m = rows;
  for (const auto& r : m)
    if (r.size() != n) throw InvalidInput("dimension mismatch in null space");
  auto pivots = rref(m, n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const std::vector<RationalVector>& rows, std::size_t n) {
  std::vector<RationalVector> m = rows;
  return rref(m, n).size();
}

}  // namespace astoric
