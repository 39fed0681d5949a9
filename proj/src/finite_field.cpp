#include "astoric/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "astoric/errors.hpp"

namespace astoric {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2)
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// remainder of f modulo the monic polynomial g
Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    std::uint32_t lead = f.back();
    std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + static_cast<std::uint64_t>(p - lead) * g[i]) % p);
    trim(f);
  }
  return f;
}

Poly monic_from_index(std::uint64_t index, std::uint32_t degree, std::uint32_t p) {
  Poly f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f[degree] = 1;
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k)
      if (poly_rem(f, monic_from_index(k, d, p), p).empty()) return false;
  }
  return true;
}

}  // namespace

const FiniteField& FiniteField::get(std::uint32_t p, std::uint32_t e) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{p, e}];
  if (!slot) slot.reset(new FiniteField(p, e));
  return *slot;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw InvalidInput("extension degree must be >= 1");
  for (std::uint32_t i = 0; i < e; ++i) {
    if (static_cast<std::uint64_t>(q_) * p > kMaxOrder)
      throw InvalidInput("field order p^e exceeds " + std::to_string(kMaxOrder));
    q_ *= p;
  }

  if (e == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint64_t k = 0;; ++k) {
      Poly f = monic_from_index(k, e, p);
      if (f[0] != 0 && is_irreducible(f, p)) {
        modulus_ = f;
        break;
      }
    }
  }

  if (q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t r = 0, scale = 1, x = a, y = b;
        for (std::uint32_t i = 0; i < e_; ++i) {
          r += ((x % p_ + y % p_) % p_) * scale;
          x /= p_;
          y /= p_;
          scale *= p_;
        }
        add_table_[a * q_ + b] = r;
      }
  }

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t r = 0, scale = 1, x = a;
    for (std::uint32_t i = 0; i < e_; ++i) {
      r += ((p_ - x % p_) % p_) * scale;
      x /= p_;
      scale *= p_;
    }
    neg_[a] = r;
  }

  // discrete log tables from the least primitive element
  const std::uint32_t order = q_ - 1;
  exp_.assign(order, 0);
  log_.assign(q_, 0);
  for (std::uint32_t g = (q_ == 2 ? 1 : 2); g < q_; ++g) {
    std::uint32_t x = 1;
    bool primitive = true;
    for (std::uint32_t k = 0; k < order; ++k) {
      if (k > 0 && x == 1) {
        primitive = false;
        break;
      }
      exp_[k] = x;
      x = poly_mul_mod(x, g);
    }
    if (primitive && x == 1) break;
  }
  for (std::uint32_t k = 0; k < order; ++k) log_[exp_[k]] = k;

  frob_.resize(q_);
  root_.resize(q_);
  trace_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    frob_[a] = a == 0 ? 0 : exp_[static_cast<std::uint64_t>(log_[a]) * p_ % order];
  }
  for (std::uint32_t a = 0; a < q_; ++a) root_[frob_[a]] = a;
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t t = 0, x = a;
    for (std::uint32_t i = 0; i < e_; ++i) {
      t = add(t, x);
      x = frob_[x];
    }
    if (t >= p_) throw std::logic_error("trace left the prime field");
    trace_[a] = t;
  }
  least_with_trace_.assign(p_, q_);
  for (std::uint32_t a = 0; a < q_; ++a)
    if (least_with_trace_[trace_[a]] == q_) least_with_trace_[trace_[a]] = a;
}

std::uint32_t FiniteField::poly_mul_mod(std::uint32_t a, std::uint32_t b) const {
  Poly x = coords(a), y = coords(b), prod(2 * e_, 0);
  for (std::uint32_t i = 0; i < e_; ++i)
    for (std::uint32_t j = 0; j < e_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
  Poly r = poly_rem(prod, modulus_, p_);
  r.resize(e_, 0);
  return index_of(r);
}

std::vector<std::uint32_t> FiniteField::coords(std::uint32_t a) const {
  std::vector<std::uint32_t> c(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint32_t FiniteField::index_of(const std::vector<std::uint32_t>& c) const {
  if (c.size() != e_)
    throw InvalidInput("coordinate vector has length " + std::to_string(c.size()) + ", expected " + std::to_string(e_));
  std::uint32_t r = 0;
  for (std::uint32_t i = e_; i-- > 0;) {
    if (c[i] >= p_) throw InvalidInput("coordinate " + std::to_string(c[i]) + " is not a residue mod " + std::to_string(p_));
    r = r * p_ + c[i];
  }
  return r;
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  if (p_ == 2) return a ^ b;
  std::uint32_t r = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const { return neg_[a]; }

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw InvalidInput("inverse of zero in F_q");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FqElem FiniteField::zero() const { return {*this, 0}; }
FqElem FiniteField::one() const { return {*this, 1}; }

FqElem FiniteField::element(std::uint32_t index) const {
  if (index >= q_) throw InvalidInput("element index " + std::to_string(index) + " out of range for F_" + std::to_string(q_));
  return {*this, index};
}

FqElem FiniteField::from_coords(const std::vector<std::uint32_t>& c) const { return {*this, index_of(c)}; }

FqElem FiniteField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {*this, static_cast<std::uint32_t>(r)};
}

FqElem FiniteField::coset_representative(const FqElem& c) const {
  return {*this, least_with_trace_[c.trace()]};
}

std::optional<FqElem> FiniteField::solve_artin_schreier(const FqElem& b) const {
  if (b.trace() != 0) return std::nullopt;
  // y -> y^p - y is F_p-linear; column i is the image of the i-th basis vector.
  const std::uint32_t n = e_;
  std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n + 1, 0));
  std::uint32_t basis = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    auto col = coords(sub(frob_[basis], basis));
    for (std::uint32_t r = 0; r < n; ++r) m[r][i] = col[r];
    basis *= p_;
  }
  auto rhs = coords(b.index());
  for (std::uint32_t r = 0; r < n; ++r) m[r][n] = rhs[r];

  std::vector<int> pivot_col_of_row;
  std::uint32_t row = 0;
  for (std::uint32_t col = 0; col < n && row < n; ++col) {
    std::uint32_t piv = row;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[row]);
    const std::uint64_t iv = inv_mod(m[row][col], p_);
    for (auto& v : m[row]) v = static_cast<std::uint32_t>(v * iv % p_);
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const std::uint64_t f = m[r][col];
      for (std::uint32_t c = 0; c <= n; ++c)
        m[r][c] = static_cast<std::uint32_t>((m[r][c] + (p_ - f) * m[row][c]) % p_);
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++row;
  }
  for (std::uint32_t r = row; r < n; ++r)
    if (m[r][n] != 0) return std::nullopt;  // unreachable when the trace is 0

  std::vector<std::uint32_t> y(n, 0);
  for (std::uint32_t r = 0; r < row; ++r) y[pivot_col_of_row[r]] = m[r][n];
  // The kernel is F_p (the constants); pick the least index in y + F_p.
  const std::uint32_t y0 = index_of(y);
  std::uint32_t best = y0;
  for (std::uint32_t c = 1; c < p_; ++c) best = std::min(best, add(y0, c));
  return FqElem(*this, best);
}

FqElem FqElem::pow(std::uint64_t n) const {
  FqElem r = field_->one(), b = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) r *= b;
    b *= b;
  }
  return r;
}

std::string FqElem::str() const {
  std::ostringstream os;
  auto c = coords();
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

}  // namespace astoric
