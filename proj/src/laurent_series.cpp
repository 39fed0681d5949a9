#include "astoric/laurent_series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "astoric/errors.hpp"

namespace astoric {

namespace {

void require_same_field(const LaurentSeries& a, const LaurentSeries& b) {
  if (&a.field() != &b.field()) throw InvalidInput("Laurent series over different fields");
}

}  // namespace

LaurentSeries::LaurentSeries(const FiniteField& field, Window window, bool exact)
    : field_(&field), window_(window), exact_(exact) {
  if (window_.lo > window_.hi) throw InvalidInput("window lower bound exceeds upper bound");
}

LaurentSeries::LaurentSeries(const FiniteField& field, const std::vector<std::pair<std::int64_t, FqElem>>& terms,
                             Window window, bool exact)
    : LaurentSeries(field, window, exact) {
  for (const auto& [k, c] : terms) {
    if (&c.field() != field_) throw InvalidInput("coefficient from a different field");
    if (k < window_.lo || k >= window_.hi)
      throw InvalidInput("exponent " + std::to_string(k) + " outside window [" + std::to_string(window_.lo) + ", " +
                         std::to_string(window_.hi) + ")");
    insert(k, c);
  }
}

LaurentSeries LaurentSeries::monomial(const FqElem& c, std::int64_t exponent, Window window, bool exact) {
  return LaurentSeries(c.field(), {{exponent, c}}, window, exact);
}

void LaurentSeries::insert(std::int64_t k, const FqElem& c) {
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void LaurentSeries::drop_unknown() {
  if (exact_) {
    if (!terms_.empty()) {
      window_.lo = std::min(window_.lo, terms_.begin()->first);
      window_.hi = std::max(window_.hi, terms_.rbegin()->first + 1);
    }
    return;
  }
  terms_.erase(terms_.lower_bound(window_.hi), terms_.end());
  window_.lo = std::min(window_.lo, window_.hi);
  if (!terms_.empty()) window_.lo = std::min(window_.lo, terms_.begin()->first);
}

FqElem LaurentSeries::coeff(std::int64_t k) const {
  if (!knows(k)) throw PrecisionExhausted("coefficient of t^" + std::to_string(k) + " is beyond the known precision");
  auto it = terms_.find(k);
  return it == terms_.end() ? field_->zero() : it->second;
}

OrInfinity<std::int64_t> LaurentSeries::valuation() const {
  if (terms_.empty()) return OrInfinity<std::int64_t>::infinity();
  return terms_.begin()->first;
}

std::int64_t LaurentSeries::degree() const {
  if (terms_.empty()) throw InvalidInput("degree of the zero series");
  return terms_.rbegin()->first;
}

LaurentSeries LaurentSeries::polar_part() const {
  LaurentSeries r(*field_, window_, exact_);
  if (!exact_) {
    // below zero everything is known iff hi >= 0
    if (window_.hi < 0) throw PrecisionExhausted("polar part not fully known");
    r.exact_ = true;
  }
  for (auto it = terms_.begin(); it != terms_.end() && it->first < 0; ++it) r.terms_.emplace(*it);
  r.window_.hi = std::min<std::int64_t>(r.window_.hi, 0);
  r.window_.lo = std::min(r.window_.lo, r.window_.hi);
  return r;
}

LaurentSeries LaurentSeries::positive_part() const {
  LaurentSeries r(*field_, window_, exact_);
  for (auto it = terms_.upper_bound(0); it != terms_.end(); ++it) r.terms_.emplace(*it);
  r.window_.lo = std::max<std::int64_t>(std::min<std::int64_t>(1, r.window_.hi), r.window_.lo);
  return r;
}

LaurentSeries LaurentSeries::truncated(std::int64_t hi) const {
  LaurentSeries r = *this;
  r.exact_ = false;
  r.window_.hi = exact_ ? hi : std::min(hi, window_.hi);
  r.drop_unknown();
  return r;
}

LaurentSeries LaurentSeries::with_window(Window w) const {
  LaurentSeries r(*field_, w, exact_);
  for (const auto& [k, c] : terms_) {
    if (k < w.lo) throw InvalidInput("term t^" + std::to_string(k) + " lies below the new window");
    if (k >= w.hi) {
      if (exact_) throw InvalidInput("term t^" + std::to_string(k) + " lies above the new window");
      continue;
    }
    r.terms_.emplace(k, c);
  }
  if (!exact_) r.window_.hi = std::min(w.hi, window_.hi);
  return r;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

LaurentSeries LaurentSeries::scaled(const FqElem& c) const {
  if (c.is_zero()) return LaurentSeries(*field_, window_, exact_);
  LaurentSeries r = *this;
  for (auto& [k, v] : r.terms_) v *= c;
  return r;
}

LaurentSeries LaurentSeries::shifted(std::int64_t s) const {
  LaurentSeries r(*field_, {checked::add(window_.lo, s), checked::add(window_.hi, s)}, exact_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k + s, c);
  return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_field(a, b);
  const bool exact = a.exact_ && b.exact_;
  Window w{std::min(a.window_.lo, b.window_.lo), 0};
  if (exact) w.hi = std::max(a.window_.hi, b.window_.hi);
  else if (!a.exact_ && !b.exact_) w.hi = std::min(a.window_.hi, b.window_.hi);
  else w.hi = a.exact_ ? b.window_.hi : a.window_.hi;
  w.lo = std::min(w.lo, w.hi);
  LaurentSeries r(*a.field_, w, exact);
  r.terms_ = a.terms_;
  for (const auto& [k, c] : b.terms_) r.insert(k, c);
  r.drop_unknown();
  return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_field(a, b);
  const std::int64_t lo = checked::add(a.window_.lo, b.window_.lo);
  if ((a.exact_ && a.is_zero()) || (b.exact_ && b.is_zero()))
    return LaurentSeries(*a.field_, Window{lo, std::max(lo, std::max(a.window_.hi, b.window_.hi))}, true);

  const bool exact = a.exact_ && b.exact_;
  Window w{lo, 0};
  if (exact) {
    w.hi = checked::sub(checked::add(a.window_.hi, b.window_.hi), 1);
  } else {
    // a = A + O(t^ha), b = B + O(t^hb): ab is known modulo t^min(ha + v(b), hb + v(a))
    auto lower = [](const LaurentSeries& s) { return s.is_zero() ? s.window_.hi : s.terms_.begin()->first; };
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    std::int64_t ha = a.exact_ ? kInf : checked::add(a.window_.hi, lower(b));
    std::int64_t hb = b.exact_ ? kInf : checked::add(b.window_.hi, lower(a));
    w.hi = std::min(ha, hb);
  }
  w.lo = std::min(w.lo, w.hi);
  LaurentSeries r(*a.field_, w, exact);
  for (const auto& [i, x] : a.terms_) {
    for (const auto& [j, y] : b.terms_) {
      const std::int64_t k = checked::add(i, j);
      if (!exact && k >= w.hi) break;
      r.insert(k, x * y);
    }
  }
  r.drop_unknown();
  return r;
}

LaurentSeries LaurentSeries::frobenius() const {
  const std::int64_t p = field_->p();
  Window w{std::min(window_.lo, checked::mul(window_.lo, p)), 0};
  if (exact_) w.hi = std::max(window_.hi, checked::add(checked::mul(window_.hi - 1, p), 1));
  else w.hi = checked::mul(window_.hi, p);
  w.lo = std::min(w.lo, w.hi);
  LaurentSeries r(*field_, w, exact_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k * p, c.frobenius());
  r.drop_unknown();
  return r;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.field_ == b.field_ && a.window_ == b.window_ && a.exact_ == b.exact_ && a.terms_ == b.terms_;
}

bool agree(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.field_ != b.field_) return false;
  auto known = [&](std::int64_t k) { return a.knows(k) && b.knows(k); };
  for (const auto& [k, c] : a.terms_)
    if (known(k) && b.coeff(k) != c) return false;
  for (const auto& [k, c] : b.terms_)
    if (known(k) && a.coeff(k) != c) return false;
  return true;
}

std::string LaurentSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool unit = c.is_one();
    if (!unit || k == 0) os << c.str();
    if (k != 0) {
      if (!unit) os << '*';
      os << "t";
      if (k != 1) os << '^' << k;
    }
  }
  if (first) os << '0';
  if (!exact_) os << " + O(t^" << window_.hi << ')';
  return os.str();
}

LaurentSeries frobenius_minus_one(const LaurentSeries& x) { return x.frobenius() - x; }

}  // namespace astoric
