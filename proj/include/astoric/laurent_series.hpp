#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "astoric/extended.hpp"
#include "astoric/finite_field.hpp"

namespace astoric {

/// Half-open exponent interval [lo, hi).
struct Window {
  std::int64_t lo = -64;
  std::int64_t hi = 64;
  friend bool operator==(const Window&, const Window&) = default;
};

inline constexpr Window kDefaultWindow{-64, 64};

/// A Laurent series over F_q with finitely many stored terms.
///
/// Every stored exponent lies in [lo, hi) and nothing is stored below lo.
/// An inexact series is known only modulo t^hi: terms at exponents >= hi are
/// unknown. An exact series is a Laurent polynomial; its hi is merely a frame
/// enclosing the support and grows as arithmetic requires.
class LaurentSeries {
 public:
  using Terms = std::map<std::int64_t, FqElem>;

  explicit LaurentSeries(const FiniteField& field, Window window = kDefaultWindow, bool exact = true);
  LaurentSeries(const FiniteField& field, const std::vector<std::pair<std::int64_t, FqElem>>& terms,
                Window window = kDefaultWindow, bool exact = true);

  static LaurentSeries monomial(const FqElem& c, std::int64_t exponent, Window window = kDefaultWindow,
                                bool exact = true);

  const FiniteField& field() const { return *field_; }
  Window window() const { return window_; }
  bool exact() const { return exact_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  FqElem coeff(std::int64_t k) const;
  /// Least stored exponent, +inf for the zero series.
  OrInfinity<std::int64_t> valuation() const;
  /// Largest stored exponent; requires a nonzero series.
  std::int64_t degree() const;

  /// Terms at exponents >= precision() are unknown (none for an exact series).
  bool knows(std::int64_t exponent) const { return exact_ || exponent < window_.hi; }

  LaurentSeries polar_part() const;     // exponents < 0
  LaurentSeries positive_part() const;  // exponents > 0
  FqElem constant_term() const { return coeff(0); }

  /// Forget everything at exponents >= hi; the result is inexact.
  LaurentSeries truncated(std::int64_t hi) const;
  LaurentSeries with_window(Window w) const;

  LaurentSeries operator-() const;
  LaurentSeries scaled(const FqElem& c) const;
  /// Multiply by t^k.
  LaurentSeries shifted(std::int64_t k) const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }

  /// x -> x^p. Exponents scale by p, coefficients go through Frobenius, and
  /// the precision of an inexact series scales by p as well.
  LaurentSeries frobenius() const;

  /// Structural equality: same field, window, exactness and terms.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  /// True when a and b agree on every exponent both of them know.
  friend bool agree(const LaurentSeries& a, const LaurentSeries& b);

  /// e.g. "t^-2 + [0,1]*t + O(t^64)"
  std::string str() const;

 private:
  void insert(std::int64_t k, const FqElem& c);
  void drop_unknown();

  const FiniteField* field_;
  Window window_;
  bool exact_;
  Terms terms_;
};

/// x^p - x with soundly narrowed precision.
LaurentSeries frobenius_minus_one(const LaurentSeries& x);

}  // namespace astoric
