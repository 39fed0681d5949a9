#pragma once

#include <compare>
#include <optional>
#include <string>

#include "astoric/errors.hpp"
#include "astoric/rational.hpp"

namespace astoric {

/// A value of T or the sentinel +infinity. Used for valuations, where the
/// zero element has valuation +inf and must never collide with an integer.
template <class T>
class OrInfinity {
 public:
  OrInfinity(T v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static OrInfinity infinity() { return OrInfinity(); }

  bool is_infinite() const { return !value_.has_value(); }
  const T& value() const {
    if (!value_) throw InvalidInput("valuation is +infinity");
    return *value_;
  }

  friend bool operator==(const OrInfinity&, const OrInfinity&) = default;
  friend std::strong_ordering operator<=>(const OrInfinity& a, const OrInfinity& b) {
    if (a.is_infinite() || b.is_infinite())
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    return *a.value_ <=> *b.value_;
  }

  std::string str() const;

 private:
  OrInfinity() = default;
  std::optional<T> value_;
};

template <class T>
std::string OrInfinity<T>::str() const {
  if (is_infinite()) return "inf";
  if constexpr (std::is_same_v<T, Rational>) return value_->str();
  else return std::to_string(*value_);
}

/// Highest break of an etale algebra: either -infinity (split, "not a field")
/// or a nonnegative rational.
class BreakValue {
 public:
  BreakValue(Rational v) : value_(v) {  // NOLINT(google-explicit-constructor)
    if (v.sign() < 0) throw InvalidInput("break value must be nonnegative, got " + v.str());
  }
  BreakValue(std::int64_t v) : BreakValue(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  static BreakValue minus_infinity() { return BreakValue(); }

  bool is_minus_infinity() const { return !value_.has_value(); }
  const Rational& value() const {
    if (!value_) throw InvalidInput("break value is -infinity");
    return *value_;
  }
  /// The value clamped at 0: the highest break in the sense where split
  /// algebras count as having break 0.
  Rational or_zero() const { return value_.value_or(Rational(0)); }

  friend bool operator==(const BreakValue&, const BreakValue&) = default;
  friend std::strong_ordering operator<=>(const BreakValue& a, const BreakValue& b) {
    if (a.is_minus_infinity() || b.is_minus_infinity())
      return static_cast<int>(!a.is_minus_infinity()) <=> static_cast<int>(!b.is_minus_infinity());
    return *a.value_ <=> *b.value_;
  }

  /// "-inf" or the rational string.
  std::string str() const { return value_ ? value_->str() : "-inf"; }
  static BreakValue parse(const std::string& s) {
    if (s == "-inf") return minus_infinity();
    return BreakValue(Rational::parse(s));
  }

 private:
  BreakValue() = default;
  std::optional<Rational> value_;
};

inline BreakValue max(const BreakValue& a, const BreakValue& b) { return a < b ? b : a; }

}  // namespace astoric
