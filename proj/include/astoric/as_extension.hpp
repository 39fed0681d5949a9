#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "astoric/extended.hpp"
#include "astoric/laurent_series.hpp"

namespace astoric {

/// E = k((t))[z]/(z^p - z - a) for a fixed parameter a.
///
/// Ring arithmetic works for any a. Valuation and reduction additionally
/// need a "ramified presentation": v(a) = -m with m > 0 and p not dividing
/// m. Then v_E(t) = p, v_E(z) = -m, and distinct monomials t^j z^i
/// (0 <= i < p) have distinct valuations p*j - i*m.
class ASExtension {
 public:
  explicit ASExtension(LaurentSeries parameter);

  const LaurentSeries& parameter() const { return parameter_; }
  const FiniteField& field() const { return parameter_.field(); }
  std::uint32_t p() const { return parameter_.field().p(); }

  bool ramified() const { return m_ > 0; }
  /// Break of the base extension; throws unless ramified().
  std::int64_t m() const;

 private:
  LaurentSeries parameter_;
  std::int64_t m_ = 0;
};

using ExtBase = std::shared_ptr<const ASExtension>;

inline ExtBase make_extension(LaurentSeries parameter) {
  return std::make_shared<const ASExtension>(std::move(parameter));
}

/// sum_{i<p} c_i z^i in E.
class ExtElem {
 public:
  explicit ExtElem(ExtBase base);
  ExtElem(ExtBase base, std::vector<LaurentSeries> coeffs);

  static ExtElem z(ExtBase base);
  static ExtElem from_base(ExtBase base, const LaurentSeries& c);
  /// c * t^j * z^i
  static ExtElem monomial(ExtBase base, const FqElem& c, std::uint32_t i, std::int64_t j);

  const ExtBase& base() const { return base_; }
  const std::vector<LaurentSeries>& coeffs() const { return coeffs_; }
  const LaurentSeries& coeff(std::uint32_t i) const { return coeffs_.at(i); }
  bool is_zero() const;

  ExtElem operator-() const;
  friend ExtElem operator+(const ExtElem& x, const ExtElem& y);
  friend ExtElem operator-(const ExtElem& x, const ExtElem& y);
  friend ExtElem operator*(const ExtElem& x, const ExtElem& y);
  ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
  ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
  ExtElem pow(std::uint64_t n) const;
  /// x^p = sum c_i^p (z + a)^i.
  ExtElem frobenius() const;
  ExtElem truncated(std::int64_t hi) const;

  /// True when all coefficients agree where both sides are known.
  friend bool agree(const ExtElem& x, const ExtElem& y);

  std::string str() const;

 private:
  ExtBase base_;
  std::vector<LaurentSeries> coeffs_;
};

/// Product in E: polynomial product with z^p rewritten as z + a.
inline ExtElem ext_mul(const ExtElem& x, const ExtElem& y) { return x * y; }

/// Normalized valuation with v_E(t) = p, v_E(z) = -m. Needs a ramified base
/// and a nonzero element.
std::int64_t ext_valuation(const ExtElem& x);

struct ExtReduction {
  BreakValue relative_break;
  ExtElem reduced;
  ExtElem witness;  // b - reduced = witness^p - witness
};

/// Canonical reduction of b modulo (F-1)E: polar terms of v_E-value
/// divisible by p are traded for p-th roots, positive-valuation terms are
/// killed by the geometric series, and the constant goes to its coset
/// representative. The relative break is then read off the leading term.
ExtReduction ext_as_reduce(const ExtElem& b);

/// Re-express b (written in z over its base) over new_base, where the new
/// generator is z' = z - shift; i.e. returns sum c_i (z' + shift)^i.
ExtElem rebase(const ExtElem& b, const ExtBase& new_base, const LaurentSeries& shift);

/// Highest break of the depth-2 tower k((t)) < E < E[z2]/(z2^p - z2 - b),
/// with E = k((t))[z]/(z^p - z - a) and b written over that presentation.
/// The first level must be ramified (m > 0).
BreakValue tower2_break(const LaurentSeries& a, const ExtElem& b);

}  // namespace astoric
