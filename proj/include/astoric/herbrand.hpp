#pragma once

#include <cstdint>
#include <vector>

#include "astoric/extended.hpp"
#include "astoric/rational.hpp"

namespace astoric {

/// Piecewise-linear Herbrand function phi on [0, inf) with phi(0) = 0.
///
/// The slope is 1 up to the first breakpoint and drops by a positive power
/// of p at every breakpoint. A single Artin-Schreier step contributes a drop
/// of exactly p; composing towers can make two steps coincide, giving p^2.
class HerbrandFunction {
 public:
  static HerbrandFunction identity(std::uint32_t p);
  /// phi(x) = x for x <= m, m + (x - m)/p beyond.
  static HerbrandFunction single_break(const Rational& m, std::uint32_t p);
  /// Explicit data; slopes.size() == breakpoints.size() + 1, slopes[0] == 1.
  HerbrandFunction(std::uint32_t p, std::vector<Rational> breakpoints, std::vector<Rational> slopes);

  std::uint32_t p() const { return p_; }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& slopes() const { return slopes_; }

  Rational phi(const Rational& x) const;
  /// Inverse of phi. Throws InvalidInput for y < 0.
  Rational psi(const Rational& y) const;

  /// Slope on the segment starting at x (right derivative).
  Rational slope_after(const Rational& x) const;

  friend bool operator==(const HerbrandFunction&, const HerbrandFunction&) = default;

 private:
  std::uint32_t p_;
  std::vector<Rational> breakpoints_;
  std::vector<Rational> slopes_;
};

inline HerbrandFunction phi_single(const Rational& m, std::uint32_t p) { return HerbrandFunction::single_break(m, p); }

/// outer o inner. For a tower F < E < E' this is phi_{E/F} o phi_{E'/E}.
HerbrandFunction phi_compose(const HerbrandFunction& outer, const HerbrandFunction& inner);

inline Rational psi_eval(const HerbrandFunction& f, const Rational& y) { return f.psi(y); }

/// max{b_base, phi_base(b_rel)}; a split relative level leaves b_base.
BreakValue break_compose(const BreakValue& b_base, const BreakValue& b_rel, const HerbrandFunction& phi_base);

/// Upper bound d*l on the highest break of a depth-d tower whose parameters
/// all have valuation >= -l over the base.
Rational tower_break_bound(std::int64_t d, const Rational& ell);

}  // namespace astoric
