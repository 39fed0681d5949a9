#include "astoric/herbrand.hpp"

#include <algorithm>

#include "astoric/errors.hpp"

namespace astoric {

HerbrandFunction::HerbrandFunction(std::uint32_t p, std::vector<Rational> breakpoints, std::vector<Rational> slopes)
    : p_(p), breakpoints_(std::move(breakpoints)), slopes_(std::move(slopes)) {
  if (p_ < 2) throw InvalidInput("Herbrand function needs a prime p");
  if (slopes_.size() != breakpoints_.size() + 1)
    throw InvalidInput("Herbrand function needs one more slope than breakpoints");
  if (slopes_[0] != Rational(1)) throw InvalidInput("Herbrand function must start with slope 1");
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i].sign() <= 0) throw InvalidInput("breakpoints must be positive");
    if (i > 0 && !(breakpoints_[i - 1] < breakpoints_[i]))
      throw InvalidInput("breakpoints must be strictly increasing");
    Rational ratio = slopes_[i] / slopes_[i + 1];
    if (!ratio.is_integer() || ratio.num() < static_cast<std::int64_t>(p_))
      throw InvalidInput("slope must drop by a power of p at breakpoint " + breakpoints_[i].str());
    std::int64_t r = ratio.num();
    while (r % p_ == 0) r /= p_;
    if (r != 1) throw InvalidInput("slope must drop by a power of p at breakpoint " + breakpoints_[i].str());
  }
}

HerbrandFunction HerbrandFunction::identity(std::uint32_t p) { return HerbrandFunction(p, {}, {Rational(1)}); }

HerbrandFunction HerbrandFunction::single_break(const Rational& m, std::uint32_t p) {
  if (m.sign() <= 0) throw InvalidInput("single-break Herbrand function needs m > 0");
  return HerbrandFunction(p, {m}, {Rational(1), Rational(1, p)});
}

Rational HerbrandFunction::phi(const Rational& x) const {
  if (x.sign() < 0) throw InvalidInput("phi is defined on [0, inf), got " + x.str());
  Rational y = 0, start = 0;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (x <= breakpoints_[i]) return y + slopes_[i] * (x - start);
    y += slopes_[i] * (breakpoints_[i] - start);
    start = breakpoints_[i];
  }
  return y + slopes_.back() * (x - start);
}

Rational HerbrandFunction::psi(const Rational& target) const {
  if (target.sign() < 0) throw InvalidInput("psi is defined on [0, inf), got " + target.str());
  Rational y = 0, start = 0;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    Rational next = y + slopes_[i] * (breakpoints_[i] - start);
    if (target <= next) return start + (target - y) / slopes_[i];
    y = next;
    start = breakpoints_[i];
  }
  return start + (target - y) / slopes_.back();
}

Rational HerbrandFunction::slope_after(const Rational& x) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return slopes_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

HerbrandFunction phi_compose(const HerbrandFunction& outer, const HerbrandFunction& inner) {
  if (outer.p() != inner.p()) throw InvalidInput("composing Herbrand functions for different primes");
  std::vector<Rational> candidates = inner.breakpoints();
  for (const auto& b : outer.breakpoints()) candidates.push_back(inner.psi(b));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Rational> points;
  std::vector<Rational> slopes{Rational(1)};
  for (const auto& x : candidates) {
    Rational s = outer.slope_after(inner.phi(x)) * inner.slope_after(x);
    if (s != slopes.back()) {
      points.push_back(x);
      slopes.push_back(s);
    }
  }
  return HerbrandFunction(outer.p(), std::move(points), std::move(slopes));
}

BreakValue break_compose(const BreakValue& b_base, const BreakValue& b_rel, const HerbrandFunction& phi_base) {
  if (b_rel.is_minus_infinity()) return b_base;
  return max(b_base, BreakValue(phi_base.phi(b_rel.value())));
}

Rational tower_break_bound(std::int64_t d, const Rational& ell) {
  if (d < 1) throw InvalidInput("tower depth must be positive");
  if (ell.sign() < 0) throw InvalidInput("valuation bound must be nonnegative");
  return Rational(d) * ell;
}

}  // namespace astoric
