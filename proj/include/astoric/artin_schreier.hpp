#pragma once

#include <optional>

#include "astoric/extended.hpp"
#include "astoric/finite_field.hpp"
#include "astoric/laurent_series.hpp"

namespace astoric {

/// y with y^p - y = b in F_q, the least one by index; empty when Tr(b) != 0.
std::optional<FqElem> fq_solve_artin_schreier(const FqElem& b);

/// Canonical representative of a modulo (F-1) k((t)).
///
/// `reduced` is a Laurent polynomial supported on negative exponents prime
/// to p plus possibly a constant (the least element of its class in
/// coker(F-1, F_q)). `witness` satisfies a - reduced = witness^p - witness
/// exactly on the polar and constant parts and modulo t^hi on the tail.
struct ASNormalForm {
  LaurentSeries reduced;
  BreakValue m;
  LaurentSeries witness;
  bool split;
};

/// Throws PrecisionExhausted when the constant term of a is not known.
ASNormalForm as_reduce(const LaurentSeries& a);

/// Highest break of k((t))[z]/(z^p - z - a): -inf when split, 0 when
/// unramified and nonsplit, otherwise minus the valuation of the reduced
/// parameter (never divisible by p).
BreakValue as_break(const LaurentSeries& a);

struct TorsorComparison {
  bool isomorphic;
  /// y with a1 - a2 = y^p - y (within the common precision) when isomorphic.
  std::optional<LaurentSeries> witness;
};

TorsorComparison torsor_isomorphic(const LaurentSeries& a1, const LaurentSeries& a2);

}  // namespace astoric
