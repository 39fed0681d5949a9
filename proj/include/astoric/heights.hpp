#pragma once

#include <optional>
#include <vector>

#include "astoric/cone.hpp"
#include "astoric/extended.hpp"
#include "astoric/laurent_series.hpp"
#include "astoric/toric_algebra.hpp"

namespace astoric {

/// An Artin-Schreier datum over a cone together with the functionals that
/// measure it.
struct HeightQuery {
  ToricDatum datum;
  LinearFunctional lambda;
  /// Vertices of a rational polytope U in the dual cone (or a finite sample).
  std::optional<std::vector<LinearFunctional>> vertices;
};

/// The one-variable parameter of a datum on a linear cone with primitive
/// generator v0: c [k v0] becomes c t^{-k}.
LaurentSeries specialize_to_series(const ToricDatum& datum);

/// (d'/m_lambda) * b, where b is the highest break of the specialized
/// series (0 when split or unramified). The datum's cone must be linear and
/// lambda positive on it.
Rational c_lambda_linear(const ToricDatum& datum, const LinearFunctional& lambda);

/// max of lambda(w) over the support of the reduced datum, 0 without
/// nonconstant support. Requires lambda > 0 on the cone's rays and on the
/// support.
Rational h_lambda_as(const ToricDatum& datum, const LinearFunctional& lambda);
inline Rational h_lambda_as(const HeightQuery& q) { return h_lambda_as(q.datum, q.lambda); }

/// max over the given vertices of h_lambda; each vertex must be a nonzero
/// element of the dual cone.
Rational h_U_as(const ToricDatum& datum, const std::vector<LinearFunctional>& vertices);
Rational h_U_as(const HeightQuery& q);

struct HeightSplit {
  bool holds;
  Rational whole;   // h_lambda of the datum
  Rational by_ray;  // max over the listed linear cones of h_lambda of the restriction
};

/// Compares h_lambda with the maximum over ray restrictions. Every nonzero
/// support point of the reduced datum must lie on one of the rays.
HeightSplit height_splits_check(const ToricDatum& datum, const LinearFunctional& lambda, const std::vector<Cone>& rays);

/// Strong-height axioms checked on a pair of torsors x1, x2 and every
/// F_p-combination of them. At the level of Z/p-torsors the compositum of
/// x1 and x2 is measured by its largest subtorsor.
struct HeightAxioms {
  bool direct_sum;  // h(x1 (+) x2) <= max(h(x1), h(x2))
  bool tensor;      // h(x1 + x2) <= max(h(x1), h(x2))
  bool subcover;    // every subtorsor of the compositum has smaller height
  bool bounded;     // presentations over V give h <= max lambda(V)
  bool finite;      // h <= l puts the reduced support in {lambda <= l}
  bool all() const { return direct_sum && tensor && subcover && bounded && finite; }
};

HeightAxioms check_strong_height_axioms(const ToricDatum& x1, const ToricDatum& x2, const LinearFunctional& lambda);

}  // namespace astoric
