#include "astoric/heights.hpp"

#include <algorithm>

#include "astoric/artin_schreier.hpp"
#include "astoric/errors.hpp"

namespace astoric {

namespace {

// k with v = k * v0, k >= 0
std::int64_t multiple_of(const LatticePoint& v, const LatticePoint& v0) {
  std::size_t i = 0;
  while (v0[i] == 0) ++i;
  if (v[i] % v0[i] != 0) throw InvalidInput("support point is not on the linear cone");
  const std::int64_t k = v[i] / v0[i];
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != checked::mul(k, v0[j])) throw InvalidInput("support point is not on the linear cone");
  if (k < 0) throw InvalidInput("support point is not on the linear cone");
  return k;
}

void require_positive(const ToricDatum& datum, const LinearFunctional& lambda) {
  if (lambda.dim() != datum.dim()) throw InvalidInput("functional has the wrong dimension");
  auto bad = [&](const auto& v) { return !is_zero(v) && lambda(v).sign() <= 0; };
  if (datum.cone().has_rays())
    for (const auto& r : *datum.cone().rays())
      if (bad(r)) throw InvalidInput("functional is not in the interior of the dual cone");
  for (const auto& [v, c] : datum.terms())
    if (bad(v)) throw InvalidInput("functional is not positive on the support");
}

Rational max_over_support(const ToricDatum& reduced, const LinearFunctional& lambda) {
  Rational best = 0;
  for (const auto& [v, c] : reduced.terms())
    if (!is_zero(v)) best = std::max(best, lambda(v));
  return best;
}

}  // namespace

LaurentSeries specialize_to_series(const ToricDatum& datum) {
  const LatticePoint v0 = datum.cone().primitive_generator();
  std::vector<std::pair<std::int64_t, FqElem>> terms;
  std::int64_t lo = kDefaultWindow.lo;
  for (const auto& [v, c] : datum.terms()) {
    const std::int64_t k = multiple_of(v, v0);
    terms.emplace_back(-k, c);
    lo = std::min(lo, -k);
  }
  return LaurentSeries(datum.field(), terms, Window{lo, kDefaultWindow.hi}, true);
}

Rational c_lambda_linear(const ToricDatum& datum, const LinearFunctional& lambda) {
  const LatticeIndex index = lattice_index(lambda, datum.cone(), datum.field().p());
  const Rational b = as_break(specialize_to_series(datum)).or_zero();
  return Rational(index.d_prime) / m_lambda(lambda) * b;
}

Rational h_lambda_as(const ToricDatum& datum, const LinearFunctional& lambda) {
  require_positive(datum, lambda);
  return max_over_support(coker_normal_form(datum).reduced, lambda);
}

Rational h_U_as(const ToricDatum& datum, const std::vector<LinearFunctional>& vertices) {
  if (vertices.empty()) throw InvalidInput("U needs at least one vertex");
  const ToricDatum reduced = coker_normal_form(datum).reduced;
  Rational best = 0;
  for (const auto& lambda : vertices) {
    if (lambda.dim() != datum.dim()) throw InvalidInput("vertex of U has the wrong dimension");
    if (lambda.is_zero()) throw InvalidInput("U contains the zero functional");
    auto negative = [&](const auto& v) { return lambda(v).sign() < 0; };
    if (datum.cone().has_rays())
      for (const auto& r : *datum.cone().rays())
        if (negative(r)) throw InvalidInput("vertex of U is outside the dual cone");
    for (const auto& [v, c] : datum.terms())
      if (negative(v)) throw InvalidInput("vertex of U is negative on the support");
    best = std::max(best, max_over_support(reduced, lambda));
  }
  return best;
}

Rational h_U_as(const HeightQuery& q) {
  if (!q.vertices) return h_lambda_as(q.datum, q.lambda);
  return h_U_as(q.datum, *q.vertices);
}

HeightSplit height_splits_check(const ToricDatum& datum, const LinearFunctional& lambda, const std::vector<Cone>& rays) {
  for (const auto& t : rays)
    if (!t.is_linear()) throw InvalidInput("height splitting needs linear cones");
  const ToricDatum reduced = coker_normal_form(datum).reduced;
  for (const auto& [v, c] : reduced.terms()) {
    if (is_zero(v)) continue;
    if (std::none_of(rays.begin(), rays.end(), [&](const Cone& t) { return t.contains(v); }))
      throw InvalidInput("support point is not covered by the listed rays");
  }
  HeightSplit out{false, h_lambda_as(reduced, lambda), 0};
  for (const auto& t : rays) out.by_ray = std::max(out.by_ray, h_lambda_as(restrict_as(reduced, t), lambda));
  out.holds = out.whole == out.by_ray;
  return out;
}

HeightAxioms check_strong_height_axioms(const ToricDatum& x1, const ToricDatum& x2, const LinearFunctional& lambda) {
  const FiniteField& field = x1.field();
  auto h = [&](const ToricDatum& x) { return h_lambda_as(x, lambda); };
  const Rational h1 = h(x1), h2 = h(x2);
  const Rational hmax = std::max(h1, h2);

  Rational bound_v = 0;
  for (const auto* x : {&x1, &x2})
    for (const auto& [v, c] : x->terms()) bound_v = std::max(bound_v, lambda(v));

  HeightAxioms ax{true, true, true, true, true};
  Rational compositum = 0;
  std::vector<ToricDatum> combos;
  for (std::uint32_t a = 0; a < field.p(); ++a)
    for (std::uint32_t b = 0; b < field.p(); ++b)
      combos.push_back(x1.scaled(field.from_int(a)) + x2.scaled(field.from_int(b)));
  for (const auto& y : combos) compositum = std::max(compositum, h(y));

  ax.direct_sum = compositum <= hmax;
  ax.tensor = h(x1 + x2) <= hmax;
  for (const auto& y : combos) {
    const Rational hy = h(y);
    if (hy > compositum) ax.subcover = false;
    if (hy > bound_v) ax.bounded = false;
    const ToricNormalForm nf = coker_normal_form(y);
    for (const auto& [w, c] : nf.reduced.terms()) {
      if (is_zero(w)) continue;
      if (divisible_by(w, field.p()) || lambda(w) > hy || !y.cone().contains(w)) ax.finite = false;
    }
  }
  for (std::uint32_t c = 1; c < field.p(); ++c)
    if (h(x1.scaled(field.from_int(c))) != h1) ax.subcover = false;
  return ax;
}

}  // namespace astoric
