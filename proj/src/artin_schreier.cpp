#include "astoric/artin_schreier.hpp"

#include "astoric/errors.hpp"

namespace astoric {

std::optional<FqElem> fq_solve_artin_schreier(const FqElem& b) { return b.field().solve_artin_schreier(b); }

namespace {

// -(b + b^p + b^{p^2} + ...) modulo t^cap, for b with positive valuation.
// The result c satisfies c^p - c = b modulo t^cap.
LaurentSeries tail_witness(const LaurentSeries& b, std::int64_t cap) {
  LaurentSeries sum = LaurentSeries(b.field(), b.window(), false).truncated(cap);
  LaurentSeries power = b.truncated(cap);
  while (!power.is_zero()) {
    sum += power;
    power = power.frobenius().truncated(cap);
  }
  return -sum;
}

}  // namespace

ASNormalForm as_reduce(const LaurentSeries& a) {
  const FiniteField& field = a.field();
  const std::int64_t p = field.p();
  if (!a.knows(0))
    throw PrecisionExhausted("the window of a ends at t^" + std::to_string(a.window().hi) +
                             ", so its constant term is unknown");

  const Window window = a.window();
  LaurentSeries reduced(field, window, true);
  LaurentSeries witness(field, window, true);

  // Polar part: replace c t^{-pn} by c^{1/p} t^{-n}; that difference is
  // r^p - r for r = c^{1/p} t^{-n}. Walking upward, each new term lands
  // at a larger exponent and is visited later.
  LaurentSeries::Terms polar;
  for (const auto& [k, c] : a.terms()) {
    if (k >= 0) break;
    polar.emplace(k, c);
  }
  LaurentSeries::Terms collected;
  for (auto it = polar.begin(); it != polar.end(); it = polar.erase(it)) {
    const auto [k, c] = *it;
    if (k % p != 0) {
      collected.emplace(k, c);
      continue;
    }
    const FqElem root = c.pth_root();
    const std::int64_t n = k / p;
    auto slot = polar.find(n);
    if (slot == polar.end()) polar.emplace(n, root);
    else if ((slot->second += root).is_zero()) polar.erase(slot);
    witness += LaurentSeries::monomial(root, n, window);
  }

  // Constant: move to the canonical coset representative.
  const FqElem c0 = a.coeff(0);
  const FqElem rep = field.coset_representative(c0);
  if (auto y = field.solve_artin_schreier(c0 - rep)) {
    if (!y->is_zero()) witness += LaurentSeries::monomial(*y, 0, window);
  } else {
    throw std::logic_error("constant term and its coset representative differ in trace");
  }

  std::vector<std::pair<std::int64_t, FqElem>> kept(collected.begin(), collected.end());
  if (!rep.is_zero()) kept.emplace_back(0, rep);
  reduced = LaurentSeries(field, kept, Window{window.lo, std::max<std::int64_t>(window.hi, 1)}, true);

  // Positive tail: killed by the geometric series, truncated at the cap.
  LaurentSeries tail = a.positive_part();
  if (!tail.is_zero() || !a.exact()) witness += tail_witness(tail, window.hi);

  BreakValue m = BreakValue::minus_infinity();
  if (!reduced.is_zero()) {
    const std::int64_t v = reduced.valuation().value();
    m = v < 0 ? BreakValue(-v) : BreakValue(0);
  }
  const bool split = reduced.is_zero();
  return ASNormalForm{std::move(reduced), m, std::move(witness), split};
}

BreakValue as_break(const LaurentSeries& a) { return as_reduce(a).m; }

TorsorComparison torsor_isomorphic(const LaurentSeries& a1, const LaurentSeries& a2) {
  if (&a1.field() != &a2.field()) throw InvalidInput("torsor parameters over different fields");
  ASNormalForm n1 = as_reduce(a1);
  ASNormalForm n2 = as_reduce(a2);
  if (n1.reduced.terms() != n2.reduced.terms()) return {false, std::nullopt};
  return {true, n1.witness - n2.witness};
}

}  // namespace astoric
