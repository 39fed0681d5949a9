#include <doctest.h>

#include <algorithm>

#include "astoric/artin_schreier.hpp"
#include "astoric/errors.hpp"
#include "astoric/heights.hpp"
#include "support/oracles.hpp"
#include "support/sampling.hpp"

using namespace astoric;

namespace {

using Terms = std::vector<std::pair<LatticePoint, FqElem>>;

const FiniteField& F2() { return FiniteField::get(2, 1); }

ToricDatum datum(const Cone& c, const Terms& terms, const FiniteField& f = F2(), std::int64_t box = 8) {
  return ToricDatum(f, c, box, terms);
}

ToricDatum random_reduced(sampling::Rng& rng, const FiniteField& f, const Cone& c, std::int64_t box, int terms) {
  std::vector<LatticePoint> pts;
  for (const auto& v : box_points(c, box))
    if (!is_zero(v) && !divisible_by(v, f.p())) pts.push_back(v);
  std::map<LatticePoint, FqElem> chosen;
  for (int i = 0; i < terms && !pts.empty(); ++i)
    chosen.insert_or_assign(pts[static_cast<std::size_t>(sampling::uniform(rng, 0, pts.size() - 1))],
                            sampling::nonzero_element(rng, f));
  if (sampling::uniform(rng, 0, 1))
    chosen.insert_or_assign(LatticePoint(c.dim(), 0), f.coset_representative(sampling::element(rng, f)));
  return ToricDatum(f, c, box, Terms(chosen.begin(), chosen.end()));
}

RationalVector positive_functional(sampling::Rng& rng, std::size_t n) {
  RationalVector l(n);
  for (auto& x : l) x = Rational(sampling::uniform(rng, 1, 6), sampling::uniform(rng, 1, 3));
  return l;
}

}  // namespace

TEST_SUITE("heights") {

TEST_CASE("normalized break on a linear cone, listed cases") {
  const ToricDatum a = datum(Cone::ray(LatticePoint{1, 0}), {{{3, 0}, F2().one()}});
  CHECK(c_lambda_linear(a, LinearFunctional{1, 1}) == Rational(3));
  const ToricDatum b = datum(Cone::ray(LatticePoint{1, 1}), {{{1, 1}, F2().one()}});
  CHECK(c_lambda_linear(b, LinearFunctional{1, 1}) == Rational(1));
  CHECK(c_lambda_linear(datum(Cone::ray(LatticePoint{1, 1}), {}), LinearFunctional{1, 1}) == Rational(0));
  CHECK_THROWS_AS(c_lambda_linear(b, LinearFunctional{1, -1}), InvalidInput);
  CHECK_THROWS_AS(c_lambda_linear(datum(Cone::nonnegative_orthant(2), {}), LinearFunctional{1, 1}), InvalidInput);
}

TEST_CASE("specialization sends k v0 to t^-k") {
  const FiniteField& f = FiniteField::get(3, 1);
  const ToricDatum x = datum(Cone::ray(LatticePoint{2, 1}), {{{4, 2}, f.element(2)}, {{0, 0}, f.one()}}, f);
  const LaurentSeries s = specialize_to_series(x);
  CHECK(oracle::sparse_of(s) == oracle::SparseSeries{{-2, 2}, {0, 1}});
}

TEST_CASE("h_lambda, listed cases") {
  const Cone q = Cone::nonnegative_orthant(2);
  CHECK(h_lambda_as(datum(q, {{{3, 1}, F2().one()}}), LinearFunctional{1, 1}) == Rational(4));
  CHECK(h_lambda_as(datum(q, {}), LinearFunctional{1, 1}) == Rational(0));
  CHECK(h_lambda_as(datum(q, {{{1, 0}, F2().one()}, {{0, 1}, F2().one()}}), LinearFunctional{2, 3}) == Rational(3));
  // reduces first: [(2,0)] is the class of [(1,0)]
  CHECK(h_lambda_as(datum(q, {{{2, 0}, F2().one()}}), LinearFunctional{1, 1}) == Rational(1));
  CHECK_THROWS_AS(h_lambda_as(datum(q, {{{1, 0}, F2().one()}}), LinearFunctional{0, 1}), InvalidInput);
  const HeightQuery hq{datum(q, {{{3, 1}, F2().one()}}), LinearFunctional{1, 1}, std::nullopt};
  CHECK(h_lambda_as(hq) == Rational(4));
}

TEST_CASE("h_U, listed cases") {
  const Cone q = Cone::nonnegative_orthant(2);
  const ToricDatum x = datum(q, {{{1, 0}, F2().one()}});
  CHECK(h_U_as(x, {LinearFunctional{1, 1}}) == h_lambda_as(x, LinearFunctional{1, 1}));
  CHECK(h_U_as(x, {LinearFunctional{1, 1}, LinearFunctional{2, 1}, LinearFunctional{1, 2}, LinearFunctional{2, 2}}) ==
        Rational(2));
  CHECK(h_U_as(datum(q, {}), {LinearFunctional{1, 1}, LinearFunctional{3, 1}}) == Rational(0));
  CHECK_THROWS_AS(h_U_as(x, {LinearFunctional{-1, 1}}), InvalidInput);
  CHECK_THROWS_AS(h_U_as(x, {}), InvalidInput);
  const HeightQuery hq{x, LinearFunctional{1, 1}, std::vector<LinearFunctional>{LinearFunctional{5, 1}}};
  CHECK(h_U_as(hq) == Rational(5));
}

TEST_CASE("height splitting, listed cases") {
  const Cone q = Cone::nonnegative_orthant(2);
  const Cone e1 = Cone::ray(LatticePoint{1, 0}), e2 = Cone::ray(LatticePoint{0, 1});
  const HeightSplit a = height_splits_check(datum(q, {{{1, 0}, F2().one()}, {{0, 1}, F2().one()}}), LinearFunctional{1, 1}, {e1, e2});
  CHECK(a.holds);
  CHECK(a.whole == Rational(1));
  CHECK(a.by_ray == Rational(1));
  const HeightSplit b = height_splits_check(datum(q, {{{2, 1}, F2().one()}}), LinearFunctional{1, 1}, {Cone::ray(LatticePoint{2, 1})});
  CHECK(b.holds);
  CHECK(b.whole == Rational(3));
  const HeightSplit c = height_splits_check(datum(q, {}), LinearFunctional{1, 1}, {});
  CHECK(c.holds);
  CHECK(c.whole == Rational(0));
  CHECK_THROWS_AS(height_splits_check(datum(q, {{{1, 1}, F2().one()}}), LinearFunctional{1, 1}, {e1, e2}), InvalidInput);
  CHECK_THROWS_AS(height_splits_check(datum(q, {}), LinearFunctional{1, 1}, {q}), InvalidInput);
}

TEST_CASE("h_lambda matches the oracle and splits over support rays") {
  sampling::Rng rng(83);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 2}, {3, 1}}) {
    const FiniteField& f = FiniteField::get(p, e);
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t n = static_cast<std::size_t>(sampling::uniform(rng, 1, 3));
      const Cone c = Cone::nonnegative_orthant(n);
      // an arbitrary (not reduced) datum
      std::map<LatticePoint, FqElem> t;
      for (const auto& v : box_points(c, 6))
        if (sampling::uniform(rng, 0, 9) == 0) t.insert_or_assign(v, sampling::element(rng, f));
      const ToricDatum x(f, c, 6, Terms(t.begin(), t.end()));
      const RationalVector l = positive_functional(rng, n);
      CHECK(h_lambda_as(x, LinearFunctional(l)) == oracle::max_height(x, l));

      std::vector<Cone> rays;
      const auto nf = coker_normal_form(x);
      for (const auto& [v, c0] : nf.reduced.terms())
        if (!is_zero(v)) rays.push_back(Cone::ray(v));
      const HeightSplit s = height_splits_check(x, LinearFunctional(l), rays);
      CHECK(s.holds);
      CHECK(s.whole == s.by_ray);
    }
  }
}

TEST_CASE("monotone in lambda and never raised by restriction") {
  sampling::Rng rng(89);
  for (int trial = 0; trial < 120; ++trial) {
    const FiniteField& f = sampling::uniform(rng, 0, 1) ? F2() : FiniteField::get(3, 1);
    const std::size_t n = static_cast<std::size_t>(sampling::uniform(rng, 1, 3));
    const Cone c = Cone::nonnegative_orthant(n);
    const ToricDatum x = random_reduced(rng, f, c, 5, 5);
    const RationalVector kappa = positive_functional(rng, n);
    RationalVector lambda = kappa;
    for (auto& v : lambda) v += Rational(sampling::uniform(rng, 0, 3), 2);
    // lambda >= kappa on the rays e_i
    CHECK(h_lambda_as(x, LinearFunctional(lambda)) >= h_lambda_as(x, LinearFunctional(kappa)));

    const std::size_t i = static_cast<std::size_t>(sampling::uniform(rng, 0, n - 1));
    LatticePoint ei(n, 0);
    ei[i] = 1;
    for (const Cone& tau : {Cone::ray(ei), Cone::origin(n)})
      CHECK(h_lambda_as(restrict_as(x, tau), LinearFunctional(lambda)) <= h_lambda_as(x, LinearFunctional(lambda)));
  }
}

TEST_CASE("linear cones: h = b lambda(v0) and c_lambda m_lambda / d' = b") {
  sampling::Rng rng(97);
  for (int trial = 0; trial < 150; ++trial) {
    const FiniteField& f = FiniteField::get(sampling::uniform(rng, 0, 1) ? 2 : 3, static_cast<std::uint32_t>(sampling::uniform(rng, 1, 2)));
    const std::int64_t p = f.p();
    const std::size_t n = static_cast<std::size_t>(sampling::uniform(rng, 1, 3));
    LatticePoint v0(n);
    RationalVector l(n);
    do {
      for (auto& x : v0) x = sampling::uniform(rng, -3, 3);
      for (auto& x : l) x = Rational(sampling::uniform(rng, -4, 4), sampling::uniform(rng, 1, 3));
    } while (is_zero(v0) || dot(l, v0).sign() <= 0);
    v0 = primitive_vector(v0);
    const Cone t = Cone::ray(v0);
    std::map<LatticePoint, FqElem> chosen;
    std::int64_t b = 0;
    for (std::int64_t k = 1; k <= 7; ++k) {
      if (k % p == 0 || sampling::uniform(rng, 0, 2) != 0) continue;
      LatticePoint v = v0;
      for (auto& x : v) x *= k;
      chosen.insert_or_assign(v, sampling::nonzero_element(rng, f));
      b = k;
    }
    const ToricDatum x(f, t, 21, Terms(chosen.begin(), chosen.end()));
    const LinearFunctional lambda(l);
    const Rational m = Rational(1) / oracle::min_positive_value(l, n == 3 ? 8 : 12);
    const Rational d = m * lambda(v0);
    REQUIRE(d.is_integer());
    const Rational d_prime(oracle::prime_to(d.num(), p));
    CHECK(c_lambda_linear(x, lambda) == d_prime / m * Rational(b));
    CHECK(c_lambda_linear(x, lambda) * m / d_prime == as_break(specialize_to_series(x)).or_zero());
    if (d.num() % p != 0) CHECK(h_lambda_as(x, lambda) == Rational(b) * lambda(v0));
  }
}

TEST_CASE("strong-height axioms on sampled pairs") {
  sampling::Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const FiniteField& f = sampling::uniform(rng, 0, 1) ? FiniteField::get(2, 2) : FiniteField::get(3, 1);
    const std::size_t n = static_cast<std::size_t>(sampling::uniform(rng, 1, 2));
    const Cone c = Cone::nonnegative_orthant(n);
    const ToricDatum x1 = random_reduced(rng, f, c, 5, 4), x2 = random_reduced(rng, f, c, 5, 4);
    const RationalVector l = positive_functional(rng, n);
    const HeightAxioms ax = check_strong_height_axioms(x1, x2, LinearFunctional(l));
    CHECK(ax.direct_sum);
    CHECK(ax.tensor);
    CHECK(ax.subcover);
    CHECK(ax.bounded);
    CHECK(ax.finite);
    CHECK(ax.all());
    // independent check of the tensor axiom
    CHECK(oracle::max_height(x1 + x2, l) <= std::max(oracle::max_height(x1, l), oracle::max_height(x2, l)));
  }
}

}  // TEST_SUITE
