#include <doctest.h>

#include <set>

#include "astoric/artin_schreier.hpp"
#include "astoric/errors.hpp"
#include "astoric/finite_field.hpp"
#include "astoric/laurent_series.hpp"
#include "support/oracles.hpp"
#include "support/sampling.hpp"

using namespace astoric;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kFields = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 2}};

LaurentSeries mono(const FiniteField& f, std::int64_t k, std::uint32_t c = 1, Window w = kDefaultWindow) {
  return LaurentSeries::monomial(f.element(c), k, w);
}

bool identity_mod_hi(const LaurentSeries& a, const ASNormalForm& nf) {
  const oracle::NaiveField k(a.field());
  const auto lhs = oracle::sparse_sub(k, oracle::sparse_of(a), oracle::sparse_of(nf.reduced));
  const auto rhs = oracle::wp_series(k, oracle::sparse_of(nf.witness));
  for (const auto& [e, c] : oracle::sparse_sub(k, lhs, rhs))
    if (e < a.window().hi) return false;
  return true;
}

}  // namespace

TEST_SUITE("field_series") {

TEST_CASE("field arithmetic agrees with polynomial arithmetic mod the defining polynomial") {
  for (auto [p, e] : kFields) {
    const FiniteField& f = FiniteField::get(p, e);
    const oracle::NaiveField k(f);
    CHECK(f.q() == k.q);
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      CHECK(f.coords(a) == k.coords(a));
      for (std::uint32_t b = 0; b < f.q(); ++b) {
        CHECK(f.add(a, b) == k.add(a, b));
        CHECK(f.mul(a, b) == k.mul(a, b));
      }
      CHECK(f.frobenius(a) == k.frob(a));
      CHECK(f.pth_root(a) == k.root(a));
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("interned fields are shared") {
  CHECK(&FiniteField::get(2, 2) == &FiniteField::get(2, 2));
  CHECK(&FiniteField::get(2, 2) != &FiniteField::get(2, 1));
  CHECK_THROWS_AS(FiniteField::get(4, 1), InvalidInput);
  CHECK_THROWS_AS(FiniteField::get(2, 0), InvalidInput);
}

TEST_CASE("frobenius is a bijective ring map of order e") {
  for (auto [p, e] : kFields) {
    const FiniteField& f = FiniteField::get(p, e);
    std::set<std::uint32_t> image;
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      const FqElem x = f.element(a);
      image.insert(x.frobenius().index());
      FqElem y = x;
      for (std::uint32_t i = 0; i < e; ++i) y = y.frobenius();
      CHECK(y == x);
      CHECK(x.pth_root().frobenius() == x);
      for (std::uint32_t b = 0; b < f.q(); b += 1 + f.q() / 7) {
        const FqElem z = f.element(b);
        CHECK((x + z).frobenius() == x.frobenius() + z.frobenius());
        CHECK((x * z).frobenius() == x.frobenius() * z.frobenius());
      }
    }
    CHECK(image.size() == f.q());
  }
}

TEST_CASE("artin-schreier in F_q matches exhaustive search") {
  for (auto [p, e] : kFields) {
    const FiniteField& f = FiniteField::get(p, e);
    const oracle::NaiveField k(f);
    for (std::uint32_t b = 0; b < f.q(); ++b) {
      const auto got = fq_solve_artin_schreier(f.element(b));
      const auto want = oracle::solve_as(k, b);
      REQUIRE(got.has_value() == want.has_value());
      if (got) CHECK(got->index() == *want);
      CHECK(got.has_value() == (f.element(b).trace() == 0));
    }
  }
}

TEST_CASE("artin-schreier in F_q, listed cases") {
  const FiniteField& f2 = FiniteField::get(2, 1);
  CHECK(fq_solve_artin_schreier(f2.zero())->is_zero());
  CHECK_FALSE(fq_solve_artin_schreier(f2.one()).has_value());
  const FiniteField& f4 = FiniteField::get(2, 2);
  const auto y = fq_solve_artin_schreier(f4.one());
  REQUIRE(y.has_value());
  CHECK(*y * *y + *y + f4.one() == f4.zero());
}

TEST_CASE("coset representative is the least element with the same trace") {
  for (auto [p, e] : kFields) {
    const FiniteField& f = FiniteField::get(p, e);
    const oracle::NaiveField k(f);
    for (std::uint32_t c = 0; c < f.q(); ++c) {
      const FqElem rep = f.coset_representative(f.element(c));
      std::uint32_t least = f.q();
      for (std::uint32_t y = 0; y < f.q() && least == f.q(); ++y)
        for (std::uint32_t w = 0; w < f.q(); ++w)
          if (k.add(y, k.wp(w)) == c) {
            least = y;
            break;
          }
      CHECK(rep.index() == least);
    }
  }
}

TEST_CASE("series store nothing outside the window and no zero coefficients") {
  const FiniteField& f = FiniteField::get(3, 1);
  const LaurentSeries s(f, {{-2, f.element(1)}, {1, f.zero()}}, Window{-4, 4}, false);
  CHECK(s.terms().size() == 1);
  CHECK_THROWS_AS(LaurentSeries(f, {{5, f.one()}}, Window{-4, 4}, false), InvalidInput);
  CHECK(s.valuation().value() == -2);
  CHECK_FALSE(s.knows(4));
  CHECK(s.knows(3));
  CHECK(LaurentSeries(f).valuation().is_infinite());
  CHECK_THROWS_AS(LaurentSeries(f, {{-9, f.one()}}, Window{-4, 4}), InvalidInput);
}

TEST_CASE("exact times exact stays exact and matches the naive product") {
  sampling::Rng rng(11);
  for (auto [p, e] : kFields) {
    const FiniteField& f = FiniteField::get(p, e);
    const oracle::NaiveField k(f);
    for (int trial = 0; trial < 20; ++trial) {
      const LaurentSeries a = sampling::polynomial(rng, f, -4, 4), b = sampling::polynomial(rng, f, -4, 4);
      const LaurentSeries ab = a * b;
      CHECK(ab.exact());
      oracle::SparseSeries want;
      for (const auto& [i, x] : a.terms())
        for (const auto& [j, y] : b.terms()) oracle::sparse_add(k, want, i + j, k.mul(x.index(), y.index()));
      CHECK(oracle::sparse_of(ab) == want);
    }
  }
}

TEST_CASE("inexact products are known only as far as both factors allow") {
  const FiniteField& f = FiniteField::get(2, 1);
  const LaurentSeries a(f, {{-1, f.one()}}, Window{-8, 3}, false);
  const LaurentSeries b(f, {{-2, f.one()}, {0, f.one()}}, Window{-8, 8}, true);
  const LaurentSeries ab = a * b;
  CHECK_FALSE(ab.exact());
  // a is known mod t^3 and b has valuation -2, so the product is known mod t^1
  CHECK(ab.window().hi == 1);
  CHECK(ab.coeff(-3) == f.one());
  CHECK(ab.coeff(-1) == f.one());
}

TEST_CASE("frobenius minus one, listed cases") {
  const FiniteField& f2 = FiniteField::get(2, 1);
  const LaurentSeries x = frobenius_minus_one(mono(f2, -1));
  CHECK(oracle::sparse_of(x) == oracle::SparseSeries{{-2, 1}, {-1, 1}});
  CHECK(frobenius_minus_one(LaurentSeries(f2)).is_zero());

  const FiniteField& f3 = FiniteField::get(3, 1);
  const LaurentSeries y = frobenius_minus_one(mono(f3, -1));
  CHECK(oracle::sparse_of(y) == oracle::SparseSeries{{-3, 1}, {-1, 2}});
}

TEST_CASE("frobenius scales the precision of an inexact series") {
  const FiniteField& f = FiniteField::get(2, 1);
  const LaurentSeries s(f, {{1, f.one()}}, Window{-4, 5}, false);
  const LaurentSeries fs = s.frobenius();
  CHECK(fs.window().hi == 10);
  CHECK(fs.coeff(2) == f.one());
  // x^p - x is known only where x is
  CHECK(frobenius_minus_one(s).window().hi == 5);
}

TEST_CASE("as_reduce, listed cases") {
  const FiniteField& f = FiniteField::get(2, 1);

  const ASNormalForm a = as_reduce(mono(f, -2));
  CHECK(oracle::sparse_of(a.reduced) == oracle::SparseSeries{{-1, 1}});
  CHECK(a.m == BreakValue(1));
  CHECK(oracle::sparse_of(a.witness) == oracle::SparseSeries{{-1, 1}});

  const ASNormalForm b = as_reduce(mono(f, 3));
  CHECK(b.reduced.is_zero());
  CHECK(b.m.is_minus_infinity());
  CHECK(b.split);

  const ASNormalForm c = as_reduce(mono(f, -3));
  CHECK(oracle::sparse_of(c.reduced) == oracle::SparseSeries{{-3, 1}});
  CHECK(c.m == BreakValue(3));

  const ASNormalForm d = as_reduce(mono(f, 0));
  CHECK(oracle::sparse_of(d.reduced) == oracle::SparseSeries{{0, 1}});
  CHECK(d.m == BreakValue(0));
  CHECK_FALSE(d.split);

  CHECK(as_break(mono(f, -3)) == BreakValue(3));
  CHECK(as_break(mono(f, -2)) == BreakValue(1));
  CHECK(as_break(mono(f, 0)) == BreakValue(0));
}

TEST_CASE("as_reduce needs the constant term") {
  const FiniteField& f = FiniteField::get(2, 1);
  const LaurentSeries a(f, {{-2, f.one()}}, Window{-4, 0}, false);
  CHECK_THROWS_AS(as_reduce(a), PrecisionExhausted);
  CHECK_THROWS_AS(as_break(a), PrecisionExhausted);
}

TEST_CASE("as_reduce properties on random polynomials") {
  sampling::Rng rng(2024);
  for (auto [p, e] : kFields) {
    const FiniteField& f = FiniteField::get(p, e);
    for (int trial = 0; trial < 60; ++trial) {
      const LaurentSeries a = sampling::polynomial(rng, f, -12, 6);
      const ASNormalForm nf = as_reduce(a);
      CAPTURE(a.str());

      for (const auto& [k, c] : nf.reduced.terms()) {
        CHECK(k <= 0);
        if (k < 0) CHECK(k % std::int64_t(p) != 0);
      }
      CHECK(nf.reduced.constant_term() == f.coset_representative(nf.reduced.constant_term()));
      CHECK(nf.split == nf.reduced.is_zero());
      if (!nf.m.is_minus_infinity() && nf.m.value() > 0) {
        CHECK(nf.m.value().num() % p != 0);
        CHECK(nf.m.value() == Rational(-nf.reduced.valuation().value()));
      }
      CHECK(identity_mod_hi(a, nf));

      const ASNormalForm again = as_reduce(nf.reduced);
      CHECK(oracle::sparse_of(again.reduced) == oracle::sparse_of(nf.reduced));
      CHECK(again.m == nf.m);
    }
  }
}

TEST_CASE("as_reduce on inexact input keeps the witness identity below the cap") {
  sampling::Rng rng(5);
  const FiniteField& f = FiniteField::get(3, 2);
  for (int trial = 0; trial < 30; ++trial) {
    LaurentSeries a = sampling::polynomial(rng, f, -9, 9).truncated(7);
    const ASNormalForm nf = as_reduce(a);
    CHECK(identity_mod_hi(a, nf));
  }
}

TEST_CASE("torsor isomorphism, listed cases") {
  const FiniteField& f = FiniteField::get(2, 1);
  const LaurentSeries a = mono(f, -2) + mono(f, 3);
  const TorsorComparison same = torsor_isomorphic(a, a);
  CHECK(same.isomorphic);
  REQUIRE(same.witness.has_value());
  CHECK(same.witness->is_zero());

  const TorsorComparison t = torsor_isomorphic(mono(f, -2), mono(f, -1));
  CHECK(t.isomorphic);
  REQUIRE(t.witness.has_value());
  CHECK(oracle::sparse_of(*t.witness) == oracle::SparseSeries{{-1, 1}});

  CHECK_FALSE(torsor_isomorphic(mono(f, -1), LaurentSeries(f)).isomorphic);
}

TEST_CASE("torsor isomorphism is an equivalence relation that matches exhaustive search") {
  // Window width 8: exponents [-6, 1]. A witness y has polar part in
  // [-3, -1], any constant, and any positive part; positive parts only
  // matter modulo t^1, so they are ignored.
  sampling::Rng rng(77);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 2}, {3, 1}}) {
    const FiniteField& f = FiniteField::get(p, e);
    const oracle::NaiveField k(f);
    const std::int64_t lo = -6, ylo = -6 / std::int64_t(p);
    std::vector<LaurentSeries> xs;
    for (int i = 0; i < 24; ++i) xs.push_back(sampling::polynomial(rng, f, lo, 1));
    for (int i = 0; i < 8; ++i) {
      // plant isomorphic pairs
      LaurentSeries y = sampling::polynomial(rng, f, ylo, 0);
      xs.push_back(xs[i] + frobenius_minus_one(y));
    }
    auto search = [&](const LaurentSeries& a1, const LaurentSeries& a2) {
      oracle::SparseSeries diff = oracle::sparse_sub(k, oracle::sparse_of(a1), oracle::sparse_of(a2));
      const std::int64_t width = 1 - ylo;
      std::uint64_t total = 1;
      for (std::int64_t i = 0; i < width; ++i) total *= k.q;
      for (std::uint64_t code = 0; code < total; ++code) {
        oracle::SparseSeries y;
        std::uint64_t c = code;
        for (std::int64_t ex = ylo; ex <= 0; ++ex, c /= k.q)
          if (c % k.q) y[ex] = static_cast<std::uint32_t>(c % k.q);
        const auto rest = oracle::sparse_sub(k, diff, oracle::wp_series(k, y));
        if (rest.empty() || rest.begin()->first > 0) return true;
      }
      return false;
    };
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j) {
        const TorsorComparison t = torsor_isomorphic(xs[i], xs[j]);
        CHECK(t.isomorphic == search(xs[i], xs[j]));
        CHECK(t.isomorphic == torsor_isomorphic(xs[j], xs[i]).isomorphic);
        if (t.isomorphic) {
          REQUIRE(t.witness.has_value());
          const auto lhs = oracle::sparse_sub(k, oracle::sparse_of(xs[i]), oracle::sparse_of(xs[j]));
          const auto rest = oracle::sparse_sub(k, lhs, oracle::wp_series(k, oracle::sparse_of(*t.witness)));
          // each reduction witness is cut at its own window's cap
          const std::int64_t cap = std::min(xs[i].window().hi, xs[j].window().hi);
          CHECK((rest.empty() || rest.begin()->first >= cap));
          for (std::size_t l = 0; l < xs.size(); ++l)
            if (torsor_isomorphic(xs[j], xs[l]).isomorphic) CHECK(torsor_isomorphic(xs[i], xs[l]).isomorphic);
        }
      }
  }
}

}  // TEST_SUITE
