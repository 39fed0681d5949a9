#include <doctest.h>

#include <algorithm>

#include "astoric/errors.hpp"
#include "astoric/herbrand.hpp"
#include "support/sampling.hpp"

using namespace astoric;

namespace {

// phi by direct integration of the slope function on [0, x]
Rational integrate(const HerbrandFunction& f, const Rational& x) {
  Rational acc = 0, at = 0;
  const auto& bps = f.breakpoints();
  for (std::size_t i = 0; i <= bps.size(); ++i) {
    const Rational end = i < bps.size() ? std::min(bps[i], x) : x;
    if (end > at) {
      acc += (end - at) * f.slopes()[i];
      at = end;
    }
  }
  return acc;
}

std::vector<Rational> grid() {
  std::vector<Rational> xs;
  for (std::int64_t n = 0; n <= 60; ++n) xs.emplace_back(n, 4);
  for (std::int64_t n = 1; n <= 12; ++n) xs.emplace_back(n * 7, 3);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

HerbrandFunction random_phi(sampling::Rng& rng, std::uint32_t p) {
  HerbrandFunction f = HerbrandFunction::identity(p);
  const int depth = static_cast<int>(sampling::uniform(rng, 1, 3));
  for (int i = 0; i < depth; ++i) {
    const Rational m(sampling::uniform(rng, 1, 12), sampling::uniform(rng, 1, 3));
    f = phi_compose(f, phi_single(m, p));
  }
  return f;
}

}  // namespace

TEST_SUITE("ramification") {

TEST_CASE("single break, listed values") {
  CHECK(phi_single(1, 2).phi(1) == Rational(1));
  CHECK(phi_single(1, 2).phi(3) == Rational(2));
  CHECK(phi_single(3, 3).phi(9) == Rational(5));
  CHECK(phi_single(1, 2).psi(2) == Rational(3));
  CHECK(HerbrandFunction::identity(2).psi(5) == Rational(5));
}

TEST_CASE("composition, listed values") {
  const HerbrandFunction g = phi_compose(phi_single(1, 2), phi_single(3, 2));
  CHECK(g.phi(3) == Rational(2));
  CHECK(g.phi(7) == Rational(3));
  const HerbrandFunction f = phi_single(Rational(5, 2), 3);
  CHECK(phi_compose(HerbrandFunction::identity(3), f) == f);
  CHECK(phi_compose(f, HerbrandFunction::identity(3)) == f);
}

TEST_CASE("break composition, listed values") {
  CHECK(break_compose(BreakValue(1), BreakValue(3), phi_single(1, 2)) == BreakValue(2));
  CHECK(break_compose(BreakValue(1), BreakValue::minus_infinity(), phi_single(1, 2)) == BreakValue(1));
  CHECK(break_compose(BreakValue(0), BreakValue(0), HerbrandFunction::identity(2)) == BreakValue(0));
}

TEST_CASE("tower bound, listed values") {
  CHECK(tower_break_bound(1, 3) == Rational(3));
  CHECK(tower_break_bound(2, 3) == Rational(6));
  CHECK(tower_break_bound(3, 0) == Rational(0));
}

TEST_CASE("psi rejects negative arguments and malformed data is refused") {
  CHECK_THROWS_AS(phi_single(1, 2).psi(-1), InvalidInput);
  CHECK_THROWS_AS(phi_single(0, 2), InvalidInput);
  CHECK_THROWS_AS(HerbrandFunction(2, {Rational(1)}, {Rational(1), Rational(1, 3)}), InvalidInput);
  CHECK_THROWS_AS(HerbrandFunction(2, {Rational(2), Rational(1)}, {Rational(1), Rational(1, 2), Rational(1, 4)}),
                  InvalidInput);
}

TEST_CASE("phi is the integral of its slopes, increasing, identity below the first break") {
  sampling::Rng rng(3);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const HerbrandFunction f = random_phi(rng, p);
      CHECK(f.phi(0) == Rational(0));
      Rational prev = -1;
      for (const Rational& x : grid()) {
        const Rational y = f.phi(x);
        CHECK(y == integrate(f, x));
        CHECK(y > prev);
        CHECK(y <= x);
        prev = y;
        if (f.breakpoints().empty() || x <= f.breakpoints().front()) CHECK(y == x);
        CHECK(f.psi(y) == x);
      }
      for (std::size_t i = 1; i < f.slopes().size(); ++i) {
        const Rational drop = f.slopes()[i - 1] / f.slopes()[i];
        CHECK(drop.is_integer());
        CHECK(drop.num() % p == 0);
      }
    }
  }
}

TEST_CASE("composition is associative and evaluates as nested application") {
  sampling::Rng rng(8);
  for (std::uint32_t p : {2u, 3u}) {
    for (int trial = 0; trial < 25; ++trial) {
      const HerbrandFunction f = random_phi(rng, p), g = random_phi(rng, p), h = random_phi(rng, p);
      const HerbrandFunction left = phi_compose(phi_compose(f, g), h);
      const HerbrandFunction right = phi_compose(f, phi_compose(g, h));
      for (const Rational& x : grid()) {
        CHECK(left.phi(x) == right.phi(x));
        CHECK(left.phi(x) == f.phi(g.phi(h.phi(x))));
      }
    }
  }
}

TEST_CASE("depth-two breaks stay below twice the polar depth") {
  // base break m <= l; a second parameter c with v_{E_0}(c) >= -l has
  // v_E(c) >= -p l, so its relative break is at most p l
  for (std::uint32_t p : {2u, 3u}) {
    for (std::int64_t ell = 1; ell <= 6; ++ell)
      for (std::int64_t m = 1; m <= ell; ++m) {
        if (m % p == 0) continue;
        for (std::int64_t r = 1; r <= static_cast<std::int64_t>(p) * ell; ++r) {
          const BreakValue b = break_compose(BreakValue(m), BreakValue(r), phi_single(m, p));
          CHECK(b.value() == std::max(Rational(m), phi_single(m, p).phi(r)));
          CHECK(b.value() <= tower_break_bound(2, ell));
        }
      }
  }
}

}  // TEST_SUITE
