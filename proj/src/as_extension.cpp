#include "astoric/as_extension.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "astoric/artin_schreier.hpp"
#include "astoric/errors.hpp"
#include "astoric/herbrand.hpp"

namespace astoric {

ASExtension::ASExtension(LaurentSeries parameter) : parameter_(std::move(parameter)) {
  if (!parameter_.is_zero()) {
    const std::int64_t v = parameter_.valuation().value();
    if (v < 0 && (-v) % static_cast<std::int64_t>(p()) != 0) m_ = -v;
  }
}

std::int64_t ASExtension::m() const {
  if (!ramified())
    throw InvalidInput("extension parameter " + parameter_.str() +
                       " is not a ramified presentation (need valuation -m with m > 0, p not dividing m)");
  return m_;
}

namespace {

LaurentSeries zero_series(const ASExtension& base) {
  return LaurentSeries(base.field(), base.parameter().window(), true);
}

void require_same_base(const ExtElem& x, const ExtElem& y) {
  if (x.base() != y.base() && !(x.base()->parameter() == y.base()->parameter()))
    throw InvalidInput("extension elements over different bases");
}

}  // namespace

ExtElem::ExtElem(ExtBase base) : base_(std::move(base)) {
  coeffs_.assign(base_->p(), zero_series(*base_));
}

ExtElem::ExtElem(ExtBase base, std::vector<LaurentSeries> coeffs) : base_(std::move(base)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != base_->p())
    throw InvalidInput("extension element needs exactly p = " + std::to_string(base_->p()) + " coefficients, got " +
                       std::to_string(coeffs_.size()));
  for (const auto& c : coeffs_)
    if (&c.field() != &base_->field()) throw InvalidInput("extension coefficient over a different field");
}

ExtElem ExtElem::z(ExtBase base) {
  ExtElem r(base);
  r.coeffs_[1 % base->p()] = LaurentSeries::monomial(base->field().one(), 0, base->parameter().window());
  return r;
}

ExtElem ExtElem::from_base(ExtBase base, const LaurentSeries& c) {
  ExtElem r(std::move(base));
  r.coeffs_[0] = c;
  return r;
}

ExtElem ExtElem::monomial(ExtBase base, const FqElem& c, std::uint32_t i, std::int64_t j) {
  if (i >= base->p()) throw InvalidInput("monomial z-degree must be below p");
  ExtElem r(base);
  Window w = base->parameter().window();
  w.lo = std::min(w.lo, j);
  w.hi = std::max(w.hi, j + 1);
  r.coeffs_[i] = LaurentSeries::monomial(c, j, w);
  return r;
}

bool ExtElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentSeries& c) { return c.is_zero(); });
}

ExtElem ExtElem::operator-() const {
  ExtElem r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ExtElem operator+(const ExtElem& x, const ExtElem& y) {
  require_same_base(x, y);
  ExtElem r = x;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += y.coeffs_[i];
  return r;
}

ExtElem operator-(const ExtElem& x, const ExtElem& y) { return x + (-y); }

ExtElem operator*(const ExtElem& x, const ExtElem& y) {
  require_same_base(x, y);
  const std::size_t p = x.base_->p();
  const LaurentSeries& a = x.base_->parameter();
  std::vector<LaurentSeries> wide(2 * p - 1, zero_series(*x.base_));
  for (std::size_t i = 0; i < p; ++i) {
    if (x.coeffs_[i].is_zero() && x.coeffs_[i].exact()) continue;
    for (std::size_t j = 0; j < p; ++j) {
      if (y.coeffs_[j].is_zero() && y.coeffs_[j].exact()) continue;
      wide[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  // z^k = z^{k-p} (z + a) for k >= p, from the top down
  for (std::size_t k = 2 * p - 2; k >= p; --k) {
    if (wide[k].is_zero() && wide[k].exact()) continue;
    wide[k - p + 1] += wide[k];
    wide[k - p] += wide[k] * a;
  }
  wide.erase(wide.begin() + static_cast<std::ptrdiff_t>(p), wide.end());
  return ExtElem(x.base_, std::move(wide));
}

ExtElem ExtElem::pow(std::uint64_t n) const {
  ExtElem r = from_base(base_, LaurentSeries::monomial(base_->field().one(), 0, base_->parameter().window()));
  ExtElem b = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) r = r * b;
    if (n > 1) b = b * b;
  }
  return r;
}

ExtElem ExtElem::frobenius() const {
  // (sum c_i z^i)^p = sum c_i^p (z^p)^i and z^p = z + a
  const std::uint32_t p = base_->p();
  ExtElem zp = z(base_) + from_base(base_, base_->parameter());
  ExtElem power = from_base(base_, LaurentSeries::monomial(base_->field().one(), 0, base_->parameter().window()));
  ExtElem r(base_);
  for (std::uint32_t i = 0; i < p; ++i) {
    if (!(coeffs_[i].is_zero() && coeffs_[i].exact())) r += from_base(base_, coeffs_[i].frobenius()) * power;
    if (i + 1 < p) power = power * zp;
  }
  return r;
}

ExtElem ExtElem::truncated(std::int64_t hi) const {
  ExtElem r = *this;
  for (auto& c : r.coeffs_) c = c.truncated(hi);
  return r;
}

bool agree(const ExtElem& x, const ExtElem& y) {
  if (x.coeffs_.size() != y.coeffs_.size()) return false;
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
    if (!agree(x.coeffs_[i], y.coeffs_[i])) return false;
  return true;
}

std::string ExtElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero() && coeffs_[i].exact()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << coeffs_[i].str() << ')';
    if (i > 0) os << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (first) os << '0';
  return os.str();
}

namespace {

struct Term {
  std::uint32_t i;
  std::int64_t j;
  FqElem c;
  std::int64_t v;
};

std::int64_t monomial_valuation(std::int64_t p, std::int64_t m, std::uint32_t i, std::int64_t j) {
  return checked::sub(checked::mul(p, j), checked::mul(static_cast<std::int64_t>(i), m));
}

// Every coefficient must know all exponents whose monomials have v_E <= 0.
void require_polar_precision(const ExtElem& x) {
  const std::int64_t p = x.base()->p(), m = x.base()->m();
  for (std::uint32_t i = 0; i < x.coeffs().size(); ++i) {
    const LaurentSeries& c = x.coeff(i);
    const std::int64_t last = (static_cast<std::int64_t>(i) * m) / p;  // largest j with p*j - i*m <= 0
    if (!c.knows(last))
      throw PrecisionExhausted("coefficient of z^" + std::to_string(i) + " is known only below t^" +
                               std::to_string(c.window().hi) + ", need t^" + std::to_string(last));
  }
}

// Least-valued monomial among the polar terms of the z^0 coefficient, if any.
std::optional<Term> lowest_eliminable(const ExtElem& x) {
  const LaurentSeries& c0 = x.coeff(0);
  if (c0.is_zero() || c0.terms().begin()->first >= 0) return std::nullopt;
  const auto& [j, c] = *c0.terms().begin();
  return Term{0, j, c, checked::mul(static_cast<std::int64_t>(x.base()->p()), j)};
}

FqElem leading_coefficient_at(const ExtElem& x, std::uint32_t i, std::int64_t j) { return x.coeff(i).coeff(j); }

std::int64_t cap_of(const ExtElem& x) {
  std::int64_t cap = std::numeric_limits<std::int64_t>::max();
  for (const auto& c : x.coeffs()) cap = std::min(cap, c.window().hi);
  return cap;
}

}  // namespace

std::int64_t ext_valuation(const ExtElem& x) {
  const std::int64_t p = x.base()->p(), m = x.base()->m();
  std::optional<std::int64_t> best;
  for (std::uint32_t i = 0; i < x.coeffs().size(); ++i) {
    const LaurentSeries& c = x.coeff(i);
    if (c.is_zero()) continue;
    const std::int64_t v = monomial_valuation(p, m, i, c.valuation().value());
    if (!best || v < *best) best = v;
  }
  if (!best) throw InvalidInput("valuation of the zero element");
  return *best;
}

ExtReduction ext_as_reduce(const ExtElem& b) {
  const ExtBase& base = b.base();
  const std::int64_t p = base->p(), m = base->m();
  const FiniteField& field = base->field();
  require_polar_precision(b);

  ExtElem reduced = b;
  ExtElem witness(base);

  // Polar monomials with v_E divisible by p all sit in the z^0 slot (i*m is
  // prime to p otherwise). Trade each for x = gamma z^r t^s with
  // v_E(x) = v/p, choosing gamma so x^p has the same leading term.
  while (auto lead = lowest_eliminable(reduced)) {
    const std::int64_t target = lead->j;  // v_E(x) = p*j / p
    std::int64_t r = 0;
    while ((r * m + target) % p != 0) ++r;  // r*m = -target mod p, 0 <= r < p
    const std::int64_t s = (target + r * m) / p;
    ExtElem unit = ExtElem::monomial(base, field.one(), static_cast<std::uint32_t>(r), s);
    ExtElem unit_p = unit.frobenius();
    const FqElem lc = leading_coefficient_at(unit_p, 0, lead->j);
    if (lc.is_zero()) throw std::logic_error("p-th power of a monomial lost its leading term");
    const FqElem gamma = (lead->c / lc).pth_root();
    ExtElem x = ExtElem::monomial(base, gamma, static_cast<std::uint32_t>(r), s);
    reduced -= x.frobenius() - x;
    witness += x;
    require_polar_precision(reduced);
  }

  // Positive tail: split off the terms with v_E > 0.
  ExtElem tail(base);
  {
    std::vector<LaurentSeries> head_coeffs, tail_coeffs;
    for (std::uint32_t i = 0; i < reduced.coeffs().size(); ++i) {
      const LaurentSeries& c = reduced.coeff(i);
      std::vector<std::pair<std::int64_t, FqElem>> keep, move;
      for (const auto& [j, v] : c.terms())
        (monomial_valuation(p, m, i, j) > 0 ? move : keep).emplace_back(j, v);
      Window w = c.window();
      head_coeffs.emplace_back(field, keep, w, true);
      tail_coeffs.emplace_back(field, move, w, c.exact());
    }
    tail = ExtElem(base, std::move(tail_coeffs));
    const bool inexact = std::any_of(reduced.coeffs().begin(), reduced.coeffs().end(),
                                     [](const LaurentSeries& c) { return !c.exact(); });
    reduced = ExtElem(base, std::move(head_coeffs));
    if (!tail.is_zero() || inexact) {
      const std::int64_t cap = cap_of(tail);
      ExtElem sum = ExtElem(base).truncated(cap);
      ExtElem power = tail.truncated(cap);
      while (!power.is_zero()) {
        sum += power;
        power = power.frobenius().truncated(cap);
      }
      witness -= sum;
    }
  }

  // Constant slot.
  const FqElem c0 = reduced.coeff(0).coeff(0);
  const FqElem rep = field.coset_representative(c0);
  if (c0 != rep) {
    auto y = field.solve_artin_schreier(c0 - rep);
    if (!y) throw std::logic_error("constant and its coset representative differ in trace");
    reduced -= ExtElem::monomial(base, c0 - rep, 0, 0);
    witness += ExtElem::monomial(base, *y, 0, 0);
  }

  BreakValue rel = BreakValue::minus_infinity();
  if (!reduced.is_zero()) {
    const std::int64_t v = ext_valuation(reduced);
    rel = v < 0 ? BreakValue(-v) : BreakValue(0);
  }
  return ExtReduction{rel, std::move(reduced), std::move(witness)};
}

ExtElem rebase(const ExtElem& b, const ExtBase& new_base, const LaurentSeries& shift) {
  const std::uint32_t p = new_base->p();
  if (b.base()->p() != p) throw InvalidInput("rebasing across different primes");
  ExtElem generator = ExtElem::z(new_base) + ExtElem::from_base(new_base, shift);
  ExtElem power = ExtElem::from_base(new_base, LaurentSeries::monomial(new_base->field().one(), 0,
                                                                      new_base->parameter().window()));
  ExtElem r(new_base);
  for (std::uint32_t i = 0; i < p; ++i) {
    const LaurentSeries& c = b.coeff(i);
    if (!(c.is_zero() && c.exact())) r += ExtElem::from_base(new_base, c) * power;
    if (i + 1 < p) power = power * generator;
  }
  return r;
}

BreakValue tower2_break(const LaurentSeries& a, const ExtElem& b) {
  if (!agree(a, b.base()->parameter()))
    throw InvalidInput("second-level parameter is written over a different first-level presentation");
  ASNormalForm first = as_reduce(a);
  if (first.m.is_minus_infinity() || first.m.value().sign() == 0)
    throw InvalidInput("first level is " + std::string(first.split ? "split" : "unramified") +
                       "; only ramified first levels are supported (split it with as_reduce first)");
  // a - a_red = w^p - w, so z_red = z - w generates the reduced presentation.
  ExtBase reduced_base = make_extension(first.reduced);
  ExtElem b_red = rebase(b, reduced_base, first.witness);
  ExtReduction second = ext_as_reduce(b_red);
  return break_compose(first.m, second.relative_break, phi_single(first.m.value(), reduced_base->p()));
}

}  // namespace astoric
