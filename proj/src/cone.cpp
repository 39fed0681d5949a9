#include "astoric/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "astoric/errors.hpp"

namespace astoric {

namespace {

void require_dim(const RationalVector& v, std::size_t n) {
  if (v.size() != n)
    throw InvalidInput("dimension mismatch: vector of length " + std::to_string(v.size()) + " in R^" +
                       std::to_string(n));
}

bool satisfies(const Halfspace& h, const RationalVector& v) {
  const Rational x = dot(h.normal, v);
  return h.strict ? x.sign() > 0 : x.sign() >= 0;
}

std::vector<RationalVector> dedupe_directions(std::size_t n, const std::vector<RationalVector>& rays) {
  std::set<LatticePoint> seen;
  std::vector<RationalVector> out;
  for (const auto& r : rays) {
    require_dim(r, n);
    if (is_zero(r)) continue;
    if (seen.insert(primitive_vector(r)).second) out.push_back(r);
  }
  return out;
}

}  // namespace

Cone::Cone(std::size_t n, std::vector<Halfspace> halfspaces, std::optional<std::vector<RationalVector>> rays)
    : n_(n), halfspaces_(std::move(halfspaces)), rays_(std::move(rays)) {
  for (const auto& h : halfspaces_) require_dim(h.normal, n_);
  if (rays_) {
    for (const auto& r : *rays_) {
      require_dim(r, n_);
      if (is_zero(r)) continue;
      for (const auto& h : halfspaces_)
        if (!satisfies(h, r)) throw InvalidInput("cone ray violates one of the cone's halfspaces");
    }
  }
}

Cone Cone::generated_by(std::size_t n, const std::vector<RationalVector>& rays) {
  std::vector<RationalVector> gens = dedupe_directions(n, rays);
  std::vector<Halfspace> hs;
  for (auto& facet : polyhedral_generators(gens, n)) hs.push_back({std::move(facet), false});
  return Cone(n, std::move(hs), std::move(gens));
}

Cone Cone::generated_by(std::size_t n, const std::vector<LatticePoint>& rays) {
  std::vector<RationalVector> r;
  for (const auto& v : rays) r.push_back(to_rational(v));
  return generated_by(n, r);
}

Cone Cone::ray(const LatticePoint& v) { return ray(to_rational(v)); }

Cone Cone::ray(const RationalVector& v) {
  if (is_zero(v)) throw InvalidInput("a linear cone needs a nonzero generator");
  return generated_by(v.size(), std::vector<RationalVector>{v});
}

Cone Cone::whole_space(std::size_t n) {
  std::vector<RationalVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, Rational(0));
    e[i] = 1;
    rays.push_back(e);
    e[i] = -1;
    rays.push_back(e);
  }
  return Cone(n, {}, std::move(rays));
}

Cone Cone::origin(std::size_t n) { return generated_by(n, std::vector<RationalVector>{}); }

Cone Cone::nonnegative_orthant(std::size_t n) {
  std::vector<RationalVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, Rational(0));
    e[i] = 1;
    rays.push_back(e);
  }
  return generated_by(n, rays);
}

bool Cone::contains(const RationalVector& v) const {
  require_dim(v, n_);
  if (is_zero(v)) return true;
  return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const Halfspace& h) { return satisfies(h, v); });
}

bool Cone::contains(const LatticePoint& v) const { return contains(to_rational(v)); }

bool Cone::is_linear() const { return rays_ && dedupe_directions(n_, *rays_).size() == 1 && rays_->size() >= 1; }

LatticePoint Cone::primitive_generator() const {
  if (!is_linear()) throw InvalidInput("cone is not linear (needs exactly one generating ray)");
  for (const auto& r : *rays_)
    if (!is_zero(r)) return primitive_vector(r);
  throw std::logic_error("linear cone without a nonzero ray");
}

std::vector<RationalVector> polyhedral_generators(const std::vector<RationalVector>& rows, std::size_t n) {
  for (const auto& r : rows) require_dim(r, n);
  std::vector<RationalVector> lineality = null_space(rows, n);
  const std::size_t r = n - lineality.size();

  std::set<LatticePoint> seen;
  std::vector<RationalVector> gens;
  auto add = [&](const RationalVector& g) {
    LatticePoint prim = primitive_vector(g);
    if (seen.insert(prim).second) gens.push_back(to_rational(prim));
  };
  for (const auto& l : lineality) {
    add(l);
    RationalVector neg = l;
    for (auto& x : neg) x = -x;
    add(neg);
  }
  if (r == 0) return gens;

  // Extreme rays of the pointed part: r - 1 independent tight rows plus the
  // lineality equations leave a one-dimensional solution space.
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (pick.size() == r - 1) {
      std::vector<RationalVector> eq = lineality;
      for (auto i : pick) eq.push_back(rows[i]);
      auto ns = null_space(eq, n);
      if (ns.size() != 1) return;
      for (int sgn : {1, -1}) {
        RationalVector g = ns[0];
        if (sgn < 0)
          for (auto& x : g) x = -x;
        bool ok = std::all_of(rows.begin(), rows.end(), [&](const RationalVector& a) { return dot(a, g).sign() >= 0; });
        if (ok) add(g);
      }
      return;
    }
    for (std::size_t i = start; i < rows.size(); ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return gens;
}

bool feasible(std::vector<RationalVector> a, std::vector<Rational> b, std::size_t n) {
  if (a.size() != b.size()) throw InvalidInput("inequality system shape mismatch");
  for (const auto& row : a) require_dim(row, n);
  for (std::size_t k = n; k-- > 0;) {
    std::vector<std::size_t> pos, neg;
    std::vector<RationalVector> na;
    std::vector<Rational> nb;
    std::set<std::pair<std::vector<std::pair<std::int64_t, std::int64_t>>, std::pair<std::int64_t, std::int64_t>>> seen;
    auto push = [&](RationalVector row, Rational rhs) {
      // scale so the first nonzero |coefficient| is 1, then drop duplicates
      Rational s = 0;
      for (const auto& x : row)
        if (!x.is_zero()) {
          s = abs(x);
          break;
        }
      if (!s.is_zero()) {
        for (auto& x : row) x /= s;
        rhs /= s;
      }
      std::vector<std::pair<std::int64_t, std::int64_t>> key;
      for (const auto& x : row) key.emplace_back(x.num(), x.den());
      if (!seen.insert({key, {rhs.num(), rhs.den()}}).second) return;
      na.push_back(std::move(row));
      nb.push_back(rhs);
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int s = a[i][k].sign();
      if (s > 0) pos.push_back(i);
      else if (s < 0) neg.push_back(i);
      else push(a[i], b[i]);
    }
    for (auto i : pos)
      for (auto j : neg) {
        const Rational ci = a[i][k], cj = -a[j][k];
        RationalVector row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = cj * a[i][c] + ci * a[j][c];
        row[k] = 0;
        push(std::move(row), cj * b[i] + ci * b[j]);
      }
    a = std::move(na);
    b = std::move(nb);
  }
  return std::all_of(b.begin(), b.end(), [](const Rational& x) { return x.sign() <= 0; });
}

bool cone_contains(const Cone& sigma, const RationalVector& v) { return sigma.contains(v); }
bool cone_contains(const Cone& sigma, const LatticePoint& v) { return sigma.contains(v); }

Cone dual_cone(const Cone& sigma) {
  if (!sigma.has_rays()) throw InvalidInput("dual cone needs the cone's generating rays");
  std::vector<RationalVector> rays = dedupe_directions(sigma.dim(), *sigma.rays());
  std::vector<Halfspace> hs;
  for (const auto& r : rays) hs.push_back({r, false});
  return Cone(sigma.dim(), std::move(hs), polyhedral_generators(rays, sigma.dim()));
}

bool is_very_convex(const Cone& sigma) {
  if (!sigma.has_rays()) throw InvalidInput("very-convexity test needs the cone's generating rays");
  // the dual has interior iff some lambda is positive on every ray;
  // by homogeneity ask for lambda(r) >= 1
  std::vector<RationalVector> rays = dedupe_directions(sigma.dim(), *sigma.rays());
  return feasible(rays, std::vector<Rational>(rays.size(), Rational(1)), sigma.dim());
}

LatticeIndex lattice_index(const LinearFunctional& lambda, const Cone& linear_cone, std::int64_t p) {
  if (lambda.is_zero()) throw InvalidInput("lattice index of the zero functional");
  if (lambda.dim() != linear_cone.dim()) throw InvalidInput("functional and cone have different dimensions");
  const LatticePoint v0 = linear_cone.primitive_generator();
  if (lambda(v0).sign() <= 0) throw InvalidInput("functional is not positive on the linear cone");

  IntMatrix m;
  for (auto& k : kernel_lattice_basis(primitive_vector(lambda.coeffs()))) m.push_back(std::move(k));
  m.push_back(v0);
  std::int64_t d = determinant(m);
  if (d < 0) d = -d;
  std::int64_t d_prime = d;
  while (d_prime % p == 0) d_prime /= p;
  return {d, d_prime};
}

Rational m_lambda(const LinearFunctional& lambda) {
  if (lambda.is_zero()) throw InvalidInput("m_lambda of the zero functional");
  std::int64_t g = 0, l = 1;
  for (const auto& x : lambda.coeffs()) {
    if (x.is_zero()) continue;
    g = gcd64(g, x.num());
    l = checked::mul(l / gcd64(l, x.den()), x.den());
  }
  // lambda(Z^n) = (g / l) Z
  return Rational(l, g);
}

}  // namespace astoric
