#include "astoric/toric_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "astoric/errors.hpp"

namespace astoric {

namespace {

constexpr std::uint64_t kMaxBoxPoints = 1ull << 28;

bool in_box(const LatticePoint& v, std::int64_t box) {
  return std::all_of(v.begin(), v.end(), [&](std::int64_t c) { return c >= -box && c <= box; });
}

std::string point_str(const LatticePoint& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

LatticePoint divide(const LatticePoint& v, std::int64_t p) {
  LatticePoint u(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] / p;
  return u;
}

std::vector<FqElem> constant_class_representatives(const FiniteField& field) {
  std::vector<std::optional<FqElem>> reps(field.p());
  std::uint32_t found = 0;
  for (std::uint32_t i = 0; i < field.q() && found < field.p(); ++i) {
    auto& slot = reps[field.trace(i)];
    if (!slot) {
      slot = field.element(i);
      ++found;
    }
  }
  std::vector<FqElem> out;
  for (auto& r : reps) out.push_back(*r);
  return out;
}

}  // namespace

ToricDatum::ToricDatum(const FiniteField& field, Cone cone, std::int64_t box)
    : field_(&field), cone_(std::move(cone)), box_(box) {
  if (box_ < 0) throw InvalidInput("box bound must be nonnegative");
}

ToricDatum::ToricDatum(const FiniteField& field, Cone cone, std::int64_t box,
                       const std::vector<std::pair<LatticePoint, FqElem>>& terms)
    : ToricDatum(field, std::move(cone), box) {
  for (const auto& [v, c] : terms) {
    if (&c.field() != field_) throw InvalidInput("coefficient from a different field");
    if (v.size() != dim()) throw InvalidInput("lattice point " + point_str(v) + " has the wrong dimension");
    if (!cone_.contains(v)) throw InvalidInput("lattice point " + point_str(v) + " is not in the cone");
    if (!in_box(v, box_)) throw InvalidInput("lattice point " + point_str(v) + " is outside the box");
    insert(v, c);
  }
}

void ToricDatum::insert(const LatticePoint& v, const FqElem& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(v);
  if (it == terms_.end()) {
    terms_.emplace(v, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FqElem ToricDatum::coeff(const LatticePoint& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? field_->zero() : it->second;
}

ToricDatum ToricDatum::nonconstant_part() const {
  ToricDatum r = *this;
  r.terms_.erase(LatticePoint(dim(), 0));
  return r;
}

ToricDatum ToricDatum::with_box(std::int64_t b) const {
  ToricDatum r = *this;
  r.box_ = std::max(box_, b);
  return r;
}

ToricDatum ToricDatum::operator-() const {
  ToricDatum r(*field_, cone_, box_);
  for (const auto& [v, c] : terms_) r.terms_.emplace(v, -c);
  return r;
}

ToricDatum ToricDatum::scaled(const FqElem& k) const {
  ToricDatum r(*field_, cone_, box_);
  if (k.is_zero()) return r;
  for (const auto& [v, c] : terms_) r.terms_.emplace(v, c * k);
  return r;
}

ToricDatum operator+(const ToricDatum& a, const ToricDatum& b) {
  if (a.field_ != b.field_) throw InvalidInput("toric data over different fields");
  if (a.dim() != b.dim()) throw InvalidInput("toric data of different dimensions");
  ToricDatum r = a;
  r.box_ = std::max(a.box_, b.box_);
  for (const auto& [v, c] : b.terms_) r.insert(v, c);
  return r;
}

ToricDatum operator-(const ToricDatum& a, const ToricDatum& b) { return a + (-b); }

ToricDatum ToricDatum::frobenius() const {
  const std::int64_t p = field_->p();
  ToricDatum r(*field_, cone_, checked::mul(box_, p));
  for (const auto& [v, c] : terms_) {
    LatticePoint w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = checked::mul(v[i], p);
    r.terms_.emplace(std::move(w), c.frobenius());
  }
  return r;
}

bool ToricDatum::is_reduced() const {
  for (const auto& [v, c] : terms_) {
    if (astoric::is_zero(v)) {
      if (field_->coset_representative(c) != c) return false;
    } else if (divisible_by(v, field_->p())) {
      return false;
    }
  }
  return true;
}

std::string ToricDatum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*" << point_str(v);
  }
  return os.str();
}

ToricDatum frobenius_minus_one(const ToricDatum& x) { return x.frobenius() - x; }

ToricNormalForm coker_normal_form(const ToricDatum& x) {
  const FiniteField& field = x.field();
  const std::int64_t p = field.p();
  ToricDatum reduced(field, x.cone(), x.box());
  ToricDatum witness(field, x.cone(), x.box());
  for (const auto& [v, c] : x.terms()) {
    if (is_zero(v)) {
      const FqElem rep = field.coset_representative(c);
      reduced += ToricDatum(field, x.cone(), x.box(), {{v, rep}});
      witness += ToricDatum(field, x.cone(), x.box(), {{v, *field.solve_artin_schreier(c - rep)}});
      continue;
    }
    // c [p^k u] - c^{1/p^k} [u] telescopes into F-1 of sum_i c^{1/p^i} [p^{k-i} u]
    LatticePoint u = v;
    FqElem root = c;
    while (divisible_by(u, p)) {
      u = divide(u, p);
      root = root.pth_root();
      witness += ToricDatum(field, x.cone(), x.box(), {{u, root}});
    }
    reduced += ToricDatum(field, x.cone(), x.box(), {{u, root}});
  }
  return {std::move(reduced), std::move(witness)};
}

ToricDatum restrict_as(const ToricDatum& x, const Cone& tau) {
  if (tau.dim() != x.dim()) throw InvalidInput("restriction cone has the wrong dimension");
  if (tau.has_rays())
    for (const auto& r : *tau.rays())
      if (!x.cone().contains(r)) throw InvalidInput("restriction cone is not contained in the datum's cone");
  std::vector<std::pair<LatticePoint, FqElem>> kept;
  for (const auto& [v, c] : x.terms())
    if (tau.contains(v)) kept.emplace_back(v, c);
  return ToricDatum(x.field(), tau, x.box(), kept);
}

OrInfinity<Rational> v_lambda(const ToricDatum& x, const LinearFunctional& lambda) {
  if (lambda.dim() != x.dim()) throw InvalidInput("functional has the wrong dimension");
  std::optional<Rational> best;
  for (const auto& [v, c] : x.terms()) {
    const Rational val = lambda(v);
    if (!best || val < *best) best = val;
  }
  if (!best) return OrInfinity<Rational>::infinity();
  return *best;
}

std::vector<LatticePoint> box_points(const Cone& sigma, std::int64_t box, Exec exec) {
  if (box < 0) throw InvalidInput("box bound must be nonnegative");
  const std::size_t n = sigma.dim();
  const std::uint64_t side = static_cast<std::uint64_t>(2 * box + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > kMaxBoxPoints / side) throw InvalidInput("box too large to enumerate");
    total *= side;
  }
  auto decode = [&](std::uint64_t idx) {
    LatticePoint v(n);
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<std::int64_t>(idx % side) - box;
      idx /= side;
    }
    return v;
  };

  if (exec == Exec::serial) {
    std::vector<LatticePoint> out;
    for (std::uint64_t i = 0; i < total; ++i) {
      LatticePoint v = decode(i);
      if (sigma.contains(v)) out.push_back(std::move(v));
    }
    return out;
  }

  const std::int64_t chunks = std::max<std::int64_t>(1, std::min<std::int64_t>(static_cast<std::int64_t>(total), 4 * worker_count()));
  std::vector<std::vector<LatticePoint>> parts(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < chunks; ++k) {
    const std::uint64_t begin = total * static_cast<std::uint64_t>(k) / static_cast<std::uint64_t>(chunks);
    const std::uint64_t end = total * static_cast<std::uint64_t>(k + 1) / static_cast<std::uint64_t>(chunks);
    for (std::uint64_t i = begin; i < end; ++i) {
      LatticePoint v = decode(i);
      if (sigma.contains(v)) parts[static_cast<std::size_t>(k)].push_back(std::move(v));
    }
  }
  std::vector<LatticePoint> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

CokerBasis coker_basis_bounded(const Cone& sigma, std::int64_t box, const FiniteField& field, Exec exec) {
  CokerBasis basis{sigma, box, field.p(), {}, constant_class_representatives(field)};
  for (auto& v : box_points(sigma, box, exec))
    if (!is_zero(v) && !divisible_by(v, field.p())) basis.points.push_back(std::move(v));
  return basis;
}

PLimitReport check_p_limit_bounded(const ConeDiagram& diagram, std::int64_t box, const FiniteField& field) {
  const std::size_t n = diagram.target.dim();
  for (const auto& c : diagram.cones)
    if (c.dim() != n) throw InvalidInput("diagram cones must share the target's dimension");

  // nodes: (cone index, basis point), with point = nullopt for the constant slot
  std::vector<CokerBasis> bases;
  for (const auto& c : diagram.cones) bases.push_back(coker_basis_bounded(c, box, field));
  std::vector<std::size_t> offset(bases.size() + 1, 0);
  for (std::size_t i = 0; i < bases.size(); ++i) offset[i + 1] = offset[i] + bases[i].points.size() + 1;
  std::vector<std::size_t> parent(offset.back());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  auto constant_node = [&](std::size_t i) { return offset[i] + bases[i].points.size(); };
  auto point_node = [&](std::size_t i, const LatticePoint& v) -> std::size_t {
    const auto& pts = bases[i].points;
    auto it = std::lower_bound(pts.begin(), pts.end(), v);
    if (it == pts.end() || *it != v)
      throw InvalidInput("arrow target cone is not contained in its source cone at " + point_str(v));
    return offset[i] + static_cast<std::size_t>(it - pts.begin());
  };

  for (const auto& [i, j] : diagram.arrows) {
    if (i >= bases.size() || j >= bases.size()) throw InvalidInput("arrow refers to a missing cone");
    for (const auto& v : bases[j].points) unite(point_node(j, v), point_node(i, v));
    unite(constant_node(j), constant_node(i));
  }

  std::map<LatticePoint, std::set<std::size_t>> classes_at;
  std::set<std::size_t> constant_roots;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (const auto& v : bases[i].points) classes_at[v].insert(find(point_node(i, v)));
    constant_roots.insert(find(constant_node(i)));
  }

  PLimitReport report{false, {}, {}, {}, constant_roots.size()};
  const CokerBasis target = coker_basis_bounded(diagram.target, box, field);
  std::set<LatticePoint> target_points(target.points.begin(), target.points.end());
  for (const auto& v : target.points) {
    auto it = classes_at.find(v);
    if (it == classes_at.end()) report.missing.push_back(v);
    else if (it->second.size() > 1) report.duplicated.push_back(v);
  }
  for (const auto& [v, roots] : classes_at)
    if (!target_points.count(v)) report.extra.push_back(v);
  report.holds = report.missing.empty() && report.extra.empty() && report.duplicated.empty() &&
                 report.constant_classes == 1;
  return report;
}

MapDescriptor MapDescriptor::identity(const Cone& sigma) { return {Kind::identity, sigma, sigma, std::nullopt}; }

MapDescriptor MapDescriptor::inclusion(const Cone& tau, const Cone& sigma) {
  return {Kind::inclusion, tau, sigma, std::nullopt};
}

MapDescriptor MapDescriptor::completion(const Cone& tau, const Cone& sigma, const LinearFunctional& lambda) {
  return {Kind::completion, tau, sigma, lambda};
}

MapDescriptor MapDescriptor::katz() {
  return {Kind::katz, Cone::ray(LatticePoint{-1}), Cone::whole_space(1), LinearFunctional{Rational(1)}};
}

std::string to_string(MapDescriptor::Kind kind) {
  switch (kind) {
    case MapDescriptor::Kind::identity: return "identity";
    case MapDescriptor::Kind::inclusion: return "inclusion";
    case MapDescriptor::Kind::completion: return "completion";
    case MapDescriptor::Kind::katz: return "katz";
  }
  return "?";
}

MapDescriptor::Kind map_kind_from_string(const std::string& s) {
  for (auto k : {MapDescriptor::Kind::identity, MapDescriptor::Kind::inclusion, MapDescriptor::Kind::completion,
                 MapDescriptor::Kind::katz})
    if (to_string(k) == s) return k;
  throw InvalidInput("unsupported map class '" + s + "'");
}

MapProperties check_map_p_properties(const MapDescriptor& map, std::int64_t box, const FiniteField& field) {
  const bool completes = map.kind == MapDescriptor::Kind::completion || map.kind == MapDescriptor::Kind::katz;
  if (map.source.dim() != map.target.dim()) throw InvalidInput("map source and target dimensions differ");
  if (completes) {
    if (!map.lambda) throw InvalidInput("completion map needs a functional");
    if (map.lambda->dim() != map.target.dim()) throw InvalidInput("completion functional has the wrong dimension");
    if (map.lambda->is_zero()) throw InvalidInput("completion along the zero functional");
  }
  if (map.kind == MapDescriptor::Kind::identity && !(map.source == map.target))
    throw InvalidInput("identity map with different source and target");

  auto survives = [&](const LatticePoint& v) { return !completes || (*map.lambda)(v).sign() <= 0; };

  const CokerBasis source = coker_basis_bounded(map.source, box, field);
  const CokerBasis target = coker_basis_bounded(map.target, box, field);
  MapProperties out{true, true, true, {}, {}};
  std::set<LatticePoint> image;
  for (const auto& v : source.points) {
    if (!map.target.contains(v)) throw InvalidInput("source cone is not contained in the target cone");
    if (survives(v)) image.insert(v);
    else out.killed.push_back(v);
  }
  for (const auto& v : target.points)
    if (survives(v) && !image.count(v)) out.uncovered.push_back(v);
  // constants map identically in every supported class
  out.p_injective = out.killed.empty();
  out.p_surjective = out.uncovered.empty();
  out.p_faithful = out.p_injective && out.p_surjective;
  return out;
}

}  // namespace astoric
