#include "astoric/json_io.hpp"

#include "astoric/errors.hpp"

namespace astoric::io {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

const Json& need_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  return j;
}

std::int64_t integer_from(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::uint32_t small_positive(const Json& j, const char* what) {
  const std::int64_t v = integer_from(j, what);
  if (v < 1 || v > (1 << 16)) throw InvalidInput(std::string(what) + " out of range");
  return static_cast<std::uint32_t>(v);
}

Json terms_json(const ToricDatum& x) {
  Json terms = Json::array();
  for (const auto& [v, c] : x.terms()) terms.push_back(Json::array({to_json(v), to_json(c)}));
  return terms;
}

Json points_json(const std::vector<LatticePoint>& pts) {
  Json out = Json::array();
  for (const auto& v : pts) out.push_back(to_json(v));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InvalidInput("rationals are written as strings \"a/b\"");
}

Json to_json(const BreakValue& b) { return b.str(); }
Json to_json(const OrInfinity<Rational>& v) { return v.str(); }

Json to_json(const LatticePoint& v) { return Json(v); }

LatticePoint lattice_point_from(const Json& j) {
  need_array(j, "lattice point");
  LatticePoint v;
  for (const auto& x : j) v.push_back(integer_from(x, "lattice coordinate"));
  return v;
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

RationalVector rational_vector_from(const Json& j) {
  need_array(j, "rational vector");
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from(x));
  return v;
}

Json to_json(const FqElem& c) { return Json(c.coords()); }

FqElem fq_from(const FiniteField& field, const Json& j) {
  need_array(j, "field element");
  if (j.size() > field.e()) throw InvalidInput("field element has more than e coordinates");
  std::vector<std::uint32_t> coords(field.e(), 0);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::int64_t c = integer_from(j[i], "field coordinate");
    if (c < 0 || c >= static_cast<std::int64_t>(field.p())) throw InvalidInput("field coordinate must lie in [0, p)");
    coords[i] = static_cast<std::uint32_t>(c);
  }
  return field.from_coords(coords);
}

const FiniteField& field_from(const Json& j, const Defaults& d) {
  std::optional<std::uint32_t> p = d.p, e = d.e;
  if (j.is_object() && j.contains("p")) p = small_positive(j["p"], "p");
  if (j.is_object() && j.contains("e")) e = small_positive(j["e"], "e");
  if (!p) throw InvalidInput("the characteristic p is not given");
  return FiniteField::get(*p, e.value_or(1));
}

Json to_json(const LaurentSeries& s) {
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms()) terms.push_back(Json::array({k, to_json(c)}));
  return Json{{"p", s.field().p()},
              {"e", s.field().e()},
              {"terms", terms},
              {"window", Json::array({s.window().lo, s.window().hi})},
              {"exact", s.exact()}};
}

LaurentSeries series_from(const Json& j, const Defaults& d) {
  const FiniteField& field = field_from(j, d);
  Window w = d.window;
  if (j.contains("window")) {
    const Json& wj = need_array(j["window"], "window");
    if (wj.size() != 2) throw InvalidInput("window is [lo, hi]");
    w = {integer_from(wj[0], "window bound"), integer_from(wj[1], "window bound")};
  }
  bool exact = true;
  if (j.contains("exact")) {
    if (!j["exact"].is_boolean()) throw InvalidInput("'exact' must be a boolean");
    exact = j["exact"].get<bool>();
  }
  std::vector<std::pair<std::int64_t, FqElem>> terms;
  for (const auto& t : need_array(need(j, "terms"), "terms")) {
    if (!t.is_array() || t.size() != 2) throw InvalidInput("a series term is [exponent, coefficient]");
    terms.emplace_back(integer_from(t[0], "exponent"), fq_from(field, t[1]));
  }
  return LaurentSeries(field, terms, w, exact);
}

Json to_json(const ASNormalForm& nf) {
  return Json{{"reduced", to_json(nf.reduced)},
              {"m", to_json(nf.m)},
              {"witness", to_json(nf.witness)},
              {"split", nf.split}};
}

Json to_json(const HerbrandFunction& f) {
  return Json{{"p", f.p()}, {"breakpoints", to_json(f.breakpoints())}, {"slopes", to_json(f.slopes())}};
}

HerbrandFunction herbrand_from(const Json& j, const Defaults& d) {
  std::optional<std::uint32_t> p = d.p;
  if (j.contains("p")) p = small_positive(j["p"], "p");
  if (!p) throw InvalidInput("the characteristic p is not given");
  RationalVector bps = rational_vector_from(need(j, "breakpoints"));
  RationalVector slopes;
  if (j.contains("slopes")) {
    slopes = rational_vector_from(j["slopes"]);
  } else {
    slopes.push_back(1);
    for (std::size_t i = 0; i < bps.size(); ++i) slopes.push_back(slopes.back() / Rational(*p));
  }
  return HerbrandFunction(*p, std::move(bps), std::move(slopes));
}

Json to_json(const ExtElem& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"base", to_json(x.base()->parameter())}, {"coeffs", coeffs}};
}

ExtElem ext_from(const Json& j, const Defaults& d) {
  const LaurentSeries a = series_from(need(j, "base"), d);
  Defaults inner = d;
  inner.p = a.field().p();
  inner.e = a.field().e();
  inner.window = a.window();
  std::vector<LaurentSeries> coeffs;
  for (const auto& c : need_array(need(j, "coeffs"), "coeffs")) coeffs.push_back(series_from(c, inner));
  if (coeffs.size() > a.field().p()) throw InvalidInput("an extension element has at most p coefficients");
  while (coeffs.size() < a.field().p()) coeffs.emplace_back(a.field(), a.window(), true);
  for (const auto& c : coeffs)
    if (&c.field() != &a.field()) throw InvalidInput("coefficients must live over the base field");
  return ExtElem(make_extension(a), std::move(coeffs));
}

Json to_json(const Cone& c) {
  Json hs = Json::array();
  for (const auto& h : c.halfspaces()) hs.push_back(Json{{"normal", to_json(h.normal)}, {"strict", h.strict}});
  Json out{{"n", c.dim()}, {"halfspaces", hs}};
  if (c.has_rays()) {
    Json rays = Json::array();
    for (const auto& r : *c.rays()) rays.push_back(to_json(r));
    out["rays"] = rays;
  }
  return out;
}

Cone cone_from(const Json& j) {
  const std::int64_t n = integer_from(need(j, "n"), "n");
  if (n < 0 || n > 16) throw InvalidInput("cone dimension out of range");
  const auto dim = static_cast<std::size_t>(n);
  std::optional<std::vector<RationalVector>> rays;
  if (j.contains("rays")) {
    rays.emplace();
    for (const auto& r : need_array(j["rays"], "rays")) rays->push_back(rational_vector_from(r));
  }
  if (!j.contains("halfspaces")) {
    if (!rays) throw InvalidInput("a cone needs halfspaces or rays");
    return Cone::generated_by(dim, *rays);
  }
  std::vector<Halfspace> hs;
  for (const auto& h : need_array(j["halfspaces"], "halfspaces")) {
    bool strict = false;
    if (h.contains("strict")) {
      if (!h["strict"].is_boolean()) throw InvalidInput("'strict' must be a boolean");
      strict = h["strict"].get<bool>();
    }
    hs.push_back({rational_vector_from(need(h, "normal")), strict});
  }
  return Cone(dim, std::move(hs), std::move(rays));
}

Json to_json(const LinearFunctional& l) { return to_json(l.coeffs()); }
LinearFunctional functional_from(const Json& j) { return LinearFunctional(rational_vector_from(j)); }

Json to_json(const ToricDatum& x) {
  return Json{{"p", x.field().p()},
              {"e", x.field().e()},
              {"cone", to_json(x.cone())},
              {"terms", terms_json(x)},
              {"box", x.box()}};
}

ToricDatum toric_from(const Json& j, const Defaults& d) {
  const FiniteField& field = field_from(j, d);
  Cone cone = cone_from(need(j, "cone"));
  const std::int64_t box = j.contains("box") ? integer_from(j["box"], "box") : d.box;
  std::vector<std::pair<LatticePoint, FqElem>> terms;
  const Json terms_in = j.contains("terms") ? j["terms"] : Json::array();
  for (const auto& t : need_array(terms_in, "terms")) {
    if (!t.is_array() || t.size() != 2) throw InvalidInput("a toric term is [point, coefficient]");
    terms.emplace_back(lattice_point_from(t[0]), fq_from(field, t[1]));
  }
  return ToricDatum(field, std::move(cone), box, terms);
}

Json to_json(const CokerBasis& b) {
  Json consts = Json::array();
  for (const auto& c : b.constant_classes) consts.push_back(to_json(c));
  return Json{{"cone", to_json(b.cone)},
              {"box", b.box},
              {"p", b.p},
              {"points", points_json(b.points)},
              {"size", b.points.size()},
              {"constant_classes", consts}};
}

Json to_json(const ConeDiagram& d) {
  Json cones = Json::array();
  for (const auto& c : d.cones) cones.push_back(to_json(c));
  Json arrows = Json::array();
  for (const auto& [i, k] : d.arrows) arrows.push_back(Json::array({i, k}));
  return Json{{"cones", cones}, {"arrows", arrows}, {"target", to_json(d.target)}};
}

ConeDiagram diagram_from(const Json& j) {
  ConeDiagram d{{}, {}, cone_from(need(j, "target"))};
  for (const auto& c : need_array(need(j, "cones"), "cones")) d.cones.push_back(cone_from(c));
  if (j.contains("arrows")) {
    for (const auto& a : need_array(j["arrows"], "arrows")) {
      if (!a.is_array() || a.size() != 2) throw InvalidInput("an arrow is [source, target]");
      const std::int64_t s = integer_from(a[0], "arrow end"), t = integer_from(a[1], "arrow end");
      if (s < 0 || t < 0) throw InvalidInput("arrow ends are cone indices");
      d.arrows.emplace_back(static_cast<std::size_t>(s), static_cast<std::size_t>(t));
    }
  }
  return d;
}

Json to_json(const PLimitReport& r) {
  return Json{{"holds", r.holds},
              {"missing", points_json(r.missing)},
              {"extra", points_json(r.extra)},
              {"duplicated", points_json(r.duplicated)},
              {"constant_classes", r.constant_classes}};
}

Json to_json(const MapDescriptor& m) {
  Json out{{"kind", to_string(m.kind)}};
  if (m.kind == MapDescriptor::Kind::katz) return out;
  out["source"] = to_json(m.source);
  out["target"] = to_json(m.target);
  if (m.lambda) out["lambda"] = to_json(*m.lambda);
  return out;
}

MapDescriptor map_from(const Json& j) {
  if (!need(j, "kind").is_string()) throw InvalidInput("'kind' must be a string");
  switch (map_kind_from_string(j["kind"].get<std::string>())) {
    case MapDescriptor::Kind::katz: return MapDescriptor::katz();
    case MapDescriptor::Kind::identity:
      return MapDescriptor::identity(cone_from(j.contains("source") ? j["source"] : need(j, "cone")));
    case MapDescriptor::Kind::inclusion:
      return MapDescriptor::inclusion(cone_from(need(j, "source")), cone_from(need(j, "target")));
    case MapDescriptor::Kind::completion:
      return MapDescriptor::completion(cone_from(need(j, "source")), cone_from(need(j, "target")),
                                       functional_from(need(j, "lambda")));
  }
  throw InvalidInput("unsupported map class");
}

Json to_json(const MapProperties& m) {
  return Json{{"p_injective", m.p_injective},
              {"p_surjective", m.p_surjective},
              {"p_faithful", m.p_faithful},
              {"killed", points_json(m.killed)},
              {"uncovered", points_json(m.uncovered)}};
}

Json to_json(const HeightSplit& h) {
  return Json{{"holds", h.holds}, {"whole", to_json(h.whole)}, {"by_ray", to_json(h.by_ray)}};
}

Json to_json(const HeightAxioms& a) {
  return Json{{"direct_sum", a.direct_sum}, {"tensor", a.tensor}, {"subcover", a.subcover},
              {"bounded", a.bounded},       {"finite", a.finite}, {"all", a.all()}};
}

Json to_json(const CensusRow& row) {
  Json rays = Json::array();
  for (const auto& r : row.rays) rays.push_back(Json{{"generator", to_json(r.generator)}, {"break", to_json(r.b)}});
  Json out{{"index", row.index}, {"terms", terms_json(row.datum)}, {"rays", rays}};
  if (row.height) out["height"] = to_json(*row.height);
  return out;
}

}  // namespace astoric::io
