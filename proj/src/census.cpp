#include "astoric/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

#include "astoric/artin_schreier.hpp"
#include "astoric/errors.hpp"
#include "astoric/heights.hpp"

namespace astoric {

namespace {

constexpr std::uint64_t kMaxReportRows = 1ull << 22;

// All data supported on the lattice points of a cone in a box, encoded as
// base-q integers (first point most significant).
struct BoxModel {
  const FiniteField* field;
  std::vector<LatticePoint> points;
  std::map<LatticePoint, std::size_t> where;
  std::vector<std::int64_t> frob_slot;  // slot of p*v, or -1 when outside the box
  std::uint64_t total = 1;

  BoxModel(const Cone& sigma, std::int64_t box, const FiniteField& f) : field(&f), points(box_points(sigma, box)) {
    for (std::size_t i = 0; i < points.size(); ++i) where.emplace(points[i], i);
    for (const auto& v : points) {
      LatticePoint w(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) w[j] = v[j] * static_cast<std::int64_t>(f.p());
      auto it = where.find(w);
      frob_slot.push_back(it == where.end() ? -1 : static_cast<std::int64_t>(it->second));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (total > kBruteForceLimit / f.q()) throw InvalidInput("instance too large for brute-force search");
      total *= f.q();
    }
  }

  std::size_t size() const { return points.size(); }

  void decode(std::uint64_t idx, std::vector<std::uint32_t>& digits) const {
    digits.assign(size(), 0);
    for (std::size_t i = size(); i-- > 0;) {
      digits[i] = static_cast<std::uint32_t>(idx % field->q());
      idx /= field->q();
    }
  }

  std::uint64_t encode(const std::vector<std::uint32_t>& digits) const {
    std::uint64_t idx = 0;
    for (auto d : digits) idx = idx * field->q() + d;
    return idx;
  }

  std::vector<std::uint32_t> digits_of(const ToricDatum& x) const {
    std::vector<std::uint32_t> digits(size(), 0);
    for (const auto& [v, c] : x.terms()) {
      auto it = where.find(v);
      if (it == where.end()) throw InvalidInput("datum support lies outside the search box");
      digits[it->second] = c.index();
    }
    return digits;
  }

  // y^p - y; false when y^p leaves the box
  bool frobenius_minus_one(const std::vector<std::uint32_t>& y, std::vector<std::uint32_t>& out) const {
    out.assign(size(), 0);
    for (std::size_t i = 0; i < size(); ++i) {
      if (y[i] == 0) continue;
      out[i] = field->add(out[i], field->neg(y[i]));
      if (frob_slot[i] < 0) return false;
      auto& slot = out[static_cast<std::size_t>(frob_slot[i])];
      slot = field->add(slot, field->frobenius(y[i]));
    }
    return true;
  }
};

std::optional<std::uint64_t> image_index(const BoxModel& model, std::uint64_t y) {
  std::vector<std::uint32_t> digits, img;
  model.decode(y, digits);
  if (!model.frobenius_minus_one(digits, img)) return std::nullopt;
  return model.encode(img);
}

CensusRow make_row(const ClassEnumerator& classes, std::uint64_t index, const std::optional<LinearFunctional>& lambda) {
  CensusRow row{index, classes.datum(index), {}, std::nullopt};
  for (const auto& t : rays_through_support(row.datum))
    row.rays.push_back({t.primitive_generator(), as_break(specialize_to_series(restrict_as(row.datum, t)))});
  if (lambda) row.height = h_lambda_as(row.datum, *lambda);
  return row;
}

}  // namespace

ClassEnumerator::ClassEnumerator(const Cone& sigma, std::int64_t box, const FiniteField& field, Exec exec)
    : field_(&field), basis_(coker_basis_bounded(sigma, box, field, exec)) {}

std::uint64_t ClassEnumerator::count() const {
  std::int64_t c = field_->p();
  for (std::size_t i = 0; i < exponent(); ++i) c = checked::mul(c, field_->q());
  return static_cast<std::uint64_t>(c);
}

ToricDatum ClassEnumerator::datum(std::uint64_t index) const {
  if (index >= count()) throw InvalidInput("class index out of range");
  std::vector<std::pair<LatticePoint, FqElem>> terms;
  for (std::size_t i = exponent(); i-- > 0;) {
    terms.emplace_back(basis_.points[i], field_->element(static_cast<std::uint32_t>(index % field_->q())));
    index /= field_->q();
  }
  terms.emplace_back(LatticePoint(basis_.cone.dim(), 0), basis_.constant_classes.at(index));
  return ToricDatum(*field_, basis_.cone, basis_.box, terms);
}

void enumerate_as_classes(const ClassEnumerator& classes,
                          const std::function<void(std::uint64_t, const ToricDatum&)>& visit) {
  const std::uint64_t n = classes.count();
  for (std::uint64_t i = 0; i < n; ++i) visit(i, classes.datum(i));
}

std::vector<Cone> rays_through_support(const ToricDatum& x) {
  std::set<LatticePoint> dirs;
  for (const auto& [v, c] : x.terms())
    if (!is_zero(v)) dirs.insert(primitive_vector(v));
  std::vector<Cone> out;
  for (const auto& d : dirs) out.push_back(Cone::ray(d));
  return out;
}

std::vector<CensusRow> census_report(const ClassEnumerator& classes, const std::optional<LinearFunctional>& lambda,
                                     Exec exec) {
  const std::uint64_t n = classes.count();
  if (n > kMaxReportRows) throw InvalidInput("census too large to report row by row");
  std::vector<std::optional<CensusRow>> rows(n);
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < n; ++i) rows[i] = make_row(classes, i, lambda);
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
      rows[static_cast<std::size_t>(i)] = make_row(classes, static_cast<std::uint64_t>(i), lambda);
  }
  std::vector<CensusRow> out;
  out.reserve(n);
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

bool verify_splits2_torsor(const ToricDatum& x, const std::vector<Cone>& rays) {
  const ToricDatum body = x.nonconstant_part();
  ToricDatum sum(x.field(), x.cone(), x.box());
  for (const auto& [v, c] : body.terms())
    if (std::none_of(rays.begin(), rays.end(), [&](const Cone& t) { return t.contains(v); })) return false;
  for (const auto& t : rays) {
    if (t.dim() != x.dim()) return false;
    std::vector<std::pair<LatticePoint, FqElem>> kept;
    for (const auto& [v, c] : body.terms())
      if (t.contains(v)) kept.emplace_back(v, c);
    sum += ToricDatum(x.field(), x.cone(), x.box(), kept);
  }
  return sum.same_terms(body);
}

bool brute_force_isomorphic(const ToricDatum& a1, const ToricDatum& a2, std::int64_t box, Exec exec) {
  if (&a1.field() != &a2.field() || a1.dim() != a2.dim()) throw InvalidInput("data over different bases");
  const BoxModel model(a1.cone(), box, a1.field());
  const std::uint64_t target = model.encode(model.digits_of(a1 - a2));

  if (exec == Exec::serial) {
    for (std::uint64_t y = 0; y < model.total; ++y)
      if (image_index(model, y) == target) return true;
    return false;
  }
  std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t y = 0; y < static_cast<std::int64_t>(model.total); ++y) {
    if (found.load(std::memory_order_relaxed)) continue;
    if (image_index(model, static_cast<std::uint64_t>(y)) == target) found.store(true, std::memory_order_relaxed);
  }
  return found.load();
}

std::uint64_t brute_force_class_count(const Cone& sigma, std::int64_t box, const FiniteField& field, Exec exec) {
  const BoxModel model(sigma, box, field);

  // image table of F-1 restricted to data that stay in the box
  std::vector<std::uint64_t> image;
  if (exec == Exec::serial) {
    for (std::uint64_t y = 0; y < model.total; ++y)
      if (auto w = image_index(model, y)) image.push_back(*w);
  } else {
#pragma omp parallel
    {
      std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
      for (std::int64_t y = 0; y < static_cast<std::int64_t>(model.total); ++y)
        if (auto w = image_index(model, static_cast<std::uint64_t>(y))) local.push_back(*w);
#pragma omp critical
      image.insert(image.end(), local.begin(), local.end());
    }
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  std::vector<std::vector<std::uint32_t>> shifts(image.size());
  for (std::size_t k = 0; k < image.size(); ++k) model.decode(image[k], shifts[k]);

  std::vector<char> seen(model.total, 0);
  std::uint64_t classes = 0;
  std::vector<std::uint32_t> digits, moved;
  for (std::uint64_t x = 0; x < model.total; ++x) {
    if (seen[x]) continue;
    ++classes;
    model.decode(x, digits);
    for (const auto& w : shifts) {
      moved.resize(digits.size());
      for (std::size_t i = 0; i < digits.size(); ++i) moved[i] = field.add(digits[i], w[i]);
      seen[model.encode(moved)] = 1;
    }
  }
  return classes;
}

}  // namespace astoric
