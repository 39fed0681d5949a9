#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "astoric/cone.hpp"
#include "astoric/extended.hpp"
#include "astoric/finite_field.hpp"
#include "astoric/lattice.hpp"
#include "astoric/parallel.hpp"

namespace astoric {

/// A finite F_q-combination sum c_v [v] of lattice points of a cone, i.e. an
/// element of the monoid algebra F_q[sigma cap Z^n], known to be complete
/// inside the box |v_i| <= box. Read as an Artin-Schreier parameter it names
/// the torsor z^p - z = x over the toric chart.
class ToricDatum {
 public:
  using Terms = std::map<LatticePoint, FqElem>;

  ToricDatum(const FiniteField& field, Cone cone, std::int64_t box);
  /// Zero coefficients are dropped; points must lie in the cone and the box.
  ToricDatum(const FiniteField& field, Cone cone, std::int64_t box,
             const std::vector<std::pair<LatticePoint, FqElem>>& terms);

  const FiniteField& field() const { return *field_; }
  const Cone& cone() const { return cone_; }
  std::size_t dim() const { return cone_.dim(); }
  std::int64_t box() const { return box_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  FqElem coeff(const LatticePoint& v) const;
  FqElem constant_term() const { return coeff(LatticePoint(dim(), 0)); }
  /// The same datum without its constant term.
  ToricDatum nonconstant_part() const;

  /// Same terms, with the box widened (never narrowed) to b.
  ToricDatum with_box(std::int64_t b) const;

  ToricDatum operator-() const;
  ToricDatum scaled(const FqElem& c) const;
  /// Terms are combined over the cone of the left operand; the box is the
  /// larger of the two.
  friend ToricDatum operator+(const ToricDatum& a, const ToricDatum& b);
  friend ToricDatum operator-(const ToricDatum& a, const ToricDatum& b);
  ToricDatum& operator+=(const ToricDatum& o) { return *this = *this + o; }
  ToricDatum& operator-=(const ToricDatum& o) { return *this = *this - o; }

  /// x^p: exponent vectors times p, coefficients through Frobenius. The box
  /// scales by p.
  ToricDatum frobenius() const;

  /// Equal terms and field; cone and box are bookkeeping and not compared.
  bool same_terms(const ToricDatum& o) const { return field_ == o.field_ && terms_ == o.terms_; }

  /// Every nonzero support point is prime to p and the constant is the
  /// canonical coset representative.
  bool is_reduced() const;

  std::string str() const;

 private:
  void insert(const LatticePoint& v, const FqElem& c);

  const FiniteField* field_;
  Cone cone_;
  std::int64_t box_;
  Terms terms_;
};

/// x^p - x
ToricDatum frobenius_minus_one(const ToricDatum& x);

struct ToricNormalForm {
  ToricDatum reduced;
  ToricDatum witness;  // x - reduced = witness^p - witness, exactly
};

/// Representative of x modulo (F-1): each c [p^k u] with u prime to p
/// becomes c^{1/p^k} [u], and the constant moves to its coset
/// representative.
ToricNormalForm coker_normal_form(const ToricDatum& x);

/// The terms of x whose exponent lies in tau. Requires tau's rays (when
/// present) to lie in x's cone.
ToricDatum restrict_as(const ToricDatum& x, const Cone& tau);

/// min of lambda over the support of x; +inf for x = 0.
OrInfinity<Rational> v_lambda(const ToricDatum& x, const LinearFunctional& lambda);

/// Lattice points of sigma inside the box |v_i| <= B, in lexicographic order.
std::vector<LatticePoint> box_points(const Cone& sigma, std::int64_t box, Exec exec = Exec::serial);

/// Bounded basis of coker(F-1) on F_q[sigma cap Z^n]: the nonzero lattice
/// points of sigma in the box that are not in pZ^n, plus one constant slot
/// (coker(F-1, F_q) = Z/p via the trace).
struct CokerBasis {
  Cone cone;
  std::int64_t box;
  std::uint32_t p;
  std::vector<LatticePoint> points;  // lexicographic
  /// Canonical representatives of the p constant classes, by trace.
  std::vector<FqElem> constant_classes;
};

CokerBasis coker_basis_bounded(const Cone& sigma, std::int64_t box, const FiniteField& field,
                               Exec exec = Exec::serial);

/// Cones with arrows. An arrow {i, j} is a morphism Spec R_{cones[i]} ->
/// Spec R_{cones[j]}, i.e. it requires cones[j] to sit inside cones[i].
struct ConeDiagram {
  std::vector<Cone> cones;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  Cone target;
};

struct PLimitReport {
  bool holds;
  std::vector<LatticePoint> missing;     // target basis points no class reaches
  std::vector<LatticePoint> extra;       // classes landing outside the target basis
  std::vector<LatticePoint> duplicated;  // target points reached by several classes
  std::size_t constant_classes;          // copies of coker(F-1, F_q) left in the colimit
};

/// Compares the colimit of the bounded coker bases of the diagram (glued
/// along the arrows) with the bounded coker basis of the target.
PLimitReport check_p_limit_bounded(const ConeDiagram& diagram, std::int64_t box, const FiniteField& field);

/// Ring maps whose effect on coker(F-1) is decided on bounded bases.
struct MapDescriptor {
  enum class Kind { identity, inclusion, completion, katz };
  Kind kind;
  Cone source;  // the map is R_source -> (completion of) R_target
  Cone target;
  std::optional<LinearFunctional> lambda;  // completion direction

  static MapDescriptor identity(const Cone& sigma);
  static MapDescriptor inclusion(const Cone& tau, const Cone& sigma);
  static MapDescriptor completion(const Cone& tau, const Cone& sigma, const LinearFunctional& lambda);
  /// F_q[t^-1] -> F_q((t)).
  static MapDescriptor katz();
};

std::string to_string(MapDescriptor::Kind kind);
MapDescriptor::Kind map_kind_from_string(const std::string& s);

struct MapProperties {
  bool p_injective;
  bool p_surjective;
  bool p_faithful;
  std::vector<LatticePoint> killed;     // source basis points sent to 0
  std::vector<LatticePoint> uncovered;  // target basis points not in the image
};

/// In the completion of R_sigma along lambda a point with lambda(v) > 0 is
/// killed: y = [v] + [v]^p + [v]^{p^2} + ... converges there and
/// y - y^p = [v]. Surjectivity of F-1 on ker(f) is automatic since every
/// supported map is an injective ring map.
MapProperties check_map_p_properties(const MapDescriptor& map, std::int64_t box, const FiniteField& field);

}  // namespace astoric
