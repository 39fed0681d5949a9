#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "astoric/cone.hpp"
#include "astoric/extended.hpp"
#include "astoric/parallel.hpp"
#include "astoric/toric_algebra.hpp"

namespace astoric {

/// Random access to the reduced representatives of all Z/p-torsor classes
/// with support in a bounded coker basis. Index order is lexicographic in
/// (constant class, c_1, ..., c_N) with c_i the coefficient at the i-th
/// basis point read as a field index.
class ClassEnumerator {
 public:
  ClassEnumerator(const Cone& sigma, std::int64_t box, const FiniteField& field, Exec exec = Exec::serial);

  const CokerBasis& basis() const { return basis_; }
  const FiniteField& field() const { return *field_; }
  /// N, the number of nonconstant basis points.
  std::size_t exponent() const { return basis_.points.size(); }
  /// p * q^N; throws ArithmeticOverflow when that leaves 64 bits.
  std::uint64_t count() const;
  ToricDatum datum(std::uint64_t index) const;

 private:
  const FiniteField* field_;
  CokerBasis basis_;
};

/// Streams every class representative in index order.
void enumerate_as_classes(const ClassEnumerator& classes, const std::function<void(std::uint64_t, const ToricDatum&)>& visit);

/// Linear cones through the nonzero support points of x, ordered by
/// primitive generator.
std::vector<Cone> rays_through_support(const ToricDatum& x);

struct RayBreak {
  LatticePoint generator;
  BreakValue b;  // break of the restriction to the ray, read as a series in t
};

struct CensusRow {
  std::uint64_t index;
  ToricDatum datum;
  std::vector<RayBreak> rays;
  std::optional<Rational> height;  // h_lambda when a functional was supplied
};

/// One row per class, in index order, identical for both policies.
std::vector<CensusRow> census_report(const ClassEnumerator& classes, const std::optional<LinearFunctional>& lambda,
                                     Exec exec = Exec::serial);

/// True iff every nonzero support point of x lies on a listed ray and x is
/// the sum of its restrictions to those rays. Constant terms are set aside:
/// they live on the common base and are compared once.
bool verify_splits2_torsor(const ToricDatum& x, const std::vector<Cone>& rays);

/// Largest search space the brute-force oracles accept.
inline constexpr std::uint64_t kBruteForceLimit = 1ull << 20;

/// Exhaustive search for y supported on the lattice points of a1's cone in
/// the box with a1 - a2 = y^p - y.
bool brute_force_isomorphic(const ToricDatum& a1, const ToricDatum& a2, std::int64_t box, Exec exec = Exec::serial);

/// Number of classes among all data supported on the lattice points of
/// sigma in the box, modulo y^p - y, found by orbit marking.
std::uint64_t brute_force_class_count(const Cone& sigma, std::int64_t box, const FiniteField& field,
                                      Exec exec = Exec::serial);

}  // namespace astoric
