#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "astoric/lattice.hpp"
#include "astoric/rational.hpp"

namespace astoric {

/// lambda(v) >= 0, or lambda(v) > 0 when strict.
struct Halfspace {
  RationalVector normal;
  bool strict = false;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// A rational linear functional on R^n.
class LinearFunctional {
 public:
  explicit LinearFunctional(RationalVector coeffs) : coeffs_(std::move(coeffs)) {}
  LinearFunctional(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {}

  std::size_t dim() const { return coeffs_.size(); }
  const RationalVector& coeffs() const { return coeffs_; }
  bool is_zero() const { return astoric::is_zero(coeffs_); }

  Rational operator()(const LatticePoint& v) const { return dot(coeffs_, v); }
  Rational operator()(const RationalVector& v) const { return dot(coeffs_, v); }

  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;

 private:
  RationalVector coeffs_;
};

/// A convex cone in R^n cut out by finitely many open or closed halfspaces.
/// The origin always belongs to the cone, strict halfspaces notwithstanding.
/// When `rays` is present the cone is also the nonnegative span of the rays
/// (closed, polyhedral); operations that need generators require it.
class Cone {
 public:
  Cone(std::size_t n, std::vector<Halfspace> halfspaces, std::optional<std::vector<RationalVector>> rays = std::nullopt);

  /// Closed cone spanned by the given vectors; halfspaces are its facets.
  static Cone generated_by(std::size_t n, const std::vector<RationalVector>& rays);
  static Cone generated_by(std::size_t n, const std::vector<LatticePoint>& rays);
  /// Nonnegative multiples of a single nonzero vector.
  static Cone ray(const LatticePoint& v);
  static Cone ray(const RationalVector& v);
  static Cone whole_space(std::size_t n);
  static Cone origin(std::size_t n);
  static Cone nonnegative_orthant(std::size_t n);

  std::size_t dim() const { return n_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const std::optional<std::vector<RationalVector>>& rays() const { return rays_; }
  bool has_rays() const { return rays_.has_value(); }

  bool contains(const RationalVector& v) const;
  bool contains(const LatticePoint& v) const;

  /// A linear cone: generated by exactly one nonzero ray.
  bool is_linear() const;
  /// Least nonzero lattice point of a linear cone.
  LatticePoint primitive_generator() const;

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  std::size_t n_;
  std::vector<Halfspace> halfspaces_;
  std::optional<std::vector<RationalVector>> rays_;
};

/// Extreme rays and lineality generators (both signs) of {x : A x >= 0}.
std::vector<RationalVector> polyhedral_generators(const std::vector<RationalVector>& rows, std::size_t n);

/// Is {x : a_i . x >= b_i} nonempty? Exact Fourier-Motzkin elimination.
bool feasible(std::vector<RationalVector> a, std::vector<Rational> b, std::size_t n);

bool cone_contains(const Cone& sigma, const RationalVector& v);
bool cone_contains(const Cone& sigma, const LatticePoint& v);

/// {lambda : lambda(r) >= 0 for every ray r}, with its own generators.
Cone dual_cone(const Cone& sigma);

/// Whether the dual cone has nonempty interior.
bool is_very_convex(const Cone& sigma);

struct LatticeIndex {
  std::int64_t d;        // [Z^n : (Z^n cap H_lambda) x (Z^n cap (T u -T))]
  std::int64_t d_prime;  // prime-to-p part of d
};

/// Index of the sublattice spanned by ker(lambda) and the generator of T.
LatticeIndex lattice_index(const LinearFunctional& lambda, const Cone& linear_cone, std::int64_t p);

/// The positive rational m with m * lambda(Z^n) = Z.
Rational m_lambda(const LinearFunctional& lambda);

}  // namespace astoric
