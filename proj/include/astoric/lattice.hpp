#pragma once

#include <cstdint>
#include <vector>

#include "astoric/rational.hpp"

namespace astoric {

using LatticePoint = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;  // row-major

RationalVector to_rational(const LatticePoint& v);
Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const RationalVector& a, const LatticePoint& v);

bool is_zero(const RationalVector& v);
bool is_zero(const LatticePoint& v);

/// The primitive integer vector on the ray through v (v != 0).
LatticePoint primitive_vector(const RationalVector& v);
LatticePoint primitive_vector(const LatticePoint& v);

/// True when every coordinate of v is divisible by p.
bool divisible_by(const LatticePoint& v, std::int64_t p);

/// Determinant of a square integer matrix (fraction-free elimination).
std::int64_t determinant(IntMatrix m);

/// A basis of the lattice {x in Z^n : a . x = 0} for a nonzero integer a,
/// from a unimodular column reduction of the row a (n - 1 vectors).
std::vector<LatticePoint> kernel_lattice_basis(const LatticePoint& a);

/// Rational null space basis of the rows (Gauss-Jordan).
std::vector<RationalVector> null_space(const std::vector<RationalVector>& rows, std::size_t n);
std::size_t rank(const std::vector<RationalVector>& rows, std::size_t n);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace astoric
