#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace astoric {

class FqElem;

/// The finite field F_q, q = p^e, realized as F_p[w]/(f) for the smallest
/// monic irreducible f of degree e (in the base-p order of its coefficient
/// vector). Elements are addressed by an index: the coordinate vector
/// (c_0, ..., c_{e-1}) in the basis 1, w, ..., w^{e-1} read as the base-p
/// number c_0 + c_1 p + ... . All "least element" conventions use this index.
///
/// Fields are interned: `get` returns the same object for the same (p, e),
/// and that object lives for the rest of the program. Everything is
/// precomputed at construction, so a field is safe to share across threads.
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  static const FiniteField& get(std::uint32_t p, std::uint32_t e = 1);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  /// Coefficients of the defining polynomial, constant term first, monic.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FqElem zero() const;
  FqElem one() const;
  FqElem element(std::uint32_t index) const;
  FqElem from_coords(const std::vector<std::uint32_t>& coords) const;
  /// The image of an integer under Z -> F_p -> F_q.
  FqElem from_int(std::int64_t n) const;

  /// Canonical representative of the class of c in coker(F-1 on F_q): the
  /// least-index element with the same absolute trace.
  FqElem coset_representative(const FqElem& c) const;

  /// The least-index y with y^p - y = b, or nothing when Tr(b) != 0.
  std::optional<FqElem> solve_artin_schreier(const FqElem& b) const;

  // Raw index arithmetic; FqElem is the public face of these.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t frobenius(std::uint32_t a) const { return frob_[a]; }
  std::uint32_t pth_root(std::uint32_t a) const { return root_[a]; }
  std::uint32_t trace(std::uint32_t a) const { return trace_[a]; }
  std::vector<std::uint32_t> coords(std::uint32_t a) const;
  std::uint32_t index_of(const std::vector<std::uint32_t>& coords) const;

 private:
  FiniteField(std::uint32_t p, std::uint32_t e);

  std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_, e_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_, exp_;  // discrete log w.r.t. a primitive element
  std::vector<std::uint32_t> add_table_;  // only for small q
  std::vector<std::uint32_t> neg_, frob_, root_, trace_;
  std::vector<std::uint32_t> least_with_trace_;
};

/// An element of F_q. A lightweight value: a field pointer and an index.
class FqElem {
 public:
  FqElem(const FiniteField& field, std::uint32_t index) : field_(&field), index_(index) {}

  const FiniteField& field() const { return *field_; }
  std::uint32_t index() const { return index_; }
  std::vector<std::uint32_t> coords() const { return field_->coords(index_); }

  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == 1; }

  FqElem operator+(const FqElem& o) const { return {*field_, field_->add(index_, o.index_)}; }
  FqElem operator-(const FqElem& o) const { return {*field_, field_->sub(index_, o.index_)}; }
  FqElem operator-() const { return {*field_, field_->neg(index_)}; }
  FqElem operator*(const FqElem& o) const { return {*field_, field_->mul(index_, o.index_)}; }
  FqElem operator/(const FqElem& o) const { return *this * o.inverse(); }
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }

  FqElem inverse() const { return {*field_, field_->inv(index_)}; }
  FqElem pow(std::uint64_t n) const;
  /// x -> x^p
  FqElem frobenius() const { return {*field_, field_->frobenius(index_)}; }
  /// The unique y with y^p = x.
  FqElem pth_root() const { return {*field_, field_->pth_root(index_)}; }
  /// Absolute trace to F_p, as a residue in [0, p).
  std::uint32_t trace() const { return field_->trace(index_); }

  friend bool operator==(const FqElem& a, const FqElem& b) {
    return a.field_ == b.field_ && a.index_ == b.index_;
  }
  /// Index order; only meaningful within one field.
  friend std::strong_ordering operator<=>(const FqElem& a, const FqElem& b) { return a.index_ <=> b.index_; }

  std::string str() const;

 private:
  const FiniteField* field_;
  std::uint32_t index_;
};

}  // namespace astoric
