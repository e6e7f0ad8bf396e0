#pragma once

// The lattice L(C^d) of (closed) linear subspaces.

#include <qlogic/exactlin.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qlogic {

/// A linear subspace of C^d held by its canonical rref basis, so that equal
/// subspaces compare equal field by field.
class Subspace {
 public:
  static Subspace zero(std::size_t dim) { return Subspace(dim, {}); }
  static Subspace full(std::size_t dim) {
    std::vector<Vector> basis;
    for (std::size_t k = 0; k < dim; ++k) basis.push_back(Vector::unit(dim, k));
    return Subspace(dim, std::move(basis));
  }

  /// Span of arbitrary (possibly dependent, possibly zero) generators.
  static Subspace span(std::span<const Vector> generators, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("ambient dimension must be positive");
    return Subspace(dim, row_space_basis(generators, dim));
  }
  static Subspace span(std::initializer_list<Vector> generators) {
    if (generators.size() == 0) throw std::invalid_argument("span{} needs an ambient dimension");
    std::vector<Vector> gs(generators);
    return span(gs, gs.front().dim());
  }

  /// Span of standard basis vectors e_k (0-based indices).
  static Subspace coordinate(std::size_t dim, std::initializer_list<std::size_t> axes) {
    std::vector<Vector> gs;
    for (auto k : axes) gs.push_back(Vector::unit(dim, k));
    return span(gs, dim);
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_dim_; }

  bool contains(const Vector& v) const {
    require_same_dim(ambient_dim_, v.dim());
    if (v.is_zero()) return true;
    std::vector<Vector> rows = basis_;
    rows.push_back(v);
    return rank(Matrix::from_rows(rows, ambient_dim_)) == basis_.size();
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

  /// Total order on canonical forms (dimension first); not the lattice order.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_dim_ <=> b.ambient_dim_; c != 0) return c;
    if (auto c = a.basis_.size() <=> b.basis_.size(); c != 0) return c;
    for (std::size_t k = 0; k < a.basis_.size(); ++k)
      if (auto c = a.basis_[k] <=> b.basis_[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// `span(v1, v2, ...)` using vector literals; the zero space prints as `span()`.
  std::string to_string() const {
    std::string out = "span(";
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k) out += ", ";
      out += basis_[k].to_string();
    }
    return out + ")";
  }

 private:
  Subspace(std::size_t dim, std::vector<Vector> basis) : ambient_dim_(dim), basis_(std::move(basis)) {}

  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
};

inline bool leq(const Subspace& a, const Subspace& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim());
  if (a.dim() > b.dim()) return false;
  std::vector<Vector> rows = b.basis();
  rows.insert(rows.end(), a.basis().begin(), a.basis().end());
  return rank(Matrix::from_rows(rows, a.ambient_dim())) == b.dim();
}

inline Subspace join(const Subspace& a, const Subspace& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim());
  if (a.is_zero() || b.is_full()) return b;
  if (b.is_zero() || a.is_full()) return a;
  std::vector<Vector> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(rows, a.ambient_dim());
}

inline Subspace ortho(const Subspace& a) {
  return Subspace::span(orth_complement_basis(a.basis(), a.ambient_dim()), a.ambient_dim());
}

/// Intersection, computed as (a^perp + b^perp)^perp.
inline Subspace meet(const Subspace& a, const Subspace& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim());
  if (a.is_full() || b.is_zero()) return b;
  if (b.is_full() || a.is_zero()) return a;
  if (a == b) return a;
  return ortho(join(ortho(a), ortho(b)));
}

/// n-ary join; the empty family joins to 0.
inline Subspace join_all(std::span<const Subspace> family, std::size_t dim) {
  Subspace acc = Subspace::zero(dim);
  for (const auto& k : family) acc = join(acc, k);
  return acc;
}

/// n-ary meet; the empty family meets to H.
inline Subspace meet_all(std::span<const Subspace> family, std::size_t dim) {
  Subspace acc = Subspace::full(dim);
  for (const auto& k : family) acc = meet(acc, k);
  return acc;
}

/// Whether (∨F) ∧ K' = ∨{K ∧ K' : K ∈ F} for every subspace K'.
///
/// For a finite nonempty family this holds iff ∨F is itself a member: testing
/// K' = [psi] for psi in ∨F forces psi into some member, and a subspace that is
/// a finite union of subspaces equals one of them.
inline bool is_distributive_family(std::span<const Subspace> family) {
  if (family.empty()) throw std::invalid_argument("distributive join of the empty family");
  const Subspace j = join_all(family, family.front().ambient_dim());
  return std::find(family.begin(), family.end(), j) != family.end();
}

/// Three subspaces on which K1 & (K2 | K3) != (K1 & K2) | (K1 & K3).
struct DistributivityWitness {
  std::array<Subspace, 3> subspaces;
  Subspace lhs;  // K1 & (K2 | K3)
  Subspace rhs;  // (K1 & K2) | (K1 & K3)
};

/// span{e1}, span{e2}, span{e1+e2} inside C^dim. L(C^1) is a two-element chain
/// and has no witness.
inline DistributivityWitness distributivity_witness(std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("L(C^1) is distributive; need dim >= 2");
  const Vector e1 = Vector::unit(dim, 0);
  const Vector e2 = Vector::unit(dim, 1);
  const Subspace k1 = Subspace::span({e1});
  const Subspace k2 = Subspace::span({e2});
  const Subspace k3 = Subspace::span({e1 + e2});
  Subspace lhs = meet(k1, join(k2, k3));
  Subspace rhs = join(meet(k1, k2), meet(k1, k3));
  if (lhs == rhs) throw std::logic_error("distributivity witness failed to separate");
  return {{k1, k2, k3}, std::move(lhs), std::move(rhs)};
}

}  // namespace qlogic
