#pragma once

// Symbolic subsets of the ray space R(C^d).
//
// A RaySet is a finite union of cells "K minus (h1 u ... u hm)" where K and
// the holes are subspaces. Over C a subspace is never a finite union of proper
// subspaces, so a cell is empty iff its base is 0 or lies inside one hole. That
// fact makes emptiness, inclusion and equality decidable.

#include <qlogic/subspace.hpp>
#include <qlogic/weak_heyting.hpp>

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qlogic {

/// A point of R(C^d): the line through a nonzero vector, stored with its first
/// nonzero component scaled to 1.
class Ray {
 public:
  explicit Ray(Vector v) : representative_(std::move(v)) {
    std::size_t k = 0;
    while (k < representative_.dim() && representative_[k].is_zero()) ++k;
    if (k == representative_.dim()) throw std::invalid_argument("the zero vector spans no ray");
    representative_ *= ComplexRational(1) / representative_[k];
  }

  std::size_t ambient_dim() const { return representative_.dim(); }
  const Vector& representative() const { return representative_; }
  Subspace span() const { return Subspace::span({representative_}); }

  friend bool operator==(const Ray&, const Ray&) = default;
  friend auto operator<=>(const Ray& a, const Ray& b) {
    return a.representative_ <=> b.representative_;
  }

  std::string to_string() const { return "[" + representative_.to_string() + "]"; }

 private:
  Vector representative_;
};

inline bool orthogonal(const Ray& a, const Ray& b) {
  return inner_product(a.representative(), b.representative()).is_zero();
}

/// Rays of `base` outside every hole.
struct Cell {
  Subspace base;
  std::vector<Subspace> holes;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.base <=> b.base; c != 0) return c;
    return std::lexicographical_compare_three_way(a.holes.begin(), a.holes.end(),
                                                  b.holes.begin(), b.holes.end());
  }

  bool contains(const Vector& v) const {
    return base.contains(v) &&
           std::none_of(holes.begin(), holes.end(), [&](const Subspace& h) { return h.contains(v); });
  }

  std::string to_string() const {
    std::string out = base.to_string();
    if (!holes.empty()) {
      out += " \\ { ";
      for (std::size_t k = 0; k < holes.size(); ++k) {
        if (k) out += ", ";
        out += holes[k].to_string();
      }
      out += " }";
    }
    return out;
  }
};

/// Emptiness of an arbitrary (not necessarily normalized) cell.
inline bool is_empty(const Cell& c) {
  if (c.base.is_zero()) return true;
  return std::any_of(c.holes.begin(), c.holes.end(),
                     [&](const Subspace& h) { return leq(c.base, h); });
}

namespace detail {

/// Holes clipped to the base, zero and redundant holes removed; nullopt for an
/// empty cell.
inline std::optional<Cell> normalize(const Cell& c) {
  if (c.base.is_zero()) return std::nullopt;
  std::vector<Subspace> clipped;
  for (const auto& h : c.holes) {
    Subspace m = meet(h, c.base);
    if (m.is_zero()) continue;
    if (m == c.base) return std::nullopt;
    clipped.push_back(std::move(m));
  }
  std::sort(clipped.begin(), clipped.end());
  clipped.erase(std::unique(clipped.begin(), clipped.end()), clipped.end());
  std::vector<Subspace> maximal;
  for (std::size_t i = 0; i < clipped.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < clipped.size() && !covered; ++j)
      covered = j != i && clipped[j].dim() > clipped[i].dim() && leq(clipped[i], clipped[j]);
    if (!covered) maximal.push_back(clipped[i]);
  }
  return Cell{c.base, std::move(maximal)};
}

/// a ⊆ b for normalized nonempty cells.
inline bool cell_subset(const Cell& a, const Cell& b) {
  if (!leq(a.base, b.base)) return false;
  for (const auto& bh : b.holes) {
    Subspace m = meet(a.base, bh);
    if (m.is_zero()) continue;
    if (std::none_of(a.holes.begin(), a.holes.end(),
                     [&](const Subspace& ah) { return leq(m, ah); }))
      return false;
  }
  return true;
}

}  // namespace detail

class RaySet {
 public:
  static RaySet empty(std::size_t dim) { return RaySet(dim); }
  static RaySet top(std::size_t dim) { return from_cells(dim, {Cell{Subspace::full(dim), {}}}); }

  /// Normalizes: empty cells dropped, duplicates and cells covered by other
  /// cells removed, remaining cells sorted.
  static RaySet from_cells(std::size_t dim, std::vector<Cell> cells) {
    RaySet s(dim);
    std::vector<Cell> normal;
    for (auto& c : cells) {
      require_same_dim(c.base.ambient_dim(), dim);
      if (auto n = detail::normalize(c)) normal.push_back(std::move(*n));
    }
    std::sort(normal.begin(), normal.end());
    normal.erase(std::unique(normal.begin(), normal.end()), normal.end());
    std::vector<bool> dropped(normal.size(), false);
    for (std::size_t i = 0; i < normal.size(); ++i)
      for (std::size_t j = 0; j < normal.size(); ++j)
        if (j != i && !dropped[j] && detail::cell_subset(normal[i], normal[j])) {
          dropped[i] = true;
          break;
        }
    for (std::size_t i = 0; i < normal.size(); ++i)
      if (!dropped[i]) s.cells_.push_back(std::move(normal[i]));
    return s;
  }

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Cell>& cells() const { return cells_; }

  std::string to_string() const {
    if (cells_.empty()) return "{}";
    std::string out;
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      if (k) out += " | ";
      out += cells_[k].to_string();
    }
    return out;
  }

 private:
  explicit RaySet(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("ambient dimension must be positive");
  }

  std::size_t dim_;
  std::vector<Cell> cells_;
};

/// r(K): the rays lying in K. r(0) is empty.
inline RaySet embed_r(const Subspace& k) {
  return RaySet::from_cells(k.ambient_dim(), {Cell{k, {}}});
}

inline RaySet embed_r(const Ray& ray) { return embed_r(ray.span()); }

inline bool contains(const RaySet& s, const Ray& ray) {
  require_same_dim(s.ambient_dim(), ray.ambient_dim());
  return std::any_of(s.cells().begin(), s.cells().end(),
                     [&](const Cell& c) { return c.contains(ray.representative()); });
}

inline bool is_empty(const RaySet& s) {
  return std::all_of(s.cells().begin(), s.cells().end(), [](const Cell& c) { return is_empty(c); });
}

inline RaySet unite(const RaySet& a, const RaySet& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim());
  std::vector<Cell> cells = a.cells();
  cells.insert(cells.end(), b.cells().begin(), b.cells().end());
  return RaySet::from_cells(a.ambient_dim(), std::move(cells));
}

/// (K \ A) ∩ (K' \ A') = (K ∧ K') \ (A ∪ A'), distributed over the cells.
inline RaySet intersect(const RaySet& a, const RaySet& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim());
  std::vector<Cell> cells;
  for (const auto& x : a.cells())
    for (const auto& y : b.cells()) {
      Cell c{meet(x.base, y.base), x.holes};
      if (c.base.is_zero()) continue;
      c.holes.insert(c.holes.end(), y.holes.begin(), y.holes.end());
      cells.push_back(std::move(c));
    }
  return RaySet::from_cells(a.ambient_dim(), std::move(cells));
}

namespace detail {

/// R(H) \ (K \ holes) = (H \ K) ∪ r(h1) ∪ ... ∪ r(hm).
inline RaySet complement(const Cell& c) {
  const std::size_t dim = c.base.ambient_dim();
  std::vector<Cell> cells{Cell{Subspace::full(dim), {c.base}}};
  for (const auto& h : c.holes) cells.push_back(Cell{h, {}});
  return RaySet::from_cells(dim, std::move(cells));
}

}  // namespace detail

/// a \ b, removing one cell of b at a time.
inline RaySet difference(const RaySet& a, const RaySet& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim());
  RaySet out = a;
  for (const auto& c : b.cells()) {
    if (out.cells().empty()) break;
    out = intersect(out, detail::complement(c));
  }
  return out;
}

inline RaySet complement(const RaySet& s) { return difference(RaySet::top(s.ambient_dim()), s); }

inline bool leq(const RaySet& a, const RaySet& b) { return is_empty(difference(a, b)); }

/// Semantic equality: both differences are empty.
inline bool equals(const RaySet& a, const RaySet& b) { return leq(a, b) && leq(b, a); }

/// Linear span of all rays in s. A nonempty cell spans its whole base.
inline Subspace span_of(const RaySet& s) {
  Subspace acc = Subspace::zero(s.ambient_dim());
  for (const auto& c : s.cells()) acc = join(acc, c.base);
  return acc;
}

/// ~S = r(span(S)^perp); ~{} = top by vacuous quantification.
inline RaySet pseudo_neg(const RaySet& s) { return embed_r(ortho(span_of(s))); }

/// The ray-set algebra P(R(C^d)) packaged for the generic weak-Heyting code.
struct RaySetAlgebra {
  using value_type = RaySet;
  std::size_t dim;

  RaySet top() const { return RaySet::top(dim); }
  RaySet bottom() const { return RaySet::empty(dim); }
  RaySet unite(const RaySet& a, const RaySet& b) const { return qlogic::unite(a, b); }
  RaySet intersect(const RaySet& a, const RaySet& b) const { return qlogic::intersect(a, b); }
  RaySet complement(const RaySet& a) const { return qlogic::complement(a); }
  RaySet difference(const RaySet& a, const RaySet& b) const { return qlogic::difference(a, b); }
  RaySet pseudo_neg(const RaySet& a) const { return qlogic::pseudo_neg(a); }
  bool leq(const RaySet& a, const RaySet& b) const { return qlogic::leq(a, b); }
  bool equals(const RaySet& a, const RaySet& b) const { return qlogic::equals(a, b); }
};

static_assert(OrthoSetAlgebra<RaySetAlgebra>);

inline RaySet implies(const RaySet& a, const RaySet& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim());
  return weak_implies(RaySetAlgebra{a.ambient_dim()}, a, b);
}

/// Membership of K in f(S) = { K : every ray of K lies in S }.
inline bool f_contains(const RaySet& s, const Subspace& k) {
  require_same_dim(s.ambient_dim(), k.ambient_dim());
  return leq(embed_r(k), s);
}

/// g of the ideal generated by ks: the union of r(K). Down-closure adds no rays.
inline RaySet g_of_generators(std::span<const Subspace> ks, std::size_t dim) {
  std::vector<Cell> cells;
  for (const auto& k : ks) {
    require_same_dim(k.ambient_dim(), dim);
    cells.push_back(Cell{k, {}});
  }
  return RaySet::from_cells(dim, std::move(cells));
}

/// A ray of a nonempty normalized cell: the first point t = 0, 1, 2, ... of the
/// curve sum_k t^k b_k outside every hole. Each hole meets the curve finitely often.
inline Ray sample_ray(const Cell& c) {
  if (is_empty(c)) throw std::invalid_argument("cannot sample an empty cell");
  const auto& basis = c.base.basis();
  for (long t = 0;; ++t) {
    Vector v = basis.front();
    ComplexRational power = 1;
    for (std::size_t k = 1; k < basis.size(); ++k) {
      power *= ComplexRational(t);
      v += power * basis[k];
    }
    if (!v.is_zero() && c.contains(v)) return Ray(std::move(v));
  }
}

/// One sample ray per cell.
inline std::vector<Ray> sample_rays(const RaySet& s) {
  std::vector<Ray> out;
  for (const auto& c : s.cells()) out.push_back(sample_ray(c));
  return out;
}

}  // namespace qlogic
