#pragma once

// Seeded random instances: Gaussian-rational vectors, subspaces, ray sets.

#include <qlogic/rayset.hpp>

#include <random>

namespace qlogic {

/// Entries are drawn from {0, ±1, ±i, 1+i} with zero weighted up, so that
/// coordinate-aligned and mutually orthogonal subspaces show up often and
/// meets are frequently nonzero.
class InstanceGenerator {
 public:
  InstanceGenerator(std::size_t dim, std::uint64_t seed) : dim_(dim), rng_(seed) {
    if (dim == 0) throw std::invalid_argument("ambient dimension must be positive");
  }

  std::size_t dim() const { return dim_; }
  std::mt19937_64& rng() { return rng_; }

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  ComplexRational scalar() {
    switch (uniform(0, 8)) {
      case 0: case 1: case 2: return 0;
      case 3: case 4: return 1;
      case 5: return -1;
      case 6: return ComplexRational::i();
      case 7: return -ComplexRational::i();
      default: return {Rational(1), Rational(1)};
    }
  }

  Vector nonzero_vector() {
    while (true) {
      Vector v(dim_);
      for (std::size_t k = 0; k < dim_; ++k) v[k] = scalar();
      if (!v.is_zero()) return v;
    }
  }

  Ray ray() { return Ray(nonzero_vector()); }

  /// Span of `count` random vectors (count drawn from [lo, hi] when not given).
  Subspace subspace(std::size_t lo = 0, std::size_t hi = SIZE_MAX) {
    hi = std::min(hi, dim_);
    const std::size_t count = uniform(lo, hi);
    std::vector<Vector> gs;
    for (std::size_t k = 0; k < count; ++k) gs.push_back(nonzero_vector());
    return Subspace::span(gs, dim_);
  }

  /// Random subspace of k: span of random combinations of k's basis.
  Subspace subspace_of(const Subspace& k) {
    std::vector<Vector> gs;
    const std::size_t count = uniform(0, k.dim());
    for (std::size_t n = 0; n < count; ++n) {
      Vector v(dim_);
      for (const auto& b : k.basis()) v += scalar() * b;
      gs.push_back(std::move(v));
    }
    return Subspace::span(gs, dim_);
  }

  /// r(K), a cell K \ {h}, top or bottom.
  RaySet basic_rayset() {
    const std::size_t pick = uniform(0, 19);
    if (pick == 0) return RaySet::top(dim_);
    if (pick == 1) return RaySet::empty(dim_);
    const Subspace k = subspace(1);
    if (pick < 14 || k.dim() < 2) return embed_r(k);
    return RaySet::from_cells(dim_, {Cell{k, {subspace_of(k)}}});
  }

  /// Boolean and pseudo-negation combinations of basic ray sets, `depth` levels
  /// deep. Empty results are mostly redrawn; they would otherwise dominate.
  RaySet rayset(std::size_t depth = 2) {
    while (true) {
      RaySet s = combine(depth);
      if (!s.cells().empty() || chance(0.1)) return s;
    }
  }

 private:
  RaySet combine(std::size_t depth) {
    if (depth == 0) return basic_rayset();
    switch (uniform(0, 6)) {
      case 0: case 1: case 2: return unite(combine(depth - 1), combine(depth - 1));
      case 3: return intersect(combine(depth - 1), combine(depth - 1));
      case 4: case 5: return complement(combine(depth - 1));
      default: return pseudo_neg(combine(depth - 1));
    }
  }

  std::size_t dim_;
  std::mt19937_64 rng_;
};

}  // namespace qlogic
