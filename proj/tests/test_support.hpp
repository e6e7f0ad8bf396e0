#pragma once

// Shorthands shared by the unit tests.

#include <qlogic/formula.hpp>
#include <qlogic/rayset.hpp>

#include <random>

namespace qlogic::testing {

inline const ComplexRational kI = ComplexRational::i();

inline Vector e(std::size_t dim, std::size_t k) { return Vector::unit(dim, k); }

inline Subspace line(const Vector& v) { return Subspace::span({v}); }

inline Subspace span2(const Vector& a, const Vector& b) { return Subspace::span({a, b}); }

/// Random AST over five atom names, the constants and all connectives.
inline Formula random_formula(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 2 : 7);
  const char* names[] = {"A", "B", "C", "x1", "P'"};
  switch (pick(rng)) {
    case 0: return Formula::atom(names[std::uniform_int_distribution<int>(0, 4)(rng)]);
    case 1: return Formula::top();
    case 2: return Formula::bottom();
    case 3: return Formula::conj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 4: return Formula::disj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 5: return Formula::implies(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 6: return Formula::weak_neg(random_formula(rng, depth - 1));
    default: return Formula::classical_neg(random_formula(rng, depth - 1));
  }
}

}  // namespace qlogic::testing
