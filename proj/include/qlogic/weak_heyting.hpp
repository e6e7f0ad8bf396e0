#pragma once

// Pseudo-negation algebras on sets of rays and the weak-Heyting implication
// built from them. Everything here is generic over the carrier so the same
// code runs on symbolic ray sets and on finite ray universes.

#include <concepts>
#include <string>
#include <vector>

namespace qlogic {

/// A Boolean algebra of ray sets equipped with the orthogonality pseudo-negation
/// ~S = { [psi] : <psi, phi> = 0 for every [phi] in S }.
template <class A>
concept OrthoSetAlgebra = requires(const A& alg, const typename A::value_type& x) {
  { alg.top() } -> std::convertible_to<typename A::value_type>;
  { alg.bottom() } -> std::convertible_to<typename A::value_type>;
  { alg.unite(x, x) } -> std::convertible_to<typename A::value_type>;
  { alg.intersect(x, x) } -> std::convertible_to<typename A::value_type>;
  { alg.complement(x) } -> std::convertible_to<typename A::value_type>;
  { alg.difference(x, x) } -> std::convertible_to<typename A::value_type>;
  { alg.pseudo_neg(x) } -> std::convertible_to<typename A::value_type>;
  { alg.leq(x, x) } -> std::convertible_to<bool>;
  { alg.equals(x, x) } -> std::convertible_to<bool>;
};

/// S1 -> S2 := ~(S1 \ S2).
///
/// Agrees with the atom-wise definition: the factor for an atom s <= S1 is
/// ~~(~s | (s & S2)), which is top when s <= S2 and ~s otherwise, and the meet
/// of ~s over the atoms of S1 \ S2 is ~(S1 \ S2). S1 = bottom gives ~bottom = top.
template <OrthoSetAlgebra A>
typename A::value_type weak_implies(const A& alg, const typename A::value_type& lhs,
                                    const typename A::value_type& rhs) {
  return alg.pseudo_neg(alg.difference(lhs, rhs));
}

enum class WeakHeytingLaw {
  kSelfImplication,     // S -> S = top
  kRightMeet,           // S1 -> (S2 & S3) = (S1 -> S2) & (S1 -> S3)
  kLeftJoin,            // (S1 | S2) -> S3 = (S1 -> S3) & (S2 -> S3)
  kTransitivity,        // (S1 -> S2) & (S2 -> S3) <= S1 -> S3
  kNegationAsImplication,  // S -> bot = ~S
};

inline constexpr WeakHeytingLaw kAllWeakHeytingLaws[] = {
    WeakHeytingLaw::kSelfImplication, WeakHeytingLaw::kRightMeet, WeakHeytingLaw::kLeftJoin,
    WeakHeytingLaw::kTransitivity, WeakHeytingLaw::kNegationAsImplication};

inline std::string to_string(WeakHeytingLaw law) {
  switch (law) {
    case WeakHeytingLaw::kSelfImplication: return "S1->S1 = top";
    case WeakHeytingLaw::kRightMeet: return "S1->(S2&S3) = (S1->S2)&(S1->S3)";
    case WeakHeytingLaw::kLeftJoin: return "(S1|S2)->S3 = (S1->S3)&(S2->S3)";
    case WeakHeytingLaw::kTransitivity: return "(S1->S2)&(S2->S3) <= S1->S3";
    case WeakHeytingLaw::kNegationAsImplication: return "S1->bot = ~S1";
  }
  return "?";
}

/// Evaluates one law on the triple (s1, s2, s3); unary laws only read s1.
template <OrthoSetAlgebra A>
bool holds(const A& alg, WeakHeytingLaw law, const typename A::value_type& s1,
           const typename A::value_type& s2, const typename A::value_type& s3) {
  auto imp = [&](const auto& x, const auto& y) { return weak_implies(alg, x, y); };
  switch (law) {
    case WeakHeytingLaw::kSelfImplication:
      return alg.equals(imp(s1, s1), alg.top());
    case WeakHeytingLaw::kRightMeet:
      return alg.equals(imp(s1, alg.intersect(s2, s3)), alg.intersect(imp(s1, s2), imp(s1, s3)));
    case WeakHeytingLaw::kLeftJoin:
      return alg.equals(imp(alg.unite(s1, s2), s3), alg.intersect(imp(s1, s3), imp(s2, s3)));
    case WeakHeytingLaw::kTransitivity:
      return alg.leq(alg.intersect(imp(s1, s2), imp(s2, s3)), imp(s1, s3));
    case WeakHeytingLaw::kNegationAsImplication:
      return alg.equals(imp(s1, alg.bottom()), alg.pseudo_neg(s1));
  }
  return false;
}

}  // namespace qlogic
