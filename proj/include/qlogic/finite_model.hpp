#pragma once

// Finite ray universes U ⊂ R(C^d). Subsets of U are bitmasks and the
// pseudo-negation is orthogonality filtering inside U.

#include <qlogic/rayset.hpp>
#include <qlogic/weak_heyting.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace qlogic {

class FiniteRayModel {
 public:
  using value_type = std::uint32_t;
  static constexpr std::size_t kMaxRays = 32;

  explicit FiniteRayModel(std::vector<Ray> rays) : rays_(std::move(rays)) {
    if (rays_.empty() || rays_.size() > kMaxRays)
      throw std::invalid_argument("finite ray universe needs 1..32 rays");
    std::sort(rays_.begin(), rays_.end());
    if (std::adjacent_find(rays_.begin(), rays_.end()) != rays_.end())
      throw std::invalid_argument("duplicate ray in universe");
    for (const auto& r : rays_) require_same_dim(r.ambient_dim(), rays_.front().ambient_dim());
    orthogonal_to_.assign(rays_.size(), 0);
    for (std::size_t a = 0; a < rays_.size(); ++a)
      for (std::size_t b = 0; b < rays_.size(); ++b)
        if (orthogonal(rays_[a], rays_[b])) orthogonal_to_[a] |= value_type{1} << b;
  }

  std::size_t size() const { return rays_.size(); }
  const std::vector<Ray>& rays() const { return rays_; }
  /// Mask of the rays orthogonal to ray k.
  value_type orthogonal_to(std::size_t k) const { return orthogonal_to_[k]; }

  value_type top() const {
    return rays_.size() == kMaxRays ? ~value_type{0} : (value_type{1} << rays_.size()) - 1;
  }
  value_type bottom() const { return 0; }
  value_type unite(value_type a, value_type b) const { return a | b; }
  value_type intersect(value_type a, value_type b) const { return a & b; }
  value_type complement(value_type a) const { return top() & ~a; }
  value_type difference(value_type a, value_type b) const { return a & ~b; }
  bool leq(value_type a, value_type b) const { return (a & ~b) == 0; }
  bool equals(value_type a, value_type b) const { return a == b; }

  value_type pseudo_neg(value_type s) const {
    value_type out = top();
    for (value_type rest = s; rest != 0; rest &= rest - 1) out &= orthogonal_to_[std::countr_zero(rest)];
    return out;
  }

 private:
  std::vector<Ray> rays_;
  std::vector<value_type> orthogonal_to_;
};

static_assert(OrthoSetAlgebra<FiniteRayModel>);

/// All rays of C^dim whose normalized representative has entries in
/// {0, 1, -1, i, -i}, ordered by support size and then lexicographically.
inline std::vector<Ray> unit_alphabet_rays(std::size_t dim) {
  const ComplexRational alphabet[] = {0, 1, -1, ComplexRational::i(), -ComplexRational::i()};
  std::vector<Ray> out;
  std::vector<std::size_t> digits(dim, 0);
  while (true) {
    std::size_t k = 0;
    while (k < dim && digits[k] == 4) digits[k++] = 0;
    if (k == dim) break;
    ++digits[k];
    Vector v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = alphabet[digits[j]];
    std::size_t lead = 0;
    while (lead < dim && v[lead].is_zero()) ++lead;
    if (!(v[lead] == ComplexRational(1))) continue;
    out.emplace_back(std::move(v));
  }
  auto support = [](const Ray& r) {
    std::size_t n = 0;
    for (const auto& z : r.representative().components()) n += !z.is_zero();
    return n;
  };
  std::sort(out.begin(), out.end(), [&](const Ray& a, const Ray& b) {
    if (support(a) != support(b)) return support(a) < support(b);
    return a < b;
  });
  return out;
}

}  // namespace qlogic
