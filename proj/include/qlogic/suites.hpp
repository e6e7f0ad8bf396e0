#pragma once

// Randomized property suites over generated ray sets: the weak-Heyting laws of
// the implication, and the proof steps of the isomorphism between ray sets and
// distributive ideals of L(C^d) (f, g and the ideal conditions of f(S)).

#include <qlogic/generators.hpp>
#include <qlogic/rayset.hpp>
#include <qlogic/weak_heyting.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qlogic {

struct PropertyTally {
  PropertyTally(std::string property_name) : name(std::move(property_name)) {}  // NOLINT

  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<std::string> counterexample;  // first failure

  bool holds() const { return failed == 0; }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (!counterexample) counterexample = describe();
    ++failed;
  }
};

struct SuiteReport {
  std::size_t dim = 0;
  std::size_t trials = 0;
  std::vector<PropertyTally> properties;

  bool all_hold() const {
    return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.holds(); });
  }
  std::size_t holding() const {
    return std::count_if(properties.begin(), properties.end(), [](const auto& p) { return p.holds(); });
  }
};

/// Axioms (1)-(4) of a weak Heyting algebra on `trials` random triples, in that
/// order, followed by S -> bot = ~S.
inline SuiteReport run_axiom_suite(std::size_t dim, std::size_t trials, std::uint64_t seed, std::size_t depth = 2) {
  InstanceGenerator gen(dim, seed);
  const RaySetAlgebra alg{dim};
  SuiteReport report{dim, trials, {}};
  for (auto law : kAllWeakHeytingLaws) report.properties.push_back({to_string(law)});
  for (std::size_t t = 0; t < trials; ++t) {
    const RaySet s1 = gen.rayset(depth), s2 = gen.rayset(depth), s3 = gen.rayset(depth);
    for (std::size_t k = 0; k < std::size(kAllWeakHeytingLaws); ++k)
      report.properties[k].record(holds(alg, kAllWeakHeytingLaws[k], s1, s2, s3), [&] {
        return "trial=" + std::to_string(t) + " S1=" + s1.to_string() + " S2=" + s2.to_string() +
               " S3=" + s3.to_string();
      });
  }
  return report;
}

/// Proof steps of the ray-set / distributive-ideal isomorphism, on random S
/// and finite families of subspaces.
inline SuiteReport run_iso_suite(std::size_t dim, std::size_t trials, std::uint64_t seed) {
  InstanceGenerator gen(dim, seed);
  SuiteReport report{dim, trials, {}};
  enum { kBoundary, kFSubset, kRayInF, kRoundTrip, kDownClosed, kDistributiveClosed, kNonDistributive };
  report.properties = {{"f(top)=L(H), f(bot)={0}, f({[psi]})={0,[psi]}"},
                       {"K in f(S) => r(K) <= S"},
                       {"[psi] in S => span{psi} in f(S)"},
                       {"g(f(S)|F) <= S and covers every sample ray of S"},
                       {"f(S) is downward closed"},
                       {"f(S) is closed under distributive joins"},
                       {"non-distributive families have a separating ray"}};
  auto& p = report.properties;

  for (std::size_t t = 0; t < trials; ++t) {
    const RaySet s = gen.rayset(2);
    auto where = [&](const std::string& extra) {
      return "trial=" + std::to_string(t) + " S=" + s.to_string() + (extra.empty() ? "" : " " + extra);
    };

    const Subspace random_k = gen.subspace(1);
    const Ray psi = gen.ray();
    p[kBoundary].record(f_contains(RaySet::top(dim), random_k) && f_contains(RaySet::empty(dim), Subspace::zero(dim)) &&
                            !f_contains(RaySet::empty(dim), random_k) && f_contains(embed_r(psi), psi.span()) &&
                            f_contains(embed_r(psi), Subspace::zero(dim)) &&
                            (random_k == psi.span()) == f_contains(embed_r(psi), random_k),
                        [&] { return where("K=" + random_k.to_string() + " psi=" + psi.to_string()); });

    // Candidate family: lines through sample rays, cell bases, random subspaces and their subspaces.
    const std::vector<Ray> samples = sample_rays(s);
    std::vector<Subspace> family;
    for (const auto& r : samples) family.push_back(r.span());
    for (const auto& c : s.cells()) {
      family.push_back(c.base);
      family.push_back(gen.subspace_of(c.base));
    }
    for (int k = 0; k < 4; ++k) family.push_back(gen.subspace());

    std::vector<Subspace> in_f;
    for (const auto& k : family)
      if (f_contains(s, k)) in_f.push_back(k);

    for (const auto& k : in_f) {
      // Membership route, independent of the symbolic inclusion test.
      bool ok = leq(embed_r(k), s);
      for (const auto& b : k.basis()) ok = ok && contains(s, Ray(b));
      if (!k.is_zero()) ok = ok && contains(s, sample_ray(Cell{k, {}}));
      p[kFSubset].record(ok, [&] { return where("K=" + k.to_string()); });
    }
    for (const auto& r : samples)
      p[kRayInF].record(f_contains(s, r.span()), [&] { return where("psi=" + r.to_string()); });

    const RaySet image = g_of_generators(in_f, dim);
    bool covered = leq(image, s);
    for (const auto& r : samples) covered = covered && contains(image, r);
    const bool hole_free = std::all_of(s.cells().begin(), s.cells().end(), [](const Cell& c) { return c.holes.empty(); });
    if (hole_free) covered = covered && equals(image, s);
    p[kRoundTrip].record(covered, [&] { return where("g=" + image.to_string()); });

    for (const auto& k : in_f) {
      const Subspace smaller = gen.subspace_of(k);
      p[kDownClosed].record(f_contains(s, smaller), [&] { return where("K=" + k.to_string() + " K'=" + smaller.to_string()); });
    }

    if (in_f.empty()) continue;
    for (int round = 0; round < 4; ++round) {
      std::vector<Subspace> sub;
      const Subspace& anchor = in_f[gen.uniform(0, in_f.size() - 1)];
      sub.push_back(anchor);
      if (round % 2 == 0) {
        sub.push_back(gen.subspace_of(anchor));  // join is the anchor: distributive
      } else {
        const std::size_t extra = gen.uniform(1, 2);
        for (std::size_t k = 0; k < extra; ++k) sub.push_back(in_f[gen.uniform(0, in_f.size() - 1)]);
      }
      const Subspace j = join_all(sub, dim);
      auto describe = [&] {
        std::string text = "family={";
        for (const auto& k : sub) text += " " + k.to_string();
        return where(text + " }");
      };
      if (is_distributive_family(sub)) {
        p[kDistributiveClosed].record(f_contains(s, j), describe);
      } else {
        // A ray of the join outside every member breaks (∨F) ∧ [psi] = ∨(K ∧ [psi]).
        const Ray probe = sample_ray(Cell{j, sub});
        std::vector<Subspace> pieces;
        for (const auto& k : sub) pieces.push_back(meet(k, probe.span()));
        p[kNonDistributive].record(meet(j, probe.span()) != join_all(pieces, dim), describe);
      }
    }
  }
  return report;
}

}  // namespace qlogic
