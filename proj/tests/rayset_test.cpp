#include <qlogic/finite_model.hpp>
#include <qlogic/generators.hpp>
#include <qlogic/rayset.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qlogic {
namespace {

using testing::e;
using testing::kI;
using testing::line;
using testing::span2;

RaySet r(const Subspace& k) { return embed_r(k); }
RaySet cell(const Subspace& base, std::vector<Subspace> holes) {
  return RaySet::from_cells(base.ambient_dim(), {Cell{base, std::move(holes)}});
}
RaySet top(std::size_t d) { return RaySet::top(d); }
RaySet bot(std::size_t d) { return RaySet::empty(d); }

TEST(Ray, NormalizesRepresentative) {
  EXPECT_EQ(Ray(Vector{0, 2 * kI, 4}), Ray(Vector{0, 1, -2 * kI}));
  EXPECT_EQ(Ray(Vector{0, 3, 0}).to_string(), "[(0/1, 1/1, 0/1)]");
  EXPECT_THROW(Ray(Vector(2)), std::invalid_argument);
  EXPECT_TRUE(orthogonal(Ray(Vector{1, kI}), Ray(Vector{kI, 1})));
}

TEST(EmbedR, Examples) {
  EXPECT_TRUE(is_empty(r(Subspace::zero(3))));
  EXPECT_TRUE(equals(r(Subspace::full(3)), top(3)));
  EXPECT_TRUE(contains(r(span2(e(3, 0), e(3, 1))), Ray(e(3, 0))));
}

TEST(Contains, Examples) {
  InstanceGenerator gen(3, 4);
  for (int k = 0; k < 20; ++k) EXPECT_TRUE(contains(top(3), gen.ray()));
  EXPECT_TRUE(contains(cell(Subspace::full(2), {line(e(2, 0))}), Ray(e(2, 1))));
  EXPECT_FALSE(contains(cell(Subspace::full(2), {line(e(2, 0))}), Ray(e(2, 0))));
  EXPECT_FALSE(contains(r(line(e(2, 0))), Ray(e(2, 0) + e(2, 1))));
  EXPECT_THROW(contains(top(2), Ray(e(3, 0))), DimensionMismatch);
}

TEST(BooleanOps, Examples) {
  InstanceGenerator gen(3, 5);
  for (int k = 0; k < 20; ++k) {
    const RaySet s = gen.rayset();
    EXPECT_TRUE(equals(unite(s, bot(3)), s));
    EXPECT_TRUE(equals(intersect(s, top(3)), s));
  }
  EXPECT_TRUE(equals(complement(bot(3)), top(3)));
  const Subspace plane = span2(e(3, 0), e(3, 1));
  const RaySet got = intersect(r(plane), complement(r(line(e(3, 0)))));
  EXPECT_TRUE(equals(got, cell(plane, {line(e(3, 0))})));
  EXPECT_TRUE(contains(got, Ray(e(3, 1))));
  EXPECT_TRUE(contains(got, Ray(e(3, 0) + e(3, 1))));
  EXPECT_FALSE(contains(got, Ray(e(3, 0))));
  EXPECT_FALSE(contains(got, Ray(e(3, 2))));
}

TEST(Emptiness, Examples) {
  EXPECT_TRUE(is_empty(cell(line(e(2, 0)), {line(e(2, 0))})));
  EXPECT_TRUE(cell(line(e(2, 0)), {line(e(2, 0))}).cells().empty());
  EXPECT_FALSE(is_empty(cell(Subspace::full(2), {line(e(2, 0))})));
  const RaySet k = r(line({1, kI}));
  EXPECT_TRUE(equals(unite(k, k), k));
  // A cell with several line holes is still nonempty: a plane is not a finite union of lines.
  EXPECT_FALSE(is_empty(cell(Subspace::full(2), {line(e(2, 0)), line(e(2, 1)), line({1, 1}), line({1, -1})})));
}

TEST(Normalization, HolesAreClippedAndPruned) {
  const Subspace plane = span2(e(3, 0), e(3, 1));
  const RaySet s = cell(plane, {Subspace::full(3), line(e(3, 2))});
  EXPECT_TRUE(s.cells().empty());  // the hole clips to the whole base
  const RaySet t = cell(plane, {line(e(3, 2)), line(e(3, 0)), Subspace::zero(3)});
  ASSERT_EQ(t.cells().size(), 1u);
  EXPECT_EQ(t.cells()[0].holes, (std::vector<Subspace>{line(e(3, 0))}));
  // r(K) absorbs any cell of K.
  EXPECT_EQ(unite(r(plane), cell(plane, {line(e(3, 0))})).cells().size(), 1u);
}

TEST(SpanOf, Examples) {
  const Subspace k = line({1, kI, 0});
  EXPECT_EQ(span_of(r(k)), k);
  EXPECT_EQ(span_of(unite(r(line(e(2, 0))), r(line(e(2, 1))))), Subspace::full(2));
  EXPECT_EQ(span_of(cell(Subspace::full(2), {line(e(2, 0))})), Subspace::full(2));
  EXPECT_EQ(span_of(bot(2)), Subspace::zero(2));
}

TEST(PseudoNeg, Examples) {
  EXPECT_TRUE(equals(pseudo_neg(bot(2)), top(2)));
  EXPECT_TRUE(equals(pseudo_neg(r(line(e(2, 0)))), r(line(e(2, 1)))));
  EXPECT_TRUE(is_empty(pseudo_neg(unite(r(line(e(2, 0))), r(line(e(2, 1)))))));
  EXPECT_TRUE(is_empty(pseudo_neg(top(2))));
}

TEST(Implies, Examples) {
  InstanceGenerator gen(3, 6);
  for (int k = 0; k < 50; ++k) {
    const RaySet s = gen.rayset();
    EXPECT_TRUE(equals(implies(s, s), top(3)));
    EXPECT_TRUE(equals(implies(s, bot(3)), pseudo_neg(s)));
  }
  EXPECT_TRUE(equals(implies(r(line(e(2, 0))), r(line(e(2, 1)))), r(line(e(2, 1)))));
  EXPECT_TRUE(equals(implies(bot(2), bot(2)), top(2)));
}

TEST(FContains, Examples) {
  InstanceGenerator gen(3, 7);
  for (int k = 0; k < 20; ++k) EXPECT_TRUE(f_contains(top(3), gen.subspace()));
  EXPECT_TRUE(f_contains(bot(3), Subspace::zero(3)));
  for (int k = 0; k < 20; ++k) EXPECT_FALSE(f_contains(bot(3), gen.ray().span()));
  const Ray psi(Vector{1, kI, -1});
  EXPECT_TRUE(f_contains(r(psi.span()), psi.span()));
  EXPECT_FALSE(f_contains(unite(r(line(e(2, 0))), r(line(e(2, 1)))), Subspace::full(2)));
}

TEST(G, Examples) {
  const std::vector<Subspace> zero{Subspace::zero(2)};
  EXPECT_TRUE(is_empty(g_of_generators(zero, 2)));
  const std::vector<Subspace> one{line({1, kI})};
  EXPECT_TRUE(equals(g_of_generators(one, 2), r(one[0])));
  const std::vector<Subspace> two{line(e(2, 0)), line(e(2, 1))};
  EXPECT_TRUE(equals(g_of_generators(two, 2), unite(r(two[0]), r(two[1]))));
}

TEST(SampleRay, LiesInTheCell) {
  const Cell c{Subspace::full(2), {line(e(2, 0)), line(e(2, 1)), line({1, 1})}};
  EXPECT_TRUE(c.contains(sample_ray(c).representative()));
  EXPECT_THROW(sample_ray(Cell{line(e(2, 0)), {line(e(2, 0))}}), std::invalid_argument);
}

// Probe rays for a membership oracle: the unit alphabet plus samples of the operands.
std::vector<Ray> probes(std::size_t d, std::initializer_list<const RaySet*> sets) {
  std::vector<Ray> out = unit_alphabet_rays(d);
  for (const RaySet* s : sets)
    for (const auto& ray : sample_rays(*s)) out.push_back(ray);
  return out;
}

class RaySetProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(RaySetProperties, BooleanOpsAgreeWithMembership) {
  const std::size_t d = GetParam();
  InstanceGenerator gen(d, 40 + d);
  for (int trial = 0; trial < 120; ++trial) {
    const RaySet a = gen.rayset(), b = gen.rayset();
    const RaySet u = unite(a, b), i = intersect(a, b), c = complement(a), diff = difference(a, b);
    const bool a_le_b = leq(a, b);
    for (const Ray& p : probes(d, {&a, &b, &i, &c, &diff})) {
      const bool in_a = contains(a, p), in_b = contains(b, p);
      ASSERT_EQ(contains(u, p), in_a || in_b);
      ASSERT_EQ(contains(i, p), in_a && in_b);
      ASSERT_EQ(contains(c, p), !in_a);
      ASSERT_EQ(contains(diff, p), in_a && !in_b);
      if (a_le_b) {
        ASSERT_TRUE(!in_a || in_b);
      }
    }
    for (const auto& ray : sample_rays(a)) ASSERT_TRUE(contains(a, ray));
    ASSERT_TRUE(is_empty(intersect(a, c)));
    ASSERT_TRUE(equals(unite(a, c), top(d)));
    ASSERT_TRUE(equals(complement(c), a));
  }
}

TEST_P(RaySetProperties, PseudoNegIsOrthogonality) {
  const std::size_t d = GetParam();
  InstanceGenerator gen(d, 50 + d);
  for (int trial = 0; trial < 120; ++trial) {
    const RaySet s = gen.rayset();
    const RaySet n = pseudo_neg(s);
    const auto in_s = sample_rays(s);
    for (const Ray& p : probes(d, {&s, &n}))
      if (contains(n, p)) {
        for (const Ray& q : in_s) ASSERT_TRUE(orthogonal(p, q));
      }
    // Every ray orthogonal to all of S is in ~S: test on the orthocomplement of S's span.
    const Subspace perp = ortho(span_of(s));
    for (const auto& v : perp.basis()) ASSERT_TRUE(contains(n, Ray(v)));
    ASSERT_TRUE(leq(s, pseudo_neg(n)));
    ASSERT_TRUE(equals(pseudo_neg(pseudo_neg(n)), n));
  }
}

TEST_P(RaySetProperties, PseudoNegOfSubspaceImageIsImageOfOrtho) {
  const std::size_t d = GetParam();
  InstanceGenerator gen(d, 60 + d);
  for (int trial = 0; trial < 150; ++trial) {
    const Subspace k = gen.subspace();
    ASSERT_TRUE(equals(pseudo_neg(r(k)), r(ortho(k))));
  }
}

TEST_P(RaySetProperties, SpanIdentity) {
  const std::size_t d = GetParam();
  InstanceGenerator gen(d, 70 + d);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Subspace> family;
    RaySet united = bot(d);
    for (std::size_t n = gen.uniform(1, 4); n > 0; --n) {
      family.push_back(gen.subspace());
      united = unite(united, r(family.back()));
    }
    ASSERT_TRUE(equals(pseudo_neg(pseudo_neg(united)), r(join_all(family, d))));
  }
}

TEST_P(RaySetProperties, ExcludedMiddleFailsExactlyOffTheBounds) {
  const std::size_t d = GetParam();
  InstanceGenerator gen(d, 80 + d);
  const RaySet t = top(d);
  for (const RaySet& s : {bot(d), t}) {
    ASSERT_TRUE(equals(unite(s, pseudo_neg(s)), t));
    ASSERT_TRUE(equals(unite(pseudo_neg(s), pseudo_neg(pseudo_neg(s))), t));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const RaySet s = gen.rayset();
    const bool bound = is_empty(s) || equals(s, t);
    ASSERT_EQ(equals(unite(s, pseudo_neg(s)), t), bound) << s.to_string();
    // ~S | ~~S reaches top exactly when span(S) is 0 or H.
    const Subspace k = span_of(s);
    ASSERT_EQ(equals(unite(pseudo_neg(s), pseudo_neg(pseudo_neg(s))), t), k.is_zero() || k.is_full());
    ASSERT_TRUE(equals(pseudo_neg(pseudo_neg(unite(s, pseudo_neg(s)))), t));
  }
}

TEST_P(RaySetProperties, DeMorgan) {
  const std::size_t d = GetParam();
  InstanceGenerator gen(d, 90 + d);
  for (int trial = 0; trial < 200; ++trial) {
    const RaySet a = gen.rayset(), b = gen.rayset();
    ASSERT_TRUE(equals(intersect(pseudo_neg(a), pseudo_neg(b)), pseudo_neg(unite(a, b))));
    ASSERT_TRUE(leq(unite(pseudo_neg(a), pseudo_neg(b)), pseudo_neg(intersect(a, b))));
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, RaySetProperties, ::testing::Values(1, 2, 3));

TEST(Intuitionistic, NegatedDisjunctionIsStrictInC2) {
  const RaySet s1 = r(line(e(2, 0)));
  const RaySet s2 = r(line({1, 1}));
  const RaySet lhs = unite(pseudo_neg(s1), pseudo_neg(s2));
  const RaySet rhs = pseudo_neg(intersect(s1, s2));
  EXPECT_TRUE(leq(lhs, rhs));
  EXPECT_FALSE(equals(lhs, rhs));
  EXPECT_TRUE(equals(rhs, top(2)));
  EXPECT_FALSE(contains(lhs, Ray(Vector{1, 2})));
}

TEST(Intuitionistic, DoubleNegationDisjunctionCanBeTopOffTheBounds) {
  // span(S) = H but S is neither empty nor everything.
  const RaySet s = unite(r(line(e(2, 0))), r(line(e(2, 1))));
  EXPECT_FALSE(is_empty(s));
  EXPECT_FALSE(equals(s, top(2)));
  EXPECT_TRUE(equals(unite(pseudo_neg(s), pseudo_neg(pseudo_neg(s))), top(2)));
  // A single line keeps it below top.
  const RaySet l = r(line(e(2, 0)));
  EXPECT_FALSE(equals(unite(pseudo_neg(l), pseudo_neg(pseudo_neg(l))), top(2)));
}

TEST(RaySet, Printing) {
  EXPECT_EQ(bot(2).to_string(), "{}");
  EXPECT_EQ(cell(Subspace::full(2), {line(e(2, 0))}).to_string(),
            "span((1/1, 0/1), (0/1, 1/1)) \\ { span((1/1, 0/1)) }");
}

TEST(RaySet, DimensionChecks) {
  EXPECT_THROW(unite(top(2), top(3)), DimensionMismatch);
  EXPECT_THROW(intersect(top(2), top(3)), DimensionMismatch);
  EXPECT_THROW(implies(top(2), top(3)), DimensionMismatch);
  EXPECT_THROW(f_contains(top(2), Subspace::full(3)), DimensionMismatch);
}

}  // namespace
}  // namespace qlogic
