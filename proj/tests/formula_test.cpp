#include <qlogic/generators.hpp>
#include <qlogic/semantics.hpp>

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"

namespace qlogic {
namespace {

using testing::e;
using testing::line;
using testing::random_formula;

Formula A() { return Formula::atom("A"); }
Formula B() { return Formula::atom("B"); }
Formula C() { return Formula::atom("C"); }

std::size_t error_offset(std::string_view text) {
  try {
    parse_formula(text);
  } catch (const ParseError& err) {
    return err.offset();
  }
  return SIZE_MAX;
}

TEST(Parse, Examples) {
  EXPECT_EQ(parse_formula("~(A & B) -> C"), Formula::implies(Formula::weak_neg(Formula::conj(A(), B())), C()));
  EXPECT_EQ(parse_formula("A -> B -> C"), Formula::implies(A(), Formula::implies(B(), C())));
  EXPECT_EQ(error_offset("A &"), 3u);
}

TEST(Parse, Precedence) {
  EXPECT_EQ(parse_formula("A | B & C"), Formula::disj(A(), Formula::conj(B(), C())));
  EXPECT_EQ(parse_formula("A & B | C"), Formula::disj(Formula::conj(A(), B()), C()));
  EXPECT_EQ(parse_formula("A | B -> C"), Formula::implies(Formula::disj(A(), B()), C()));
  EXPECT_EQ(parse_formula("!~A & B"), Formula::conj(Formula::classical_neg(Formula::weak_neg(A())), B()));
  EXPECT_EQ(parse_formula("A & B & C"), Formula::conj(Formula::conj(A(), B()), C()));
  EXPECT_EQ(parse_formula("(A -> B) -> C"), Formula::implies(Formula::implies(A(), B()), C()));
  EXPECT_EQ(parse_formula("A -> B -> C"), Formula::implies(A(), Formula::implies(B(), C())));
  EXPECT_EQ(parse_formula("A -> B -> C").to_string(), "A -> B -> C");
  EXPECT_EQ(parse_formula("(A -> B) -> C").to_string(), "(A -> B) -> C");
  EXPECT_EQ(parse_formula("top | bot"), Formula::disj(Formula::top(), Formula::bottom()));
  EXPECT_EQ(parse_formula("x_1' &y"), Formula::conj(Formula::atom("x_1'"), Formula::atom("y")));
}

TEST(Parse, Errors) {
  EXPECT_EQ(error_offset(""), 0u);
  EXPECT_EQ(error_offset("A B"), 2u);
  EXPECT_EQ(error_offset("(A | B"), 6u);
  EXPECT_EQ(error_offset("A # B"), 2u);
  EXPECT_EQ(error_offset("A - B"), 2u);
  EXPECT_EQ(error_offset("A -> "), 5u);
  EXPECT_EQ(error_offset(")"), 0u);
  try {
    parse_formula("A $ B");
    FAIL();
  } catch (const ParseError& err) {
    EXPECT_NE(std::string(err.what()).find("unknown token '$'"), std::string::npos);
  }
}

TEST(Print, MinimalParentheses) {
  EXPECT_EQ(parse_formula("((A))").to_string(), "A");
  EXPECT_EQ(parse_formula("(A & B) | C").to_string(), "A & B | C");
  EXPECT_EQ(parse_formula("A & (B | C)").to_string(), "A & (B | C)");
  EXPECT_EQ(parse_formula("(A -> B) -> C").to_string(), "(A -> B) -> C");
  EXPECT_EQ(parse_formula("A -> (B -> C)").to_string(), "A -> B -> C");
  EXPECT_EQ(parse_formula("A | (B | C)").to_string(), "A | (B | C)");
  EXPECT_EQ(parse_formula("~ ( ~A )").to_string(), "~~A");
}

TEST(RoundTrip, ParseOfPrintIsIdentity) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 5000; ++k) {
    const Formula f = random_formula(rng, 5);
    const std::string text = f.to_string();
    ASSERT_EQ(parse_formula(text), f) << text;
    ASSERT_EQ(parse_formula(text).to_string(), text);
  }
}

Context qubit_context() {
  Context ctx(2);
  ctx.add("K", line(e(2, 0)));
  ctx.add("L", line(e(2, 0) + e(2, 1)));
  ctx.add("A", embed_r(line(e(2, 0))));
  return ctx;
}

TEST(Eval, QuantumExamples) {
  Context ctx(2);
  ctx.add("A", line(e(2, 0)));
  EXPECT_EQ(std::get<Subspace>(eval(parse_formula("A | ~A"), ctx, Semantics::kQuantum)), Subspace::full(2));
  EXPECT_EQ(std::get<Subspace>(eval(parse_formula("A & ~A"), ctx, Semantics::kQuantum)), Subspace::zero(2));
  EXPECT_EQ(std::get<Subspace>(eval(parse_formula("top & A | bot"), ctx, Semantics::kQuantum)), line(e(2, 0)));
}

TEST(Eval, WeakHeytingExamples) {
  const Context ctx = qubit_context();
  const RaySet got = std::get<RaySet>(eval(parse_formula("A | ~A"), ctx, Semantics::kWeakHeyting));
  EXPECT_TRUE(equals(got, unite(embed_r(line(e(2, 0))), embed_r(line(e(2, 1))))));
  EXPECT_FALSE(equals(got, RaySet::top(2)));
  const RaySet imp = std::get<RaySet>(eval(parse_formula("A -> bot"), ctx, Semantics::kWeakHeyting));
  const RaySet neg = std::get<RaySet>(eval(parse_formula("~A"), ctx, Semantics::kWeakHeyting));
  EXPECT_TRUE(equals(imp, neg));
  // Subspace atoms are lifted through r.
  const RaySet lifted = std::get<RaySet>(eval(parse_formula("K | L"), ctx, Semantics::kWeakHeyting));
  EXPECT_FALSE(contains(lifted, Ray(e(2, 1))));
}

TEST(Eval, ClassicalExamples) {
  const Context ctx = qubit_context();
  const RaySet got = std::get<RaySet>(eval(parse_formula("A | !A"), ctx, Semantics::kClassical));
  EXPECT_TRUE(equals(got, RaySet::top(2)));
  const RaySet imp = std::get<RaySet>(eval(parse_formula("A -> L"), ctx, Semantics::kClassical));
  EXPECT_TRUE(equals(imp, complement(embed_r(line(e(2, 0))))));
}

TEST(Eval, RejectsForeignConnectives) {
  const Context ctx = qubit_context();
  auto rejects = [&](const char* text, Semantics s) {
    try {
      eval(parse_formula(text), ctx, s);
    } catch (const UnsupportedConnective& err) {
      return std::string(err.what()).find(to_string(s)) != std::string::npos;
    }
    return false;
  };
  EXPECT_TRUE(rejects("K -> L", Semantics::kQuantum));
  EXPECT_TRUE(rejects("!K", Semantics::kQuantum));
  EXPECT_TRUE(rejects("!A", Semantics::kWeakHeyting));
  EXPECT_TRUE(rejects("~A", Semantics::kClassical));
  EXPECT_TRUE(rejects("A | (top -> ~A)", Semantics::kClassical));
}

TEST(Eval, UnboundAndMistypedAtoms) {
  const Context ctx = qubit_context();
  EXPECT_THROW(eval(parse_formula("Z"), ctx, Semantics::kWeakHeyting), UnboundAtom);
  EXPECT_THROW(eval(parse_formula("Z"), ctx, Semantics::kQuantum), UnboundAtom);
  EXPECT_THROW(eval(parse_formula("A"), ctx, Semantics::kQuantum), UnboundAtom);
}

TEST(Eval, SemanticsAgreeOnMeetAndJoinOfImages) {
  InstanceGenerator gen(3, 21);
  std::mt19937_64 rng(22);
  for (int k = 0; k < 200; ++k) {
    Context ctx(3);
    for (const char* name : {"A", "B", "C"}) ctx.add(name, gen.subspace());
    // Formulas over & and | only.
    std::function<Formula(int)> positive = [&](int depth) -> Formula {
      const int pick = std::uniform_int_distribution<int>(0, depth == 0 ? 0 : 2)(rng);
      if (pick == 0) return Formula::atom(std::string(1, "ABC"[std::uniform_int_distribution<int>(0, 2)(rng)]));
      return pick == 1 ? Formula::conj(positive(depth - 1), positive(depth - 1))
                       : Formula::disj(positive(depth - 1), positive(depth - 1));
    };
    const Formula f = positive(3);
    const RaySet weak = std::get<RaySet>(eval(f, ctx, Semantics::kWeakHeyting));
    const RaySet classical = std::get<RaySet>(eval(f, ctx, Semantics::kClassical));
    ASSERT_TRUE(equals(weak, classical)) << f.to_string();
    // Quantum join spans; the ray-set union does not. r(quantum) contains the union.
    const Subspace q = std::get<Subspace>(eval(f, ctx, Semantics::kQuantum));
    ASSERT_TRUE(leq(weak, embed_r(q))) << f.to_string();
  }
}

TEST(Semantics, Names) {
  for (auto s : {Semantics::kQuantum, Semantics::kWeakHeyting, Semantics::kClassical})
    EXPECT_EQ(parse_semantics(to_string(s)), s);
  EXPECT_THROW(parse_semantics("intuitionistic"), std::invalid_argument);
}

Context parse(const std::string& text) {
  std::istringstream in(text);
  return parse_context(in);
}

TEST(ContextFile, Declarations) {
  const Context ctx = parse(R"(# comment
space dim=2
sub A = span((1/1+0/1i, 0/1))
sub H = full
sub Z = zero
sub D = span((1, i), (2, 2i))
set SA = r(A)
set HOLE = H & !SA     # rays off A
)");
  EXPECT_EQ(ctx.dim(), 2u);
  EXPECT_EQ(*ctx.subspace("A"), line(e(2, 0)));
  EXPECT_TRUE(ctx.subspace("H")->is_full());
  EXPECT_TRUE(ctx.subspace("Z")->is_zero());
  EXPECT_EQ(ctx.subspace("D")->dim(), 1u);
  EXPECT_TRUE(equals(*ctx.rayset("SA"), embed_r(line(e(2, 0)))));
  EXPECT_TRUE(contains(*ctx.rayset("HOLE"), Ray(e(2, 1))));
  EXPECT_FALSE(contains(*ctx.rayset("HOLE"), Ray(e(2, 0))));
}

TEST(ContextFile, Errors) {
  auto message = [](const std::string& text) -> std::string {
    try {
      parse(text);
    } catch (const ParseError& err) {
      return err.what();
    }
    return "no error";
  };
  EXPECT_NE(message("sub A = full\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("").find("missing"), std::string::npos);
  EXPECT_NE(message("space dim=0\n").find("positive"), std::string::npos);
  EXPECT_NE(message("space dim=2\nspace dim=3\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("space dim=2\nsub A = span((1,0,0))\n").find("dimension mismatch"), std::string::npos);
  EXPECT_NE(message("space dim=2\nsub A = full\nsub A = zero\n").find("already declared"), std::string::npos);
  EXPECT_NE(message("space dim=2\nset S = r(Q)\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("space dim=2\nset S = A &\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("space dim=2\nsub A = span((1, x))\n").find("offset 17"), std::string::npos);
  EXPECT_NE(message("space dim=2\nfoo A = full\n").find("unknown declaration"), std::string::npos);
  EXPECT_NE(message("space dim=2\nsub top = full\n").find("bad name"), std::string::npos);
}

}  // namespace
}  // namespace qlogic
