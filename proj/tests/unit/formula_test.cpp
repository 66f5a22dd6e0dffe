#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "hyperset/error.hpp"
#include "hyperset/formula.hpp"

namespace hyperset {
namespace {

using Kind = Formula::Kind;

TEST(Formula, Atoms) {
  const Formula f = parse_formula("x in y");
  EXPECT_EQ(f.kind(), Kind::kMember);
  EXPECT_EQ(f.lhs(), "x");
  EXPECT_EQ(f.rhs(), "y");
  EXPECT_EQ(parse_formula("a = b").kind(), Kind::kEqual);
}

TEST(Formula, Precedence) {
  EXPECT_EQ(parse_formula("a in b & c in d | e = f").kind(), Kind::kOr);
  EXPECT_EQ(parse_formula("a in b | c in d & e = f").right().kind(), Kind::kAnd);
  EXPECT_EQ(parse_formula("a = a -> b = b <-> c = c").kind(), Kind::kIff);
  const Formula imp = parse_formula("a = a -> b = b -> c = c");
  ASSERT_EQ(imp.kind(), Kind::kImplies);
  EXPECT_EQ(imp.right().kind(), Kind::kImplies);
  EXPECT_EQ(parse_formula("~a in b & c = c").kind(), Kind::kAnd);
}

TEST(Formula, QuantifierBodyExtendsRight) {
  const Formula f = parse_formula("forall x. x in y & y in x");
  ASSERT_EQ(f.kind(), Kind::kForall);
  EXPECT_EQ(f.body().kind(), Kind::kAnd);
  EXPECT_EQ(free_vars(f), (std::set<std::string>{"y"}));
}

TEST(Formula, BindersAreRenamedApart) {
  const Formula f = parse_formula("x in x & forall x. x in y & exists x. x = x");
  EXPECT_EQ(free_vars(f), (std::set<std::string>{"x", "y"}));
  const Formula& outer = f.right();
  ASSERT_EQ(outer.kind(), Kind::kForall);
  EXPECT_NE(outer.lhs(), "x");
  const Formula& inner = outer.body().right();
  ASSERT_EQ(inner.kind(), Kind::kExists);
  EXPECT_NE(inner.lhs(), outer.lhs());
  EXPECT_NE(inner.lhs(), "x");
}

TEST(Formula, Errors) {
  for (const char* bad : {"x in", "forall . x = x", "x in y)", "(x in y", "x ! y", "", "x y"}) {
    EXPECT_THROW(parse_formula(bad), ParseError) << bad;
  }
  try {
    parse_formula("x in y &\n  & z = z");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(Formula, PrintParseRoundTrip) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 300; ++i) {
    const Formula f = parse_formula(gen::formula_text(rng, 1 + i % 4, 4));
    const std::string text = to_string(f);
    const Formula g = parse_formula(text);
    EXPECT_EQ(to_string(g), text);
    EXPECT_EQ(free_vars(g), free_vars(f));
  }
}

TEST(Formula, OrdinalTextParses) {
  const Formula f = parse_formula(ordinal_formula_text("x"));
  EXPECT_EQ(free_vars(f), (std::set<std::string>{"x"}));
}

}  // namespace
}  // namespace hyperset
