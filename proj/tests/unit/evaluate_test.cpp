#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "hyperset/error.hpp"
#include "hyperset/evaluate.hpp"
#include "hyperset/set_ops.hpp"
#include "hyperset/set_text.hpp"
#include "hyperset/universe.hpp"

namespace hyperset {
namespace {

// Textbook evaluator: quantifiers scan the whole universe.
bool naive(const Formula& f, Environment& env, const std::vector<CanonSet>& u) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kMember: return is_member(env.at(f.lhs()), env.at(f.rhs()));
    case K::kEqual: return env.at(f.lhs()) == env.at(f.rhs());
    case K::kNot: return !naive(f.body(), env, u);
    case K::kAnd: return naive(f.left(), env, u) && naive(f.right(), env, u);
    case K::kOr: return naive(f.left(), env, u) || naive(f.right(), env, u);
    case K::kImplies: return !naive(f.left(), env, u) || naive(f.right(), env, u);
    case K::kIff: return naive(f.left(), env, u) == naive(f.right(), env, u);
    case K::kForall:
    case K::kExists: {
      const bool all = f.kind() == K::kForall;
      const auto saved = env.find(f.lhs()) == env.end() ? std::nullopt : std::optional(env.at(f.lhs()));
      bool result = all;
      for (const auto& s : u) {
        env.insert_or_assign(f.lhs(), s);
        if (naive(f.body(), env, u) != all) {
          result = !all;
          break;
        }
      }
      if (saved) env.insert_or_assign(f.lhs(), *saved);
      else env.erase(f.lhs());
      return result;
    }
  }
  return false;
}

TEST(Evaluate, Atoms) {
  const Universe u = enumerate_universe(2);
  const Environment env = {{"x", empty_set()}, {"y", ordinal(1)}};
  EXPECT_TRUE(evaluate(parse_formula("x in y"), env, u.members));
  EXPECT_FALSE(evaluate(parse_formula("y in x"), env, u.members));
  EXPECT_FALSE(evaluate(parse_formula("x = y"), env, u.members));
  EXPECT_TRUE(evaluate(parse_formula("exists z. z in y"), env, u.members));
  EXPECT_FALSE(evaluate(parse_formula("exists z. z in x"), env, u.members));
}

TEST(Evaluate, MissingValueThrows) {
  const Universe u = enumerate_universe(1);
  EXPECT_THROW(evaluate(parse_formula("x in y"), {{"x", empty_set()}}, u.members), ValidationError);
}

TEST(Evaluate, FreeNamesMayLieOutsideTheUniverse) {
  const Universe u = enumerate_universe(2);
  const Environment env = {{"x", ordinal(5)}};
  EXPECT_TRUE(evaluate(parse_formula("exists y. y in x"), env, u.members));
  EXPECT_TRUE(evaluate(parse_formula("x = x"), env, u.members));
}

TEST(Evaluate, AgreesWithNaiveEvaluator) {
  const Universe u = enumerate_universe(3);
  std::mt19937_64 rng(53);
  Model model(u.members);
  for (int i = 0; i < 300; ++i) {
    const Formula f = parse_formula(gen::formula_text(rng, 1 + i % 4, 3));
    Environment env;
    for (const auto& v : free_vars(f)) env[v] = u.members[gen::pick(rng, u.members.size())];
    Environment scratch = env;
    EXPECT_EQ(model.evaluate(f, env), naive(f, scratch, u.members)) << to_string(f);
  }
}

TEST(Evaluate, LogicalEquivalences) {
  const Universe u = enumerate_universe(2);
  std::mt19937_64 rng(59);
  Model model(u.members);
  for (int i = 0; i < 200; ++i) {
    const std::string a = gen::formula_text(rng, 2, 2);
    const std::string b = gen::formula_text(rng, 2, 2);
    Environment env = {{"a", u.members[gen::pick(rng, u.members.size())]},
                       {"b", u.members[gen::pick(rng, u.members.size())]}};
    auto eval = [&](const std::string& text) { return model.evaluate(parse_formula(text), env); };
    EXPECT_EQ(eval("~~(" + a + ")"), eval(a));
    EXPECT_EQ(eval("(" + a + ") -> (" + b + ")"), eval("~(" + a + ") | (" + b + ")"));
    EXPECT_EQ(eval("~((" + a + ") & (" + b + "))"), eval("~(" + a + ") | ~(" + b + ")"));
    EXPECT_EQ(eval("forall c. " + a), eval("~exists c. ~(" + a + ")"));
  }
}

TEST(Evaluate, OrdinalFormulaMatchesIsOrdinal) {
  const Universe u = enumerate_universe(3);
  const Formula ord = parse_formula(ordinal_formula_text("x"));
  Model model(u.members);
  std::size_t ordinals = 0;
  for (const auto& s : u.members) {
    const bool expected = is_ordinal(s);
    ordinals += expected;
    EXPECT_EQ(model.evaluate(ord, {{"x", s}}), expected) << to_program(s);
  }
  EXPECT_GE(ordinals, 3u);  // 0, 1, 2 at least
}

}  // namespace
}  // namespace hyperset
