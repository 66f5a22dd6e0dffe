#include <gtest/gtest.h>

#include "hyperset/error.hpp"
#include "hyperset/pterm.hpp"
#include "hyperset/set_ops.hpp"
#include "hyperset/set_text.hpp"

namespace hyperset {
namespace {

TEST(PTerm, ParseAndInstantiate) {
  const PTerm t = parse_pterm("{@I, {}}");
  ASSERT_EQ(t.kind(), PTerm::Kind::kAggregate);
  EXPECT_TRUE(t.has_placeholder());
  EXPECT_EQ(t.instantiate(ordinal(1)), ordinal(2));
  EXPECT_EQ(parse_pterm("@I").kind(), PTerm::Kind::kPlaceholder);
  EXPECT_EQ(parse_pterm("{{@I}}").instantiate(empty_set()), parse_canon("{{{}}}"));
}

TEST(PTerm, LetBindingsAreSets) {
  const PTerm t = parse_pterm("let a = {a}; {@I, a}");
  ASSERT_EQ(t.items().size(), 2u);
  EXPECT_EQ(t.items()[1].kind(), PTerm::Kind::kSet);
  EXPECT_EQ(t.items()[1].value(), parse_canon("let a = {a}; a"));
}

TEST(PTerm, Errors) {
  EXPECT_THROW(parse_pterm("{{}}"), ParseError);
  EXPECT_THROW(parse_pterm("let a = {@I}; {a, @I}"), ParseError);
  EXPECT_THROW(parse_pterm("{@I, b}"), ParseError);
  EXPECT_THROW(parse_pterm("{@J}"), ParseError);
}

TEST(PTerm, PrintParseRoundTrip) {
  for (const char* text : {"@I", "{@I}", "{@I, {}}", "let a = {a}; {@I, {a, {}}}", "{{@I, @I}, {{}}}"}) {
    const PTerm t = parse_pterm(text);
    EXPECT_EQ(parse_pterm(to_string(t)), t) << text;
  }
}

TEST(Strategy, Parse) {
  const auto s = parse_strategies("bare, singleton,successor,pair-with,pair-with({{}, {}})");
  ASSERT_EQ(s.size(), 5u);
  EXPECT_EQ(s[0].kind, Strategy::Kind::kBare);
  EXPECT_EQ(s[2].kind, Strategy::Kind::kSuccessor);
  EXPECT_FALSE(s[3].partner.has_value());
  ASSERT_TRUE(s[4].partner.has_value());
  EXPECT_EQ(*s[4].partner, ordinal(1));
  EXPECT_EQ(to_string(s[4]), "pair-with({{}})");
  EXPECT_THROW(parse_strategy("triple"), ValidationError);
  EXPECT_TRUE(parse_strategies("").empty());
}

TEST(Strategy, Terms) {
  const Universe u = enumerate_universe(1);
  const std::vector<CanonSet> ideal = {ordinal(0), ordinal(1)};
  const auto bare = placeholder_terms(parse_strategies("bare,singleton"), ideal, u, 10);
  EXPECT_EQ(bare, (std::vector<PTerm>{parse_pterm("@I"), parse_pterm("{@I}")}));
  const auto succ = placeholder_terms(parse_strategies("successor"), ideal, u, 10);
  ASSERT_EQ(succ.size(), 1u);
  EXPECT_EQ(succ[0].items().size(), 3u);
  EXPECT_EQ(succ[0].instantiate(ordinal(2)), ordinal(3));
  EXPECT_EQ(placeholder_terms(parse_strategies("pair-with"), ideal, u, 10).size(), u.members.size());
}

TEST(Strategy, BudgetTruncates) {
  const Universe u = enumerate_universe(2);
  std::vector<std::string> warnings;
  const auto terms = placeholder_terms(parse_strategies("bare,pair-with"), {}, u, 2, &warnings);
  EXPECT_EQ(terms.size(), 2u);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("budget 2"), std::string::npos);
  EXPECT_THROW(placeholder_terms(parse_strategies("bare"), {}, u, 0), ValidationError);
}

}  // namespace
}  // namespace hyperset
