#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hyperset/set_ops.hpp"
#include "hyperset/set_text.hpp"
#include "oracles.hpp"

namespace hyperset {
namespace {

CanonSet omega() { return parse_canon("let a = {a}; a"); }

CanonSet random_set(std::mt19937_64& rng, int i) {
  return canonicalize(oracle::random_apg(rng, 1 + i % 7, i % 6));
}

// Well-founded iff every node gets a rank by repeatedly ranking nodes whose
// children are all ranked.
bool rank_oracle(const CanonSet& s) {
  std::vector<char> ranked(s.size(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (NodeId v = 0; v < s.size(); ++v) {
      if (ranked[v]) continue;
      bool ready = true;
      for (NodeId c : s.children(v)) ready = ready && ranked[c];
      if (ready) ranked[v] = changed = true;
    }
  }
  return std::all_of(ranked.begin(), ranked.end(), [](char r) { return r != 0; });
}

TEST(SetOps, ElementsRoundTrip) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const CanonSet s = random_set(rng, i);
    const auto xs = elements(s);
    EXPECT_EQ(from_elements(xs), s);
    EXPECT_EQ(std::set<CanonSet>(xs.begin(), xs.end()).size(), xs.size());
  }
}

TEST(SetOps, FromElementsCollapsesDuplicates) {
  const std::vector<CanonSet> xs = {omega(), parse_canon("let b = {{b}}; b"), empty_set()};
  EXPECT_EQ(elements(from_elements(xs)).size(), 2u);
  EXPECT_EQ(from_elements(std::vector<CanonSet>{}), empty_set());
}

TEST(SetOps, MembershipMatchesOracle) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const CanonSet a = random_set(rng, i);
    const CanonSet b = random_set(rng, i + 3);
    bool expected = false;
    const Digraph bg = b.to_digraph();
    for (NodeId c : b.children(CanonSet::root())) {
      expected = expected || oracle::naive_bisimilar(a.to_digraph(), 0, bg, c);
    }
    EXPECT_EQ(is_member(a, b), expected);
  }
}

TEST(SetOps, WellFoundedMatchesRankOracle) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const CanonSet s = random_set(rng, i);
    EXPECT_EQ(is_well_founded(s), rank_oracle(s));
  }
  EXPECT_FALSE(is_well_founded(omega()));
  EXPECT_TRUE(is_well_founded(ordinal(5)));
}

TEST(SetOps, TransitiveClosureMatchesIteratedElements) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const CanonSet s = random_set(rng, i);
    std::set<CanonSet> seen;
    std::vector<CanonSet> todo = elements(s);
    while (!todo.empty()) {
      CanonSet t = todo.back();
      todo.pop_back();
      if (!seen.insert(t).second) continue;
      for (auto& e : elements(t)) todo.push_back(std::move(e));
    }
    const auto tc = transitive_closure(s);
    EXPECT_EQ(std::set<CanonSet>(tc.begin(), tc.end()), seen);
    EXPECT_EQ(tc.size(), seen.size());
  }
  EXPECT_EQ(transitive_closure(omega()), std::vector<CanonSet>{omega()});
  EXPECT_TRUE(transitive_closure(empty_set()).empty());
}

TEST(SetOps, Ordinals) {
  for (std::size_t n = 0; n < 6; ++n) {
    const auto xs = elements(ordinal(n));
    ASSERT_EQ(xs.size(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(is_member(ordinal(i), ordinal(n)));
    EXPECT_TRUE(is_ordinal(ordinal(n)));
  }
  EXPECT_EQ(ordinal(0), empty_set());
  EXPECT_EQ(ordinal(2), parse_canon("{{}, {{}}}"));
}

TEST(SetOps, IsOrdinalRejectsNonOrdinals) {
  EXPECT_FALSE(is_ordinal(omega()));
  EXPECT_FALSE(is_ordinal(parse_canon("{{{}}}")));
  EXPECT_FALSE(is_ordinal(parse_canon("{{}, {{}, {{}}}}")));  // {0, 2}
  EXPECT_FALSE(is_ordinal(parse_canon("{{}, {{{}}}}")));
}

TEST(SetOps, CircularSuccessorIsAnOrdinal) {
  // C = {0, 1, C} passes every clause of the first-order test.
  EXPECT_TRUE(is_ordinal(parse_canon("let c = {{}, {{}}, c}; c")));
}

TEST(SetOps, ReplaceExamples) {
  const CanonSet two = ordinal(2);
  for (const CanonSet& s : {omega(), ordinal(3)}) {
    const std::vector<CanonSet> inner = {s};
    const std::vector<CanonSet> expect = {s, from_elements(inner)};
    EXPECT_EQ(replace(two, empty_set(), s), from_elements(expect));
  }
  EXPECT_EQ(replace(omega(), empty_set(), ordinal(3)), omega());
  EXPECT_EQ(replace(omega(), omega(), ordinal(3)), ordinal(3));
}

TEST(SetOps, ReplaceIsLatentWhenAbsent) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const CanonSet s = random_set(rng, i);
    const CanonSet x = random_set(rng, i + 1);
    const CanonSet y = random_set(rng, i + 2);
    EXPECT_EQ(replace(s, x, x), s);
    const auto tc = transitive_closure(s);
    if (x != s && std::find(tc.begin(), tc.end(), x) == tc.end()) {
      EXPECT_EQ(replace(s, x, y), s);
    }
  }
}

TEST(SetOps, ReplaceDoesNotRevisitTheReplacement) {
  // Replacing {} by {{}} inside {{}} touches only the first occurrence.
  EXPECT_EQ(replace(parse_canon("{{}}"), empty_set(), parse_canon("{{}}")),
            parse_canon("{{{}}}"));
}

}  // namespace
}  // namespace hyperset
