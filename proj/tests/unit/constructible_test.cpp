#include <gtest/gtest.h>

#include "hyperset/constructible.hpp"
#include "hyperset/error.hpp"
#include "hyperset/set_ops.hpp"
#include "hyperset/set_text.hpp"
#include "hyperset/universe.hpp"
#include "oracles.hpp"

namespace hyperset {
namespace {

CanonSet union_of(const CanonSet& x) {
  std::vector<CanonSet> xs;
  for (const auto& e : elements(x)) {
    for (auto& m : elements(e)) xs.push_back(std::move(m));
  }
  return from_elements(xs);
}

TEST(Constructible, ZeroRoundsGiveOnlyX) {
  for (const auto& x : enumerate_universe(3).members) {
    EXPECT_TRUE(n_constructible(x, x, 0, 1));
  }
  EXPECT_FALSE(n_constructible(ordinal(1), empty_set(), 0, 1));
}

TEST(Constructible, EmptySetInOneRound) {
  for (const auto& x : enumerate_universe(2).members) EXPECT_TRUE(n_constructible(x, empty_set(), 1, 1));
}

TEST(Constructible, UnionInThreeRounds) {
  const CanonSet x = parse_canon("{{{}}, {{{}}}}");
  EXPECT_EQ(union_of(x), ordinal(2));
  EXPECT_TRUE(n_constructible(x, ordinal(2), 3, 2));
  const Universe u = enumerate_universe(3);
  for (const auto& y : u.members) EXPECT_TRUE(n_constructible(y, union_of(y), 3, u.members.size()));
}

TEST(Constructible, AgreesWithPoolClosure) {
  const Universe u = enumerate_universe(2);
  std::vector<CanonSet> targets = enumerate_universe(3).members;
  for (const auto& x : u.members) {
    for (const auto& y : targets) {
      for (std::size_t n = 0; n <= 2; ++n) {
        for (std::size_t w = 1; w <= 2; ++w) {
          EXPECT_EQ(n_constructible(x, y, n, w), oracle::pool_constructible(x, y, n, w))
              << to_program(x) << " / " << to_program(y) << " n=" << n << " w=" << w;
        }
      }
    }
  }
}

TEST(Constructible, Monotone) {
  const std::vector<CanonSet> xs = enumerate_universe(3).members;
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      for (std::size_t n = 0; n < 4; ++n) {
        for (std::size_t w = 1; w < 3; ++w) {
          if (!n_constructible(x, y, n, w)) continue;
          EXPECT_TRUE(n_constructible(x, y, n + 1, w));
          EXPECT_TRUE(n_constructible(x, y, n, w + 1));
        }
      }
    }
  }
}

TEST(Constructible, LargeRoundCountsStayCheap) {
  EXPECT_TRUE(n_constructible(empty_set(), ordinal(40), 40, 40));
  EXPECT_FALSE(n_constructible(empty_set(), ordinal(40), 39, 40));
  EXPECT_TRUE(n_constructible(ordinal(50), ordinal(3), 1000000, 1));
}

TEST(Constructible, Limits) {
  EXPECT_THROW(n_constructible(empty_set(), empty_set(), 1, 0), ValidationError);
  try {
    n_constructible(ordinal(10), ordinal(10), 1, 1, {.max_nodes = 5});
    FAIL();
  } catch (const ResourceLimitError& e) {
    EXPECT_EQ(e.bound(), "max_nodes");
  }
}

}  // namespace
}  // namespace hyperset
