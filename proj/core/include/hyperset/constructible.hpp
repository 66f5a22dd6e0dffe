#ifndef HYPERSET_CONSTRUCTIBLE_HPP
#define HYPERSET_CONSTRUCTIBLE_HPP

#include <cstddef>

#include "hyperset/canon_set.hpp"

namespace hyperset {

struct ConstructibleLimits {
  // Combined canonical node count of x and y.
  std::size_t max_nodes = 1u << 20;
};

// Whether y can be reached from x within n rounds, where each round keeps
// everything already available and adds, all at once, every element of an
// available set and every aggregation of at most `width` available sets.
// Round 0 has only x. Equivalently: y is x, or y sits at membership distance
// <= n below x, or n >= 1 and y has at most `width` elements, each reachable
// within n - 1 rounds.
//
// Throws ValidationError if width is 0 and ResourceLimitError("max_nodes")
// when the inputs exceed the limit.
bool n_constructible(const CanonSet& x, const CanonSet& y, std::size_t n, std::size_t width,
                     ConstructibleLimits limits = {});

}  // namespace hyperset

#endif  // HYPERSET_CONSTRUCTIBLE_HPP
