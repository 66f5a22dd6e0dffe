#ifndef HYPERSET_UNIVERSE_HPP
#define HYPERSET_UNIVERSE_HPP

#include <cstddef>
#include <vector>

#include "hyperset/canon_set.hpp"

namespace hyperset {

// Largest bound enumerate_universe accepts by default. Bound 5 means
// 2^25 candidate graphs and is rejected unless the caller raises the limit.
inline constexpr std::size_t kDefaultMaxUniverseBound = 4;

// Finite stand-in for the universe of sets: every set whose canonical
// picture has at most `bound` nodes. Members are distinct and sorted.
struct Universe {
  std::size_t bound = 0;
  std::vector<CanonSet> members;

  bool contains(const CanonSet& s) const;

  // Copy with `s` added (no-op if present); order stays sorted.
  Universe adjoin(const CanonSet& s) const;
};

// Brute force over all pointed digraphs with up to k nodes, canonicalized
// and deduplicated. Throws ValidationError for k == 0 and
// ResourceLimitError("max_k") for k > max_k.
Universe enumerate_universe(std::size_t k, std::size_t max_k = kDefaultMaxUniverseBound);

}  // namespace hyperset

#endif  // HYPERSET_UNIVERSE_HPP
