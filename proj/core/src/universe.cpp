#include "hyperset/universe.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "hyperset/error.hpp"

namespace hyperset {

bool Universe::contains(const CanonSet& s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

Universe Universe::adjoin(const CanonSet& s) const {
  Universe out = *this;
  auto it = std::lower_bound(out.members.begin(), out.members.end(), s);
  if (it == out.members.end() || *it != s) out.members.insert(it, s);
  return out;
}

Universe enumerate_universe(std::size_t k, std::size_t max_k) {
  if (k == 0) throw ValidationError("universe bound must be at least 1");
  if (k > max_k) {
    throw ResourceLimitError("max_k", "universe bound " + std::to_string(k) +
                                          " exceeds the limit max_k = " + std::to_string(max_k));
  }
  std::unordered_set<CanonSet> found;
  for (std::size_t n = 1; n <= k; ++n) {
    const std::size_t bits = n * n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      // Node 0 is the root; graphs with unreachable nodes repeat a smaller n.
      std::uint32_t reached = 1;
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t p = 0; p < n; ++p) {
          if (!(reached >> p & 1)) continue;
          const auto row = static_cast<std::uint32_t>((mask >> (p * n)) & ((1u << n) - 1));
          if ((reached | row) != reached) {
            reached |= row;
            grew = true;
          }
        }
      }
      if (reached != (1u << n) - 1) continue;
      Digraph g(n);
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t c = 0; c < n; ++c) {
          if (mask >> (p * n + c) & 1) g.add_edge(static_cast<NodeId>(p), static_cast<NodeId>(c));
        }
      }
      found.insert(canonicalize(g, 0));
    }
  }
  Universe u;
  u.bound = k;
  u.members.assign(found.begin(), found.end());
  std::sort(u.members.begin(), u.members.end());
  return u;
}

}  // namespace hyperset
