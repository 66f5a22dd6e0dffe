#include "hyperset/constructible.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "hyperset/bisimulation.hpp"
#include "hyperset/error.hpp"

namespace hyperset {

bool n_constructible(const CanonSet& x, const CanonSet& y, std::size_t n, std::size_t width,
                     ConstructibleLimits limits) {
  if (width == 0) throw ValidationError("aggregation width must be at least 1");
  if (x.size() + y.size() > limits.max_nodes) {
    throw ResourceLimitError("max_nodes", "inputs have " + std::to_string(x.size() + y.size()) +
                                              " canonical nodes, limit max_nodes = " +
                                              std::to_string(limits.max_nodes));
  }

  constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();

  // Membership distance of every node of x from x's root.
  std::vector<std::size_t> x_depth(x.size(), kFar);
  std::deque<NodeId> queue{CanonSet::root()};
  x_depth[CanonSet::root()] = 0;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (NodeId c : x.children(v)) {
      if (x_depth[c] == kFar) {
        x_depth[c] = x_depth[v] + 1;
        queue.push_back(c);
      }
    }
  }

  // Every set the recursion can ask about is a node of y; match each one
  // against the nodes of x.
  Digraph both = y.to_digraph();
  const NodeId x_offset = both.append(x.to_digraph());
  const auto classes = bisimulation_classes(both);
  std::vector<std::size_t> class_depth(both.size(), kFar);
  for (NodeId v = 0; v < x.size(); ++v) class_depth[classes[x_offset + v]] = x_depth[v];
  std::vector<std::size_t> depth(y.size());
  for (NodeId v = 0; v < y.size(); ++v) depth[v] = class_depth[classes[v]];

  // reach[v]: node v of y is available after `round` rounds.
  std::vector<char> reach(y.size());
  for (NodeId v = 0; v < y.size(); ++v) reach[v] = depth[v] == 0;
  std::vector<char> next(y.size());
  for (std::size_t round = 1; round <= n; ++round) {
    bool changed = false;
    for (NodeId v = 0; v < y.size(); ++v) {
      bool ok = depth[v] <= round;
      if (!ok && y.children(v).size() <= width) {
        ok = true;
        for (NodeId c : y.children(v)) {
          if (!reach[c]) {
            ok = false;
            break;
          }
        }
      }
      next[v] = ok;
      changed |= next[v] != reach[v];
    }
    reach.swap(next);
    // Later rounds can only add nodes through depth once the aggregation
    // part is stable.
    if (!changed) {
      std::size_t nearest = kFar;
      for (NodeId v = 0; v < y.size(); ++v) {
        if (!reach[v] && depth[v] > round) nearest = std::min(nearest, depth[v]);
      }
      if (nearest == kFar || nearest > n) break;
      round = nearest - 1;
    }
  }
  return reach[CanonSet::root()];
}

}  // namespace hyperset
