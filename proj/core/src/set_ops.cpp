#include "hyperset/set_ops.hpp"

#include <algorithm>
#include <optional>

#include "hyperset/bisimulation.hpp"

namespace hyperset {
namespace {

// Node of `s` whose subset equals `x`, if any. Canonical pictures are
// minimal, so there is at most one.
std::optional<NodeId> find_node(const CanonSet& s, const CanonSet& x) {
  Digraph both = s.to_digraph();
  const NodeId offset = both.append(x.to_digraph());
  const auto classes = bisimulation_classes(both);
  for (NodeId n = 0; n < s.size(); ++n) {
    if (classes[n] == classes[offset]) return n;
  }
  return std::nullopt;
}

}  // namespace

CanonSet empty_set() { return CanonSet{}; }

CanonSet from_elements(std::span<const CanonSet> xs) {
  Digraph g(1);
  for (const auto& x : xs) g.add_edge(0, g.append(x.to_digraph()));
  return canonicalize(g, 0);
}

CanonSet subset_at(const CanonSet& s, NodeId n) {
  // Sub-pictures of a minimal picture are minimal.
  return canonical_from_minimal(s.to_digraph(), n);
}

std::vector<CanonSet> elements(const CanonSet& s) {
  const Digraph g = s.to_digraph();
  std::vector<CanonSet> out;
  for (NodeId c : s.children(CanonSet::root())) out.push_back(canonical_from_minimal(g, c));
  return out;
}

bool is_member(const CanonSet& a, const CanonSet& b) {
  const auto n = find_node(b, a);
  if (!n) return false;
  const auto kids = b.children(CanonSet::root());
  return std::binary_search(kids.begin(), kids.end(), *n);
}

bool is_well_founded(const CanonSet& s) {
  // Iterative three-colour DFS.
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> state(s.size(), kWhite);
  std::vector<std::pair<NodeId, std::size_t>> stack{{CanonSet::root(), 0}};
  state[CanonSet::root()] = kGrey;
  while (!stack.empty()) {
    auto& [n, i] = stack.back();
    const auto kids = s.children(n);
    if (i == kids.size()) {
      state[n] = kBlack;
      stack.pop_back();
      continue;
    }
    const NodeId c = kids[i++];
    if (state[c] == kGrey) return false;
    if (state[c] == kWhite) {
      state[c] = kGrey;
      stack.push_back({c, 0});
    }
  }
  return true;
}

std::vector<CanonSet> transitive_closure(const CanonSet& s) {
  std::vector<char> seen(s.size(), 0);
  std::vector<NodeId> stack(s.children(CanonSet::root()).begin(),
                            s.children(CanonSet::root()).end());
  for (NodeId n : stack) seen[n] = 1;
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    for (NodeId c : s.children(n)) {
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
  }
  const Digraph g = s.to_digraph();
  std::vector<CanonSet> out;
  for (NodeId n = 0; n < s.size(); ++n) {
    if (seen[n]) out.push_back(canonical_from_minimal(g, n));
  }
  return out;
}

CanonSet ordinal(std::size_t n) {
  Digraph g(n + 1);
  for (NodeId k = 1; k <= n; ++k) {
    for (NodeId j = 0; j < k; ++j) g.add_edge(k, j);
  }
  return canonicalize(g, static_cast<NodeId>(n));
}

bool is_ordinal(const CanonSet& s) {
  const auto members = s.children(CanonSet::root());
  auto contains = [&s](NodeId set, NodeId elem) {
    const auto kids = s.children(set);
    return std::binary_search(kids.begin(), kids.end(), elem);
  };
  for (NodeId y : members) {
    for (NodeId z : s.children(y)) {
      if (!contains(CanonSet::root(), z)) return false;
    }
  }
  for (NodeId y : members) {
    for (NodeId z : members) {
      if (y != z && !contains(y, z) && !contains(z, y)) return false;
    }
  }
  for (NodeId y : members) {
    const auto inner = s.children(y);
    if (inner.empty()) continue;
    const bool has_minimal = std::any_of(inner.begin(), inner.end(), [&](NodeId w) {
      return std::none_of(s.children(w).begin(), s.children(w).end(),
                          [&](NodeId v) { return contains(y, v); });
    });
    if (!has_minimal) return false;
  }
  return true;
}

CanonSet replace(const CanonSet& s, const CanonSet& x, const CanonSet& y) {
  if (s == x) return y;
  const auto target = find_node(s, x);
  if (!target) return s;
  Digraph g(s.size());
  const NodeId y_root = g.append(y.to_digraph());
  for (NodeId n = 0; n < s.size(); ++n) {
    for (NodeId c : s.children(n)) g.add_edge(n, c == *target ? y_root : c);
  }
  return canonicalize(g, CanonSet::root());
}

}  // namespace hyperset
