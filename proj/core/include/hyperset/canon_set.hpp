#ifndef HYPERSET_CANON_SET_HPP
#define HYPERSET_CANON_SET_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hyperset/graph.hpp"

namespace hyperset {

// A hyperset in canonical form: the minimal picture under maximum
// bisimulation, with nodes numbered by a deterministic canonical order.
// The root is node 0 and child lists are sorted. Two CanonSets denote the
// same set iff they compare equal.
class CanonSet {
 public:
  // The empty set.
  CanonSet() : offsets_{0, 0} {}

  std::size_t size() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size(); }
  static constexpr NodeId root() noexcept { return 0; }

  std::span<const NodeId> children(NodeId n) const {
    return {targets_.data() + offsets_[n], targets_.data() + offsets_[n + 1]};
  }

  Apg to_apg() const;
  Digraph to_digraph() const;

  friend bool operator==(const CanonSet&, const CanonSet&) = default;
  // Orders by node count, then structure. Used wherever output order has to
  // be deterministic.
  friend std::strong_ordering operator<=>(const CanonSet& a, const CanonSet& b);

  std::size_t hash() const noexcept;

 private:
  friend CanonSet canonical_from_minimal(const Digraph&, NodeId);

  std::vector<std::uint32_t> offsets_;
  std::vector<NodeId> targets_;
};

// Canonical form of the set pictured by `g`.
CanonSet canonicalize(const Apg& g);

// Canonical form of the node `root` of an arbitrary graph (unreachable parts
// are ignored).
CanonSet canonicalize(const Digraph& g, NodeId root);

// Canonical form of `root` in a graph that is already minimal (no two
// distinct nodes bisimilar), e.g. a bisimulation quotient. Minimality is not
// verified; graphs whose nodes the ordering cannot tell apart are rejected
// with ValidationError.
CanonSet canonical_from_minimal(const Digraph& minimal, NodeId root);

bool bisimilar(const Apg& a, const Apg& b);

}  // namespace hyperset

template <>
struct std::hash<hyperset::CanonSet> {
  std::size_t operator()(const hyperset::CanonSet& s) const noexcept { return s.hash(); }
};

#endif  // HYPERSET_CANON_SET_HPP
