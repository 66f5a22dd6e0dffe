#ifndef HYPERSET_GRAPH_HPP
#define HYPERSET_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hyperset {

// Dense node identifier, valid only within the graph that issued it.
using NodeId = std::uint32_t;

// Membership edge: the set pictured by `child` is an element of the set
// pictured by `parent`.
struct Edge {
  NodeId parent;
  NodeId child;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Unrooted directed graph used as scratch space when assembling pictures.
// No invariants beyond edges referring to existing nodes.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t node_count) : children_(node_count) {}

  NodeId add_node() {
    children_.emplace_back();
    return static_cast<NodeId>(children_.size() - 1);
  }

  // Appends a copy of `other`; returns the id `other`'s node 0 received.
  NodeId append(const Digraph& other);

  void add_edge(NodeId parent, NodeId child) { children_[parent].push_back(child); }

  // Sorts every child list and drops repeated edges.
  void normalize();

  std::size_t size() const noexcept { return children_.size(); }
  std::size_t edge_count() const noexcept;

  std::span<const NodeId> children(NodeId n) const { return children_[n]; }

 private:
  std::vector<std::vector<NodeId>> children_;
};

// Accessible pointed graph: a picture of one hyperset. Every node is
// reachable from the root and no edge is repeated.
class Apg {
 public:
  // Checks the accessibility and no-duplicate invariants and that every edge
  // names an existing node; throws ValidationError otherwise.
  static Apg from_edges(std::size_t node_count, std::span<const Edge> edges, NodeId root);

  // The part of `g` reachable from `root`, renumbered in breadth-first
  // order (root becomes 0). Repeated edges are dropped.
  static Apg reachable(const Digraph& g, NodeId root);

  std::size_t size() const noexcept { return graph_.size(); }
  NodeId root() const noexcept { return root_; }
  std::span<const NodeId> children(NodeId n) const { return graph_.children(n); }
  const Digraph& graph() const noexcept { return graph_; }
  std::vector<Edge> edges() const;

 private:
  Apg(Digraph g, NodeId root) : graph_(std::move(g)), root_(root) {}

  Digraph graph_;
  NodeId root_ = 0;
};

}  // namespace hyperset

#endif  // HYPERSET_GRAPH_HPP
