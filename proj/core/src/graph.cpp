#include "hyperset/graph.hpp"

#include <algorithm>
#include <string>

#include "hyperset/error.hpp"

namespace hyperset {

NodeId Digraph::append(const Digraph& other) {
  const auto offset = static_cast<NodeId>(children_.size());
  children_.reserve(children_.size() + other.size());
  for (const auto& kids : other.children_) {
    auto& copy = children_.emplace_back(kids);
    for (auto& c : copy) c += offset;
  }
  return offset;
}

void Digraph::normalize() {
  for (auto& kids : children_) {
    std::sort(kids.begin(), kids.end());
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
  }
}

std::size_t Digraph::edge_count() const noexcept {
  std::size_t m = 0;
  for (const auto& kids : children_) m += kids.size();
  return m;
}

Apg Apg::from_edges(std::size_t node_count, std::span<const Edge> edges, NodeId root) {
  if (node_count == 0) throw ValidationError("graph has no nodes");
  if (root >= node_count) {
    throw ValidationError("root " + std::to_string(root) + " is not a node");
  }
  Digraph g(node_count);
  for (const auto& e : edges) {
    if (e.parent >= node_count || e.child >= node_count) {
      throw ValidationError("dangling edge " + std::to_string(e.parent) + " -> " +
                            std::to_string(e.child));
    }
    g.add_edge(e.parent, e.child);
  }
  for (NodeId n = 0; n < node_count; ++n) {
    std::vector<NodeId> kids(g.children(n).begin(), g.children(n).end());
    std::sort(kids.begin(), kids.end());
    auto dup = std::adjacent_find(kids.begin(), kids.end());
    if (dup != kids.end()) {
      throw ValidationError("duplicate edge " + std::to_string(n) + " -> " + std::to_string(*dup));
    }
  }

  std::vector<char> seen(node_count, 0);
  std::vector<NodeId> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    for (NodeId c : g.children(n)) {
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
  }
  auto missing = std::find(seen.begin(), seen.end(), 0);
  if (missing != seen.end()) {
    throw ValidationError("node " + std::to_string(missing - seen.begin()) +
                          " is not reachable from the root");
  }
  return Apg(std::move(g), root);
}

Apg Apg::reachable(const Digraph& g, NodeId root) {
  if (root >= g.size()) throw ValidationError("root " + std::to_string(root) + " is not a node");
  constexpr NodeId kUnseen = static_cast<NodeId>(-1);
  std::vector<NodeId> index(g.size(), kUnseen);
  std::vector<NodeId> order{root};
  index[root] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (NodeId c : g.children(order[i])) {
      if (index[c] == kUnseen) {
        index[c] = static_cast<NodeId>(order.size());
        order.push_back(c);
      }
    }
  }
  Digraph out(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (NodeId c : g.children(order[i])) out.add_edge(static_cast<NodeId>(i), index[c]);
  }
  out.normalize();
  return Apg(std::move(out), 0);
}

std::vector<Edge> Apg::edges() const {
  std::vector<Edge> out;
  out.reserve(graph_.edge_count());
  for (NodeId n = 0; n < size(); ++n) {
    for (NodeId c : children(n)) out.push_back({n, c});
  }
  return out;
}

}  // namespace hyperset
