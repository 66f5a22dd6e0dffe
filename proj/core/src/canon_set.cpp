#include "hyperset/canon_set.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "hyperset/bisimulation.hpp"
#include "hyperset/error.hpp"

namespace hyperset {

std::strong_ordering operator<=>(const CanonSet& a, const CanonSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.edge_count() <=> b.edge_count(); c != 0) return c;
  if (auto c = a.offsets_ <=> b.offsets_; c != 0) return c;
  return a.targets_ <=> b.targets_;
}

std::size_t CanonSet::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ size();
  auto mix = [&h](std::size_t v) { h = (h ^ v) * 0x100000001b3ULL; };
  for (auto o : offsets_) mix(o);
  for (auto t : targets_) mix(t + 0x9e3779b9);
  return h;
}

Digraph CanonSet::to_digraph() const {
  Digraph g(size());
  for (NodeId n = 0; n < size(); ++n) {
    for (NodeId c : children(n)) g.add_edge(n, c);
  }
  return g;
}

Apg CanonSet::to_apg() const { return Apg::reachable(to_digraph(), root()); }

// Canonical order: colour refinement seeded with breadth-first depth, where a
// node's next colour is the rank of (colour, sorted child colours). On a
// minimal graph the stable colouring is itself a bisimulation, hence
// discrete, and the final colours are the canonical indices.
CanonSet canonical_from_minimal(const Digraph& minimal, NodeId root) {
  constexpr NodeId kUnseen = static_cast<NodeId>(-1);
  std::vector<NodeId> local(minimal.size(), kUnseen);
  std::vector<NodeId> order{root};
  std::vector<std::uint32_t> color{0};
  local[root] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (NodeId c : minimal.children(order[i])) {
      if (local[c] == kUnseen) {
        local[c] = static_cast<NodeId>(order.size());
        order.push_back(c);
        color.push_back(color[i] + 1);
      }
    }
  }
  const std::size_t n = order.size();

  std::vector<std::uint32_t> adj_begin(n + 1, 0);
  std::vector<NodeId> adj;
  for (std::size_t i = 0; i < n; ++i) {
    for (NodeId c : minimal.children(order[i])) adj.push_back(local[c]);
    adj_begin[i + 1] = static_cast<std::uint32_t>(adj.size());
  }

  std::size_t classes = color.empty() ? 0 : color.back() + 1;
  std::vector<std::uint32_t> sig_begin(n + 1, 0);
  std::vector<std::uint32_t> sig;
  std::vector<NodeId> by_sig(n);
  while (classes < n) {
    sig.clear();
    for (std::size_t i = 0; i < n; ++i) {
      sig_begin[i] = static_cast<std::uint32_t>(sig.size());
      sig.push_back(color[i]);
      const auto first = sig.size();
      for (auto k = adj_begin[i]; k < adj_begin[i + 1]; ++k) sig.push_back(color[adj[k]]);
      std::sort(sig.begin() + static_cast<std::ptrdiff_t>(first), sig.end());
    }
    sig_begin[n] = static_cast<std::uint32_t>(sig.size());
    auto sig_of = [&](NodeId v) {
      return std::span<const std::uint32_t>(sig.data() + sig_begin[v],
                                            sig.data() + sig_begin[v + 1]);
    };
    std::iota(by_sig.begin(), by_sig.end(), 0);
    std::sort(by_sig.begin(), by_sig.end(), [&](NodeId a, NodeId b) {
      auto sa = sig_of(a);
      auto sb = sig_of(b);
      return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
    });
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) {
        auto prev = sig_of(by_sig[i - 1]);
        auto cur = sig_of(by_sig[i]);
        if (!std::equal(prev.begin(), prev.end(), cur.begin(), cur.end())) ++rank;
      }
      color[by_sig[i]] = rank;
    }
    const std::size_t refined = static_cast<std::size_t>(rank) + 1;
    if (refined == classes) break;
    classes = refined;
  }
  if (classes != n) throw ValidationError("canonical ordering requires a minimal graph");

  CanonSet out;
  std::vector<NodeId> at(n);
  for (std::size_t i = 0; i < n; ++i) at[color[i]] = static_cast<NodeId>(i);
  out.offsets_.assign(1, 0);
  out.offsets_.reserve(n + 1);
  out.targets_.reserve(adj.size());
  for (std::size_t c = 0; c < n; ++c) {
    const NodeId v = at[c];
    const auto first = out.targets_.size();
    for (auto k = adj_begin[v]; k < adj_begin[v + 1]; ++k) out.targets_.push_back(color[adj[k]]);
    std::sort(out.targets_.begin() + static_cast<std::ptrdiff_t>(first), out.targets_.end());
    out.offsets_.push_back(static_cast<std::uint32_t>(out.targets_.size()));
  }
  return out;
}

CanonSet canonicalize(const Digraph& g, NodeId root) {
  if (root >= g.size()) throw ValidationError("root is not a node of the graph");
  const auto classes = bisimulation_classes(g);
  return canonical_from_minimal(quotient(g, classes), classes[root]);
}

CanonSet canonicalize(const Apg& g) { return canonicalize(g.graph(), g.root()); }

bool bisimilar(const Apg& a, const Apg& b) {
  Digraph both = a.graph();
  const NodeId offset = both.append(b.graph());
  const auto classes = bisimulation_classes(both);
  return classes[a.root()] == classes[offset + b.root()];
}

}  // namespace hyperset
