#ifndef HYPERSET_TESTS_ORACLES_HPP
#define HYPERSET_TESTS_ORACLES_HPP

// Independent reference implementations used only by tests. None of these
// call into the partition-refinement or canonical-ordering code paths they
// are used to check, except where noted.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyperset/canon_set.hpp"
#include "hyperset/formula.hpp"
#include "hyperset/graph.hpp"
#include "hyperset/set_ops.hpp"

namespace hyperset::oracle {

// Greatest fixed point of the bisimulation conditions, by repeatedly
// deleting violating pairs from the full relation. O(n^2 m) per sweep.
inline std::vector<std::vector<char>> naive_bisimulation(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 1));
  auto matched = [&](NodeId u, NodeId v) {
    for (NodeId a : g.children(u)) {
      bool found = false;
      for (NodeId b : g.children(v)) {
        if (rel[a][b]) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = 0; v < n; ++v) {
        if (rel[u][v] && (!matched(u, v) || !matched(v, u))) {
          rel[u][v] = 0;
          changed = true;
        }
      }
    }
  }
  return rel;
}

inline bool naive_bisimilar(const Digraph& a, NodeId ra, const Digraph& b, NodeId rb) {
  Digraph both = a;
  const NodeId offset = both.append(b);
  return naive_bisimulation(both)[ra][offset + rb] != 0;
}

// Digraph on n nodes whose adjacency matrix is the low n*n bits of mask.
inline Digraph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Digraph g(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t c = 0; c < n; ++c) {
      if (mask >> (p * n + c) & 1) g.add_edge(static_cast<NodeId>(p), static_cast<NodeId>(c));
    }
  }
  return g;
}

inline bool all_reachable(const Digraph& g, NodeId root) {
  std::vector<char> seen(g.size(), 0);
  std::vector<NodeId> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId c : g.children(v)) {
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

// Number of distinct sets pictured by accessible pointed digraphs with at
// most k nodes (every root tried), deduplicated with the naive oracle.
inline std::size_t universe_count(std::size_t k) {
  std::vector<std::pair<Digraph, NodeId>> reps;
  for (std::size_t n = 1; n <= k; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      const Digraph g = graph_from_mask(n, mask);
      for (NodeId root = 0; root < n; ++root) {
        if (!all_reachable(g, root)) continue;
        const bool known = std::any_of(reps.begin(), reps.end(), [&](const auto& r) {
          return naive_bisimilar(r.first, r.second, g, root);
        });
        if (!known) reps.emplace_back(g, root);
      }
    }
  }
  return reps.size();
}

// Random digraph with n nodes where each ordered pair is an edge with
// probability p.
inline Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  Digraph g(n);
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      if (edge(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

// Accessible random picture: a random spanning tree from node 0 plus extra
// random edges.
inline Apg random_apg(std::mt19937_64& rng, std::size_t n, std::size_t extra_edges) {
  std::vector<Edge> edges;
  std::set<std::pair<NodeId, NodeId>> seen;
  for (NodeId v = 1; v < n; ++v) {
    const auto parent = static_cast<NodeId>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
    edges.push_back({parent, v});
    seen.insert({parent, v});
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < extra_edges; ++i) {
    const auto a = static_cast<NodeId>(pick(rng));
    const auto b = static_cast<NodeId>(pick(rng));
    if (seen.insert({a, b}).second) edges.push_back({a, b});
  }
  return Apg::from_edges(n, edges, 0);
}

// Brute-force stratification: try every assignment of levels 0..n to the n
// names of the formula.
inline bool brute_force_stratified(const Formula& f) {
  std::vector<std::pair<std::string, std::string>> members;
  std::vector<std::pair<std::string, std::string>> equals;
  std::set<std::string> names;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    if (g.is_atom()) {
      names.insert(g.lhs());
      names.insert(g.rhs());
      (g.kind() == Formula::Kind::kMember ? members : equals).emplace_back(g.lhs(), g.rhs());
    } else if (g.is_quantifier()) {
      names.insert(g.lhs());
      self(self, g.body());
    } else if (g.kind() == Formula::Kind::kNot) {
      self(self, g.body());
    } else {
      self(self, g.left());
      self(self, g.right());
    }
  };
  walk(walk, f);
  const std::vector<std::string> vars(names.begin(), names.end());
  const std::size_t n = vars.size();
  std::map<std::string, int> level;
  std::vector<int> assign(n, 0);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) level[vars[i]] = assign[i];
    bool ok = true;
    for (const auto& [a, b] : members) ok = ok && level[a] + 1 == level[b];
    for (const auto& [a, b] : equals) ok = ok && level[a] == level[b];
    if (ok) return true;
    std::size_t i = 0;
    while (i < n && assign[i] == static_cast<int>(n)) assign[i++] = 0;
    if (i == n) return false;
    ++assign[i];
  }
}

// Literal round-by-round pool closure for n-constructibility. Exponential;
// only for tiny inputs. Uses the set operations for equality but not the
// constructibility code.
inline bool pool_constructible(const CanonSet& x, const CanonSet& y, std::size_t n,
                               std::size_t width) {
  std::set<CanonSet> pool{x};
  for (std::size_t round = 0; round < n; ++round) {
    std::set<CanonSet> next = pool;
    const std::vector<CanonSet> items(pool.begin(), pool.end());
    for (const auto& s : items) {
      for (const auto& e : elements(s)) next.insert(e);
    }
    std::vector<CanonSet> chosen;
    auto choose = [&](auto&& self, std::size_t from) -> void {
      next.insert(from_elements(chosen));
      if (chosen.size() == width) return;
      for (std::size_t i = from; i < items.size(); ++i) {
        chosen.push_back(items[i]);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    choose(choose, 0);
    pool = std::move(next);
  }
  return pool.count(y) != 0;
}

}  // namespace hyperset::oracle

#endif  // HYPERSET_TESTS_ORACLES_HPP
