#include "hyperset/stratify.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace hyperset {
namespace {

struct Atom {
  Formula::Kind kind;
  std::string element;
  std::string set;
};

void collect(const Formula& f, std::vector<Atom>& atoms, std::vector<std::string>& names) {
  auto note = [&names](const std::string& n) {
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  };
  if (f.is_atom()) {
    note(f.lhs());
    note(f.rhs());
    atoms.push_back({f.kind(), f.lhs(), f.rhs()});
  } else if (f.is_quantifier()) {
    note(f.lhs());
    collect(f.body(), atoms, names);
  } else if (f.kind() == Formula::Kind::kNot) {
    collect(f.body(), atoms, names);
  } else {
    collect(f.left(), atoms, names);
    collect(f.right(), atoms, names);
  }
}

struct Arc {
  std::size_t to;
  std::size_t atom;
  int weight;
};

}  // namespace

int StratResult::witness_weight() const {
  return std::accumulate(witness.begin(), witness.end(), 0,
                         [](int acc, const WitnessStep& s) { return acc + s.weight; });
}

// Difference constraints solved by breadth-first potential propagation; a
// conflicting arc closes a cycle through the BFS tree, which becomes the
// witness.
StratResult stratify(const Formula& f) {
  std::vector<Atom> atoms;
  std::vector<std::string> names;
  collect(f, atoms, names);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;

  std::vector<std::vector<Arc>> arcs(names.size());
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    const std::size_t x = index[atoms[a].element];
    const std::size_t y = index[atoms[a].set];
    const int w = atoms[a].kind == Formula::Kind::kMember ? 1 : 0;
    arcs[x].push_back({y, a, w});
    arcs[y].push_back({x, a, -w});
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<long> level(names.size(), 0);
  std::vector<char> seen(names.size(), 0);
  std::vector<std::size_t> parent(names.size(), kNone);
  std::vector<std::size_t> parent_atom(names.size(), kNone);
  std::vector<int> parent_weight(names.size(), 0);

  auto step = [&](std::size_t from, std::size_t to, std::size_t atom, int weight) {
    const Atom& a = atoms[atom];
    return WitnessStep{a.kind, a.element, a.set, names[from], names[to], weight};
  };
  // Tree path from the component root down to v, as steps.
  auto path_to = [&](std::size_t v) {
    std::vector<WitnessStep> path;
    for (; parent[v] != kNone; v = parent[v]) {
      path.push_back(step(parent[v], v, parent_atom[v], parent_weight[v]));
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  StratResult result;
  std::map<std::string, int> levels;
  for (std::size_t start = 0; start < names.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> component{start};
    std::deque<std::size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const Arc& arc : arcs[u]) {
        const long expected = level[u] + arc.weight;
        if (!seen[arc.to]) {
          seen[arc.to] = 1;
          level[arc.to] = expected;
          parent[arc.to] = u;
          parent_atom[arc.to] = arc.atom;
          parent_weight[arc.to] = arc.weight;
          component.push_back(arc.to);
          queue.push_back(arc.to);
        } else if (level[arc.to] != expected) {
          // root -> u, u -> v, then v -> root reversed; drop the shared prefix.
          auto to_u = path_to(u);
          auto to_v = path_to(arc.to);
          std::size_t common = 0;
          while (common < to_u.size() && common < to_v.size() &&
                 to_u[common].to == to_v[common].to) {
            ++common;
          }
          std::vector<WitnessStep> cycle(to_u.begin() + static_cast<long>(common), to_u.end());
          cycle.push_back(step(u, arc.to, arc.atom, arc.weight));
          for (std::size_t k = to_v.size(); k-- > common;) {
            WitnessStep back = to_v[k];
            std::swap(back.from, back.to);
            back.weight = -back.weight;
            cycle.push_back(back);
          }
          result.witness = std::move(cycle);
          return result;
        }
      }
    }
    long lowest = level[start];
    for (std::size_t v : component) lowest = std::min(lowest, level[v]);
    for (std::size_t v : component) levels[names[v]] = static_cast<int>(level[v] - lowest);
  }
  result.levels = std::move(levels);
  return result;
}

std::string to_string(const WitnessStep& s) {
  const std::string atom =
      s.element + (s.atom == Formula::Kind::kMember ? " in " : " = ") + s.set;
  return s.from + " -> " + s.to + " via (" + atom + "), weight " +
         (s.weight > 0 ? "+" : "") + std::to_string(s.weight);
}

}  // namespace hyperset
