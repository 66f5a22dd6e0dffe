#include "hyperset/solver.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "hyperset/bisimulation.hpp"
#include "hyperset/error.hpp"

namespace hyperset {

bool EquationSystem::binds(const std::string& variable) const {
  return std::any_of(bindings_.begin(), bindings_.end(),
                     [&](const Binding& b) { return b.variable == variable; });
}

std::vector<Diagnostic> validate(const EquationSystem& sys) {
  std::vector<Diagnostic> out;
  std::set<std::string> bound;
  for (const auto& b : sys.bindings()) {
    if (!bound.insert(b.variable).second) {
      out.push_back({Diagnostic::Kind::kDuplicateBinding, b.variable,
                     "variable '" + b.variable + "' is bound more than once"});
    }
  }
  std::set<std::string> reported;
  for (const auto& b : sys.bindings()) {
    for (const auto& t : b.terms) {
      if (t.is_variable() && !bound.count(t.name()) && reported.insert(t.name()).second) {
        out.push_back({Diagnostic::Kind::kUnboundVariable, t.name(),
                       "variable '" + t.name() + "' is used in the equation for '" +
                           b.variable + "' but never bound"});
      }
    }
  }
  return out;
}

Digraph picture(const EquationSystem& sys) {
  if (auto diags = validate(sys); !diags.empty()) throw ValidationError(diags.front().message);
  const auto& bindings = sys.bindings();
  std::unordered_map<std::string, NodeId> node_of;
  Digraph g(bindings.size());
  for (std::size_t i = 0; i < bindings.size(); ++i) {
    node_of.emplace(bindings[i].variable, static_cast<NodeId>(i));
  }
  for (std::size_t i = 0; i < bindings.size(); ++i) {
    for (const auto& t : bindings[i].terms) {
      const NodeId child =
          t.is_variable() ? node_of.at(t.name()) : g.append(t.embedded().to_digraph());
      g.add_edge(static_cast<NodeId>(i), child);
    }
  }
  g.normalize();
  return g;
}

std::map<std::string, CanonSet> solve(const EquationSystem& sys) {
  const Digraph g = picture(sys);
  const auto classes = bisimulation_classes(g);
  const Digraph minimal = quotient(g, classes);
  std::map<std::string, CanonSet> out;
  const auto& bindings = sys.bindings();
  for (std::size_t i = 0; i < bindings.size(); ++i) {
    out.emplace(bindings[i].variable, canonical_from_minimal(minimal, classes[i]));
  }
  return out;
}

}  // namespace hyperset
