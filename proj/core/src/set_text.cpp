#include "hyperset/set_text.hpp"

#include <set>
#include <sstream>

#include "hyperset/set_ops.hpp"
#include "set_syntax.hpp"

namespace hyperset {
namespace {

constexpr std::size_t kMaxBraceNodes = 64;

// Size of the tree unfolding of a well-founded picture, saturating at `cap`.
std::size_t unfolded_size(const CanonSet& s, std::size_t cap) {
  std::vector<std::size_t> size(s.size(), 0);
  // Relaxation to a fixpoint; terminates because the picture is acyclic.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = s.size(); i-- > 0;) {
      std::size_t total = 1;
      for (NodeId c : s.children(static_cast<NodeId>(i))) total = std::min(cap, total + size[c]);
      if (total != size[i]) {
        size[i] = total;
        changed = true;
      }
    }
  }
  return size[CanonSet::root()];
}

void write_braces(const CanonSet& s, NodeId n, std::string& out) {
  out.push_back('{');
  bool first = true;
  for (NodeId c : s.children(n)) {
    if (!first) out += ", ";
    first = false;
    write_braces(s, c, out);
  }
  out.push_back('}');
}

bool has_brace_form(const CanonSet& s) {
  return is_well_founded(s) && unfolded_size(s, kMaxBraceNodes + 1) <= kMaxBraceNodes;
}

std::string braces(const CanonSet& s) {
  std::string out;
  write_braces(s, CanonSet::root(), out);
  return out;
}

void write_lets(const CanonSet& s, const std::string& prefix, std::ostringstream& out) {
  for (NodeId n = 0; n < s.size(); ++n) {
    out << "let " << prefix << n << " = {";
    bool first = true;
    for (NodeId c : s.children(n)) {
      out << (first ? "" : ", ") << prefix << c;
      first = false;
    }
    out << "}; ";
  }
}

}  // namespace

Apg parse_set(std::string_view text) {
  auto lowered = syntax::lower(syntax::parse(text, {}));
  const Digraph g = picture(lowered.system);
  const auto& bindings = lowered.system.bindings();
  NodeId root = 0;
  while (bindings[root].variable != *lowered.result) ++root;
  return Apg::reachable(g, root);
}

CanonSet parse_canon(std::string_view text) { return canonicalize(parse_set(text)); }

SetProgram parse_program(std::string_view text) {
  auto lowered = syntax::lower(syntax::parse(text, {.require_result = false}));
  return {std::move(lowered.system), std::move(lowered.declared), std::move(lowered.result)};
}

std::string to_program(const CanonSet& s) {
  std::ostringstream out;
  write_lets(s, "n", out);
  out << "n0";
  return out.str();
}

std::string format_set(const CanonSet& s) {
  return has_brace_form(s) ? braces(s) : to_program(s);
}

std::string to_program(const EquationSystem& sys, std::optional<std::string> result) {
  std::set<std::string> taken;
  for (const auto& b : sys.bindings()) taken.insert(b.variable);

  std::ostringstream lets;
  std::ostringstream extra;
  std::size_t embedded = 0;
  auto embed = [&](const CanonSet& s) {
    if (has_brace_form(s)) return braces(s);
    std::string prefix;
    do {
      prefix = "_s" + std::to_string(embedded++) + "n";
    } while (taken.count(prefix + "0"));
    write_lets(s, prefix, extra);
    return prefix + "0";
  };

  for (const auto& b : sys.bindings()) {
    lets << "let " << b.variable << " = {";
    bool first = true;
    for (const auto& t : b.terms) {
      lets << (first ? "" : ", ") << (t.is_variable() ? t.name() : embed(t.embedded()));
      first = false;
    }
    lets << "}; ";
  }
  std::string tail = result ? *result
                     : sys.empty() ? std::string("{}")
                                   : sys.bindings().front().variable;
  return lets.str() + extra.str() + tail;
}

std::string to_dot(const CanonSet& s) {
  std::ostringstream out;
  out << "digraph hyperset {\n";
  for (NodeId n = 0; n < s.size(); ++n) {
    out << "  n" << n << " [label=\"" << n << "\", shape="
        << (n == CanonSet::root() ? "doublecircle" : "circle") << "];\n";
  }
  for (NodeId n = 0; n < s.size(); ++n) {
    for (NodeId c : s.children(n)) out << "  n" << n << " -> n" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hyperset
