#include "hyperset/pterm.hpp"

#include <algorithm>
#include <map>

#include "hyperset/error.hpp"
#include "hyperset/set_ops.hpp"
#include "hyperset/set_text.hpp"
#include "set_syntax.hpp"

namespace hyperset {
namespace {

NodeId build(const PTerm& t, const Digraph& filler, Digraph& g) {
  switch (t.kind()) {
    case PTerm::Kind::kPlaceholder: return g.append(filler);
    case PTerm::Kind::kSet: return g.append(t.value().to_digraph());
    case PTerm::Kind::kAggregate: break;
  }
  const NodeId n = g.add_node();
  for (const auto& item : t.items()) {
    const NodeId c = build(item, filler, g);
    g.add_edge(n, c);
  }
  return n;
}

PTerm from_expr(const syntax::SetExpr& e, const std::map<std::string, CanonSet>& lets) {
  switch (e.kind) {
    case syntax::SetExpr::Kind::kPlaceholder: return PTerm::placeholder();
    case syntax::SetExpr::Kind::kName: {
      auto it = lets.find(e.name);
      if (it == lets.end()) throw ParseError("unbound name '" + e.name + "'", e.line, e.column);
      return PTerm::set(it->second);
    }
    case syntax::SetExpr::Kind::kBraces: break;
  }
  std::vector<PTerm> items;
  for (const auto& item : e.items) items.push_back(from_expr(item, lets));
  return PTerm::aggregate(std::move(items));
}

void write(const PTerm& t, std::vector<CanonSet>& cyclic, std::string& out) {
  switch (t.kind()) {
    case PTerm::Kind::kPlaceholder:
      out += "@I";
      return;
    case PTerm::Kind::kSet: {
      const std::string text = format_set(t.value());
      if (!text.empty() && text.front() == '{') {
        out += text;
      } else {
        out += "_c" + std::to_string(cyclic.size()) + "n0";
        cyclic.push_back(t.value());
      }
      return;
    }
    case PTerm::Kind::kAggregate: break;
  }
  out += "{";
  for (std::size_t i = 0; i < t.items().size(); ++i) {
    if (i) out += ", ";
    write(t.items()[i], cyclic, out);
  }
  out += "}";
}

}  // namespace

bool PTerm::has_placeholder() const {
  if (kind_ == Kind::kPlaceholder) return true;
  return std::any_of(items_.begin(), items_.end(),
                     [](const PTerm& t) { return t.has_placeholder(); });
}

CanonSet PTerm::instantiate(const CanonSet& filler) const {
  Digraph g;
  const NodeId root = build(*this, filler.to_digraph(), g);
  return canonicalize(g, root);
}

PTerm parse_pterm(std::string_view text) {
  syntax::Program program = syntax::parse(text, {.allow_placeholder = true});
  for (const auto& let : program.lets) {
    if (syntax::contains_placeholder(let.value)) {
      throw ParseError("placeholder '@I' cannot be bound by 'let'", let.line, let.column);
    }
  }
  syntax::SetExpr result = std::move(*program.result);
  program.result.reset();
  std::map<std::string, CanonSet> lets;
  if (!program.lets.empty()) lets = solve(syntax::lower(program).system);
  if (!syntax::contains_placeholder(result)) {
    throw ParseError("term must contain the placeholder '@I'", result.line, result.column);
  }
  return from_expr(result, lets);
}

std::string to_string(const PTerm& t) {
  std::vector<CanonSet> cyclic;
  std::string body;
  write(t, cyclic, body);
  std::string out;
  for (std::size_t k = 0; k < cyclic.size(); ++k) {
    const std::string prefix = "_c" + std::to_string(k) + "n";
    const CanonSet& s = cyclic[k];
    for (NodeId n = 0; n < s.size(); ++n) {
      out += "let " + prefix + std::to_string(n) + " = {";
      bool first = true;
      for (NodeId c : s.children(n)) {
        out += (first ? "" : ", ") + prefix + std::to_string(c);
        first = false;
      }
      out += "}; ";
    }
  }
  return out + body;
}

Strategy parse_strategy(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "bare") return {Strategy::Kind::kBare, {}, {}};
  if (text == "singleton") return {Strategy::Kind::kSingleton, {}, {}};
  if (text == "successor") return {Strategy::Kind::kSuccessor, {}, {}};
  if (text == "pair-with") return {Strategy::Kind::kPairWith, {}, {}};
  if (text.starts_with("pair-with(") && text.ends_with(")")) {
    const auto inner = text.substr(10, text.size() - 11);
    return {Strategy::Kind::kPairWith, parse_canon(inner), {}};
  }
  throw ValidationError("unknown strategy '" + std::string(text) +
                        "' (expected bare, singleton, successor, pair-with or pair-with(SET))");
}

std::vector<Strategy> parse_strategies(std::string_view text) {
  std::vector<Strategy> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      const auto piece = text.substr(start, i - start);
      if (piece.find_first_not_of(' ') != std::string_view::npos) out.push_back(parse_strategy(piece));
      start = i + 1;
    } else if (text[i] == '(' || text[i] == '{') {
      ++depth;
    } else if (text[i] == ')' || text[i] == '}') {
      --depth;
    }
  }
  return out;
}

std::string to_string(const Strategy& s) {
  switch (s.kind) {
    case Strategy::Kind::kBare: return "bare";
    case Strategy::Kind::kSingleton: return "singleton";
    case Strategy::Kind::kSuccessor: return "successor";
    case Strategy::Kind::kPairWith:
      return s.partner ? "pair-with(" + format_set(*s.partner) + ")" : "pair-with";
    case Strategy::Kind::kLiteral: return to_string(*s.term);
  }
  return {};
}

std::vector<PTerm> placeholder_terms(std::span<const Strategy> strategies,
                                     std::span<const CanonSet> ideal, const Universe& universe,
                                     std::size_t budget, std::vector<std::string>* warnings) {
  if (budget == 0) throw ValidationError("placeholder term budget must be at least 1");
  std::vector<PTerm> out;
  std::size_t dropped = 0;
  auto emit = [&](PTerm t) {
    if (out.size() < budget) out.push_back(std::move(t));
    else ++dropped;
  };
  for (const auto& s : strategies) {
    switch (s.kind) {
      case Strategy::Kind::kBare:
        emit(PTerm::placeholder());
        break;
      case Strategy::Kind::kSingleton:
        emit(PTerm::aggregate({PTerm::placeholder()}));
        break;
      case Strategy::Kind::kSuccessor: {
        std::vector<PTerm> items;
        for (const auto& e : ideal) items.push_back(PTerm::set(e));
        items.push_back(PTerm::placeholder());
        emit(PTerm::aggregate(std::move(items)));
        break;
      }
      case Strategy::Kind::kPairWith:
        if (s.partner) {
          emit(PTerm::aggregate({PTerm::placeholder(), PTerm::set(*s.partner)}));
        } else {
          for (const auto& u : universe.members) {
            emit(PTerm::aggregate({PTerm::placeholder(), PTerm::set(u)}));
          }
        }
        break;
      case Strategy::Kind::kLiteral:
        emit(*s.term);
        break;
    }
  }
  if (dropped && warnings) {
    warnings->push_back("placeholder terms truncated to budget " + std::to_string(budget) + "; " +
                        std::to_string(dropped) + " term(s) not examined");
  }
  return out;
}

}  // namespace hyperset
