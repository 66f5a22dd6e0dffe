#ifndef HYPERSET_SRC_SET_SYNTAX_HPP
#define HYPERSET_SRC_SET_SYNTAX_HPP

// Parser for the set-literal language, shared by set programs and
// placeholder terms. Internal to the core library.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperset/solver.hpp"

namespace hyperset::syntax {

struct SetExpr {
  enum class Kind { kBraces, kName, kPlaceholder };
  Kind kind = Kind::kBraces;
  std::vector<SetExpr> items;
  std::string name;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct LetBinding {
  std::string name;
  SetExpr value;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Program {
  std::vector<LetBinding> lets;
  std::optional<SetExpr> result;
};

struct ParseOptions {
  bool allow_placeholder = false;
  bool require_result = true;
};

Program parse(std::string_view text, ParseOptions options);

// Lowers a parsed program to flat equations. Nested literals become fresh
// variables; aliases (`let a = b;`) copy their target's equation.
struct Lowered {
  EquationSystem system;
  std::vector<std::string> declared;
  std::optional<std::string> result;
};

Lowered lower(const Program& program);

bool contains_placeholder(const SetExpr& e);

}  // namespace hyperset::syntax

#endif  // HYPERSET_SRC_SET_SYNTAX_HPP
