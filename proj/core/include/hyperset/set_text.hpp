#ifndef HYPERSET_SET_TEXT_HPP
#define HYPERSET_SET_TEXT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperset/canon_set.hpp"
#include "hyperset/solver.hpp"

namespace hyperset {

// Set-literal language:
//
//   set     := '{}' | '{' set (',' set)* '}' | NAME
//   program := ('let' NAME '=' set ';')* set
//
// `let` bindings may refer to each other in any order, including cyclically.
// '#' starts a comment running to the end of the line.

// Parses a program and returns the picture of its final set expression.
// Throws ParseError (with line and column) on syntax errors and unbound names.
Apg parse_set(std::string_view text);

// Convenience: parse_set followed by canonicalize.
CanonSet parse_canon(std::string_view text);

// A program read as an equation system. Nested literals are flattened into
// fresh variables named `_1`, `_2`, ... that do not clash with user names.
struct SetProgram {
  EquationSystem system;
  std::vector<std::string> declared;  // user `let` names in source order
  std::optional<std::string> result;  // variable holding the final expression
};

// Like parse_set, but the final set expression is optional.
SetProgram parse_program(std::string_view text);

// `let n0 = {...}; ...; n0` with one binding per canonical node. Parses back
// to an equal set.
std::string to_program(const CanonSet& s);

// Brace notation for small well-founded sets, to_program otherwise.
std::string format_set(const CanonSet& s);

// The system as a program: one `let` per variable, embedded sets inlined
// when they have a brace form and expanded into extra bindings otherwise.
// `result` selects the final expression (defaults to the first variable).
std::string to_program(const EquationSystem& sys, std::optional<std::string> result = {});

// Graphviz rendering of the canonical picture.
std::string to_dot(const CanonSet& s);

}  // namespace hyperset

#endif  // HYPERSET_SET_TEXT_HPP
