#ifndef HYPERSET_SOLVER_HPP
#define HYPERSET_SOLVER_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hyperset/canon_set.hpp"

namespace hyperset {

// Right-hand-side entry of a flat set equation: a variable or a known set.
class SetTerm {
 public:
  static SetTerm variable(std::string name) { return SetTerm(std::move(name)); }
  static SetTerm set(CanonSet s) { return SetTerm(std::move(s)); }

  bool is_variable() const noexcept { return std::holds_alternative<std::string>(value_); }
  const std::string& name() const { return std::get<std::string>(value_); }
  const CanonSet& embedded() const { return std::get<CanonSet>(value_); }

  friend bool operator==(const SetTerm&, const SetTerm&) = default;

 private:
  explicit SetTerm(std::string name) : value_(std::move(name)) {}
  explicit SetTerm(CanonSet s) : value_(std::move(s)) {}

  std::variant<std::string, CanonSet> value_;
};

struct Binding {
  std::string variable;
  std::vector<SetTerm> terms;
};

// System of equations `v = {t1, ..., tk}`, one per variable. Bindings keep
// insertion order; repeated variables are recorded so validate() can
// report them.
class EquationSystem {
 public:
  void bind(std::string variable, std::vector<SetTerm> terms) {
    bindings_.push_back({std::move(variable), std::move(terms)});
  }

  const std::vector<Binding>& bindings() const noexcept { return bindings_; }
  bool empty() const noexcept { return bindings_.empty(); }
  bool binds(const std::string& variable) const;

 private:
  std::vector<Binding> bindings_;
};

struct Diagnostic {
  enum class Kind { kUnboundVariable, kDuplicateBinding };
  Kind kind;
  std::string variable;
  std::string message;
};

// Empty iff solve() succeeds.
std::vector<Diagnostic> validate(const EquationSystem& sys);

// Picture of the whole system: node i stands for the i-th binding, embedded
// sets are appended after the variables. Requires a valid system.
Digraph picture(const EquationSystem& sys);

// Unique solution under bisimulation equality: one graph node per variable,
// embedded sets spliced in, every variable canonicalized at its node.
// Throws ValidationError carrying the first diagnostic on invalid input.
std::map<std::string, CanonSet> solve(const EquationSystem& sys);

}  // namespace hyperset

#endif  // HYPERSET_SOLVER_HPP
