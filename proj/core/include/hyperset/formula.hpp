#ifndef HYPERSET_FORMULA_HPP
#define HYPERSET_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace hyperset {

// First-order formula over membership and equality. Immutable; copies share
// structure. Terms are names: a name is a variable unless the caller binds it
// to a constant set when evaluating.
class Formula {
 public:
  enum class Kind { kMember, kEqual, kNot, kAnd, kOr, kImplies, kIff, kForall, kExists };

  static Formula member(std::string element, std::string set);
  static Formula equal(std::string lhs, std::string rhs);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula forall(std::string variable, Formula body);
  static Formula exists(std::string variable, Formula body);

  Kind kind() const noexcept { return node_->kind; }
  bool is_atom() const noexcept { return kind() == Kind::kMember || kind() == Kind::kEqual; }
  bool is_quantifier() const noexcept { return kind() == Kind::kForall || kind() == Kind::kExists; }

  // Atoms: the two terms (element/set for membership). Quantifiers: `lhs()`
  // is the bound variable.
  const std::string& lhs() const noexcept { return node_->lhs; }
  const std::string& rhs() const noexcept { return node_->rhs; }

  // Operand of Not and quantifier bodies.
  const Formula& body() const { return *node_->left; }
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }

 private:
  struct Node {
    Kind kind;
    std::string lhs;
    std::string rhs;
    std::shared_ptr<const Formula> left;
    std::shared_ptr<const Formula> right;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string lhs, std::string rhs, const Formula* left,
                      const Formula* right);

  std::shared_ptr<const Node> node_;
};

// Grammar, loosest to tightest binding:
//
//   f     := ('forall' | 'exists') NAME '.' f | iff
//   iff   := imp ('<->' imp)*
//   imp   := or ('->' imp)?          right associative
//   or    := and ('|' and)*
//   and   := unary ('&' unary)*
//   unary := '~' unary | quant | '(' f ')' | NAME ('in' | '=') NAME
//
// A quantifier's body extends as far right as possible. Bound variables are
// renamed apart: every binder gets a name that is distinct from all free
// names and from every other binder (`y`, then `y_1`, `y_2`, ...).
Formula parse_formula(std::string_view text);

std::set<std::string> free_vars(const Formula& f);

// Fully parenthesized only where needed; parses back to the same tree.
std::string to_string(const Formula& f);

// Text of the ordinal predicate on `var`: transitive, membership trichotomous
// on elements, and every nonempty element has a member disjoint from it.
// Agrees with is_ordinal() when quantifiers range over a universe closed
// under elements.
std::string ordinal_formula_text(std::string_view var = "x");

}  // namespace hyperset

#endif  // HYPERSET_FORMULA_HPP
