#ifndef HYPERSET_PTERM_HPP
#define HYPERSET_PTERM_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperset/canon_set.hpp"
#include "hyperset/universe.hpp"

namespace hyperset {

// Placeholder term: a finite aggregation tree whose leaves are either the
// placeholder `@I` or concrete sets. Describes a hypothetical object built
// from the aggregate under construction.
class PTerm {
 public:
  enum class Kind { kPlaceholder, kSet, kAggregate };

  static PTerm placeholder() { return PTerm(Kind::kPlaceholder, {}, {}); }
  static PTerm set(CanonSet s) { return PTerm(Kind::kSet, std::move(s), {}); }
  static PTerm aggregate(std::vector<PTerm> items) {
    return PTerm(Kind::kAggregate, {}, std::move(items));
  }

  Kind kind() const noexcept { return kind_; }
  const CanonSet& value() const noexcept { return value_; }
  const std::vector<PTerm>& items() const noexcept { return items_; }

  bool has_placeholder() const;

  // The set obtained by putting `filler` at every placeholder leaf.
  CanonSet instantiate(const CanonSet& filler) const;

  friend bool operator==(const PTerm&, const PTerm&) = default;

 private:
  PTerm(Kind kind, CanonSet value, std::vector<PTerm> items)
      : kind_(kind), value_(std::move(value)), items_(std::move(items)) {}

  Kind kind_;
  CanonSet value_;
  std::vector<PTerm> items_;
};

// A set program whose final expression may contain `@I`, e.g.
// `{@I, {}}` or `let a = {a}; {@I, a}`. Let bindings must not mention @I and
// the term must contain at least one placeholder.
PTerm parse_pterm(std::string_view text);

// Parses back with parse_pterm. Cyclic leaves are emitted as let bindings.
std::string to_string(const PTerm& t);

// Generator of hypothetical objects.
//   bare           @I
//   singleton      {@I}
//   successor      {e1, ..., en, @I} for the ideal elements e1..en
//   pair-with      {@I, u} for every universe member u
//   pair-with(S)   {@I, S} for the set literal S
//   literal        a user-supplied term
struct Strategy {
  enum class Kind { kBare, kSingleton, kSuccessor, kPairWith, kLiteral };
  Kind kind = Kind::kBare;
  std::optional<CanonSet> partner;
  std::optional<PTerm> term;

  static Strategy literal(PTerm t) { return {Kind::kLiteral, std::nullopt, std::move(t)}; }
};

// One strategy name; throws ValidationError for unknown names.
Strategy parse_strategy(std::string_view text);

// Comma-separated strategy names; commas inside (), {} do not split.
std::vector<Strategy> parse_strategies(std::string_view text);

std::string to_string(const Strategy& s);

// Terms from `strategies` in order, truncated to `budget`. When truncation
// happens and `warnings` is non-null a note is appended. Throws
// ValidationError if budget is 0.
std::vector<PTerm> placeholder_terms(std::span<const Strategy> strategies,
                                     std::span<const CanonSet> ideal, const Universe& universe,
                                     std::size_t budget,
                                     std::vector<std::string>* warnings = nullptr);

}  // namespace hyperset

#endif  // HYPERSET_PTERM_HPP
