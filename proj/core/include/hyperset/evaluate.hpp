#ifndef HYPERSET_EVALUATE_HPP
#define HYPERSET_EVALUATE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperset/canon_set.hpp"
#include "hyperset/formula.hpp"

namespace hyperset {

// Values for free variables and constant symbols.
using Environment = std::map<std::string, CanonSet>;

// Finite-model evaluator. Quantifiers range over the universe only; free
// names may be bound to sets outside it. Membership and equality are decided
// on canonical forms, which are interned and cached across calls, so reuse
// one Model for many evaluations over the same universe.
class Model {
 public:
  explicit Model(std::span<const CanonSet> universe);

  // Throws ValidationError if a free name of `f` is missing from `env`.
  bool evaluate(const Formula& f, const Environment& env);

  std::size_t universe_size() const noexcept { return universe_size_; }

 private:
  using Id = std::uint32_t;

  Id intern(const CanonSet& s);
  const std::vector<Id>& members(Id set);
  bool holds(const Formula& f, std::vector<std::pair<const std::string*, Id>>& scope);
  Id lookup(const std::string& name,
            const std::vector<std::pair<const std::string*, Id>>& scope) const;

  std::size_t universe_size_;
  std::vector<CanonSet> sets_;
  std::unordered_map<CanonSet, Id> ids_;
  std::vector<std::vector<Id>> members_;
  std::vector<char> members_ready_;
};

bool evaluate(const Formula& f, const Environment& env, std::span<const CanonSet> universe);

}  // namespace hyperset

#endif  // HYPERSET_EVALUATE_HPP
