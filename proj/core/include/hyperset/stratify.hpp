#ifndef HYPERSET_STRATIFY_HPP
#define HYPERSET_STRATIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperset/formula.hpp"

namespace hyperset {

// One atom of a contradictory cycle, traversed from `from` to `to`. The step
// weight is the level difference level(to) - level(from) the atom demands:
// +1 from element to set of a membership atom, -1 backwards, 0 for equality.
struct WitnessStep {
  Formula::Kind atom;  // kMember or kEqual
  std::string element;  // lhs of the atom
  std::string set;      // rhs of the atom
  std::string from;
  std::string to;
  int weight;
};

// Either a level for every name in the formula (free, bound and constant
// symbols alike), or a cycle of atoms whose weights sum to a nonzero value.
// Levels satisfy level(x) + 1 = level(y) for each `x in y` and
// level(x) = level(y) for each `x = y`; each connected group of names has
// minimum level 0.
struct StratResult {
  std::optional<std::map<std::string, int>> levels;
  std::vector<WitnessStep> witness;

  bool stratified() const noexcept { return levels.has_value(); }
  int witness_weight() const;
};

StratResult stratify(const Formula& f);

std::string to_string(const WitnessStep& step);

}  // namespace hyperset

#endif  // HYPERSET_STRATIFY_HPP
