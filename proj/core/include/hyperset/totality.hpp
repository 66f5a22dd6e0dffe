#ifndef HYPERSET_TOTALITY_HPP
#define HYPERSET_TOTALITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperset/canon_set.hpp"
#include "hyperset/evaluate.hpp"
#include "hyperset/formula.hpp"
#include "hyperset/pterm.hpp"
#include "hyperset/solver.hpp"
#include "hyperset/universe.hpp"

namespace hyperset {

// Name of the complete-totality variable in TotalityReport::equation.
inline constexpr const char* kTotalityVariable = "C";

// Verdict for one hypothetical object.
struct TermVerdict {
  PTerm term;
  CanonSet instance;  // term with the ideal aggregate at its placeholders
  bool accepted = false;
  // For accepted terms: the element the term contributes once its
  // placeholders are bound to the complete totality.
  std::optional<CanonSet> element;
};

struct TotalityReport {
  std::string predicate;
  std::string variable;  // the predicate's single free variable
  std::size_t k = 0;
  std::vector<CanonSet> ideal;
  CanonSet ideal_aggregate;
  bool ideal_aggregate_satisfies = false;
  std::vector<TermVerdict> accepted_terms;
  EquationSystem equation;
  CanonSet complete;
  std::vector<CanonSet> intruders;
  std::vector<std::string> warnings;
};

struct TotalityOptions {
  std::vector<Strategy> strategies;
  std::size_t budget = 64;
  Environment constants;
};

// The single free variable of `p` once `constants` are removed. Throws
// ValidationError if there is not exactly one.
std::string totality_variable(const Formula& p, const Environment& constants = {});

// Members of the universe satisfying `p`, in universe order.
std::vector<CanonSet> ideal_totality(const Formula& p, const Universe& universe,
                                     const Environment& constants = {});

// Complete totality by concurrent aggregation:
//   1. E = ideal totality, I = {E}.
//   2. Every placeholder term h is tested on h[I].
//   3. C = {E..., h[C] for each accepted h} is solved as one equation.
//   4. Elements of C failing `p` are reported as intruders.
TotalityReport complete_totality(const Formula& p, const Universe& universe,
                                 const TotalityOptions& options);

// Human-readable `key = value` report.
std::string to_text(const TotalityReport& report);

// JSON object with keys predicate, variable, k, ideal, ideal_aggregate,
// ideal_aggregate_satisfies, accepted_terms, equation, complete, intruders,
// warnings. Sets are rendered as `let` programs.
std::string to_json(const TotalityReport& report, int indent = 2);

}  // namespace hyperset

#endif  // HYPERSET_TOTALITY_HPP
