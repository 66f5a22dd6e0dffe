#ifndef HYPERSET_SET_OPS_HPP
#define HYPERSET_SET_OPS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hyperset/canon_set.hpp"

namespace hyperset {

CanonSet empty_set();

// The set whose elements are `xs`; bisimilar duplicates collapse.
CanonSet from_elements(std::span<const CanonSet> xs);

// Elements of `s` in canonical child order. No two results are equal.
std::vector<CanonSet> elements(const CanonSet& s);

// The set pictured by node `n` of `s`.
CanonSet subset_at(const CanonSet& s, NodeId n);

bool is_member(const CanonSet& a, const CanonSet& b);
bool is_well_founded(const CanonSet& s);

// Every set reachable from `s` through one or more membership steps, in
// canonical node order. `s` itself appears only if it lies on a cycle.
std::vector<CanonSet> transitive_closure(const CanonSet& s);

// von Neumann ordinal n = {0, ..., n-1}.
CanonSet ordinal(std::size_t n);

// First-order ordinal test: `s` is transitive, membership is trichotomous on
// its elements, and every nonempty element has a member that is disjoint from
// it. The last clause rules out Quine atoms (Ω) but keeps circular solutions
// such as C = {0, 1, C}.
bool is_ordinal(const CanonSet& s);

// Replacement of x with y within S. If S equals x the result is y;
// otherwise every edge of S's canonical picture that points at the node
// equal to x is redirected to a copy of y. Nothing below a replaced node,
// and nothing inside y, is visited again. If x does not occur in S's
// transitive closure the result equals S.
CanonSet replace(const CanonSet& s, const CanonSet& x, const CanonSet& y);

}  // namespace hyperset

#endif  // HYPERSET_SET_OPS_HPP
