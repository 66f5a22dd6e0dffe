#ifndef HYPERSET_BISIMULATION_HPP
#define HYPERSET_BISIMULATION_HPP

#include <cstdint>
#include <vector>

#include "hyperset/graph.hpp"

namespace hyperset {

// Maximum bisimulation of `g` computed by relational coarsest partition
// refinement (Paige-Tarjan, O(m log n)). Returns one class id per node;
// ids are dense and numbered by first occurrence in node order.
std::vector<std::uint32_t> bisimulation_classes(const Digraph& g);

// Quotient of `g` by `classes`: one node per class, repeated edges dropped.
Digraph quotient(const Digraph& g, const std::vector<std::uint32_t>& classes);

}  // namespace hyperset

#endif  // HYPERSET_BISIMULATION_HPP
