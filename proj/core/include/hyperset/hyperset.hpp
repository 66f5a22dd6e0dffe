#ifndef HYPERSET_HYPERSET_HPP
#define HYPERSET_HYPERSET_HPP

#include "hyperset/bisimulation.hpp"
#include "hyperset/canon_set.hpp"
#include "hyperset/constructible.hpp"
#include "hyperset/error.hpp"
#include "hyperset/evaluate.hpp"
#include "hyperset/formula.hpp"
#include "hyperset/graph.hpp"
#include "hyperset/pterm.hpp"
#include "hyperset/set_ops.hpp"
#include "hyperset/set_text.hpp"
#include "hyperset/solver.hpp"
#include "hyperset/stratify.hpp"
#include "hyperset/totality.hpp"
#include "hyperset/universe.hpp"

#endif  // HYPERSET_HYPERSET_HPP
