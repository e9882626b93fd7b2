#pragma once

#include "mcsp/formula.hpp"
#include "mcsp/oracle.hpp"

namespace mcsp {

struct ForestStats {
  // Iterations of the peel loop (one per variable).
  int variable_steps = 0;
  // Constraint removals, each classified satisfied or unsatisfied once.
  int constraints_satisfied = 0;
  int constraints_unsatisfied = 0;
};

// Exact MAX-THRESHOLD for formulas whose incidence graph is a forest, by
// peeling the deepest variable of each rooted component. OR, AND and
// MAJORITY are read as thresholds 1, arity and ceil(arity/2). Throws
// PreconditionError on a cyclic incidence graph or a PARITY constraint.
OracleResult solve_forest(const Formula& f, ForestStats* stats = nullptr);

// solve_forest's value, checked to satisfy at least half of the constraints.
// Requires every threshold to be at most the constraint's arity.
int half_guarantee_value(const Formula& f);

}  // namespace mcsp
