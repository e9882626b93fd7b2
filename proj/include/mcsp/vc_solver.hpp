#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mcsp/formula.hpp"
#include "mcsp/graph.hpp"
#include "mcsp/oracle.hpp"

namespace mcsp {

// An incidence vertex cover split into its variable and constraint sides.
struct CoverSplit {
  std::vector<int> vars;                 // S_X, sorted
  std::vector<std::size_t> constraints;  // S_phi, sorted
};

// Splits incidence-graph vertices into the two sides.
CoverSplit split_cover(const IncidenceGraph& ig, std::span<const int> vertices);
// Every constraint outside S_phi has all its variables in S_X.
bool is_cover(const Formula& f, const CoverSplit& cover);
// The cover made of every constraint vertex; always valid.
CoverSplit all_constraints_cover(const Formula& f);

// Component i is +1, -1 or 0 for a positive, negative or absent occurrence of
// `var` in constraints[i].
std::vector<int> type_vector(int var, std::span<const Constraint> constraints);

// Variables sharing one type vector, sorted ascending.
struct TypeClass {
  std::vector<int> signature;
  std::vector<int> vars;
};

// Classes of the variables occurring in the selected constraints, ordered by
// their smallest variable.
std::vector<TypeClass> group_by_type(const Formula& f, std::span<const std::size_t> subset);

// Decides whether the selected constraints can all hold at once by
// backtracking over how many variables of each type class are set true. The
// witness sets the lowest-index variables of each class.
std::optional<Assignment> subset_feasible(const Formula& f, std::span<const std::size_t> subset);

struct ResidualStats {
  int subsets_tested = 0;
  int max_type_classes = 0;
};

// Exact optimum of a formula with few constraints: subsets are tried by
// decreasing size, lexicographically within a size, and the first feasible
// one wins. PARITY constraints are rejected.
OracleResult residual_exact_max(const Formula& f, ResidualStats* stats = nullptr);

// Exact optimum given an incidence vertex cover: branch over the cover
// variables and solve each residual over the cover constraints. Ties go to
// the lexicographically smallest assignment of the cover variables.
OracleResult solve_via_vertex_cover(const Formula& f, const CoverSplit& cover);

}  // namespace mcsp
