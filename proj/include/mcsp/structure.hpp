#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mcsp/graph.hpp"

namespace mcsp {

enum class ModuleKind { kIndependent, kClique };

// Twin classes of a graph: the coarsest partition into modules that are each a
// clique or an independent set. Classes are ordered by their smallest vertex
// and each class is sorted. Singletons are reported as independent.
struct NdPartition {
  std::vector<std::vector<int>> classes;
  std::vector<ModuleKind> kinds;

  int k() const { return static_cast<int>(classes.size()); }
};

NdPartition neighborhood_diversity(const Graph& g);

// Exact minimum size together with the lexicographically smallest optimal
// vertex set, or nothing when the optimum is larger than the budget.
struct BoundedResult {
  std::optional<int> size;
  std::vector<int> witness;

  bool exceeds_budget() const { return !size.has_value(); }
};

BoundedResult vertex_cover_number(const Graph& g, int budget);
BoundedResult feedback_vertex_set(const Graph& g, int budget);

bool is_vertex_cover(const Graph& g, std::span<const int> cover);
bool is_feedback_vertex_set(const Graph& g, std::span<const int> fvs);

struct ParamReport {
  NdPartition nd;
  BoundedResult vc;
  BoundedResult fvs;
  int vc_budget = 0;
  int fvs_budget = 0;
};

ParamReport analyze_structure(const Graph& g, int vc_budget, int fvs_budget);

}  // namespace mcsp
