#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mcsp/formula.hpp"

namespace mcsp {

// Finite simple undirected graph on vertices 0..size()-1 with sorted adjacency.
class Graph {
 public:
  explicit Graph(int num_vertices = 0);

  int size() const { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const { return num_edges_; }

  // Returns false for an already present edge. Self-loops are rejected.
  bool add_edge(int u, int v);
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t num_edges_ = 0;
};

// True when the graph minus `removed` has no cycle.
bool is_acyclic(const Graph& g, std::span<const int> removed = {});

// Variables 1..n map to vertices 0..n-1; constraint j (0-based) maps to n + j.
struct IncidenceGraph {
  int num_vars = 0;
  int num_constraints = 0;
  Graph graph;

  int variable_vertex(int var) const { return var - 1; }
  int constraint_vertex(std::size_t c) const { return num_vars + static_cast<int>(c); }
  bool is_variable_vertex(int v) const { return v < num_vars; }
  int vertex_variable(int v) const { return v + 1; }
  std::size_t vertex_constraint(int v) const { return static_cast<std::size_t>(v - num_vars); }
};

IncidenceGraph build_incidence_graph(const Formula& f);

}  // namespace mcsp
