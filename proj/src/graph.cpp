#include "mcsp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mcsp {

Graph::Graph(int num_vertices) : adj_(static_cast<std::size_t>(num_vertices)) {}

bool Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u < 0 || v < 0 || u >= size() || v >= size()) throw std::out_of_range("vertex out of range");
  auto& nu = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adj_[static_cast<std::size_t>(v)];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++num_edges_;
  return true;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(num_edges_);
  for (int u = 0; u < size(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_acyclic(const Graph& g, std::span<const int> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.size()), 0);
  for (int v : removed) gone[static_cast<std::size_t>(v)] = 1;
  std::vector<int> parent(static_cast<std::size_t>(g.size()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [u, v] : g.edges()) {
    if (gone[static_cast<std::size_t>(u)] || gone[static_cast<std::size_t>(v)]) continue;
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[static_cast<std::size_t>(ru)] = rv;
  }
  return true;
}

IncidenceGraph build_incidence_graph(const Formula& f) {
  IncidenceGraph ig;
  ig.num_vars = f.num_vars();
  ig.num_constraints = f.size();
  ig.graph = Graph(ig.num_vars + ig.num_constraints);
  for (std::size_t j = 0; j < f.constraints().size(); ++j) {
    for (const Literal& l : f[j].literals()) {
      ig.graph.add_edge(ig.constraint_vertex(j), ig.variable_vertex(l.var));
    }
  }
  return ig;
}

}  // namespace mcsp
