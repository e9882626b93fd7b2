#include "mcsp/tree_solver.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "mcsp/errors.hpp"
#include "mcsp/graph.hpp"

namespace mcsp {

OracleResult solve_forest(const Formula& f, ForestStats* stats) {
  const int n = f.num_vars();
  const int m = f.size();
  std::vector<int> threshold(m);
  for (int j = 0; j < m; ++j) {
    if (f[j].kind() == Kind::kParity) throw PreconditionError("forest solver takes threshold-like constraints only");
    threshold[j] = f[j].required_true();
  }
  const IncidenceGraph ig = build_incidence_graph(f);
  if (!is_acyclic(ig.graph)) {
    throw PreconditionError("incidence graph is not a forest");
  }

  // Root every component at its lowest-index variable.
  std::vector<int> depth(ig.graph.size(), -1);
  std::vector<int> parent_constraint(n + 1, -1);
  for (int root = 1; root <= n; ++root) {
    const int rv = ig.variable_vertex(root);
    if (depth[rv] >= 0) continue;
    depth[rv] = 0;
    std::deque<int> queue{rv};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : ig.graph.neighbors(u)) {
        if (depth[w] >= 0) continue;
        depth[w] = depth[u] + 1;
        if (ig.is_variable_vertex(w)) parent_constraint[ig.vertex_variable(w)] = static_cast<int>(ig.vertex_constraint(u));
        queue.push_back(w);
      }
    }
  }

  ForestStats local;
  ForestStats& st = stats ? *stats : local;
  st = ForestStats{};

  std::vector<char> alive(m, 1);
  std::vector<int> remaining(m);
  int satisfied = 0;
  auto settle = [&](int j) {
    if (!alive[j]) return;
    if (threshold[j] <= 0) {
      alive[j] = 0;
      ++satisfied;
      ++st.constraints_satisfied;
    } else if (remaining[j] == 0) {
      alive[j] = 0;
      ++st.constraints_unsatisfied;
    }
  };
  for (int j = 0; j < m; ++j) {
    remaining[j] = f[j].arity();
    settle(j);
  }

  std::vector<std::vector<std::pair<int, bool>>> occ(n + 1);
  for (int j = 0; j < m; ++j) {
    for (const Literal& l : f[j].literals()) occ[l.var].push_back({j, l.positive});
  }

  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v + 1;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return depth[ig.variable_vertex(a)] > depth[ig.variable_vertex(b)];
  });

  Assignment witness(n);
  for (int v : order) {
    ++st.variable_steps;
    const int parent = parent_constraint[v];
    const bool has_parent = parent >= 0 && alive[parent];
    bool any_alive = false;
    int pos_units = 0, neg_units = 0;
    bool parent_positive = true;
    for (auto [j, positive] : occ[v]) {
      if (!alive[j]) continue;
      any_alive = true;
      if (j == parent) {
        parent_positive = positive;
        continue;
      }
      // A child: its only remaining variable is v.
      if (threshold[j] == 1) (positive ? pos_units : neg_units) += 1;
    }
    if (!any_alive) continue;  // isolated: stays 0

    bool value;
    if (pos_units != neg_units) {
      value = pos_units > neg_units;
    } else if (has_parent) {
      value = parent_positive;
    } else {
      value = true;
    }
    witness.set(v, value);

    for (auto [j, positive] : occ[v]) {
      if (!alive[j]) continue;
      --remaining[j];
      if (positive == value) --threshold[j];
      settle(j);
    }
  }

  for (int j = 0; j < m; ++j) {
    if (alive[j]) throw InvariantViolation("forest peel left constraint " + std::to_string(j) + " unresolved");
  }
  if (count_satisfied(f, witness) != satisfied) {
    throw InvariantViolation("forest peel count disagrees with its witness");
  }
  return {satisfied, std::move(witness)};
}

int half_guarantee_value(const Formula& f) {
  for (const Constraint& c : f.constraints()) {
    if (c.kind() != Kind::kParity && c.required_true() > c.arity()) {
      throw PreconditionError("half guarantee needs every threshold <= arity");
    }
  }
  const int value = solve_forest(f).opt_value;
  if (2 * value < f.size()) {
    throw InvariantViolation("forest optimum below half of the constraints");
  }
  return value;
}

}  // namespace mcsp
