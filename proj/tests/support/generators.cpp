#include "generators.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mcsp::testing {

namespace {

// Rooted two-coloured trees up to isomorphism. A tree's children are stored
// as nondecreasing (size, index) references into the table of the other
// colour.
struct TreeTable {
  using Child = std::pair<int, int>;
  // trees[colour][size] -> list of child lists; colour 0 = variable root.
  std::map<std::pair<int, int>, std::vector<std::vector<Child>>> trees;

  const std::vector<std::vector<Child>>& get(int colour, int size) {
    auto key = std::make_pair(colour, size);
    auto it = trees.find(key);
    if (it != trees.end()) return it->second;
    std::vector<std::vector<Child>> out;
    std::vector<Child> acc;
    std::function<void(int, Child)> gen = [&](int remaining, Child floor) {
      if (remaining == 0) {
        out.push_back(acc);
        return;
      }
      for (int s = floor.first; s <= remaining; ++s) {
        const int count = static_cast<int>(get(1 - colour, s).size());
        for (int i = (s == floor.first ? floor.second : 0); i < count; ++i) {
          acc.push_back({s, i});
          gen(remaining - s, {s, i});
          acc.pop_back();
        }
      }
    };
    gen(size - 1, {1, 0});
    return trees[key] = std::move(out);
  }

  // Appends tree (colour, size, index) to the shape; returns its root id.
  int emit(int colour, int size, int index, ForestShape& shape) {
    const std::vector<Child> children = get(colour, size)[index];
    const int id = colour == 0 ? ++shape.n : shape.m++;
    for (auto [s, i] : children) {
      const int child = emit(1 - colour, s, i, shape);
      if (colour == 0) {
        shape.edges.push_back({id, child});
      } else {
        shape.edges.push_back({child, id});
      }
    }
    return id;
  }
};

struct Component {
  int size;
  int index;  // -1: lone constraint
  friend auto operator<=>(const Component&, const Component&) = default;
};

Formula build(const ForestShape& shape, const std::vector<bool>& signs, const std::vector<int>& thresholds) {
  std::vector<std::vector<Literal>> lits(shape.m);
  for (std::size_t e = 0; e < shape.edges.size(); ++e) {
    auto [v, c] = shape.edges[e];
    lits[c].push_back({v, signs[e]});
  }
  Formula f(shape.n);
  for (int c = 0; c < shape.m; ++c) f.add(Constraint::make_threshold(std::move(lits[c]), thresholds[c]));
  return f;
}

std::vector<int> arities(const ForestShape& shape) {
  std::vector<int> a(shape.m, 0);
  for (auto [v, c] : shape.edges) ++a[c];
  return a;
}

Constraint random_threshold_like(std::vector<Literal> lits, Rng& rng) {
  const int a = static_cast<int>(lits.size());
  switch (rng.uniform(0, 3)) {
    case 0: return Constraint::make_or(std::move(lits));
    case 1: return Constraint::make_and(std::move(lits));
    case 2: return Constraint::make_majority(std::move(lits));
    default: return Constraint::make_threshold(std::move(lits), rng.uniform(0, a + 1));
  }
}

// Random forest over vertices 0..n+m-1 (variables first) as adjacency sets.
std::vector<std::set<int>> random_forest_edges(int n, int m, Rng& rng) {
  std::vector<int> order(n + m);
  for (int i = 0; i < n + m; ++i) order[i] = i;
  for (int i = n + m - 1; i > 0; --i) std::swap(order[i], order[rng.uniform(0, i)]);
  std::vector<std::set<int>> adj(n + m);
  std::vector<int> seen_vars, seen_cons;
  for (int v : order) {
    const bool is_var = v < n;
    auto& other = is_var ? seen_cons : seen_vars;
    if (!other.empty() && rng.uniform(0, 3) != 0) {
      const int w = other[rng.uniform(0, static_cast<int>(other.size()) - 1)];
      adj[v].insert(w);
      adj[w].insert(v);
    }
    (is_var ? seen_vars : seen_cons).push_back(v);
  }
  return adj;
}

}  // namespace

std::vector<ForestShape> forest_shapes(int max_size) {
  TreeTable table;
  std::vector<Component> kinds;
  for (int s = 1; s <= max_size; ++s) {
    const int count = static_cast<int>(table.get(0, s).size());
    for (int i = 0; i < count; ++i) kinds.push_back({s, i});
    if (s == 1) kinds.push_back({1, -1});
  }
  std::sort(kinds.begin(), kinds.end());

  std::vector<ForestShape> out;
  std::vector<Component> acc;
  std::function<void(int, std::size_t)> gen = [&](int remaining, std::size_t from) {
    if (!acc.empty()) {
      ForestShape shape;
      for (const Component& c : acc) {
        if (c.index < 0) {
          ++shape.m;
        } else {
          table.emit(0, c.size, c.index, shape);
        }
      }
      out.push_back(std::move(shape));
    }
    for (std::size_t k = from; k < kinds.size(); ++k) {
      if (kinds[k].size > remaining) continue;
      acc.push_back(kinds[k]);
      gen(remaining - kinds[k].size, k);
      acc.pop_back();
    }
  };
  gen(max_size, 0);
  return out;
}

void for_each_labelling(const ForestShape& shape, bool constant_thresholds,
                        const std::function<void(const Formula&)>& visit) {
  const auto a = arities(shape);
  std::vector<int> lo(shape.m), hi(shape.m);
  for (int c = 0; c < shape.m; ++c) {
    if (a[c] == 0) {
      lo[c] = 0;
      hi[c] = 1;
    } else if (constant_thresholds) {
      lo[c] = 0;
      hi[c] = a[c] + 1;
    } else {
      lo[c] = 1;
      hi[c] = a[c];
    }
  }
  const std::size_t e = shape.edges.size();
  std::vector<bool> signs(e);
  std::vector<int> t(lo);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    for (std::size_t i = 0; i < e; ++i) signs[i] = ((mask >> i) & 1) != 0;
    t = lo;
    while (true) {
      visit(build(shape, signs, t));
      int c = 0;
      while (c < shape.m && t[c] == hi[c]) t[c] = lo[c], ++c;
      if (c == shape.m) break;
      ++t[c];
    }
  }
}

Formula random_forest_formula(int n, int m, std::uint64_t seed) {
  Rng rng(seed);
  const auto adj = random_forest_edges(n, m, rng);
  Formula f(n);
  for (int c = 0; c < m; ++c) {
    std::vector<Literal> lits;
    for (int v : adj[n + c]) lits.push_back({v + 1, rng.coin()});
    f.add(random_threshold_like(std::move(lits), rng));
  }
  return f;
}

CoveredInstance random_covered_instance(int n, int cover_size, std::uint64_t seed) {
  Rng rng(seed);
  CoveredInstance out{Formula(n), {}, {}};
  const int cx = rng.uniform(0, std::min(cover_size, n));
  const int cphi = cover_size - cx;
  std::vector<int> vars(n);
  for (int i = 0; i < n; ++i) vars[i] = i + 1;
  for (int i = 0; i < cx; ++i) std::swap(vars[i], vars[rng.uniform(i, n - 1)]);
  out.cover_vars.assign(vars.begin(), vars.begin() + cx);
  std::sort(out.cover_vars.begin(), out.cover_vars.end());

  auto pick = [&](const std::vector<int>& pool, int k) {
    std::vector<int> p = pool;
    for (int i = 0; i < k; ++i) std::swap(p[i], p[rng.uniform(i, static_cast<int>(p.size()) - 1)]);
    std::vector<Literal> lits;
    for (int i = 0; i < k; ++i) lits.push_back({p[i], rng.coin()});
    return lits;
  };

  std::vector<std::pair<bool, Constraint>> cons;
  const int outside = rng.uniform(0, 6);
  for (int i = 0; i < outside; ++i) {
    const int k = cx == 0 ? 0 : rng.uniform(1, cx);
    cons.push_back({false, random_threshold_like(pick(out.cover_vars, k), rng)});
  }
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  for (int i = 0; i < cphi; ++i) {
    cons.push_back({true, random_threshold_like(pick(all, rng.uniform(0, std::min(n, 8))), rng)});
  }
  for (int i = static_cast<int>(cons.size()) - 1; i > 0; --i) std::swap(cons[i], cons[rng.uniform(0, i)]);
  for (std::size_t j = 0; j < cons.size(); ++j) {
    if (cons[j].first) out.cover_constraints.push_back(j);
    out.formula.add(std::move(cons[j].second));
  }
  return out;
}

Formula random_fvs_majority(int n, int m, int hubs, std::uint64_t seed) {
  Rng rng(seed);
  auto adj = random_forest_edges(n, m, rng);
  for (int h = 0; h < hubs; ++h) {
    const int hub = rng.uniform(0, n + m - 1);
    const bool hub_var = hub < n;
    const int lo = hub_var ? n : 0, hi = hub_var ? n + m - 1 : n - 1;
    if (hi < lo) continue;
    const int wires = rng.uniform(2, 4);
    for (int w = 0; w < wires; ++w) {
      const int other = rng.uniform(lo, hi);
      adj[hub].insert(other);
      adj[other].insert(hub);
    }
  }
  Formula f(n);
  for (int c = 0; c < m; ++c) {
    std::vector<Literal> lits;
    for (int v : adj[n + c]) lits.push_back({v + 1, rng.coin()});
    f.add(Constraint::make_majority(std::move(lits)));
  }
  return f;
}

Formula random_cnf(int n, int m, int lo, int hi, Rng& rng) {
  Formula f(n);
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  for (int j = 0; j < m; ++j) {
    const int k = std::min(n, rng.uniform(lo, hi));
    for (int i = 0; i < k; ++i) std::swap(pool[i], pool[rng.uniform(i, n - 1)]);
    std::vector<Literal> lits;
    for (int i = 0; i < k; ++i) lits.push_back({pool[i], rng.coin()});
    f.add(Constraint::make_or(std::move(lits)));
  }
  return f;
}

}  // namespace mcsp::testing
