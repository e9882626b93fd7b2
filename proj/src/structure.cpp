#include "mcsp/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mcsp {

// ---------------------------------------------------------------------------
// Neighborhood diversity

namespace {

// N(u) \ {v} == N(v) \ {u}
bool twins(const Graph& g, int u, int v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::size_t i = 0, j = 0;
  while (true) {
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == u) ++j;
    if (i == a.size() || j == b.size()) return i == a.size() && j == b.size();
    if (a[i] != b[j]) return false;
    ++i;
    ++j;
  }
}

}  // namespace

NdPartition neighborhood_diversity(const Graph& g) {
  NdPartition p;
  for (int v = 0; v < g.size(); ++v) {
    bool placed = false;
    for (auto& cls : p.classes) {
      if (twins(g, cls.front(), v)) {
        cls.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) p.classes.push_back({v});
  }
  for (const auto& cls : p.classes) {
    bool clique = cls.size() > 1 && g.adjacent(cls[0], cls[1]);
    p.kinds.push_back(clique ? ModuleKind::kClique : ModuleKind::kIndependent);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Vertex cover

bool is_vertex_cover(const Graph& g, std::span<const int> cover) {
  std::vector<char> in(g.size(), 0);
  for (int v : cover) in[v] = 1;
  for (auto [u, v] : g.edges()) {
    if (!in[u] && !in[v]) return false;
  }
  return true;
}

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : edges_(g.edges()), in_(g.size(), 0) {}

  // Enumerates every cover reachable with at most `k` picks and keeps the
  // lexicographically smallest.
  bool run(int k) {
    found_ = false;
    branch(k);
    return found_;
  }

  const std::vector<int>& best() const { return best_; }

 private:
  void branch(int k) {
    const std::pair<int, int>* open = nullptr;
    for (const auto& e : edges_) {
      if (!in_[e.first] && !in_[e.second]) {
        open = &e;
        break;
      }
    }
    if (open == nullptr) {
      std::vector<int> cover = chosen_;
      std::sort(cover.begin(), cover.end());
      if (!found_ || cover < best_) best_ = std::move(cover);
      found_ = true;
      return;
    }
    if (k == 0) return;
    for (int v : {open->first, open->second}) {
      in_[v] = 1;
      chosen_.push_back(v);
      branch(k - 1);
      chosen_.pop_back();
      in_[v] = 0;
    }
  }

  std::vector<std::pair<int, int>> edges_;
  std::vector<char> in_;
  std::vector<int> chosen_;
  std::vector<int> best_;
  bool found_ = false;
};

int greedy_matching_size(const Graph& g) {
  std::vector<char> used(g.size(), 0);
  int m = 0;
  for (auto [u, v] : g.edges()) {
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      ++m;
    }
  }
  return m;
}

}  // namespace

BoundedResult vertex_cover_number(const Graph& g, int budget) {
  if (budget < 0 || greedy_matching_size(g) > budget) return {};
  CoverSearch search(g);
  for (int k = 0; k <= budget; ++k) {
    if (search.run(k)) return {k, search.best()};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Feedback vertex set
//
// Exact search on a multigraph with "undeletable" marks. Reductions:
//  - a self-loop forces its vertex into the solution;
//  - vertices of degree <= 1 are dropped;
//  - adjacent undeletable vertices are contracted (a double edge between them
//    is an unbreakable cycle);
//  - a deletable vertex joined to an undeletable one by a double edge is forced;
//  - a deletable degree-2 vertex with a deletable neighbor is bypassed.
// Lower bound: deleting a vertex of degree d lowers the cyclomatic number by
// at most d - 1.

bool is_feedback_vertex_set(const Graph& g, std::span<const int> fvs) {
  return is_acyclic(g, fvs);
}

namespace {

class FvsState {
 public:
  explicit FvsState(const Graph& g)
      : adj_(g.size()), alive_(g.size(), 1), keep_(g.size(), 0) {
    for (int u = 0; u < g.size(); ++u) {
      for (int v : g.neighbors(u)) adj_[u].push_back({v, 1});
    }
  }

  bool force_delete(int v, int& k) {
    if (!alive_[v]) return true;
    if (keep_[v]) return false;
    solution_.push_back(v);
    remove(v);
    return --k >= 0;
  }

  bool mark_keep(int v) {
    if (alive_[v]) keep_[v] = 1;
    return true;
  }

  bool solve(int k) {
    if (!reduce(k)) return false;
    const int mu = cyclomatic();
    if (mu == 0) return true;
    if (k == 0) return false;

    std::vector<int> gains;
    int pick = -1;
    int pick_deg = -1;
    for (int v = 0; v < size(); ++v) {
      if (!alive_[v] || keep_[v]) continue;
      int d = degree(v);
      gains.push_back(d - 1);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    if (pick < 0) return false;
    std::sort(gains.rbegin(), gains.rend());
    int reach = 0;
    for (int i = 0; i < k && i < static_cast<int>(gains.size()); ++i) reach += gains[i];
    if (reach < mu) return false;

    {
      FvsState take = *this;
      int kk = k;
      if (take.force_delete(pick, kk) && take.solve(kk)) {
        *this = std::move(take);
        return true;
      }
    }
    FvsState skip = *this;
    skip.keep_[pick] = 1;
    if (skip.solve(k)) {
      *this = std::move(skip);
      return true;
    }
    return false;
  }

  const std::vector<int>& solution() const { return solution_; }

 private:
  using Edges = std::vector<std::pair<int, int>>;

  int size() const { return static_cast<int>(adj_.size()); }

  int mult(int u, int v) const {
    for (auto [w, c] : adj_[u]) {
      if (w == v) return c;
    }
    return 0;
  }

  int degree(int v) const {
    int d = 0;
    for (auto [w, c] : adj_[v]) d += (w == v) ? 2 * c : c;
    return d;
  }

  void erase_entry(int u, int v) {
    auto& e = adj_[u];
    e.erase(std::remove_if(e.begin(), e.end(), [v](auto p) { return p.first == v; }), e.end());
  }

  void add_edge(int u, int v, int c) {
    auto bump = [](Edges& e, int w, int c) {
      for (auto& p : e) {
        if (p.first == w) {
          p.second = std::min(2, p.second + c);
          return;
        }
      }
      e.push_back({w, std::min(2, c)});
    };
    bump(adj_[u], v, c);
    if (u != v) bump(adj_[v], u, c);
  }

  void remove(int v) {
    for (auto [w, c] : adj_[v]) {
      if (w != v) erase_entry(w, v);
    }
    adj_[v].clear();
    alive_[v] = 0;
  }

  // Merges undeletable w into undeletable v.
  void contract(int v, int w) {
    Edges moved = adj_[w];
    remove(w);
    for (auto [x, c] : moved) {
      if (x != v) add_edge(v, x, c);
    }
  }

  bool reduce(int& k) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < size(); ++v) {
        if (!alive_[v]) continue;
        if (mult(v, v) > 0) {
          if (!force_delete(v, k)) return false;
          changed = true;
          continue;
        }
        int d = degree(v);
        if (d <= 1) {
          remove(v);
          changed = true;
          continue;
        }
        if (keep_[v]) {
          for (auto [w, c] : adj_[v]) {
            if (!keep_[w]) continue;
            if (c >= 2) return false;
            contract(v, w);
            changed = true;
            break;
          }
          continue;
        }
        bool forced = false;
        for (auto [w, c] : adj_[v]) {
          if (keep_[w] && c >= 2) forced = true;
        }
        if (forced) {
          if (!force_delete(v, k)) return false;
          changed = true;
          continue;
        }
        if (d == 2) {
          const auto& e = adj_[v];
          if (e.size() == 1) {
            int a = e[0].first;
            remove(v);
            add_edge(a, a, 1);
            changed = true;
          } else {
            int a = e[0].first, b = e[1].first;
            if (keep_[a] && keep_[b]) continue;
            remove(v);
            add_edge(a, b, 1);
            changed = true;
          }
        }
      }
    }
    return true;
  }

  int cyclomatic() const {
    int vertices = 0, edges2 = 0, comps = 0;
    std::vector<char> seen(size(), 0);
    std::vector<int> stack;
    for (int s = 0; s < size(); ++s) {
      if (!alive_[s]) continue;
      ++vertices;
      edges2 += degree(s);
      if (seen[s]) continue;
      ++comps;
      seen[s] = 1;
      stack.push_back(s);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [w, c] : adj_[u]) {
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
    }
    return edges2 / 2 - vertices + comps;
  }

  std::vector<Edges> adj_;
  std::vector<char> alive_;
  std::vector<char> keep_;
  std::vector<int> solution_;
};

bool fvs_feasible(const Graph& g, int k, std::span<const int> forced_in,
                  std::span<const int> forced_out) {
  FvsState s(g);
  for (int v : forced_out) s.mark_keep(v);
  for (int v : forced_in) {
    if (!s.force_delete(v, k)) return false;
  }
  return s.solve(k);
}

// Vertices of the 2-core; anything outside lies on no cycle.
std::vector<char> two_core(const Graph& g) {
  std::vector<int> deg(g.size());
  std::vector<char> in(g.size(), 1);
  std::vector<int> queue;
  for (int v = 0; v < g.size(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (!in[v]) continue;
    in[v] = 0;
    for (int w : g.neighbors(v)) {
      if (in[w] && --deg[w] <= 1) queue.push_back(w);
    }
  }
  return in;
}

}  // namespace

BoundedResult feedback_vertex_set(const Graph& g, int budget) {
  if (budget < 0) return {};
  int best = -1;
  for (int k = 0; k <= budget; ++k) {
    if (fvs_feasible(g, k, {}, {})) {
      best = k;
      break;
    }
  }
  if (best < 0) return {};

  // Lexicographically smallest optimum: decide vertices in increasing order.
  const auto core = two_core(g);
  std::vector<int> chosen, excluded;
  for (int v = 0; v < g.size() && static_cast<int>(chosen.size()) < best; ++v) {
    if (!core[v]) {
      excluded.push_back(v);
      continue;
    }
    chosen.push_back(v);
    if (!fvs_feasible(g, best, chosen, excluded)) {
      chosen.pop_back();
      excluded.push_back(v);
    }
  }
  return {best, chosen};
}

ParamReport analyze_structure(const Graph& g, int vc_budget, int fvs_budget) {
  ParamReport r;
  r.nd = neighborhood_diversity(g);
  r.vc = vertex_cover_number(g, vc_budget);
  r.fvs = feedback_vertex_set(g, fvs_budget);
  r.vc_budget = vc_budget;
  r.fvs_budget = fvs_budget;
  return r;
}

}  // namespace mcsp
