#include "mcsp/vc_solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "mcsp/errors.hpp"

namespace mcsp {

CoverSplit split_cover(const IncidenceGraph& ig, std::span<const int> vertices) {
  CoverSplit s;
  for (int v : vertices) {
    if (v < 0 || v >= ig.graph.size()) throw PreconditionError("cover vertex out of range");
    if (ig.is_variable_vertex(v)) {
      s.vars.push_back(ig.vertex_variable(v));
    } else {
      s.constraints.push_back(ig.vertex_constraint(v));
    }
  }
  std::sort(s.vars.begin(), s.vars.end());
  s.vars.erase(std::unique(s.vars.begin(), s.vars.end()), s.vars.end());
  std::sort(s.constraints.begin(), s.constraints.end());
  s.constraints.erase(std::unique(s.constraints.begin(), s.constraints.end()), s.constraints.end());
  return s;
}

bool is_cover(const Formula& f, const CoverSplit& cover) {
  std::vector<char> in_x(f.num_vars() + 1, 0), in_phi(f.size(), 0);
  for (int v : cover.vars) {
    if (v < 1 || v > f.num_vars()) return false;
    in_x[v] = 1;
  }
  for (std::size_t j : cover.constraints) {
    if (j >= static_cast<std::size_t>(f.size())) return false;
    in_phi[j] = 1;
  }
  for (int j = 0; j < f.size(); ++j) {
    if (in_phi[j]) continue;
    for (const Literal& l : f[j].literals()) {
      if (!in_x[l.var]) return false;
    }
  }
  return true;
}

CoverSplit all_constraints_cover(const Formula& f) {
  CoverSplit s;
  s.constraints.resize(f.size());
  std::iota(s.constraints.begin(), s.constraints.end(), std::size_t{0});
  return s;
}

std::vector<int> type_vector(int var, std::span<const Constraint> constraints) {
  std::vector<int> v(constraints.size(), 0);
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (auto l = constraints[i].literal_of(var)) v[i] = l->positive ? 1 : -1;
  }
  return v;
}

std::vector<TypeClass> group_by_type(const Formula& f, std::span<const std::size_t> subset) {
  std::map<int, std::vector<int>> signatures;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (const Literal& l : f[subset[i]].literals()) {
      auto& sig = signatures[l.var];
      sig.resize(subset.size(), 0);
      sig[i] = l.positive ? 1 : -1;
    }
  }
  std::vector<TypeClass> classes;
  std::map<std::vector<int>, std::size_t> index;
  for (auto& [var, sig] : signatures) {
    auto [it, fresh] = index.try_emplace(sig, classes.size());
    if (fresh) classes.push_back({sig, {}});
    classes[it->second].vars.push_back(var);
  }
  return classes;
}

namespace {

class FeasibilitySearch {
 public:
  FeasibilitySearch(const Formula& f, std::span<const std::size_t> subset,
                    const std::vector<TypeClass>& classes)
      : classes_(classes), k_(subset.size()) {
    need_.resize(k_);
    base_.resize(k_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
      const Constraint& c = f[subset[i]];
      if (c.kind() == Kind::kParity) throw PreconditionError("residual solver takes threshold-like constraints only");
      need_[i] = c.required_true();
      for (const Literal& l : c.literals()) {
        if (!l.positive) ++base_[i];
      }
    }
    // headroom_[c][i]: the most constraint i can still gain from classes c..end.
    headroom_.assign(classes_.size() + 1, std::vector<int>(k_, 0));
    for (std::size_t c = classes_.size(); c-- > 0;) {
      for (std::size_t i = 0; i < k_; ++i) {
        headroom_[c][i] = headroom_[c + 1][i] +
                          (classes_[c].signature[i] == 1 ? static_cast<int>(classes_[c].vars.size()) : 0);
      }
    }
    choice_.assign(classes_.size(), 0);
  }

  bool run() {
    lhs_ = base_;
    return descend(0);
  }

  const std::vector<int>& choice() const { return choice_; }

 private:
  bool viable(std::size_t c) const {
    for (std::size_t i = 0; i < k_; ++i) {
      if (lhs_[i] + headroom_[c][i] < need_[i]) return false;
    }
    return true;
  }

  bool descend(std::size_t c) {
    if (!viable(c)) return false;
    if (c == classes_.size()) return true;
    const auto& sig = classes_[c].signature;
    const int bound = static_cast<int>(classes_[c].vars.size());
    int net = 0;
    for (int s : sig) net += s;
    // Setting l of the class true shifts lhs_[i] by sig[i] * l.
    for (int step = 0; step <= bound; ++step) {
      const int l = net >= 0 ? bound - step : step;
      for (std::size_t i = 0; i < k_; ++i) lhs_[i] += sig[i] * l;
      choice_[c] = l;
      const bool ok = descend(c + 1);
      for (std::size_t i = 0; i < k_; ++i) lhs_[i] -= sig[i] * l;
      if (ok) return true;
    }
    return false;
  }

  const std::vector<TypeClass>& classes_;
  std::size_t k_;
  std::vector<int> need_, base_, lhs_, choice_;
  std::vector<std::vector<int>> headroom_;
};

}  // namespace

std::optional<Assignment> subset_feasible(const Formula& f, std::span<const std::size_t> subset) {
  const auto classes = group_by_type(f, subset);
  FeasibilitySearch search(f, subset, classes);
  if (!search.run()) return std::nullopt;
  Assignment a(f.num_vars());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int t = 0; t < search.choice()[c]; ++t) a.set(classes[c].vars[t], true);
  }
  return a;
}

OracleResult residual_exact_max(const Formula& f, ResidualStats* stats) {
  ResidualStats local;
  ResidualStats& st = stats ? *stats : local;
  st = ResidualStats{};

  std::vector<std::size_t> always, maybe;
  for (int j = 0; j < f.size(); ++j) {
    const Constraint& c = f[j];
    if (c.kind() == Kind::kParity) throw PreconditionError("residual solver takes threshold-like constraints only");
    const int t = c.required_true();
    if (t <= 0) {
      always.push_back(j);
    } else if (t <= c.arity()) {
      maybe.push_back(j);
    }
  }

  // Constraints that always hold belong to every maximal feasible subset and
  // unsatisfiable ones to none, so only the others are enumerated.
  const int r = static_cast<int>(maybe.size());
  for (int size = r; size >= 0; --size) {
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<std::size_t> subset = always;
      for (int p : pick) subset.push_back(maybe[p]);
      std::sort(subset.begin(), subset.end());
      ++st.subsets_tested;
      st.max_type_classes = std::max(st.max_type_classes, static_cast<int>(group_by_type(f, subset).size()));
      if (auto a = subset_feasible(f, subset)) {
        const int value = static_cast<int>(always.size()) + size;
        if (count_satisfied(f, *a) < value) throw InvariantViolation("residual witness misses its subset");
        return {value, std::move(*a)};
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == r - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int t = i + 1; t < size; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  throw InvariantViolation("empty subset reported infeasible");
}

OracleResult solve_via_vertex_cover(const Formula& f, const CoverSplit& cover) {
  if (!is_cover(f, cover)) throw PreconditionError("not an incidence vertex cover");
  for (const Constraint& c : f.constraints()) {
    if (c.kind() == Kind::kParity) throw PreconditionError("vertex cover solver takes threshold-like constraints only");
  }
  std::vector<char> in_phi(f.size(), 0);
  for (std::size_t j : cover.constraints) in_phi[j] = 1;
  std::vector<std::size_t> outside;
  for (int j = 0; j < f.size(); ++j) {
    if (!in_phi[j]) outside.push_back(j);
  }
  const Formula inner = select_constraints(f, cover.constraints);

  const int s = static_cast<int>(cover.vars.size());
  if (s > 30) throw ResourceLimit("vertex cover has too many variables to branch on");
  std::optional<OracleResult> best;
  std::vector<std::pair<int, bool>> fixed(s);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << s); ++code) {
    Assignment sigma(f.num_vars());
    for (int i = 0; i < s; ++i) {
      const bool bit = ((code >> (s - 1 - i)) & 1) != 0;
      fixed[i] = {cover.vars[i], bit};
      sigma.set(cover.vars[i], bit);
    }
    int n_sigma = 0;
    for (std::size_t j : outside) n_sigma += eval_constraint(f[j], sigma) ? 1 : 0;
    const FixResult residual = fix_variables(inner, fixed);
    OracleResult sub = residual_exact_max(residual.formula);
    const int total = n_sigma + residual.delta + sub.opt_value;
    if (!best || total > best->opt_value) {
      for (auto [var, bit] : fixed) sub.witness.set(var, bit);
      best = OracleResult{total, std::move(sub.witness)};
    }
  }
  if (count_satisfied(f, best->witness) != best->opt_value) {
    throw InvariantViolation("vertex cover witness disagrees with its value");
  }
  return std::move(*best);
}

}  // namespace mcsp
