#include "mcsp/reductions.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "mcsp/errors.hpp"
#include "mcsp/random.hpp"

namespace mcsp {

MccGraph::MccGraph(int k, int n) : k_(k), n_(n) {
  if (k < 1 || n < 1) throw MalformedInstance("multicolored clique graph needs k >= 1 and n >= 1");
}

bool MccGraph::add_edge(int i, int u, int j, int v) {
  if (i > j) {
    std::swap(i, j);
    std::swap(u, v);
  }
  if (i == j) throw MalformedInstance("edge inside part " + std::to_string(i));
  if (i < 1 || j > k_ || u < 1 || u > n_ || v < 1 || v > n_) throw MalformedInstance("edge endpoint out of range");
  return edges_.insert({i, u, j, v}).second;
}

bool MccGraph::has_edge(int i, int u, int j, int v) const {
  if (i > j) {
    std::swap(i, j);
    std::swap(u, v);
  }
  return edges_.count({i, u, j, v}) > 0;
}

std::vector<MccEdge> MccGraph::all_cross_pairs() const {
  std::vector<MccEdge> out;
  for (int i = 1; i <= k_; ++i) {
    for (int u = 1; u <= n_; ++u) {
      for (int j = i + 1; j <= k_; ++j) {
        for (int v = 1; v <= n_; ++v) out.push_back({i, u, j, v});
      }
    }
  }
  return out;
}

MccGraph MccGraph::padded() const {
  int p = 1;
  while (p < n_) p *= 2;
  MccGraph g(k_, p);
  g.edges_ = edges_;
  return g;
}

std::optional<std::vector<int>> MccGraph::find_clique() const {
  std::vector<int> pick(k_ + 1, 0);
  std::function<bool(int)> extend = [&](int part) {
    if (part > k_) return true;
    for (int u = 1; u <= n_; ++u) {
      bool ok = true;
      for (int q = 1; q < part && ok; ++q) ok = has_edge(q, pick[q], part, u);
      if (!ok) continue;
      pick[part] = u;
      if (extend(part + 1)) return true;
    }
    return false;
  };
  if (!extend(1)) return std::nullopt;
  return std::vector<int>(pick.begin() + 1, pick.end());
}

MccGraph MccGraph::complete(int k, int n) {
  MccGraph g(k, n);
  for (const MccEdge& e : g.all_cross_pairs()) g.add_edge(e.i, e.u, e.j, e.v);
  return g;
}

MccGraph MccGraph::random(int k, int n, const Rational& p, std::uint64_t seed) {
  if (p < Rational(0) || p > Rational(1)) throw PreconditionError("edge probability must lie in [0, 1]");
  MccGraph g(k, n);
  Rng rng(seed);
  for (const MccEdge& e : g.all_cross_pairs()) {
    const int draw = rng.uniform(0, static_cast<int>(p.den()) - 1);
    if (draw < p.num()) g.add_edge(e.i, e.u, e.j, e.v);
  }
  return g;
}

namespace {

std::string name(const std::string& base, std::initializer_list<int> ids) {
  std::string s = base;
  for (int id : ids) s += "_" + std::to_string(id);
  return s;
}

int log2_exact(int n) {
  int b = 0;
  while ((1 << b) < n) ++b;
  return b;
}

// Literals pinning part `part`'s bits to bin(vertex - 1), most significant
// bit first. `match` gives literals true on that value, otherwise false.
void encode(std::vector<Literal>& out, int part, int vertex, int bits, bool match) {
  const int first = (part - 1) * bits + 1;
  for (int b = 0; b < bits; ++b) {
    const bool one = (((vertex - 1) >> (bits - 1 - b)) & 1) != 0;
    out.push_back({first + b, match ? one : !one});
  }
}

}  // namespace

CnfReduction mcc_to_cnf(const MccGraph& input) {
  const MccGraph g = input.padded();
  CnfReduction r;
  r.bits = log2_exact(g.n());
  r.formula = Formula(g.k() * r.bits);
  for (int i = 1; i <= g.k(); ++i) {
    auto& vars = r.index.variables[name("x", {i})];
    for (int b = 0; b < r.bits; ++b) vars.push_back((i - 1) * r.bits + b + 1);
  }
  for (const MccEdge& e : g.all_cross_pairs()) {
    if (g.has_edge(e.i, e.u, e.j, e.v)) continue;
    std::vector<Literal> lits;
    encode(lits, e.i, e.u, r.bits, false);
    encode(lits, e.j, e.v, r.bits, false);
    r.index.constraints[name("nonedge", {e.i, e.j})].push_back(r.formula.size());
    r.formula.add(Constraint::make_or(std::move(lits)));
  }
  return r;
}

DnfReduction mcc_to_dnf(const MccGraph& input) {
  const MccGraph g = input.padded();
  DnfReduction r;
  const int bits = log2_exact(g.n());
  r.formula = Formula(g.k() * bits);
  for (int i = 1; i <= g.k(); ++i) {
    auto& vars = r.index.variables[name("x", {i})];
    for (int b = 0; b < bits; ++b) vars.push_back((i - 1) * bits + b + 1);
  }
  for (const MccEdge& e : g.edges()) {
    std::vector<Literal> lits;
    encode(lits, e.i, e.u, bits, true);
    encode(lits, e.j, e.v, bits, true);
    r.index.constraints[name("edge", {e.i, e.j})].push_back(r.formula.size());
    r.formula.add(Constraint::make_and(std::move(lits)));
  }
  r.target = g.k() * (g.k() - 1) / 2;
  r.epsilon = Rational(1, static_cast<std::int64_t>(g.k()) * g.k());
  return r;
}

namespace {

class ThresholdBuilder {
 public:
  explicit ThresholdBuilder(ThresholdReduction& r) : r_(r) {}

  // A chain of `length` fresh variables linked by (y or not z).
  std::vector<int> chain(const std::string& label, int length) {
    auto& vars = r_.index.variables[label];
    for (int t = 0; t < length; ++t) vars.push_back(r_.formula.add_variable());
    for (int t = 0; t + 1 < length; ++t) {
      add("chain_" + label, Constraint::make_threshold({pos(vars[t]), neg(vars[t + 1])}, 1));
    }
    return vars;
  }

  std::size_t add(const std::string& label, Constraint c) {
    const std::size_t id = r_.formula.size();
    r_.index.constraints[label].push_back(id);
    r_.formula.add(std::move(c));
    return id;
  }

  std::size_t at_least(const std::string& label, const std::vector<int>& vars, int t) {
    std::vector<Literal> lits;
    for (int v : vars) lits.push_back(pos(v));
    return add(label, Constraint::make_threshold(std::move(lits), std::max(0, t)));
  }

  // At most t true among vars: at least |vars| - t of their negations.
  std::size_t at_most(const std::string& label, const std::vector<int>& vars, int t) {
    std::vector<Literal> lits;
    for (int v : vars) lits.push_back(neg(v));
    const int s = static_cast<int>(vars.size());
    return add(label, Constraint::make_threshold(std::move(lits), std::max(0, s - t)));
  }

 private:
  ThresholdReduction& r_;
};

}  // namespace

ThresholdReduction mcc_to_threshold(const MccGraph& g) {
  ThresholdReduction r;
  r.formula = Formula(0);
  ThresholdBuilder b(r);
  const int k = g.k(), n = g.n();

  // chains_p[i][l] is P_l of part i.
  std::vector<std::vector<std::vector<int>>> chains_p(k + 1, std::vector<std::vector<int>>(n + 1));
  for (int i = 1; i <= k; ++i) {
    std::vector<int> firsts, lasts;
    for (int l = 1; l <= n; ++l) {
      chains_p[i][l] = b.chain(name("P", {i, l}), l);
      firsts.push_back(chains_p[i][l].front());
      lasts.push_back(chains_p[i][l].back());
    }
    r.feedback_constraints.push_back(b.at_most(name("X", {i}), firsts, 1));
    r.feedback_constraints.push_back(b.at_least(name("Y", {i}), lasts, 1));
  }

  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      std::vector<MccEdge> pair_edges;
      for (const MccEdge& e : g.edges()) {
        if (e.i == i && e.j == j) pair_edges.push_back(e);
      }
      std::vector<int> firsts, lasts, pool;
      std::vector<std::vector<int>> chains_q;
      for (const MccEdge& e : pair_edges) {
        chains_q.push_back(b.chain(name("Q", {i, j, e.u, e.v}), n + 1 - e.v));
        firsts.push_back(chains_q.back().front());
        lasts.push_back(chains_q.back().back());
        pool.insert(pool.end(), chains_q.back().begin(), chains_q.back().end());
      }
      r.feedback_constraints.push_back(b.at_most(name("X", {i, j}), firsts, 1));
      r.feedback_constraints.push_back(b.at_least(name("Y", {i, j}), lasts, 1));
      for (std::size_t t = 0; t < pair_edges.size(); ++t) {
        const MccEdge& e = pair_edges[t];
        b.add(name("Cinc", {i, j, e.u, e.v}),
              Constraint::make_threshold({pos(chains_p[i][e.u].front()), neg(firsts[t])}, 1));
      }
      for (int l = 1; l <= n; ++l) pool.insert(pool.end(), chains_p[j][l].begin(), chains_p[j][l].end());
      r.feedback_constraints.push_back(b.at_least(name("C", {i, j}), pool, n + 1));
      r.feedback_constraints.push_back(b.at_most(name("Cprime", {i, j}), pool, n + 1));
    }
  }
  std::sort(r.feedback_constraints.begin(), r.feedback_constraints.end());
  return r;
}

Formula threshold_to_majority(const Formula& f) {
  Formula out(f.num_vars());
  std::vector<Constraint> units;
  for (const Constraint& c : f.constraints()) {
    if (c.kind() != Kind::kThreshold) throw PreconditionError("expected THRESHOLD constraints only");
  }
  for (const Constraint& c : f.constraints()) {
    std::vector<Literal> lits(c.literals().begin(), c.literals().end());
    if (lits.size() % 2 == 1) {
      const int y = out.add_variable();
      lits.push_back(pos(y));
      units.push_back(Constraint::make_threshold({neg(y)}, 1));
    }
    const int d = c.threshold() - static_cast<int>(lits.size()) / 2;
    for (int t = 0; t < 2 * std::abs(d); ++t) {
      const int y = out.add_variable();
      lits.push_back(pos(y));
      units.push_back(Constraint::make_threshold({d > 0 ? neg(y) : pos(y)}, 1));
    }
    out.add(Constraint::make_majority(std::move(lits)));
  }
  for (Constraint& u : units) out.add(std::move(u));
  return out;
}

Formula cnf_to_majority(const Formula& f) {
  for (const Constraint& c : f.constraints()) {
    if (c.kind() != Kind::kOr) throw PreconditionError("expected OR constraints only");
  }
  Formula out(f.num_vars());
  std::vector<Constraint> units;
  std::map<std::vector<int>, std::vector<int>> dummies;
  for (const Constraint& c : f.constraints()) {
    std::vector<int> vars;
    for (const Literal& l : c.literals()) vars.push_back(l.var);
    std::sort(vars.begin(), vars.end());
    std::vector<Literal> lits(c.literals().begin(), c.literals().end());
    if (vars.empty()) {
      const int z = out.add_variable();
      lits.push_back(pos(z));
      units.push_back(Constraint::make_threshold({neg(z)}, 1));
      out.add(Constraint::make_majority(std::move(lits)));
      continue;
    }
    auto [it, fresh] = dummies.try_emplace(vars);
    if (fresh) {
      for (std::size_t t = 0; t + 1 < vars.size(); ++t) {
        const int z = out.add_variable();
        it->second.push_back(z);
        units.push_back(Constraint::make_threshold({pos(z)}, 1));
      }
    }
    for (int z : it->second) lits.push_back(pos(z));
    out.add(Constraint::make_majority(std::move(lits)));
  }
  for (Constraint& u : units) out.add(std::move(u));
  return out;
}

}  // namespace mcsp
