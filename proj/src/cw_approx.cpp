#include "mcsp/cw_approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mcsp/errors.hpp"
#include "mcsp/random.hpp"

namespace mcsp {

namespace {

using i128 = __int128;

void require_cnf(const Formula& f) {
  for (const Constraint& c : f.constraints()) {
    if (c.kind() != Kind::kOr) throw PreconditionError("clause scheme takes OR constraints only");
  }
}

// floor(d * (den/num)^e), saturated at int64 max. Falls back to long double
// only when the exact products would not fit.
std::int64_t window_end(int d, const Rational& eps_prime, int e) {
  constexpr auto cap = std::numeric_limits<std::int64_t>::max();
  constexpr i128 limit = static_cast<i128>(1) << 120;
  i128 top = d, bottom = 1;
  for (int i = 0; i < e; ++i) {
    if (top > limit / eps_prime.den() || bottom > limit / eps_prime.num()) {
      const long double approx = static_cast<long double>(d) *
                                 std::pow(static_cast<long double>(eps_prime.den()) / eps_prime.num(), e);
      return approx >= static_cast<long double>(cap) ? cap : static_cast<std::int64_t>(approx);
    }
    top *= eps_prime.den();
    bottom *= eps_prime.num();
  }
  const i128 q = top / bottom;
  return q > cap ? cap : static_cast<std::int64_t>(q);
}

}  // namespace

ClausePartition clause_partition(const Formula& f, const Rational& epsilon_prime, int l_exponent) {
  require_cnf(f);
  if (epsilon_prime <= Rational(0) || epsilon_prime >= Rational(1)) {
    throw PreconditionError("epsilon' must lie in (0, 1)");
  }
  if (l_exponent < 0) throw PreconditionError("negative window exponent");
  ClausePartition p;
  p.epsilon_prime = epsilon_prime;
  p.l_exponent = l_exponent;
  p.m = f.size();
  int max_size = 0;
  for (const Constraint& c : f.constraints()) max_size = std::max(max_size, c.arity());
  p.histogram.assign(max_size + 1, 0);
  for (const Constraint& c : f.constraints()) ++p.histogram[c.arity()];

  for (int d = 1; d <= max_size + 1; ++d) {
    const std::int64_t D = window_end(d, epsilon_prime, l_exponent);
    std::int64_t medium = 0;
    for (int s = d; s <= max_size && s <= D; ++s) medium += p.histogram[s];
    if (compare_scaled(epsilon_prime, p.m, medium) >= 0) {
      p.d = d;
      p.D = D;
      break;
    }
  }
  for (int j = 0; j < f.size(); ++j) {
    const int s = f[j].arity();
    if (s < p.d) {
      p.short_clauses.push_back(j);
    } else if (s <= p.D) {
      p.medium_clauses.push_back(j);
    } else {
      p.long_clauses.push_back(j);
    }
  }
  return p;
}

bool is_balanced(const ClausePartition& p, const Rational& epsilon) {
  const Rational half = epsilon / Rational(2);
  return compare_scaled(half, p.m, static_cast<std::int64_t>(p.short_clauses.size())) <= 0 &&
         compare_scaled(half, p.m, static_cast<std::int64_t>(p.long_clauses.size())) <= 0;
}

YSelection select_y_set(const Formula& f, const ClausePartition& p, const Rational& epsilon) {
  require_cnf(f);
  if (!is_balanced(p, epsilon)) throw PreconditionError("partition is not balanced");
  const i128 num = epsilon.num(), den = epsilon.den();
  const i128 m = p.m;
  const int n = f.num_vars();

  std::vector<int> short_count(n + 1, 0);
  for (std::size_t j : p.short_clauses) {
    for (const Literal& l : f[j].literals()) ++short_count[l.var];
  }
  std::vector<char> in_hat(f.size(), 0), in_y(n + 1, 0);
  std::vector<int> y_hits(f.size(), 0);
  int hat_size = 0;
  for (std::size_t j : p.long_clauses) {
    in_hat[j] = 1;
    ++hat_size;
  }
  // |hat| <= eps^2 m
  auto done = [&] { return hat_size * den * den <= num * num * m; };

  YSelection sel;
  while (!done()) {
    std::vector<int> hat_count(n + 1, 0);
    for (int j = 0; j < f.size(); ++j) {
      if (!in_hat[j]) continue;
      for (const Literal& l : f[j].literals()) ++hat_count[l.var];
    }
    int pick = 0;
    for (int v = 1; v <= n; ++v) {
      if (in_y[v] || hat_count[v] == 0) continue;
      // short_v <= (eps/4)^2 hat_v
      if (static_cast<i128>(short_count[v]) * 16 * den * den > num * num * hat_count[v]) continue;
      if (pick == 0 || static_cast<i128>(short_count[v]) * hat_count[pick] <
                           static_cast<i128>(short_count[pick]) * hat_count[v]) {
        pick = v;
      }
    }
    if (pick == 0) throw LemmaViolation("no sparse variable among the long clauses");
    in_y[pick] = 1;
    sel.Y.push_back(pick);
    for (int j = 0; j < f.size(); ++j) {
      if (!in_hat[j] || !f[j].contains(pick)) continue;
      ++y_hits[j];
      if (y_hits[j] * num >= den) {
        in_hat[j] = 0;
        --hat_size;
      }
    }
    sel.steps.push_back({pick, short_count[pick], hat_count[pick], hat_size});
  }
  for (int j = 0; j < f.size(); ++j) {
    if (in_hat[j]) sel.psi_hat.push_back(j);
  }

  auto has_y = [&](std::size_t j) {
    for (const Literal& l : f[j].literals()) {
      if (in_y[l.var]) return true;
    }
    return false;
  };
  for (std::size_t j : p.short_clauses) sel.short_touched += has_y(j) ? 1 : 0;
  for (std::size_t j : p.long_clauses) {
    int hits = 0;
    for (const Literal& l : f[j].literals()) hits += in_y[l.var];
    if (hits * num < den) ++sel.long_underhit;
  }
  if (sel.short_touched * 4 * den > num * m) {
    throw InvariantViolation("too many short clauses meet Y: " + std::to_string(sel.short_touched));
  }
  if (sel.long_underhit * den * den > num * num * m) {
    throw InvariantViolation("too many long clauses barely meet Y: " + std::to_string(sel.long_underhit));
  }
  if (static_cast<i128>(sel.Y.size()) * num > m * den) {
    throw InvariantViolation("Y is too large: " + std::to_string(sel.Y.size()));
  }
  return sel;
}

std::string_view cw_branch_name(CwBranch b) {
  switch (b) {
    case CwBranch::kShortExact: return "short-exact";
    case CwBranch::kLongRandom: return "long-random";
    case CwBranch::kBalanced: return "balanced";
  }
  return "?";
}

namespace {

// Exact optimum over the listed clauses, as a partial assignment on the
// variables they mention.
struct PartialExact {
  std::vector<int> vars;
  Assignment values;
};

PartialExact solve_exactly(const Formula& f, const std::vector<std::size_t>& clauses, const CwOptions& options) {
  const Formula sub = select_constraints(f, clauses);
  const CompactFormula cf = compact(sub);
  OracleResult r;
  if (options.exact_backend) {
    r = options.exact_backend(cf.formula);
  } else {
    if (cf.formula.num_vars() > options.backend_var_limit) {
      throw ResourceLimit("exact backend needs " + std::to_string(cf.formula.num_vars()) +
                          " variables; raise the backend limit or use fewer variables");
    }
    r = max_csp_bruteforce(cf.formula, options.backend_var_limit);
  }
  PartialExact out{cf.original_var, Assignment(f.num_vars())};
  for (int i = 1; i <= cf.formula.num_vars(); ++i) out.values.set(cf.original_var[i - 1], r.witness[i]);
  return out;
}

Assignment complete_randomly(const Formula& f, const PartialExact* exact, Rng& rng) {
  Assignment a(f.num_vars());
  std::vector<char> fixed(f.num_vars() + 1, 0);
  if (exact) {
    for (int v : exact->vars) {
      fixed[v] = 1;
      a.set(v, exact->values[v]);
    }
  }
  for (int v = 1; v <= f.num_vars(); ++v) {
    if (!fixed[v]) a.set(v, rng.coin());
  }
  return a;
}

}  // namespace

CwResult approx_max_cnf(const Formula& f, const Rational& epsilon, const CwOptions& options) {
  require_cnf(f);
  if (epsilon <= Rational(0) || epsilon >= Rational(1)) throw PreconditionError("epsilon must lie in (0, 1)");
  if (options.strict_epsilon && epsilon >= Rational(1, 8)) throw PreconditionError("epsilon must be below 1/8");
  if (options.trials < 1) throw PreconditionError("need at least one trial");

  CwResult out;
  out.report.algorithm = "cw-as";
  out.report.epsilon = epsilon;
  out.report.seed = options.seed;
  out.report.trials = options.trials;
  CwTrace& tr = out.trace;
  tr.partition = clause_partition(f, epsilon * epsilon, options.l_exponent);
  const ClausePartition& p = tr.partition;
  if (compare_scaled(p.epsilon_prime, p.m, static_cast<std::int64_t>(p.medium_clauses.size())) < 0) {
    throw InvariantViolation("medium window holds too many clauses");
  }

  const bool balanced = is_balanced(p, epsilon);
  if (!balanced) {
    tr.branch = p.short_clauses.size() >= p.long_clauses.size() ? CwBranch::kShortExact : CwBranch::kLongRandom;
    const std::size_t discarded = std::min(p.short_clauses.size(), p.long_clauses.size());
    if (compare_scaled(epsilon / Rational(2), p.m, static_cast<std::int64_t>(discarded)) <= 0) {
      throw InvariantViolation("unbalanced branch discards too many clauses");
    }
  } else {
    tr.branch = CwBranch::kBalanced;
  }
  out.report.route = std::string(cw_branch_name(tr.branch));

  std::optional<PartialExact> exact_short, exact_free;
  if (tr.branch != CwBranch::kLongRandom) exact_short = solve_exactly(f, p.short_clauses, options);
  if (tr.branch == CwBranch::kBalanced) {
    try {
      tr.y = select_y_set(f, p, epsilon);
    } catch (const LemmaViolation&) {
      tr.lemma_fallback = true;
    }
    if (tr.y) {
      std::vector<char> in_y(f.num_vars() + 1, 0);
      for (int v : tr.y->Y) in_y[v] = 1;
      std::vector<std::size_t> free_short;
      for (std::size_t j : p.short_clauses) {
        bool touched = false;
        for (const Literal& l : f[j].literals()) touched = touched || in_y[l.var];
        if (!touched) free_short.push_back(j);
      }
      exact_free = solve_exactly(f, free_short, options);
    }
  }

  std::optional<int> best;
  auto consider = [&](Assignment a, int trial, int& family_best) {
    const int value = count_satisfied(f, a);
    family_best = std::max(family_best, value);
    if (!best || value > *best) {
      best = value;
      tr.best_trial = trial;
      out.report.witness = std::move(a);
    }
  };
  int unused = -1;
  for (int t = 0; t < options.trials; ++t) {
    Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(t)));
    switch (tr.branch) {
      case CwBranch::kShortExact:
        consider(complete_randomly(f, &*exact_short, rng), t, unused);
        break;
      case CwBranch::kLongRandom:
        consider(complete_randomly(f, nullptr, rng), t, unused);
        break;
      case CwBranch::kBalanced:
        if (exact_free) consider(complete_randomly(f, &*exact_free, rng), t, tr.y_value);
        consider(complete_randomly(f, &*exact_short, rng), t, tr.short_exact_value);
        consider(complete_randomly(f, nullptr, rng), t, tr.random_value);
        break;
    }
  }
  out.report.value = *best;
  return out;
}

}  // namespace mcsp
