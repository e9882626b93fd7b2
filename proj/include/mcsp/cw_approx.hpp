#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "mcsp/formula.hpp"
#include "mcsp/oracle.hpp"
#include "mcsp/rational.hpp"
#include "mcsp/report.hpp"

namespace mcsp {

// Clauses split by size around a window [d, D] holding few clauses.
struct ClausePartition {
  Rational epsilon_prime;
  int l_exponent = 4;
  int d = 1;
  std::int64_t D = 1;  // floor(d * epsilon_prime^-l_exponent), saturated
  int m = 0;
  std::vector<std::size_t> short_clauses;   // |C| < d
  std::vector<std::size_t> medium_clauses;  // d <= |C| <= D
  std::vector<std::size_t> long_clauses;    // |C| > D
  // histogram[s] = number of clauses of size s.
  std::vector<int> histogram;
};

// Smallest d >= 1 whose window [d, D] holds at most epsilon_prime * m
// clauses. Requires an all-OR formula and 0 < epsilon_prime < 1.
ClausePartition clause_partition(const Formula& f, const Rational& epsilon_prime, int l_exponent = 4);

// Both short and long sides hold at least (eps/2) m clauses.
bool is_balanced(const ClausePartition& p, const Rational& epsilon);

struct YStep {
  int var = 0;
  int short_count = 0;
  int hat_count = 0;
  int hat_size_after = 0;
};

struct YSelection {
  std::vector<int> Y;
  std::vector<std::size_t> psi_hat;
  std::vector<YStep> steps;
  // Audit counters for the three guarantees.
  int short_touched = 0;   // short clauses containing a Y variable
  int long_underhit = 0;   // long clauses with fewer than 1/eps Y variables
};

// Greedy sparse-variable selection over the long clauses. Throws
// LemmaViolation when no variable qualifies, InvariantViolation when a
// guarantee fails after the loop.
YSelection select_y_set(const Formula& f, const ClausePartition& p, const Rational& epsilon);

using ExactMaxCnf = std::function<OracleResult(const Formula&)>;

struct CwOptions {
  int trials = 32;
  std::uint64_t seed = 0;
  int l_exponent = 4;
  // Require eps < 1/8; when false any eps in (0, 1) is accepted.
  bool strict_epsilon = true;
  // Exact solver for the short clauses; defaults to brute force over the
  // variables that occur in them.
  ExactMaxCnf exact_backend;
  int backend_var_limit = kDefaultOracleVarLimit;
};

enum class CwBranch { kShortExact, kLongRandom, kBalanced };
std::string_view cw_branch_name(CwBranch b);

struct CwTrace {
  ClausePartition partition;
  CwBranch branch = CwBranch::kShortExact;
  std::optional<YSelection> y;
  // select_y_set found no qualifying variable; only the baselines ran.
  bool lemma_fallback = false;
  int best_trial = 0;
  // Best values per candidate family in the balanced branch, -1 if unused.
  int y_value = -1;
  int short_exact_value = -1;
  int random_value = -1;
};

struct CwResult {
  SolveReport report;
  CwTrace trace;
};

CwResult approx_max_cnf(const Formula& f, const Rational& epsilon, const CwOptions& options = {});

}  // namespace mcsp
