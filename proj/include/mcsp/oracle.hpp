#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcsp/formula.hpp"

namespace mcsp {

struct OracleResult {
  int opt_value = 0;
  Assignment witness;
};

inline constexpr int kDefaultOracleVarLimit = 26;

// Exact Max-CSP by enumerating all 2^n assignments in Gray-code order with
// incremental satisfied counts. The witness is the lexicographically first
// maximizer over (x1, ..., xn). Throws ResourceLimit when n > var_limit.
// `threads` == 0 picks the hardware concurrency; the result does not depend
// on it.
OracleResult max_csp_bruteforce(const Formula& f, int var_limit = kDefaultOracleVarLimit,
                                unsigned threads = 1);

// Decision version with early exit: some assignment satisfying every
// constraint, if one exists.
std::optional<Assignment> satisfiable_bruteforce(const Formula& f,
                                                 int var_limit = kDefaultOracleVarLimit);

struct GaussResult {
  bool satisfiable = false;
  // Free variables are set to 0.
  std::optional<Assignment> witness;
  int rank = 0;
};

// Consistency of a PARITY system over GF(2) by elimination on bit-packed
// rows, pivoting on the lowest variable index first.
GaussResult parity_gauss_satisfiable(const Formula& f);

struct RandomFormulaSpec {
  int num_vars = 0;
  int num_constraints = 0;
  std::vector<Kind> kinds{Kind::kOr};
  int min_arity = 1;
  int max_arity = 3;
  std::uint64_t seed = 0;
};

// Deterministic in `spec`: kinds uniform over `kinds`, arity uniform in
// [min_arity, max_arity], variables without replacement, uniform signs,
// thresholds uniform in [1, arity], parity bits uniform.
Formula random_formula(const RandomFormulaSpec& spec);

}  // namespace mcsp
