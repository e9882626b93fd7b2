#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcsp/formula.hpp"
#include "mcsp/oracle.hpp"
#include "mcsp/rational.hpp"
#include "mcsp/report.hpp"

namespace mcsp {

struct SolveRequest {
  // oracle | tree | vc | fvs-as | cw-as | parity-sat
  std::string algorithm;
  std::optional<Rational> epsilon;
  std::uint64_t seed = 0;
  int trials = 32;
  // Largest vertex cover / feedback vertex set searched for.
  int vc_budget = 16;
  int fvs_budget = 12;
  int oracle_limit = kDefaultOracleVarLimit;
  // cw-as: window exponent and whether eps >= 1/8 is refused.
  int l_exponent = 4;
  bool strict_epsilon = true;
  // Also run the brute-force oracle and fill oracle_value.
  bool with_oracle = false;
};

const std::vector<std::string>& algorithm_names();

// Runs one algorithm, re-verifies the witness against the reported value and
// fills wall_time_ms. Errors propagate as the library's exception types.
SolveReport solve(const Formula& f, const SolveRequest& request);

}  // namespace mcsp
