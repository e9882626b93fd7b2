#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcsp/oracle.hpp"
#include "mcsp/rational.hpp"

namespace mcsp {

struct CompareOptions {
  std::vector<std::string> algorithms;
  // Used by fvs-as and cw-as; the other algorithms get one row per instance.
  std::vector<Rational> epsilons;
  std::uint64_t seed = 0;
  int trials = 32;
  int oracle_limit = kDefaultOracleVarLimit;
  int l_exponent = 4;
  bool strict_epsilon = true;
  unsigned jobs = 1;
  bool timing = false;
};

struct CompareRow {
  std::string instance;
  std::string algorithm;
  std::string epsilon;  // empty when unused
  // ok, oracle-unavailable, parse-error, precondition, resource-limit, error
  std::string status;
  std::optional<int> value;
  std::optional<int> oracle_opt;
  std::optional<double> ratio;
  double time_ms = 0.0;
};

// Every *.mcsp file of `dir` against every algorithm (and epsilon), sorted by
// (instance, algorithm, epsilon) whatever the number of jobs.
std::vector<CompareRow> run_compare(const std::string& dir, const CompareOptions& options);
std::string compare_csv(const std::vector<CompareRow>& rows, bool timing);

}  // namespace mcsp
