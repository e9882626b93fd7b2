#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mcsp/formula.hpp"
#include "mcsp/rational.hpp"

namespace mcsp {

// Outcome of one solver run, as emitted by the CLI.
struct SolveReport {
  std::string algorithm;
  int value = 0;
  Assignment witness;
  std::optional<int> oracle_value;
  std::optional<Rational> epsilon;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  // Which branch of the algorithm produced the answer.
  std::string route;
  double wall_time_ms = 0.0;

  // value / oracle_value; 1 when both are zero.
  std::optional<Rational> ratio() const {
    if (!oracle_value) return std::nullopt;
    if (*oracle_value == 0) return Rational(1);
    return Rational(value, *oracle_value);
  }
};

}  // namespace mcsp
