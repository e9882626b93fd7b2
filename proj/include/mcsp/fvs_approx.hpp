#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mcsp/formula.hpp"
#include "mcsp/rational.hpp"
#include "mcsp/report.hpp"

namespace mcsp {

enum class FvsRoute { kExactSmall, kApprox };

struct FvsPlan {
  std::vector<int> vertices;             // the feedback vertex set, incidence ids
  std::vector<int> vars;                 // its variable vertices
  std::vector<std::size_t> constraints;  // its constraint vertices
  Rational epsilon;
  FvsRoute route = FvsRoute::kApprox;
};

// m <= (1 + 2/eps) * k, exactly.
bool fvs_exact_route(int m, int k, const Rational& epsilon);

// Verifies the feedback vertex set and picks the route. Throws
// PreconditionError when deleting it leaves a cycle or eps is not in (0, 1).
FvsPlan plan_fvs(const Formula& f, std::span<const int> fvs_vertices, const Rational& epsilon);

struct FvsApproxResult {
  SolveReport report;
  FvsPlan plan;
  // Best value over all guesses measured on the instance with the feedback
  // constraints deleted; the reported value never falls below it.
  int best_deleted_value = 0;
};

// (1 - eps)-approximate MAX-THRESHOLD given an incidence feedback vertex set.
FvsApproxResult approx_via_fvs(const Formula& f, std::span<const int> fvs_vertices,
                               const Rational& epsilon);

}  // namespace mcsp
