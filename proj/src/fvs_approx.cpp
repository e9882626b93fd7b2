#include "mcsp/fvs_approx.hpp"

#include <algorithm>
#include <optional>

#include "mcsp/errors.hpp"
#include "mcsp/graph.hpp"
#include "mcsp/structure.hpp"
#include "mcsp/tree_solver.hpp"
#include "mcsp/vc_solver.hpp"

namespace mcsp {

bool fvs_exact_route(int m, int k, const Rational& epsilon) {
  // m * num <= (num + 2 den) * k
  const __int128 lhs = static_cast<__int128>(m) * epsilon.num();
  const __int128 rhs = (static_cast<__int128>(epsilon.num()) + 2 * static_cast<__int128>(epsilon.den())) * k;
  return lhs <= rhs;
}

FvsPlan plan_fvs(const Formula& f, std::span<const int> fvs_vertices, const Rational& epsilon) {
  if (epsilon <= Rational(0) || epsilon >= Rational(1)) throw PreconditionError("epsilon must lie in (0, 1)");
  for (const Constraint& c : f.constraints()) {
    if (c.kind() == Kind::kParity) throw PreconditionError("fvs scheme takes threshold-like constraints only");
  }
  const IncidenceGraph ig = build_incidence_graph(f);
  FvsPlan plan;
  plan.vertices.assign(fvs_vertices.begin(), fvs_vertices.end());
  std::sort(plan.vertices.begin(), plan.vertices.end());
  plan.vertices.erase(std::unique(plan.vertices.begin(), plan.vertices.end()), plan.vertices.end());
  for (int v : plan.vertices) {
    if (v < 0 || v >= ig.graph.size()) throw PreconditionError("feedback vertex out of range");
  }
  if (!is_feedback_vertex_set(ig.graph, plan.vertices)) {
    throw PreconditionError("vertex set leaves a cycle in the incidence graph");
  }
  const CoverSplit split = split_cover(ig, plan.vertices);
  plan.vars = split.vars;
  plan.constraints = split.constraints;
  plan.epsilon = epsilon;
  plan.route = fvs_exact_route(f.size(), static_cast<int>(plan.vertices.size()), epsilon) ? FvsRoute::kExactSmall
                                                                                         : FvsRoute::kApprox;
  return plan;
}

FvsApproxResult approx_via_fvs(const Formula& f, std::span<const int> fvs_vertices, const Rational& epsilon) {
  FvsApproxResult out;
  out.plan = plan_fvs(f, fvs_vertices, epsilon);
  out.report.algorithm = "fvs-as";
  out.report.epsilon = epsilon;

  if (out.plan.route == FvsRoute::kExactSmall) {
    OracleResult exact = solve_via_vertex_cover(f, all_constraints_cover(f));
    out.report.route = "exact-small";
    out.report.value = exact.opt_value;
    out.report.witness = std::move(exact.witness);
    out.best_deleted_value = exact.opt_value;
    return out;
  }

  std::vector<char> deleted(f.size(), 0);
  for (std::size_t j : out.plan.constraints) deleted[j] = 1;
  std::vector<std::size_t> kept;
  for (int j = 0; j < f.size(); ++j) {
    if (!deleted[j]) kept.push_back(j);
  }
  const Formula reduced = select_constraints(f, kept);

  const auto& vars = out.plan.vars;
  const int s = static_cast<int>(vars.size());
  if (s > 30) throw ResourceLimit("feedback vertex set has too many variables to guess");
  std::optional<int> best_value;
  std::vector<std::pair<int, bool>> fixed(s);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << s); ++code) {
    for (int i = 0; i < s; ++i) fixed[i] = {vars[i], ((code >> (s - 1 - i)) & 1) != 0};
    const FixResult residual = fix_variables(reduced, fixed);
    OracleResult forest = solve_forest(residual.formula);
    for (auto [var, bit] : fixed) forest.witness.set(var, bit);
    out.best_deleted_value = std::max(out.best_deleted_value, residual.delta + forest.opt_value);
    const int value = count_satisfied(f, forest.witness);
    if (!best_value || value > *best_value) {
      best_value = value;
      out.report.witness = std::move(forest.witness);
    }
  }
  out.report.route = "approx";
  out.report.value = *best_value;
  return out;
}

}  // namespace mcsp
