#include <gtest/gtest.h>

#include "generators.hpp"
#include "mcsp/errors.hpp"
#include "mcsp/fvs_approx.hpp"
#include "mcsp/graph.hpp"
#include "mcsp/oracle.hpp"
#include "mcsp/structure.hpp"

namespace mcsp {
namespace {

TEST(FvsRouteRule, Boundary) {
  const Rational quarter(1, 4), half(1, 2);
  // (1 + 2/eps) k = 9k for eps = 1/4 and 5k for eps = 1/2.
  for (int k = 0; k <= 6; ++k) {
    EXPECT_TRUE(fvs_exact_route(9 * k, k, quarter));
    EXPECT_FALSE(fvs_exact_route(9 * k + 1, k, quarter));
    EXPECT_TRUE(fvs_exact_route(5 * k, k, half));
    EXPECT_FALSE(fvs_exact_route(5 * k + 1, k, half));
  }
  EXPECT_TRUE(fvs_exact_route(7, 1, Rational(1, 3)));
  EXPECT_FALSE(fvs_exact_route(8, 1, Rational(1, 3)));
}

TEST(FvsPlan, RejectsBadInput) {
  Formula f(2, {Constraint::make_majority({pos(1), pos(2)}), Constraint::make_majority({pos(1), neg(2)})});
  const std::vector<int> none;
  EXPECT_THROW(plan_fvs(f, none, Rational(1, 4)), PreconditionError);
  const std::vector<int> one{0};
  EXPECT_THROW(plan_fvs(f, one, Rational(0)), PreconditionError);
  EXPECT_THROW(plan_fvs(f, one, Rational(1)), PreconditionError);
  const auto plan = plan_fvs(f, one, Rational(1, 4));
  EXPECT_EQ(plan.vars, (std::vector<int>{1}));
  EXPECT_TRUE(plan.constraints.empty());
  EXPECT_EQ(plan.route, FvsRoute::kExactSmall);
}

TEST(FvsApprox, ForestWithEmptySetIsExact) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Formula f = testing::random_forest_formula(10, 14, seed);
    const std::vector<int> none;
    const auto r = approx_via_fvs(f, none, Rational(1, 4));
    EXPECT_EQ(r.report.value, max_csp_bruteforce(f).opt_value);
  }
}

TEST(FvsApprox, GuaranteeOnMajorityInstances) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Formula f = testing::random_fvs_majority(10, 12, 2, seed);
    const IncidenceGraph ig = build_incidence_graph(f);
    const auto fvs = feedback_vertex_set(ig.graph, 2);
    ASSERT_TRUE(fvs.size.has_value());
    const int opt = max_csp_bruteforce(f).opt_value;
    for (const Rational eps : {Rational(1, 4), Rational(1, 2)}) {
      const auto r = approx_via_fvs(f, fvs.witness, eps);
      EXPECT_GE(Rational(r.report.value), (Rational(1) - eps) * Rational(opt)) << "seed " << seed;
      EXPECT_EQ(count_satisfied(f, r.report.witness), r.report.value);
      EXPECT_GE(r.report.value, r.best_deleted_value);
      if (r.plan.route == FvsRoute::kExactSmall) EXPECT_EQ(r.report.value, opt);
    }
  }
}

TEST(FvsApprox, DeletedConstraintsStillCounted) {
  // A constraint hub on a cycle; m is large enough for the guessing route.
  Formula f(3);
  f.add(Constraint::make_majority({pos(1), pos(2), pos(3)}));
  f.add(Constraint::make_majority({pos(1), pos(2)}));
  for (int i = 0; i < 12; ++i) f.add(Constraint::make_majority({pos(1 + i % 3)}));
  const IncidenceGraph ig = build_incidence_graph(f);
  const std::vector<int> fvs{ig.constraint_vertex(0)};
  const auto r = approx_via_fvs(f, fvs, Rational(1, 4));
  EXPECT_EQ(r.plan.route, FvsRoute::kApprox);
  EXPECT_EQ(r.report.value, 14);
  EXPECT_EQ(r.best_deleted_value, 13);
}

}  // namespace
}  // namespace mcsp
