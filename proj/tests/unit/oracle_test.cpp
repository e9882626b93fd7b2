#include <gtest/gtest.h>

#include <algorithm>

#include "mcsp/errors.hpp"
#include "mcsp/oracle.hpp"
#include "reference.hpp"

namespace mcsp {
namespace {

Formula triangle() {
  return Formula(3, {Constraint::make_parity({pos(1), pos(2)}, true), Constraint::make_parity({pos(2), pos(3)}, true),
                     Constraint::make_parity({pos(1), pos(3)}, true)});
}

TEST(Oracle, SmallExamples) {
  Formula f(1, {Constraint::make_or({pos(1)}), Constraint::make_or({neg(1)})});
  const auto r = max_csp_bruteforce(f);
  EXPECT_EQ(r.opt_value, 1);
  EXPECT_EQ(r.witness.to_string(), "0");
  EXPECT_EQ(max_csp_bruteforce(triangle()).opt_value, 2);
}

TEST(Oracle, WitnessIsLexFirstMaximizer) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomFormulaSpec spec{10, 30, {Kind::kOr, Kind::kAnd, Kind::kParity, Kind::kThreshold, Kind::kMajority}, 1, 4,
                           seed};
    const Formula f = random_formula(spec);
    const auto r = max_csp_bruteforce(f);
    const auto ref = testing::reference_max(f);
    EXPECT_EQ(r.opt_value, ref.value);
    EXPECT_EQ(testing::to_vector(r.witness), ref.witness);
    EXPECT_EQ(count_satisfied(f, r.witness), r.opt_value);
  }
}

TEST(Oracle, ThreadsDoNotChangeResult) {
  RandomFormulaSpec spec{14, 40, {Kind::kOr, Kind::kThreshold}, 1, 5, 3};
  const Formula f = random_formula(spec);
  const auto a = max_csp_bruteforce(f, 26, 1);
  const auto b = max_csp_bruteforce(f, 26, 4);
  EXPECT_EQ(a.opt_value, b.opt_value);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(Oracle, ConstraintOrderDoesNotMatter) {
  RandomFormulaSpec spec{9, 20, {Kind::kOr, Kind::kAnd, Kind::kMajority}, 1, 4, 21};
  const Formula f = random_formula(spec);
  std::vector<Constraint> cs = f.constraints();
  std::reverse(cs.begin(), cs.end());
  const Formula g(f.num_vars(), cs);
  EXPECT_EQ(max_csp_bruteforce(f).witness, max_csp_bruteforce(g).witness);
}

TEST(Oracle, RefusesLargeInstances) {
  EXPECT_THROW(max_csp_bruteforce(Formula(27)), ResourceLimit);
  EXPECT_THROW(max_csp_bruteforce(Formula(10), 8), ResourceLimit);
  EXPECT_NO_THROW(max_csp_bruteforce(Formula(0)));
}

TEST(Oracle, SatisfiableBruteforce) {
  EXPECT_FALSE(satisfiable_bruteforce(triangle()).has_value());
  Formula f(2, {Constraint::make_or({pos(1), pos(2)}), Constraint::make_or({neg(1)})});
  const auto w = satisfiable_bruteforce(f);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(count_satisfied(f, *w), 2);
}

TEST(Gauss, Examples) {
  Formula one(2, {Constraint::make_parity({pos(1), pos(2)}, true)});
  const auto r = parity_gauss_satisfiable(one);
  EXPECT_TRUE(r.satisfiable);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(count_satisfied(one, *r.witness), 1);
  EXPECT_EQ(r.witness->to_string(), "10");
  EXPECT_FALSE(parity_gauss_satisfiable(triangle()).satisfiable);
  EXPECT_TRUE(parity_gauss_satisfiable(Formula(0)).satisfiable);
  EXPECT_THROW(parity_gauss_satisfiable(Formula(1, {Constraint::make_or({pos(1)})})), PreconditionError);
}

TEST(Gauss, AgreesWithOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    RandomFormulaSpec spec{n, n + static_cast<int>(seed % 5) - 2, {Kind::kParity}, 1, std::min(n, 4), seed};
    const Formula f = random_formula(spec);
    const auto g = parity_gauss_satisfiable(f);
    EXPECT_EQ(g.satisfiable, max_csp_bruteforce(f).opt_value == f.size());
    if (g.satisfiable) EXPECT_EQ(count_satisfied(f, *g.witness), f.size());
  }
}

TEST(Gauss, WideRows) {
  // Chain x_i + x_{i+1} = 1 over 130 variables spans several words.
  Formula f(130);
  for (int i = 1; i < 130; ++i) f.add(Constraint::make_parity({pos(i), pos(i + 1)}, true));
  const auto r = parity_gauss_satisfiable(f);
  ASSERT_TRUE(r.satisfiable);
  EXPECT_EQ(count_satisfied(f, *r.witness), f.size());
  f.add(Constraint::make_parity({pos(1), pos(130)}, false));
  EXPECT_FALSE(parity_gauss_satisfiable(f).satisfiable);
}

TEST(RandomFormula, DeterministicAndShaped) {
  RandomFormulaSpec spec{8, 30, {Kind::kOr, Kind::kThreshold}, 2, 5, 99};
  const Formula a = random_formula(spec);
  EXPECT_EQ(a, random_formula(spec));
  EXPECT_EQ(a.size(), 30);
  for (const Constraint& c : a.constraints()) {
    EXPECT_GE(c.arity(), 2);
    EXPECT_LE(c.arity(), 5);
    if (c.kind() == Kind::kThreshold) {
      EXPECT_GE(c.threshold(), 1);
      EXPECT_LE(c.threshold(), c.arity());
    }
  }
  spec.seed = 100;
  EXPECT_NE(a, random_formula(spec));
}

TEST(RandomFormula, RejectsInfeasibleSpec) {
  RandomFormulaSpec spec{3, 5, {Kind::kOr}, 1, 4, 0};
  EXPECT_THROW(random_formula(spec), PreconditionError);
  spec = {3, 5, {}, 1, 2, 0};
  EXPECT_THROW(random_formula(spec), PreconditionError);
}

}  // namespace
}  // namespace mcsp
