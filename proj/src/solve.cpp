#include "mcsp/solve.hpp"

#include <chrono>

#include "mcsp/cw_approx.hpp"
#include "mcsp/errors.hpp"
#include "mcsp/fvs_approx.hpp"
#include "mcsp/graph.hpp"
#include "mcsp/structure.hpp"
#include "mcsp/tree_solver.hpp"
#include "mcsp/vc_solver.hpp"

namespace mcsp {

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"oracle", "tree", "vc", "fvs-as", "cw-as", "parity-sat"};
  return names;
}

namespace {

SolveReport from_exact(std::string algorithm, OracleResult r) {
  SolveReport s;
  s.algorithm = std::move(algorithm);
  s.value = r.opt_value;
  s.witness = std::move(r.witness);
  return s;
}

const Rational& need_epsilon(const SolveRequest& req) {
  if (!req.epsilon) throw PreconditionError(req.algorithm + " needs an epsilon");
  return *req.epsilon;
}

}  // namespace

SolveReport solve(const Formula& f, const SolveRequest& req) {
  const auto start = std::chrono::steady_clock::now();
  SolveReport s;
  const std::string& alg = req.algorithm;
  if (alg == "oracle") {
    s = from_exact(alg, max_csp_bruteforce(f, req.oracle_limit));
  } else if (alg == "tree") {
    s = from_exact(alg, solve_forest(f));
  } else if (alg == "vc") {
    const IncidenceGraph ig = build_incidence_graph(f);
    const BoundedResult vc = vertex_cover_number(ig.graph, req.vc_budget);
    if (vc.exceeds_budget()) throw ResourceLimit("incidence vertex cover exceeds " + std::to_string(req.vc_budget));
    s = from_exact(alg, solve_via_vertex_cover(f, split_cover(ig, vc.witness)));
    s.route = "cover-size-" + std::to_string(*vc.size);
  } else if (alg == "fvs-as") {
    const IncidenceGraph ig = build_incidence_graph(f);
    const BoundedResult fvs = feedback_vertex_set(ig.graph, req.fvs_budget);
    if (fvs.exceeds_budget()) throw ResourceLimit("incidence feedback vertex set exceeds " + std::to_string(req.fvs_budget));
    s = approx_via_fvs(f, fvs.witness, need_epsilon(req)).report;
  } else if (alg == "cw-as") {
    CwOptions opt;
    opt.trials = req.trials;
    opt.seed = req.seed;
    opt.l_exponent = req.l_exponent;
    opt.strict_epsilon = req.strict_epsilon;
    opt.backend_var_limit = req.oracle_limit;
    s = approx_max_cnf(f, need_epsilon(req), opt).report;
  } else if (alg == "parity-sat") {
    const GaussResult g = parity_gauss_satisfiable(f);
    s.algorithm = alg;
    s.witness = g.witness ? *g.witness : Assignment(f.num_vars());
    s.value = count_satisfied(f, s.witness);
    s.route = g.satisfiable ? "satisfiable" : "unsatisfiable";
  } else {
    throw PreconditionError("unknown algorithm '" + alg + "'");
  }
  if (count_satisfied(f, s.witness) != s.value) {
    throw InvariantViolation(alg + " reported a value its witness does not reach");
  }
  if (req.with_oracle) s.oracle_value = max_csp_bruteforce(f, req.oracle_limit).opt_value;
  s.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace mcsp
