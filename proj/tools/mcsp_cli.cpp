#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcsp/compare.hpp"
#include "mcsp/errors.hpp"
#include "mcsp/graph.hpp"
#include "mcsp/io.hpp"
#include "mcsp/oracle.hpp"
#include "mcsp/reductions.hpp"
#include "mcsp/solve.hpp"
#include "mcsp/structure.hpp"

namespace {

using namespace mcsp;

std::vector<Rational> parse_epsilons(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) out.push_back(Rational::parse(s));
  return out;
}

Kind parse_kind(const std::string& s) {
  if (s == "or") return Kind::kOr;
  if (s == "and") return Kind::kAnd;
  if (s == "parity") return Kind::kParity;
  if (s == "threshold") return Kind::kThreshold;
  if (s == "majority") return Kind::kMajority;
  throw std::invalid_argument("unknown constraint kind '" + s + "'");
}

std::string describe(const Formula& f, const ParamReport& p) {
  std::ostringstream os;
  os << "variables    " << f.num_vars() << "\n";
  os << "constraints  " << f.size() << "\n";
  os << "occurrences  " << f.occ() << "\n";
  os << "nd           " << p.nd.k() << "\n";
  auto bounded = [&](const char* name, const BoundedResult& b, int budget) {
    os << name;
    if (b.size) {
      os << *b.size << "\n";
    } else {
      os << "> " << budget << "\n";
    }
  };
  bounded("vc           ", p.vc, p.vc_budget);
  bounded("fvs          ", p.fvs, p.fvs_budget);
  return os.str();
}

struct Args {
  std::string file = "-";
  std::string output = "-";
  bool json = false;
  bool timing = false;
  int max_vc = 16;
  int max_fvs = 12;

  SolveRequest req;
  std::string epsilon;
  bool relaxed = false;

  std::string gen_kind;
  std::string input;
  int k = 3, n = 2;
  std::string edge_p = "1/2";
  int vars = 10, constraints = 20, min_arity = 1, max_arity = 3;
  std::vector<std::string> kinds{"or"};

  std::vector<std::string> algs;
  std::vector<std::string> eps_list;
  std::string dir;
  unsigned jobs = 1;
};

int run_analyze(const Args& a) {
  const Formula f = parse_instance(read_text(a.file));
  const ParamReport p = analyze_structure(build_incidence_graph(f).graph, a.max_vc, a.max_fvs);
  write_text(a.output, a.json ? analysis_json(f, p) : describe(f, p));
  return 0;
}

int run_solve(Args a) {
  const Formula f = parse_instance(read_text(a.file));
  if (!a.epsilon.empty()) a.req.epsilon = Rational::parse(a.epsilon);
  a.req.strict_epsilon = !a.relaxed;
  a.req.vc_budget = a.max_vc;
  a.req.fvs_budget = a.max_fvs;
  const SolveReport r = solve(f, a.req);
  if (a.json) {
    write_text(a.output, report_json(r, f, a.timing));
  } else {
    std::ostringstream os;
    os << r.algorithm << " value " << r.value << " of " << f.size();
    if (r.oracle_value) os << " (oracle " << *r.oracle_value << ")";
    if (!r.route.empty()) os << " route " << r.route;
    if (a.timing) os << " " << r.wall_time_ms << " ms";
    os << "\n" << r.witness.to_string() << "\n";
    write_text(a.output, os.str());
  }
  return 0;
}

MccGraph graph_source(const Args& a) {
  if (!a.input.empty()) return parse_mcc(read_text(a.input));
  return MccGraph::random(a.k, a.n, Rational::parse(a.edge_p), a.req.seed);
}

int run_generate(const Args& a) {
  Formula out;
  if (a.gen_kind == "mcc-cnf") {
    out = mcc_to_cnf(graph_source(a)).formula;
  } else if (a.gen_kind == "mcc-dnf") {
    out = mcc_to_dnf(graph_source(a)).formula;
  } else if (a.gen_kind == "mcc-thr") {
    out = mcc_to_threshold(graph_source(a)).formula;
  } else if (a.gen_kind == "mcc-graph") {
    write_text(a.output, serialize_mcc(graph_source(a)));
    return 0;
  } else if (a.gen_kind == "thr2maj") {
    out = threshold_to_majority(parse_instance(read_text(a.input.empty() ? "-" : a.input)));
  } else if (a.gen_kind == "cnf2maj") {
    out = cnf_to_majority(parse_instance(read_text(a.input.empty() ? "-" : a.input)));
  } else {
    RandomFormulaSpec spec;
    spec.num_vars = a.vars;
    spec.num_constraints = a.constraints;
    spec.kinds.clear();
    for (const auto& k : a.kinds) spec.kinds.push_back(parse_kind(k));
    spec.min_arity = a.min_arity;
    spec.max_arity = a.max_arity;
    spec.seed = a.req.seed;
    out = random_formula(spec);
  }
  write_text(a.output, serialize_instance(out));
  return 0;
}

int run_compare_cmd(const Args& a) {
  CompareOptions o;
  o.algorithms = a.algs;
  o.epsilons = parse_epsilons(a.eps_list);
  o.seed = a.req.seed;
  o.trials = a.req.trials;
  o.oracle_limit = a.req.oracle_limit;
  o.l_exponent = a.req.l_exponent;
  o.strict_epsilon = !a.relaxed;
  o.jobs = a.jobs;
  o.timing = a.timing;
  for (const auto& alg : o.algorithms) {
    const auto& names = algorithm_names();
    if (std::find(names.begin(), names.end(), alg) == names.end()) {
      throw std::invalid_argument("unknown algorithm '" + alg + "'");
    }
  }
  write_text(a.output, compare_csv(run_compare(a.dir, o), a.timing));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-CSP toolkit: structure analysis, solvers, approximation schemes and gadget generators"};
  app.require_subcommand(1);
  Args a;

  auto* analyze = app.add_subcommand("analyze", "incidence-graph parameters (nd, vc, fvs)");
  analyze->add_option("file", a.file, "instance file, - for stdin");
  analyze->add_option("--max-vc", a.max_vc, "vertex cover search budget");
  analyze->add_option("--max-fvs", a.max_fvs, "feedback vertex set search budget");
  analyze->add_flag("--json", a.json, "JSON output");
  analyze->add_option("-o,--output", a.output, "output file");

  auto* solve_cmd = app.add_subcommand("solve", "run one algorithm on an instance");
  solve_cmd->add_option("file", a.file, "instance file, - for stdin");
  solve_cmd->add_option("--alg", a.req.algorithm, "algorithm")
      ->required()
      ->check(CLI::IsMember(algorithm_names()));
  solve_cmd->add_option("--epsilon", a.epsilon, "approximation parameter (decimal or p/q)");
  solve_cmd->add_option("--seed", a.req.seed, "master seed");
  solve_cmd->add_option("--trials", a.req.trials, "cw-as trials");
  solve_cmd->add_option("--max-vc", a.max_vc, "vertex cover search budget");
  solve_cmd->add_option("--max-fvs", a.max_fvs, "feedback vertex set search budget");
  solve_cmd->add_option("--exact-limit", a.req.oracle_limit, "variable limit of brute-force solvers");
  solve_cmd->add_option("--l-exponent", a.req.l_exponent, "cw-as window exponent");
  solve_cmd->add_flag("--relaxed-epsilon", a.relaxed, "cw-as: accept epsilon >= 1/8");
  solve_cmd->add_flag("--oracle", a.req.with_oracle, "also compute the exact optimum");
  solve_cmd->add_flag("--timing", a.timing, "report wall time");
  solve_cmd->add_flag("--json", a.json, "JSON output");
  solve_cmd->add_option("-o,--output", a.output, "output file");

  auto* gen = app.add_subcommand("generate", "reductions and random instances");
  gen->add_option("kind", a.gen_kind, "what to generate")
      ->required()
      ->check(CLI::IsMember({"mcc-cnf", "mcc-dnf", "mcc-thr", "mcc-graph", "thr2maj", "cnf2maj", "random"}));
  gen->add_option("-i,--input", a.input, "input graph (mcc-*) or instance (thr2maj, cnf2maj)");
  gen->add_option("--k", a.k, "random graph: parts");
  gen->add_option("--n", a.n, "random graph: part size");
  gen->add_option("--p", a.edge_p, "random graph: edge probability");
  gen->add_option("--vars", a.vars, "random instance: variables");
  gen->add_option("--constraints", a.constraints, "random instance: constraints");
  gen->add_option("--kinds", a.kinds, "random instance: kinds among or,and,parity,threshold,majority")
      ->delimiter(',');
  gen->add_option("--min-arity", a.min_arity, "random instance: smallest arity");
  gen->add_option("--max-arity", a.max_arity, "random instance: largest arity");
  gen->add_option("--seed", a.req.seed, "seed");
  gen->add_option("-o,--output", a.output, "output file");

  auto* cmp = app.add_subcommand("compare", "CSV of algorithm values against the oracle");
  cmp->add_option("--algs", a.algs, "algorithms")->required()->delimiter(',');
  cmp->add_option("--epsilon", a.eps_list, "epsilons for fvs-as and cw-as")->delimiter(',');
  cmp->add_option("--dir", a.dir, "directory of .mcsp instances")->required();
  cmp->add_option("--seed", a.req.seed, "master seed");
  cmp->add_option("--trials", a.req.trials, "cw-as trials");
  cmp->add_option("--exact-limit", a.req.oracle_limit, "variable limit of brute-force solvers");
  cmp->add_option("--l-exponent", a.req.l_exponent, "cw-as window exponent");
  cmp->add_flag("--relaxed-epsilon", a.relaxed, "cw-as: accept epsilon >= 1/8");
  cmp->add_option("--jobs", a.jobs, "worker threads");
  cmp->add_flag("--timing", a.timing, "fill the time_ms column");
  cmp->add_option("-o,--output", a.output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) return run_analyze(a);
    if (*solve_cmd) return run_solve(a);
    if (*gen) return run_generate(a);
    return run_compare_cmd(a);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const MalformedInstance& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const LemmaViolation& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
