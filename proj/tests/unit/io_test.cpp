#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "generators.hpp"
#include "mcsp/compare.hpp"
#include "mcsp/errors.hpp"
#include "mcsp/graph.hpp"
#include "mcsp/io.hpp"
#include "mcsp/oracle.hpp"
#include "mcsp/reductions.hpp"
#include "mcsp/solve.hpp"
#include "mcsp/structure.hpp"

namespace mcsp {
namespace {

namespace fs = std::filesystem;
using Code = ParseError::Code;

Code code_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return Code::kBadHeader;
}

TEST(Parse, Example) {
  const Formula f = parse_instance("c demo\np mcsp 3 5\no 1 -2 0\na 2 3 0\nx 1 1 2 3 0\nt 2 -1 2 3 0\nm 1 2 -3 0\n");
  ASSERT_EQ(f.size(), 5);
  EXPECT_EQ(f[0], Constraint::make_or({pos(1), neg(2)}));
  EXPECT_EQ(f[2], Constraint::make_parity({pos(1), pos(2), pos(3)}, true));
  EXPECT_EQ(f[3], Constraint::make_threshold({neg(1), pos(2), pos(3)}, 2));
  EXPECT_EQ(f[4].kind(), Kind::kMajority);
  EXPECT_EQ(parse_instance(serialize_instance(f)), f);
}

TEST(Parse, EmptyConstraintsAndBlankLines) {
  const Formula f = parse_instance("\n  p mcsp 0 2\n\no 0\na 0\n");
  EXPECT_EQ(f.size(), 2);
  EXPECT_EQ(count_satisfied(f, Assignment(0)), 1);
}

TEST(Parse, ErrorCodes) {
  EXPECT_EQ(code_of("o 1 0\n"), Code::kMissingHeader);
  EXPECT_EQ(code_of(""), Code::kMissingHeader);
  EXPECT_EQ(code_of("p cnf 1 1\n"), Code::kBadHeader);
  EXPECT_EQ(code_of("p mcsp -1 0\n"), Code::kBadHeader);
  EXPECT_EQ(code_of("p mcsp 1 0\np mcsp 1 0\n"), Code::kDuplicateHeader);
  EXPECT_EQ(code_of("p mcsp 1 1\nq 1 0\n"), Code::kUnknownLineKind);
  EXPECT_EQ(code_of("p mcsp 1 1\nt x 1 0\n"), Code::kBadNumber);
  EXPECT_EQ(code_of("p mcsp 1 1\nx 2 1 0\n"), Code::kBadNumber);
  EXPECT_EQ(code_of("p mcsp 1 1\no 2 0\n"), Code::kBadLiteral);
  EXPECT_EQ(code_of("p mcsp 1 1\no y 0\n"), Code::kBadLiteral);
  EXPECT_EQ(code_of("p mcsp 2 1\no 1 1 0\n"), Code::kDuplicateVariable);
  EXPECT_EQ(code_of("p mcsp 2 1\no 1 -1 0\n"), Code::kOppositeLiterals);
  EXPECT_EQ(code_of("p mcsp 2 1\nm t=1 1 2 0\n"), Code::kMajorityThreshold);
  EXPECT_EQ(code_of("p mcsp 2 1\no 1 2\n"), Code::kMissingTerminator);
  EXPECT_EQ(code_of("p mcsp 2 1\no 1 0 2\n"), Code::kTrailingTokens);
  EXPECT_EQ(code_of("p mcsp 2 2\no 1 0\n"), Code::kCountMismatch);
}

TEST(Parse, ErrorLine) {
  try {
    parse_instance("c x\np mcsp 1 1\no 5 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
}

TEST(Parse, RoundTripRandom) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomFormulaSpec spec{9, 12, {Kind::kOr, Kind::kAnd, Kind::kParity, Kind::kThreshold, Kind::kMajority}, 1, 5, seed};
    const Formula f = random_formula(spec);
    const std::string text = serialize_instance(f);
    EXPECT_EQ(parse_instance(text), f);
    EXPECT_EQ(serialize_instance(parse_instance(text)), text);
  }
}

TEST(Mcc, ParseAndRoundTrip) {
  const MccGraph g = parse_mcc("p mcc 3 2\ne 2 1 1 2\ne 1 1 3 2\n");
  EXPECT_TRUE(g.has_edge(1, 2, 2, 1));
  EXPECT_EQ(parse_mcc(serialize_mcc(g)), g);
  EXPECT_EQ(serialize_mcc(g), "p mcc 3 2\ne 1 1 3 2\ne 1 2 2 1\n");
  auto code = [](std::string_view t) {
    try {
      parse_mcc(t);
    } catch (const ParseError& e) {
      return e.code();
    }
    return Code::kBadHeader;
  };
  EXPECT_EQ(code("p mcc 2 2\ne 1 1 1 2\n"), Code::kIntraPartEdge);
  EXPECT_EQ(code("p mcc 2 2\ne 1 3 2 1\n"), Code::kVertexOutOfRange);
  EXPECT_EQ(code("p mcc 2 2\ne 1 1 2\n"), Code::kTrailingTokens);
  EXPECT_EQ(code("e 1 1 2 1\n"), Code::kMissingHeader);
}

TEST(Digest, StableAndSensitive) {
  const Formula a = parse_instance("p mcsp 2 1\no 1 2 0\n");
  const Formula b = parse_instance("p mcsp 2 1\no 2 1 0\n");
  EXPECT_EQ(instance_digest(a), instance_digest(parse_instance(serialize_instance(a))));
  EXPECT_NE(instance_digest(a), instance_digest(b));
  EXPECT_EQ(digest_hex(0xabc).size(), 16U);
}

TEST(Json, ReportKeys) {
  const Formula f = parse_instance("p mcsp 2 2\no 1 0\no -1 2 0\n");
  SolveRequest req;
  req.algorithm = "oracle";
  req.with_oracle = true;
  const SolveReport r = solve(f, req);
  const std::string j = report_json(r, f, false);
  EXPECT_NE(j.find("\"algorithm\": \"oracle\""), std::string::npos);
  EXPECT_NE(j.find("\"value\": 2"), std::string::npos);
  EXPECT_NE(j.find("\"witness\": \"11\""), std::string::npos);
  EXPECT_NE(j.find("\"ratio\": \"1\""), std::string::npos);
  EXPECT_EQ(j.find("wall_time_ms"), std::string::npos);
  EXPECT_NE(report_json(r, f, true).find("wall_time_ms"), std::string::npos);
  EXPECT_LT(j.find("\"algorithm\""), j.find("\"digest\""));
}

TEST(Json, Analysis) {
  const Formula f = parse_instance("p mcsp 2 2\no 1 2 0\no 1 -2 0\n");
  const ParamReport p = analyze_structure(build_incidence_graph(f).graph, 4, 4);
  const std::string j = analysis_json(f, p);
  EXPECT_NE(j.find("\"nd\""), std::string::npos);
  EXPECT_NE(j.find("\"exceeds_budget\": false"), std::string::npos);
}

TEST(Solve, AlgorithmsAgreeOnForest) {
  const Formula f = testing::random_forest_formula(10, 8, 3);
  const int opt = max_csp_bruteforce(f).opt_value;
  for (const std::string alg : {"oracle", "tree", "vc"}) {
    SolveRequest req;
    req.algorithm = alg;
    EXPECT_EQ(solve(f, req).value, opt) << alg;
  }
  SolveRequest fvs;
  fvs.algorithm = "fvs-as";
  fvs.epsilon = Rational(1, 4);
  fvs.with_oracle = true;
  const SolveReport r = solve(f, fvs);
  EXPECT_EQ(r.value, opt);
  EXPECT_EQ(r.oracle_value, opt);
  SolveRequest bad;
  bad.algorithm = "nope";
  EXPECT_THROW(solve(f, bad), PreconditionError);
}

TEST(Solve, ParitySat) {
  SolveRequest req;
  req.algorithm = "parity-sat";
  EXPECT_EQ(solve(parse_instance("p mcsp 2 2\nx 1 1 2 0\nx 0 1 0\n"), req).route, "satisfiable");
  EXPECT_EQ(solve(parse_instance("p mcsp 2 2\nx 1 1 2 0\nx 0 1 2 0\n"), req).route, "unsatisfiable");
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("mcsp_io_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path_ / name) << text; }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

TEST(Compare, RowsAndStatuses) {
  TempDir dir;
  dir.write("a.mcsp", "p mcsp 2 2\no 1 0\no -1 2 0\n");
  dir.write("b.mcsp", "p mcsp 2 1\no 1 1 0\n");
  dir.write("c.mcsp", "p mcsp 2 2\no 1 2 0\no -1 -2 0\n");
  dir.write("ignored.txt", "junk");
  CompareOptions o;
  o.algorithms = {"oracle", "tree", "cw-as"};
  o.epsilons = {Rational(1, 16)};
  const auto rows = run_compare(dir.path().string(), o);
  ASSERT_EQ(rows.size(), 9U);
  EXPECT_EQ(rows[0].instance, "a.mcsp");
  EXPECT_EQ(rows[0].algorithm, "cw-as");
  EXPECT_EQ(rows[0].epsilon, "0.0625");
  EXPECT_EQ(rows[0].status, "ok");
  EXPECT_EQ(rows[3].status, "parse-error");
  EXPECT_EQ(rows[6].instance, "c.mcsp");
  EXPECT_EQ(rows[8].algorithm, "tree");
  EXPECT_EQ(rows[8].status, "precondition");
  o.jobs = 3;
  EXPECT_EQ(compare_csv(run_compare(dir.path().string(), o), false), compare_csv(rows, false));
  const std::string csv = compare_csv(rows, false);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "instance,algorithm,epsilon,status,value,oracle_opt,ratio,time_ms");
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(MCSP_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = ::popen(cmd.c_str(), "r");
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Cli, ExitCodes) {
  TempDir dir;
  const std::string d = dir.path().string();
  dir.write("ok.mcsp", "p mcsp 2 2\no 1 0\no -1 2 0\n");
  dir.write("bad.mcsp", "p mcsp 2 1\no 3 0\n");
  dir.write("cyc.mcsp", "p mcsp 2 2\no 1 2 0\no 1 -2 0\n");
  std::string big = "p mcsp 30 1\no";
  for (int i = 1; i <= 30; ++i) big += " " + std::to_string(i);
  dir.write("big.mcsp", big + " 0\n");

  const CliRun ok = run_cli("solve --json --alg oracle " + d + "/ok.mcsp");
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("\"value\": 2"), std::string::npos);
  EXPECT_EQ(run_cli("solve --alg oracle " + d + "/bad.mcsp").code, 1);
  EXPECT_EQ(run_cli("solve --alg oracle " + d + "/missing.mcsp").code, 1);
  EXPECT_EQ(run_cli("solve --alg bogus " + d + "/ok.mcsp").code, 1);
  EXPECT_EQ(run_cli("solve --alg tree " + d + "/cyc.mcsp").code, 2);
  EXPECT_EQ(run_cli("solve --alg oracle " + d + "/big.mcsp").code, 3);
  EXPECT_EQ(run_cli("analyze " + d + "/ok.mcsp").code, 0);
  EXPECT_EQ(run_cli("frobnicate").code, 1);
}

TEST(Cli, GenerateAndSolveRoundTrip) {
  TempDir dir;
  const std::string d = dir.path().string();
  ASSERT_EQ(run_cli("generate random --vars 8 --constraints 10 --kinds or,majority --seed 4 -o " + d + "/r.mcsp").code, 0);
  const CliRun a = run_cli("generate random --vars 8 --constraints 10 --kinds or,majority --seed 4");
  EXPECT_EQ(a.code, 0);
  std::ifstream in(dir.path() / "r.mcsp");
  const std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(a.out, file);
  EXPECT_EQ(parse_instance(file).size(), 10);
  EXPECT_EQ(run_cli("solve --alg vc --oracle " + d + "/r.mcsp").code == 0 ||
                run_cli("solve --alg vc --oracle " + d + "/r.mcsp").code == 3,
            true);
  ASSERT_EQ(run_cli("generate mcc-graph --k 2 --n 2 --p 1 -o " + d + "/g.mcc").code, 0);
  const CliRun cnf = run_cli("generate mcc-cnf -i " + d + "/g.mcc");
  EXPECT_EQ(cnf.code, 0);
  EXPECT_EQ(parse_instance(cnf.out).size(), 0);
}

}  // namespace
}  // namespace mcsp
