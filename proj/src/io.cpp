#include "mcsp/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "mcsp/errors.hpp"
#include "mcsp/graph.hpp"

namespace mcsp {

namespace {

using Code = ParseError::Code;

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view tok, long long& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

int number(std::string_view tok, std::size_t line, long long lo, long long hi, const char* what) {
  long long v;
  if (!to_int(tok, v) || v < lo || v > hi) {
    throw ParseError(Code::kBadNumber, line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return static_cast<int>(v);
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    f(line_no, text.substr(start, end - start));
    if (end == text.size()) break;
    start = end + 1;
  }
}

}  // namespace

Formula parse_instance(std::string_view text) {
  std::optional<Formula> f;
  int declared = 0;
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t ln, std::string_view line) {
    last_line = ln;
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (f) throw ParseError(Code::kDuplicateHeader, ln, "second header");
      if (tok.size() != 4 || tok[1] != "mcsp") throw ParseError(Code::kBadHeader, ln, "expected 'p mcsp <nvars> <nconstraints>'");
      long long n, m;
      if (!to_int(tok[2], n) || !to_int(tok[3], m) || n < 0 || m < 0 || n > (1LL << 30) || m > (1LL << 30)) {
        throw ParseError(Code::kBadHeader, ln, "bad header counts");
      }
      f.emplace(static_cast<int>(n));
      declared = static_cast<int>(m);
      return;
    }
    if (!f) throw ParseError(Code::kMissingHeader, ln, "constraint before header");
    if (tok[0].size() != 1 || std::string_view("oaxtm").find(tok[0][0]) == std::string_view::npos) {
      throw ParseError(Code::kUnknownLineKind, ln, "unknown line kind '" + std::string(tok[0]) + "'");
    }
    const char kind = tok[0][0];
    std::size_t pos = 1;
    int param = 0;
    if (kind == 'x' || kind == 't') {
      if (pos >= tok.size()) throw ParseError(Code::kBadNumber, ln, "missing constraint parameter");
      param = kind == 'x' ? number(tok[pos], ln, 0, 1, "parity bit") : number(tok[pos], ln, 0, 1 << 30, "threshold");
      ++pos;
    }
    if (kind == 'm' && pos < tok.size() && tok[pos].substr(0, 2) == "t=") {
      throw ParseError(Code::kMajorityThreshold, ln, "MAJORITY takes no explicit threshold");
    }
    std::vector<Literal> lits;
    bool terminated = false;
    for (; pos < tok.size(); ++pos) {
      long long v;
      if (!to_int(tok[pos], v)) throw ParseError(Code::kBadLiteral, ln, "bad literal '" + std::string(tok[pos]) + "'");
      if (v == 0) {
        terminated = true;
        ++pos;
        break;
      }
      if (v < -f->num_vars() || v > f->num_vars()) {
        throw ParseError(Code::kBadLiteral, ln, "literal " + std::to_string(v) + " out of range");
      }
      const Literal lit = Literal::from_int(static_cast<int>(v));
      for (const Literal& prev : lits) {
        if (prev.var != lit.var) continue;
        if (prev.positive == lit.positive) {
          throw ParseError(Code::kDuplicateVariable, ln, "variable " + std::to_string(lit.var) + " repeated");
        }
        throw ParseError(Code::kOppositeLiterals, ln, "variable " + std::to_string(lit.var) + " appears with both signs");
      }
      lits.push_back(lit);
    }
    if (!terminated) throw ParseError(Code::kMissingTerminator, ln, "constraint not terminated by 0");
    if (pos < tok.size()) throw ParseError(Code::kTrailingTokens, ln, "tokens after terminating 0");
    switch (kind) {
      case 'o': f->add(Constraint::make_or(std::move(lits))); break;
      case 'a': f->add(Constraint::make_and(std::move(lits))); break;
      case 'x': f->add(Constraint::make_parity(std::move(lits), param == 1)); break;
      case 't': f->add(Constraint::make_threshold(std::move(lits), param)); break;
      case 'm': f->add(Constraint::make_majority(std::move(lits))); break;
    }
  });
  if (!f) throw ParseError(Code::kMissingHeader, last_line, "no 'p mcsp' header");
  if (f->size() != declared) {
    throw ParseError(Code::kCountMismatch, last_line,
                     "header declares " + std::to_string(declared) + " constraints, found " + std::to_string(f->size()));
  }
  return std::move(*f);
}

std::string serialize_instance(const Formula& f) {
  std::string out = "p mcsp " + std::to_string(f.num_vars()) + " " + std::to_string(f.size()) + "\n";
  for (const Constraint& c : f.constraints()) {
    switch (c.kind()) {
      case Kind::kOr: out += "o"; break;
      case Kind::kAnd: out += "a"; break;
      case Kind::kParity: out += c.parity_rhs() ? "x 1" : "x 0"; break;
      case Kind::kThreshold: out += "t " + std::to_string(c.threshold()); break;
      case Kind::kMajority: out += "m"; break;
    }
    for (const Literal& l : c.literals()) out += " " + std::to_string(l.to_int());
    out += " 0\n";
  }
  return out;
}

MccGraph parse_mcc(std::string_view text) {
  std::optional<MccGraph> g;
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t ln, std::string_view line) {
    last_line = ln;
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (g) throw ParseError(Code::kDuplicateHeader, ln, "second header");
      if (tok.size() != 4 || tok[1] != "mcc") throw ParseError(Code::kBadHeader, ln, "expected 'p mcc <k> <n>'");
      long long k, n;
      if (!to_int(tok[2], k) || !to_int(tok[3], n) || k < 1 || n < 1 || k > 4096 || n > (1 << 20)) {
        throw ParseError(Code::kBadHeader, ln, "bad header counts");
      }
      g.emplace(static_cast<int>(k), static_cast<int>(n));
      return;
    }
    if (!g) throw ParseError(Code::kMissingHeader, ln, "edge before header");
    if (tok[0] != "e") throw ParseError(Code::kUnknownLineKind, ln, "unknown line kind '" + std::string(tok[0]) + "'");
    if (tok.size() != 5) throw ParseError(Code::kTrailingTokens, ln, "expected 'e <i> <u> <j> <v>'");
    long long v[4];
    for (int t = 0; t < 4; ++t) {
      if (!to_int(tok[t + 1], v[t])) throw ParseError(Code::kBadNumber, ln, "bad number '" + std::string(tok[t + 1]) + "'");
    }
    if (v[0] < 1 || v[0] > g->k() || v[2] < 1 || v[2] > g->k() || v[1] < 1 || v[1] > g->n() || v[3] < 1 ||
        v[3] > g->n()) {
      throw ParseError(Code::kVertexOutOfRange, ln, "edge endpoint out of range");
    }
    if (v[0] == v[2]) throw ParseError(Code::kIntraPartEdge, ln, "edge inside part " + std::to_string(v[0]));
    g->add_edge(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]), static_cast<int>(v[3]));
  });
  if (!g) throw ParseError(Code::kMissingHeader, last_line, "no 'p mcc' header");
  return std::move(*g);
}

std::string serialize_mcc(const MccGraph& g) {
  std::string out = "p mcc " + std::to_string(g.k()) + " " + std::to_string(g.n()) + "\n";
  for (const MccEdge& e : g.edges()) {
    out += "e " + std::to_string(e.i) + " " + std::to_string(e.u) + " " + std::to_string(e.j) + " " +
           std::to_string(e.v) + "\n";
  }
  return out;
}

std::uint64_t instance_digest(const Formula& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_instance(f)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInstance("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, std::string_view text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInstance("cannot write '" + path + "'");
  out << text;
}

std::string report_json(const SolveReport& r, const Formula& f, bool with_timing) {
  nlohmann::ordered_json j;
  j["algorithm"] = r.algorithm;
  j["digest"] = digest_hex(instance_digest(f));
  j["num_vars"] = f.num_vars();
  j["num_constraints"] = f.size();
  j["value"] = r.value;
  j["witness"] = r.witness.to_string();
  j["oracle_value"] = r.oracle_value ? nlohmann::ordered_json(*r.oracle_value) : nlohmann::ordered_json();
  const auto ratio = r.ratio();
  j["ratio"] = ratio ? nlohmann::ordered_json(ratio->to_string()) : nlohmann::ordered_json();
  j["epsilon"] = r.epsilon ? nlohmann::ordered_json(r.epsilon->to_string()) : nlohmann::ordered_json();
  j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json();
  j["trials"] = r.trials ? nlohmann::ordered_json(*r.trials) : nlohmann::ordered_json();
  j["route"] = r.route;
  if (with_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j.dump(2) + "\n";
}

std::string analysis_json(const Formula& f, const ParamReport& p) {
  nlohmann::ordered_json j;
  j["digest"] = digest_hex(instance_digest(f));
  j["num_vars"] = f.num_vars();
  j["num_constraints"] = f.size();
  nlohmann::ordered_json kinds = nlohmann::ordered_json::object();
  for (Kind k : {Kind::kOr, Kind::kAnd, Kind::kParity, Kind::kThreshold, Kind::kMajority}) {
    int count = 0;
    for (const Constraint& c : f.constraints()) count += c.kind() == k ? 1 : 0;
    kinds[std::string(kind_name(k))] = count;
  }
  j["kinds"] = kinds;
  j["occurrences"] = f.occ();
  nlohmann::ordered_json nd;
  nd["value"] = p.nd.k();
  nd["classes"] = p.nd.classes;
  j["nd"] = nd;
  auto bounded = [](const BoundedResult& b, int budget) {
    nlohmann::ordered_json o;
    o["value"] = b.size ? nlohmann::ordered_json(*b.size) : nlohmann::ordered_json();
    o["budget"] = budget;
    o["exceeds_budget"] = b.exceeds_budget();
    o["witness"] = b.witness;
    return o;
  };
  j["vc"] = bounded(p.vc, p.vc_budget);
  j["fvs"] = bounded(p.fvs, p.fvs_budget);
  return j.dump(2) + "\n";
}

}  // namespace mcsp
