#include "mcsp/formula.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "mcsp/errors.hpp"

namespace mcsp {

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::kOr: return "OR";
    case Kind::kAnd: return "AND";
    case Kind::kParity: return "PARITY";
    case Kind::kThreshold: return "THRESHOLD";
    case Kind::kMajority: return "MAJORITY";
  }
  return "?";
}

Literal Literal::from_int(int signed_var) {
  if (signed_var == 0) throw MalformedInstance("literal 0 is not a variable");
  return {std::abs(signed_var), signed_var > 0};
}

// ---------------------------------------------------------------------------
// Constraint

Constraint::Constraint(Kind kind, std::vector<Literal> lits, bool rhs, int threshold)
    : kind_(kind), lits_(std::move(lits)), rhs_(rhs), threshold_(threshold) {
  std::vector<int> vars;
  vars.reserve(lits_.size());
  for (const Literal& l : lits_) {
    if (l.var < 1) throw MalformedInstance("variable index must be >= 1");
    vars.push_back(l.var);
  }
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
    throw MalformedInstance("variable occurs twice in one constraint");
  }
  if (threshold_ < 0) throw MalformedInstance("negative threshold");
}

Constraint Constraint::make_or(std::vector<Literal> lits) {
  return Constraint(Kind::kOr, std::move(lits), false, 0);
}

Constraint Constraint::make_and(std::vector<Literal> lits) {
  return Constraint(Kind::kAnd, std::move(lits), false, 0);
}

Constraint Constraint::make_parity(std::vector<Literal> lits, bool rhs) {
  return Constraint(Kind::kParity, std::move(lits), rhs, 0);
}

Constraint Constraint::make_threshold(std::vector<Literal> lits, int threshold) {
  return Constraint(Kind::kThreshold, std::move(lits), false, threshold);
}

Constraint Constraint::make_majority(std::vector<Literal> lits) {
  return Constraint(Kind::kMajority, std::move(lits), false, 0);
}

int Constraint::required_true() const {
  switch (kind_) {
    case Kind::kOr: return 1;
    case Kind::kAnd: return arity();
    case Kind::kThreshold: return threshold_;
    case Kind::kMajority: return (arity() + 1) / 2;
    case Kind::kParity: break;
  }
  throw PreconditionError("PARITY constraints have no threshold form");
}

Constraint Constraint::as_threshold() const {
  return make_threshold(lits_, required_true());
}

std::optional<Literal> Constraint::literal_of(int var) const {
  for (const Literal& l : lits_) {
    if (l.var == var) return l;
  }
  return std::nullopt;
}

bool is_majority_valid(const Constraint& c) {
  if (c.kind() == Kind::kMajority) return true;
  return c.kind() == Kind::kThreshold && c.threshold() == (c.arity() + 1) / 2;
}

// ---------------------------------------------------------------------------
// Formula

Formula::Formula(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw MalformedInstance("negative variable count");
}

Formula::Formula(int num_vars, std::vector<Constraint> constraints) : Formula(num_vars) {
  constraints_.reserve(constraints.size());
  for (auto& c : constraints) add(std::move(c));
}

void Formula::add(Constraint c) {
  for (const Literal& l : c.literals()) {
    if (l.var > num_vars_) {
      throw MalformedInstance("literal references undefined variable " + std::to_string(l.var));
    }
  }
  constraints_.push_back(std::move(c));
}

int Formula::add_variable() { return ++num_vars_; }

std::size_t Formula::occ() const {
  std::size_t total = 0;
  for (const auto& c : constraints_) total += c.literals().size();
  return total;
}

std::vector<std::size_t> Formula::occurrences(int var) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    if (constraints_[i].contains(var)) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(int num_vars, bool fill)
    : bits_(static_cast<std::size_t>(num_vars), fill ? 1 : 0) {}

Assignment Assignment::from_mask(int num_vars, std::uint64_t mask) {
  Assignment a(num_vars);
  for (int i = 0; i < num_vars && i < 64; ++i) a.bits_[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
  return a;
}

bool Assignment::get(int var) const {
  if (var < 1 || var > num_vars()) {
    throw MalformedInstance("assignment has no variable " + std::to_string(var));
  }
  return (*this)[var];
}

void Assignment::set(int var, bool value) {
  if (var < 1 || var > num_vars()) {
    throw MalformedInstance("assignment has no variable " + std::to_string(var));
  }
  bits_[static_cast<std::size_t>(var - 1)] = value ? 1 : 0;
}

std::string Assignment::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = bits_[i] ? '1' : '0';
  return s;
}

Assignment Assignment::from_string(std::string_view bits) {
  Assignment a(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw MalformedInstance("assignment string must be 0/1");
    a.bits_[i] = bits[i] == '1';
  }
  return a;
}

// ---------------------------------------------------------------------------
// Semantics

bool eval_constraint(const Constraint& c, const Assignment& a) {
  int true_count = 0;
  for (const Literal& l : c.literals()) {
    if (l.var > a.num_vars()) {
      throw MalformedInstance("literal references undefined variable " + std::to_string(l.var));
    }
    true_count += l.value_under(a[l.var]) ? 1 : 0;
  }
  switch (c.kind()) {
    case Kind::kOr: return true_count >= 1;
    case Kind::kAnd: return true_count == c.arity();
    case Kind::kParity: return (true_count % 2 == 1) == c.parity_rhs();
    case Kind::kThreshold: return true_count >= c.threshold();
    case Kind::kMajority: return true_count >= (c.arity() + 1) / 2;
  }
  return false;
}

int count_satisfied(const Formula& f, const Assignment& a) {
  int n = 0;
  for (const auto& c : f.constraints()) n += eval_constraint(c, a) ? 1 : 0;
  return n;
}

Constraint normalize_parity(const Constraint& c) {
  if (c.kind() != Kind::kParity) throw PreconditionError("normalize_parity needs a PARITY constraint");
  bool rhs = c.parity_rhs();
  std::vector<Literal> lits;
  lits.reserve(c.literals().size());
  for (const Literal& l : c.literals()) {
    if (!l.positive) rhs = !rhs;
    lits.push_back(pos(l.var));
  }
  return Constraint::make_parity(std::move(lits), rhs);
}

FixResult simplify_fix_variable(const Formula& f, int var, bool value) {
  if (var < 1 || var > f.num_vars()) {
    throw PreconditionError("cannot fix undefined variable " + std::to_string(var));
  }
  FixResult out{Formula(f.num_vars()), 0, {}};
  for (std::size_t i = 0; i < f.constraints().size(); ++i) {
    const Constraint& c = f[i];
    auto lit = c.literal_of(var);
    if (!lit) {
      out.formula.add(c);
      out.origin.push_back(i);
      continue;
    }
    const bool lit_true = lit->value_under(value);
    std::vector<Literal> rest;
    rest.reserve(c.literals().size() - 1);
    for (const Literal& l : c.literals()) {
      if (l.var != var) rest.push_back(l);
    }

    std::optional<Constraint> next;
    switch (c.kind()) {
      case Kind::kOr:
        if (lit_true) {
          ++out.delta;
        } else {
          next = Constraint::make_or(std::move(rest));
        }
        break;
      case Kind::kAnd:
        if (lit_true) next = Constraint::make_and(std::move(rest));
        break;
      case Kind::kParity:
        next = Constraint::make_parity(std::move(rest), c.parity_rhs() != lit_true);
        break;
      case Kind::kThreshold:
      case Kind::kMajority: {
        const int t = c.required_true();
        next = Constraint::make_threshold(std::move(rest), lit_true ? std::max(0, t - 1) : t);
        break;
      }
    }
    if (next) {
      out.formula.add(std::move(*next));
      out.origin.push_back(i);
    }
  }
  return out;
}

FixResult fix_variables(const Formula& f, std::span<const std::pair<int, bool>> fixed) {
  FixResult acc{f, 0, {}};
  acc.origin.resize(f.constraints().size());
  for (std::size_t i = 0; i < acc.origin.size(); ++i) acc.origin[i] = i;
  for (const auto& [var, value] : fixed) {
    FixResult step = simplify_fix_variable(acc.formula, var, value);
    for (auto& o : step.origin) o = acc.origin[o];
    acc.formula = std::move(step.formula);
    acc.origin = std::move(step.origin);
    acc.delta += step.delta;
  }
  return acc;
}

Formula select_constraints(const Formula& f, std::span<const std::size_t> indices) {
  Formula out(f.num_vars());
  for (std::size_t i : indices) out.add(f[i]);
  return out;
}

CompactFormula compact(const Formula& f) {
  std::vector<int> renamed(static_cast<std::size_t>(f.num_vars()) + 1, 0);
  for (const auto& c : f.constraints()) {
    for (const Literal& l : c.literals()) renamed[static_cast<std::size_t>(l.var)] = 1;
  }
  CompactFormula out;
  for (int v = 1; v <= f.num_vars(); ++v) {
    if (renamed[static_cast<std::size_t>(v)] != 0) {
      out.original_var.push_back(v);
      renamed[static_cast<std::size_t>(v)] = static_cast<int>(out.original_var.size());
    }
  }
  out.formula = Formula(static_cast<int>(out.original_var.size()));
  for (const auto& c : f.constraints()) {
    std::vector<Literal> lits;
    for (const Literal& l : c.literals()) lits.push_back({renamed[static_cast<std::size_t>(l.var)], l.positive});
    switch (c.kind()) {
      case Kind::kOr: out.formula.add(Constraint::make_or(std::move(lits))); break;
      case Kind::kAnd: out.formula.add(Constraint::make_and(std::move(lits))); break;
      case Kind::kParity: out.formula.add(Constraint::make_parity(std::move(lits), c.parity_rhs())); break;
      case Kind::kThreshold: out.formula.add(Constraint::make_threshold(std::move(lits), c.threshold())); break;
      case Kind::kMajority: out.formula.add(Constraint::make_majority(std::move(lits))); break;
    }
  }
  return out;
}

}  // namespace mcsp
