#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcsp {

enum class Kind : std::uint8_t { kOr, kAnd, kParity, kThreshold, kMajority };

std::string_view kind_name(Kind kind);

// A signed occurrence of a 1-based variable.
struct Literal {
  int var = 0;
  bool positive = true;

  // DIMACS-style signed integer: +v / -v.
  static Literal from_int(int signed_var);
  int to_int() const { return positive ? var : -var; }
  Literal negated() const { return {var, !positive}; }
  bool value_under(bool var_value) const { return var_value == positive; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(int var) { return {var, true}; }
inline Literal neg(int var) { return {var, false}; }

class Constraint {
 public:
  static Constraint make_or(std::vector<Literal> lits);
  static Constraint make_and(std::vector<Literal> lits);
  static Constraint make_parity(std::vector<Literal> lits, bool rhs);
  static Constraint make_threshold(std::vector<Literal> lits, int threshold);
  static Constraint make_majority(std::vector<Literal> lits);

  Kind kind() const { return kind_; }
  std::span<const Literal> literals() const { return lits_; }
  int arity() const { return static_cast<int>(lits_.size()); }

  // Only meaningful for PARITY.
  bool parity_rhs() const { return rhs_; }
  // Stored threshold; only meaningful for THRESHOLD.
  int threshold() const { return threshold_; }

  // Number of true literals needed: OR -> 1, AND -> arity, MAJORITY ->
  // ceil(arity/2), THRESHOLD -> threshold. Throws PreconditionError for PARITY.
  int required_true() const;

  // Equivalent explicit THRESHOLD constraint. PARITY is rejected.
  Constraint as_threshold() const;

  std::optional<Literal> literal_of(int var) const;
  bool contains(int var) const { return literal_of(var).has_value(); }

  friend bool operator==(const Constraint&, const Constraint&) = default;

 private:
  Constraint(Kind kind, std::vector<Literal> lits, bool rhs, int threshold);

  Kind kind_ = Kind::kOr;
  std::vector<Literal> lits_;
  bool rhs_ = false;
  int threshold_ = 0;
};

// A MAJORITY constraint, or a THRESHOLD whose threshold is ceil(arity/2).
bool is_majority_valid(const Constraint& c);

class Formula {
 public:
  Formula() = default;
  explicit Formula(int num_vars);
  Formula(int num_vars, std::vector<Constraint> constraints);

  int num_vars() const { return num_vars_; }
  int size() const { return static_cast<int>(constraints_.size()); }
  bool empty() const { return constraints_.empty(); }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Constraint& operator[](std::size_t i) const { return constraints_[i]; }

  // Throws MalformedInstance if a literal refers to a variable > num_vars.
  void add(Constraint c);
  // Appends a fresh variable and returns its index.
  int add_variable();

  // Total number of literal occurrences.
  std::size_t occ() const;
  // Indices of the constraints mentioning `var`.
  std::vector<std::size_t> occurrences(int var) const;

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  int num_vars_ = 0;
  std::vector<Constraint> constraints_;
};

// Total 0/1 assignment to variables 1..num_vars.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int num_vars, bool fill = false);
  // Bit (i-1) of `mask` is the value of variable i.
  static Assignment from_mask(int num_vars, std::uint64_t mask);

  int num_vars() const { return static_cast<int>(bits_.size()); }
  bool operator[](int var) const { return bits_[static_cast<std::size_t>(var - 1)] != 0; }
  bool get(int var) const;
  void set(int var, bool value);

  // "x1 x2 ... xn" as a string of '0'/'1'.
  std::string to_string() const;
  static Assignment from_string(std::string_view bits);

  friend bool operator==(const Assignment&, const Assignment&) = default;
  // Lexicographic over (x1, ..., xn).
  friend bool operator<(const Assignment& a, const Assignment& b) { return a.bits_ < b.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

// Throws MalformedInstance if a literal refers to a variable missing from `a`.
bool eval_constraint(const Constraint& c, const Assignment& a);
int count_satisfied(const Formula& f, const Assignment& a);

// PARITY constraint over positive literals with the same solution set.
Constraint normalize_parity(const Constraint& c);

struct FixResult {
  Formula formula;
  // Constraints decided true and removed.
  int delta = 0;
  // origin[i] is the index in the input of the output's i-th constraint.
  std::vector<std::size_t> origin;
};

// Eliminates `var` by fixing it to `value`. MAJORITY constraints that contain
// `var` become explicit THRESHOLD constraints first.
FixResult simplify_fix_variable(const Formula& f, int var, bool value);
FixResult fix_variables(const Formula& f, std::span<const std::pair<int, bool>> fixed);

// Formula restricted to the listed constraint indices (order preserved).
Formula select_constraints(const Formula& f, std::span<const std::size_t> indices);

struct CompactFormula {
  Formula formula;
  // original_var[i - 1] is the input variable renamed to i.
  std::vector<int> original_var;
};

// Renames the variables that occur in `f` to 1..n', preserving order.
CompactFormula compact(const Formula& f);

}  // namespace mcsp
