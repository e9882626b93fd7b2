#include "mcsp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "mcsp/errors.hpp"
#include "mcsp/random.hpp"

namespace mcsp {

namespace {

// Maintains per-constraint true-literal counts under single-variable flips.
class IncrementalCounter {
 public:
  explicit IncrementalCounter(const Formula& f)
      : occ_(f.num_vars() + 1), need_(f.size()), parity_(f.size()), rhs_(f.size()),
        count_(f.size()) {
    for (std::size_t j = 0; j < f.constraints().size(); ++j) {
      const Constraint& c = f[j];
      parity_[j] = c.kind() == Kind::kParity;
      rhs_[j] = c.parity_rhs();
      need_[j] = parity_[j] ? 0 : c.required_true();
      for (const Literal& l : c.literals()) occ_[l.var].push_back({static_cast<int>(j), l.positive});
    }
  }

  void reset(std::uint64_t mask) {
    mask_ = mask;
    std::fill(count_.begin(), count_.end(), 0);
    for (int v = 1; v < static_cast<int>(occ_.size()); ++v) {
      bool value = (mask >> (v - 1)) & 1U;
      for (auto [j, positive] : occ_[v]) count_[j] += (value == positive) ? 1 : 0;
    }
    satisfied_ = 0;
    for (std::size_t j = 0; j < count_.size(); ++j) satisfied_ += sat(j) ? 1 : 0;
  }

  void flip(int var) {
    mask_ ^= std::uint64_t{1} << (var - 1);
    const bool value = (mask_ >> (var - 1)) & 1U;
    for (auto [j, positive] : occ_[var]) {
      const bool before = sat(j);
      count_[j] += (value == positive) ? 1 : -1;
      satisfied_ += static_cast<int>(sat(j)) - static_cast<int>(before);
    }
  }

  int satisfied() const { return satisfied_; }
  std::uint64_t mask() const { return mask_; }

 private:
  bool sat(std::size_t j) const {
    return parity_[j] ? ((count_[j] & 1) == 1) == rhs_[j] : count_[j] >= need_[j];
  }

  std::vector<std::vector<std::pair<int, bool>>> occ_;
  std::vector<int> need_;
  std::vector<char> parity_;
  std::vector<char> rhs_;
  std::vector<int> count_;
  std::uint64_t mask_ = 0;
  int satisfied_ = 0;
};

// Lexicographic order over (x1, ..., xn) for masks where bit i holds x_{i+1}.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) == 0;
}

struct Best {
  int value = -1;
  std::uint64_t mask = 0;

  void offer(int v, std::uint64_t m) {
    if (v > value || (v == value && lex_less(m, mask))) {
      value = v;
      mask = m;
    }
  }
};

// Enumerates the low `free_bits` variables with the others fixed by `base`.
Best enumerate_chunk(const Formula& f, std::uint64_t base, int free_bits) {
  IncrementalCounter counter(f);
  counter.reset(base);
  Best best;
  best.offer(counter.satisfied(), counter.mask());
  const std::uint64_t steps = std::uint64_t{1} << free_bits;
  for (std::uint64_t i = 1; i < steps; ++i) {
    counter.flip(std::countr_zero(i) + 1);
    best.offer(counter.satisfied(), counter.mask());
  }
  return best;
}

void check_limit(const Formula& f, int var_limit) {
  if (f.num_vars() > var_limit || f.num_vars() > 62) {
    throw ResourceLimit("brute force refuses " + std::to_string(f.num_vars()) +
                        " variables (limit " + std::to_string(std::min(var_limit, 62)) + ")");
  }
}

}  // namespace

OracleResult max_csp_bruteforce(const Formula& f, int var_limit, unsigned threads) {
  check_limit(f, var_limit);
  const int n = f.num_vars();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  int high = 0;
  while ((1U << (high + 1)) <= threads && high + 1 <= n && high < 8) ++high;
  const int low = n - high;
  const std::size_t chunks = std::size_t{1} << high;

  std::vector<Best> partial(chunks);
  if (chunks == 1) {
    partial[0] = enumerate_chunk(f, 0, low);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t c = 0; c < chunks; ++c) {
      pool.emplace_back([&, c] { partial[c] = enumerate_chunk(f, std::uint64_t{c} << low, low); });
    }
    for (auto& t : pool) t.join();
  }
  Best best;
  for (const Best& b : partial) best.offer(b.value, b.mask);
  return {best.value, Assignment::from_mask(n, best.mask)};
}

std::optional<Assignment> satisfiable_bruteforce(const Formula& f, int var_limit) {
  check_limit(f, var_limit);
  const int n = f.num_vars();
  const int m = f.size();
  IncrementalCounter counter(f);
  counter.reset(0);
  if (counter.satisfied() == m) return Assignment::from_mask(n, counter.mask());
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < steps; ++i) {
    counter.flip(std::countr_zero(i) + 1);
    if (counter.satisfied() == m) return Assignment::from_mask(n, counter.mask());
  }
  return std::nullopt;
}

GaussResult parity_gauss_satisfiable(const Formula& f) {
  const int n = f.num_vars();
  const std::size_t words = static_cast<std::size_t>(n + 1 + 63) / 64;
  auto test = [](const std::vector<std::uint64_t>& row, int bit) {
    return ((row[bit / 64] >> (bit % 64)) & 1U) != 0;
  };

  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(f.constraints().size());
  for (const Constraint& c : f.constraints()) {
    if (c.kind() != Kind::kParity) {
      throw PreconditionError("parity_gauss_satisfiable needs PARITY constraints only");
    }
    Constraint normal = normalize_parity(c);
    std::vector<std::uint64_t> row(words, 0);
    for (const Literal& l : normal.literals()) row[(l.var - 1) / 64] ^= std::uint64_t{1} << ((l.var - 1) % 64);
    if (normal.parity_rhs()) row[n / 64] |= std::uint64_t{1} << (n % 64);
    rows.push_back(std::move(row));
  }

  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t r = rank;
    while (r < rows.size() && !test(rows[r], col)) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && test(rows[i], col)) {
        for (std::size_t w = 0; w < words; ++w) rows[i][w] ^= rows[rank][w];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }

  GaussResult result;
  result.rank = static_cast<int>(rank);
  for (std::size_t i = rank; i < rows.size(); ++i) {
    if (test(rows[i], n)) return result;
  }
  result.satisfiable = true;
  Assignment a(n);
  for (std::size_t i = 0; i < rank; ++i) a.set(pivot_col[i] + 1, test(rows[i], n));
  result.witness = std::move(a);
  return result;
}

Formula random_formula(const RandomFormulaSpec& spec) {
  if (spec.num_vars < 0 || spec.num_constraints < 0 || spec.min_arity < 0 ||
      spec.min_arity > spec.max_arity || spec.max_arity > spec.num_vars || spec.kinds.empty()) {
    throw PreconditionError("infeasible random formula spec");
  }
  Rng rng(spec.seed);
  Formula f(spec.num_vars);
  std::vector<int> pool(spec.num_vars);
  for (int i = 0; i < spec.num_vars; ++i) pool[i] = i + 1;

  for (int j = 0; j < spec.num_constraints; ++j) {
    const Kind kind = spec.kinds[rng.uniform(0, static_cast<int>(spec.kinds.size()) - 1)];
    const int arity = rng.uniform(spec.min_arity, spec.max_arity);
    std::vector<Literal> lits;
    for (int i = 0; i < arity; ++i) {
      int pick = rng.uniform(i, spec.num_vars - 1);
      std::swap(pool[i], pool[pick]);
      lits.push_back({pool[i], rng.coin()});
    }
    switch (kind) {
      case Kind::kOr: f.add(Constraint::make_or(std::move(lits))); break;
      case Kind::kAnd: f.add(Constraint::make_and(std::move(lits))); break;
      case Kind::kParity: f.add(Constraint::make_parity(std::move(lits), rng.coin())); break;
      case Kind::kThreshold: {
        int t = arity == 0 ? 0 : rng.uniform(1, arity);
        f.add(Constraint::make_threshold(std::move(lits), t));
        break;
      }
      case Kind::kMajority: f.add(Constraint::make_majority(std::move(lits))); break;
    }
  }
  return f;
}

}  // namespace mcsp
