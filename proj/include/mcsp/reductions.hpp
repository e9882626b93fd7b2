#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcsp/formula.hpp"
#include "mcsp/rational.hpp"

namespace mcsp {

// Edge between vertex u of part i and vertex v of part j, with i < j.
// Parts and vertices are 1-based.
struct MccEdge {
  int i = 0, u = 0, j = 0, v = 0;
  friend auto operator<=>(const MccEdge&, const MccEdge&) = default;
};

// A k-partite graph whose parts all have n vertices.
class MccGraph {
 public:
  MccGraph(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  // Normalizes to i < j. Throws MalformedInstance for an edge inside one part
  // or an index out of range. Returns false if the edge was already present.
  bool add_edge(int i, int u, int j, int v);
  bool has_edge(int i, int u, int j, int v) const;
  const std::set<MccEdge>& edges() const { return edges_; }

  // Every potential edge, in sorted order.
  std::vector<MccEdge> all_cross_pairs() const;
  // The same graph with isolated vertices appended to every part so that n is
  // a power of two.
  MccGraph padded() const;

  // Lexicographically first multicolored clique as one vertex per part.
  std::optional<std::vector<int>> find_clique() const;
  bool has_clique() const { return find_clique().has_value(); }

  static MccGraph complete(int k, int n);
  // Each potential edge kept with probability p.
  static MccGraph random(int k, int n, const Rational& p, std::uint64_t seed);

  friend bool operator==(const MccGraph&, const MccGraph&) = default;

 private:
  int k_;
  int n_;
  std::set<MccEdge> edges_;
};

// Named groups of variables and constraints in a generated formula.
struct GadgetIndex {
  std::map<std::string, std::vector<int>> variables;
  std::map<std::string, std::vector<std::size_t>> constraints;
};

struct CnfReduction {
  Formula formula;
  GadgetIndex index;
  int bits = 0;  // variables per part
};

// One clause per non-edge, over the binary encodings of the two endpoints.
// Satisfiable iff the graph has a multicolored clique.
CnfReduction mcc_to_cnf(const MccGraph& g);

struct DnfReduction {
  Formula formula;
  GadgetIndex index;
  int target = 0;
  Rational epsilon;
};

// One AND term per edge; the optimum reaches k(k-1)/2 iff there is a clique.
DnfReduction mcc_to_dnf(const MccGraph& g);

struct ThresholdReduction {
  Formula formula;
  GadgetIndex index;
  // Constraint vertices whose deletion leaves a forest.
  std::vector<std::size_t> feedback_constraints;
};

// Chain gadgets over THRESHOLD constraints; satisfiable iff there is a clique.
ThresholdReduction mcc_to_threshold(const MccGraph& g);

// Equisatisfiable MAJORITY formula. Input constraints must be THRESHOLD.
// Converted constraints keep the input order; forcing units follow as
// THRESHOLD 1 constraints of arity 1.
Formula threshold_to_majority(const Formula& f);

// Equisatisfiable MAJORITY formula from an all-OR formula, padding each group
// of clauses over the same variable set with shared forced-true dummies.
Formula cnf_to_majority(const Formula& f);

}  // namespace mcsp
