#pragma once

#include <string>
#include <vector>

#include "cbcut/hypergraph.hpp"

namespace cbcut {

// Cost functions of the Boolean constraint language for r-uniform
// cardinality-based cuts, plus the two-variable not-all-equal predicate for
// pairwise edges. Arities: phi_r -> r, phi_s/phi_t -> r-1, phi_st -> r-2,
// nae2 -> 2.
enum class CostKind { PhiR, PhiS, PhiT, PhiSt, Nae2 };

int cost_arity(CostKind kind, int r);
const char* cost_kind_name(CostKind kind);

// Evaluates a cost function on a Boolean tuple (1 = s side).
Rat cost_phi(CostKind kind, const SplittingVector& w, const std::vector<int>& bits);

struct Constraint {
  std::vector<int> scope;  // canonicalized ascending
  CostKind kind;
  Rat weight;
};

class VcspInstance {
 public:
  VcspInstance(int variable_count, int r, std::vector<Constraint> constraints);

  int variable_count() const { return variable_count_; }
  int r() const { return r_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

 private:
  int variable_count_, r_;
  std::vector<Constraint> constraints_;
};

// Total cost of a 0/1 assignment under splitting penalties w.
Rat vcsp_cost(const VcspInstance& p, const SplittingVector& w, const std::vector<int>& assignment);

// Instance translation. Variables are the non-terminal nodes in ascending
// index order; hyperedges map to phi_r/phi_s/phi_t/phi_st by terminal
// membership and pairwise edges map to weighted nae2 constraints. Pairwise
// edges incident to a terminal are not expressible in the language.
VcspInstance to_vcsp(const Hypergraph& h, const SplittingVector& w);

// Inverse translation: variables become nodes 0..V-1, s = V, t = V+1.
Hypergraph from_vcsp(const VcspInstance& p, int r, const SplittingVector& w);

// Membership vector induced by an assignment on the hypergraph that
// to_vcsp was called with (s -> 1, t -> 0).
std::vector<bool> assignment_to_membership(const Hypergraph& h, const std::vector<int>& assignment);

enum class MultimorphismKind { AllZero, AllOne, MinMax };

struct MultimorphismReport {
  bool holds;
  // When !holds: the violating tuple set, lowest lexicographic witness.
  // AllZero/AllOne: one m-bit vector. MinMax: two m-bit vectors.
  std::vector<std::vector<int>> counterexample;
};

// Exhaustive multimorphism test. For <min,max> it is enough to test stacks of
// width-2 tuples (pairs of Boolean vectors); for <0>/<1> width-1 suffices
// since the function ignores its input. Requires r <= 8.
MultimorphismReport check_multimorphism(MultimorphismKind f, CostKind kind, const SplittingVector& w);

}  // namespace cbcut
