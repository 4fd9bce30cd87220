#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cbcut/hypergraph.hpp"
#include "cbcut/projection.hpp"
#include "cbcut/regime.hpp"

namespace cbcut {

// Directed graph produced by the gadget reduction of a submodular instance.
// Each (hyperedge, b) pair with positive decomposition coefficient lambda_b
// contributes two auxiliary nodes e_in/e_out and arcs
//   v -> e_in   (cap omega_e * lambda_b)    for every v in e
//   e_in -> e_out (cap omega_e * lambda_b * b)
//   e_out -> v  (cap omega_e * lambda_b)    for every v in e
// whose minimal cut over auxiliary placements is omega_e * lambda_b * min(i, b)
// when i nodes of e sit on the small side. Pairwise edges become a pair of
// opposite arcs.
struct ReductionGraph {
  struct Arc {
    int tail, head;
    Rat cap;
  };
  struct Gadget {
    int hyperedge_index;
    int b;
    int in_node, out_node;
  };
  int node_count = 0;
  int original_count = 0;
  int source = -1, sink = -1;
  std::vector<Arc> arcs;
  std::vector<Gadget> gadgets;
};

// Exhaustive minimizer over all 2^(n-2) terminal-respecting bipartitions.
// Ties resolved to the lexicographically smallest membership vector.
// Requires at most 24 non-terminal nodes.
CutSolution brute_force_min_cut(const Hypergraph& h, const SplittingVector& w);

// Nonnegative coefficients lambda_1..lambda_q with
// w_i = sum_b lambda_b * min(i, b). Requires classify(w) == Submodular.
std::vector<Rat> concave_decomposition(const SplittingVector& w_hat);

ReductionGraph build_reduction_graph(const Hypergraph& h, const SplittingVector& w_hat);

// Exact max-flow/min-cut of the reduction graph; membership restricted to the
// original nodes, value = flow value.
CutSolution min_cut_via_flow(const ReductionGraph& g);

enum class SolveMode { Auto, Brute, Flow, Approx };

struct SolveReport {
  RegimeTag regime;
  std::string method;       // "brute" | "flow" | "degenerate" | "approx"
  bool approximate = false;
  // Populated when approximate:
  std::optional<Rat> rho;                     // certified factor
  std::optional<Rat> projected_value;         // cut value under w_hat
  std::optional<SplittingVector> w_hat;
};

// Entry point. Auto dispatch: Degenerate -> S = {s}; Submodular -> gadget +
// max-flow (exact); NonSubmodularHard -> plc_project, solve under w_hat, and
// return the cut with its original-objective value plus the rho certificate
// (value <= rho * OPT).
std::pair<CutSolution, SolveReport> solve(const Hypergraph& h, const SplittingVector& w,
                                          SolveMode mode);

}  // namespace cbcut
