#pragma once

#include <vector>

#include "cbcut/rational.hpp"

namespace cbcut {

struct Hyperedge {
  std::vector<int> nodes;  // sorted, distinct, size == r
  Rat weight;              // >= 0
};

struct PairwiseEdge {
  int u, v;  // u < v
  Rat weight;
};

// r-uniform hypergraph with two designated terminal nodes and optional
// weighted pairwise edges. Immutable after construction.
class Hypergraph {
 public:
  Hypergraph(int node_count, int s_id, int t_id, int r, std::vector<Hyperedge> hyperedges,
             std::vector<PairwiseEdge> pairwise_edges);

  int node_count() const { return node_count_; }
  int s_id() const { return s_id_; }
  int t_id() const { return t_id_; }
  int r() const { return r_; }
  int free_node_count() const { return node_count_ - 2; }
  const std::vector<Hyperedge>& hyperedges() const { return hyperedges_; }
  const std::vector<PairwiseEdge>& pairwise_edges() const { return pairwise_edges_; }

 private:
  int node_count_, s_id_, t_id_, r_;
  std::vector<Hyperedge> hyperedges_;
  std::vector<PairwiseEdge> pairwise_edges_;
};

// Penalties w_0..w_q of a cardinality-based splitting function for size-r
// hyperedges, q = floor(r/2). w_0 is always 0.
class SplittingVector {
 public:
  SplittingVector(int r, std::vector<Rat> w);  // w holds w_0..w_q

  int r() const { return r_; }
  int q() const { return static_cast<int>(w_.size()) - 1; }
  const Rat& operator[](int i) const { return w_[static_cast<size_t>(i)]; }
  const std::vector<Rat>& values() const { return w_; }

  // Penalty for a hyperedge with `in_count` of its r nodes on the s side.
  const Rat& penalty(int in_count) const;

 private:
  int r_;
  std::vector<Rat> w_;
};

struct CutSolution {
  std::vector<bool> membership;  // node order; true = s side
  Rat value;
};

// Exact value of objective (6): sum_i w_i * W(dS_i) + cut_E(S).
// `membership` must place s on the s side and t on the t side.
Rat evaluate_cut(const Hypergraph& h, const SplittingVector& w, const std::vector<bool>& membership);

// Replaces every pairwise edge (x, y, weight) by a size-r hyperedge on x, y
// and r-2 fresh nodes, with weight scaled by 1/w_1. Placing the fresh nodes
// on the same side as x reproduces the original objective value exactly for
// every cut of the original nodes.
Hypergraph embed_edges_as_hyperedges(const Hypergraph& h, const SplittingVector& w);

}  // namespace cbcut
