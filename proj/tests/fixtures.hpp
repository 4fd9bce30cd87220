#pragma once

// Hand-built instances shared across test suites. The two integrality-gap
// hypergraphs are reconstructed here from scratch so tests of gap_instance
// compare against an independent description.

#include "cbcut/hypergraph.hpp"

namespace cbcut::testing {

// Six nodes; g = {s,t,1,2} of weight 1 and f = {1,2,3,4} of weight 1/w2 - 1.
// Figure nodes 1..4 map to 0..3, s = 4, t = 5. Valid for 0 < w2 < 1.
inline Hypergraph gap_small_hypergraph(const Rat& w2) {
  std::vector<Hyperedge> hyperedges{{{0, 1, 4, 5}, Rat(1)}, {{0, 1, 2, 3}, Rat(1) / w2 - 1}};
  return Hypergraph(6, 4, 5, 4, std::move(hyperedges), {});
}

// Six nodes; g = {s,1,2,3}, f = {t,1,2,4} of weight 1 and heavy edges
// {s,3}, {t,4}, {1,2} of weight 2*w2. Valid for w2 > 2.
inline Hypergraph gap_large_hypergraph(const Rat& w2) {
  std::vector<Hyperedge> hyperedges{{{0, 1, 2, 4}, Rat(1)}, {{0, 1, 3, 5}, Rat(1)}};
  std::vector<PairwiseEdge> edges{{2, 4, 2 * w2}, {3, 5, 2 * w2}, {0, 1, 2 * w2}};
  return Hypergraph(6, 4, 5, 4, std::move(hyperedges), std::move(edges));
}

inline SplittingVector w4(const Rat& w2) { return SplittingVector(4, {Rat(0), Rat(1), w2}); }

}  // namespace cbcut::testing
