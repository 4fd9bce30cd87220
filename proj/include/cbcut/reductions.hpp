#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cbcut/hypergraph.hpp"

namespace cbcut {

struct MaxCutInstance {
  int node_count;
  std::vector<std::pair<int, int>> edges;  // undirected, unit weight, no self-loops
};

void validate_maxcut(const MaxCutInstance& g);

// Optimal number of cut edges, by exhaustive enumeration (node_count <= 24).
int max_cut_exhaustive(const MaxCutInstance& g);

enum class MaxCutRegime { W2LessThan1, W2GreaterThan2 };

// MaxCut -> 4-uniform cut gadgets. W2LessThan1: every edge (u,v) becomes the
// hyperedge {u,v,s,t}; a bipartition cutting k edges costs k*w2 + (m-k).
// W2GreaterThan2: every edge becomes hyperedges {u,v,s,x} and {u,v,t,y} on
// fresh x,y plus pinning edges (s,x),(t,y) of weight 2*w2; cost 2k + (m-k)*w2.
Hypergraph reduce_maxcut(const MaxCutInstance& g, MaxCutRegime regime, const Rat& w2);

struct TightInstance {
  Hypergraph h;
  std::vector<bool> forced_membership;  // the unique cheap cut
};

// One hyperedge {s, u_1..u_{r-1}} plus heavy pinning edges forcing u_1..u_{i-1}
// to the s side and the rest to the t side, so the optimum splits the
// hyperedge exactly (i, r-i) and costs w_i. Realizes the ratio w_hat_i / w_i
// for any dominating vector w_hat.
TightInstance tight_instance(int r, int i, const SplittingVector& w);

// NP-hardness approximation floor for 4-uniform instances with penalties
// (1, w2): 1 + (w2-2)/(17*w2+34) for w2 > 2, 1 + (1-w2)/(17*(1+w2)) for
// w2 < 1, none inside the submodular interval [1,2].
std::optional<Rat> apx_lower_bound(const Rat& w2);

}  // namespace cbcut
