#pragma once

#include <vector>

#include "cbcut/rational.hpp"

namespace cbcut {

// Dinic's blocking-flow algorithm over exact rational capacities. The number
// of phases is bounded by the node count, so exact arithmetic costs nothing
// in termination.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count);

  int node_count() const { return static_cast<int>(adj_.size()); }
  void add_arc(int tail, int head, const Rat& capacity);

  Rat max_flow(int source, int sink);

  // Source side of the minimum cut (nodes reachable from the source in the
  // residual graph). Valid after max_flow; this is the unique minimal min
  // cut, hence the lexicographically smallest membership vector among all
  // minimum cuts.
  const std::vector<bool>& source_side() const { return side_; }

 private:
  struct Arc {
    int to;
    size_t rev;
    Rat cap;
  };
  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<size_t> ptr_;
  std::vector<bool> side_;

  bool build_levels(int source, int sink);
  Rat push(int v, int sink, Rat limit);
};

}  // namespace cbcut
