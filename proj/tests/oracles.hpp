#pragma once

// Independent reference implementations used only by tests. These deliberately
// avoid the code paths of the library operations they check: cut values are
// recomputed from set intersections, minima come from plain recursion, and the
// norm-projection locus is confirmed by grid search.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "cbcut/hypergraph.hpp"
#include "cbcut/rational.hpp"
#include "cbcut/reductions.hpp"

namespace cbcut::testing {

// Cut objective recomputed from scratch via set intersections.
inline Rat reference_cut_value(const Hypergraph& h, const SplittingVector& w,
                               const std::set<int>& source_side) {
  Rat total = 0;
  for (const auto& e : h.hyperedges()) {
    std::vector<int> inside;
    std::set_intersection(e.nodes.begin(), e.nodes.end(), source_side.begin(), source_side.end(),
                          std::back_inserter(inside));
    int small = std::min(static_cast<int>(inside.size()),
                         static_cast<int>(e.nodes.size() - inside.size()));
    total += w.values()[static_cast<size_t>(small)] * e.weight;
  }
  for (const auto& e : h.pairwise_edges()) {
    bool cu = source_side.count(e.u) > 0, cv = source_side.count(e.v) > 0;
    if (cu != cv) total += e.weight;
  }
  return total;
}

struct ReferenceCut {
  Rat value;
  std::vector<bool> membership;
};

// Exhaustive minimum by recursion over the nodes in ascending order, t side
// first, so the first minimum encountered is the lexicographically smallest
// membership vector.
inline ReferenceCut reference_min_cut(const Hypergraph& h, const SplittingVector& w) {
  ReferenceCut best;
  bool have = false;
  std::vector<bool> membership(static_cast<size_t>(h.node_count()), false);

  auto recurse = [&](auto&& self, int v) -> void {
    if (v == h.node_count()) {
      std::set<int> side;
      for (int u = 0; u < h.node_count(); ++u)
        if (membership[static_cast<size_t>(u)]) side.insert(u);
      Rat value = reference_cut_value(h, w, side);
      if (!have || value < best.value) {
        have = true;
        best = {value, membership};
      }
      return;
    }
    if (v == h.s_id()) {
      membership[static_cast<size_t>(v)] = true;
      self(self, v + 1);
      membership[static_cast<size_t>(v)] = false;
      return;
    }
    if (v == h.t_id()) {
      self(self, v + 1);
      return;
    }
    membership[static_cast<size_t>(v)] = false;
    self(self, v + 1);
    membership[static_cast<size_t>(v)] = true;
    self(self, v + 1);
    membership[static_cast<size_t>(v)] = false;
  };
  recurse(recurse, 0);
  return best;
}

inline int reference_max_cut(const MaxCutInstance& g) {
  std::vector<bool> side(static_cast<size_t>(g.node_count), false);
  int best = 0;
  auto recurse = [&](auto&& self, int v) -> void {
    if (v == g.node_count) {
      int cut = 0;
      for (const auto& [a, b] : g.edges)
        if (side[static_cast<size_t>(a)] != side[static_cast<size_t>(b)]) ++cut;
      best = std::max(best, cut);
      return;
    }
    side[static_cast<size_t>(v)] = false;
    self(self, v + 1);
    side[static_cast<size_t>(v)] = true;
    self(self, v + 1);
  };
  recurse(recurse, 0);
  return best;
}

// Cardinality penalty of a 4-node hyperedge with w_1 = 1 given the four sides.
inline Rat cb4_penalty(const Rat& w2, bool a, bool b, bool c, bool d) {
  int in = int(a) + int(b) + int(c) + int(d);
  int small = std::min(in, 4 - in);
  if (small == 0) return Rat(0);
  if (small == 1) return Rat(1);
  return w2;
}

// Exact minimum cut of reduce_maxcut(g, W2GreaterThan2, w2): enumerate the
// original node sides; each gadget's two fresh nodes appear in one hyperedge
// and one pinning edge each, so their optimal placement decomposes per edge.
inline Rat reference_reduced_min_cut_gt2(const MaxCutInstance& g, const Rat& w2) {
  Rat best;
  bool have = false;
  const uint32_t total = uint32_t{1} << g.node_count;
  for (uint32_t mask = 0; mask < total; ++mask) {
    Rat value = 0;
    for (const auto& [u, v] : g.edges) {
      bool su = (mask >> u & 1u) != 0, sv = (mask >> v & 1u) != 0;
      Rat gadget_best;
      bool gadget_have = false;
      for (int bx = 0; bx < 2; ++bx)
        for (int by = 0; by < 2; ++by) {
          Rat cost = cb4_penalty(w2, su, sv, true, bx != 0) + cb4_penalty(w2, su, sv, false, by != 0);
          if (bx == 0) cost += 2 * w2;  // pin (s, x) cut
          if (by == 1) cost += 2 * w2;  // pin (t, y) cut
          if (!gadget_have || cost < gadget_best) {
            gadget_have = true;
            gadget_best = cost;
          }
        }
      value += gadget_best;
    }
    if (!have || value < best) {
      have = true;
      best = value;
    }
  }
  return have ? best : Rat(0);
}

// ---- deterministic random generators ----

inline Rat random_positive_rat(std::mt19937_64& rng, int max_num = 30, int max_den = 10) {
  std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
  return rat_of(num(rng), den(rng));
}

inline SplittingVector random_splitting_vector(std::mt19937_64& rng, int q) {
  std::vector<Rat> w{Rat(0)};
  for (int i = 0; i < q; ++i) w.push_back(random_positive_rat(rng));
  int r = 2 * q + static_cast<int>(rng() % 2);
  return SplittingVector(r, std::move(w));
}

// Random submodular vector via a nonnegative combination of min(i, b) basis
// functions; at least one coefficient is positive.
inline SplittingVector random_submodular_vector(std::mt19937_64& rng, int r) {
  int q = r / 2;
  std::vector<Rat> lambda;
  bool any = false;
  for (int b = 1; b <= q; ++b) {
    if (rng() % 3 == 0 && (any || b < q)) {
      lambda.push_back(Rat(0));
    } else {
      lambda.push_back(random_positive_rat(rng, 12, 6));
      any = true;
    }
  }
  if (!any) lambda[0] = 1;
  std::vector<Rat> w;
  for (int i = 0; i <= q; ++i) {
    Rat wi = 0;
    for (int b = 1; b <= q; ++b) wi += lambda[static_cast<size_t>(b - 1)] * std::min(i, b);
    w.push_back(wi);
  }
  return SplittingVector(r, std::move(w));
}

inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int r, int hyperedge_count,
                                    int edge_count) {
  std::uniform_int_distribution<int> node(0, n - 1);
  std::vector<Hyperedge> hyperedges;
  for (int i = 0; i < hyperedge_count; ++i) {
    std::set<int> nodes;
    while (static_cast<int>(nodes.size()) < r) nodes.insert(node(rng));
    hyperedges.push_back({std::vector<int>(nodes.begin(), nodes.end()), random_positive_rat(rng, 8, 4)});
  }
  std::vector<PairwiseEdge> edges;
  for (int i = 0; i < edge_count; ++i) {
    int u = node(rng), v = node(rng);
    while (v == u) v = node(rng);
    edges.push_back({u, v, random_positive_rat(rng, 8, 4)});
  }
  return Hypergraph(n, 0, 1, r, std::move(hyperedges), std::move(edges));
}

inline MaxCutInstance random_connected_graph(std::mt19937_64& rng, int n, int extra_edges) {
  MaxCutInstance g;
  g.node_count = n;
  std::uniform_int_distribution<int> node(0, n - 1);
  for (int v = 1; v < n; ++v) g.edges.emplace_back(static_cast<int>(rng() % static_cast<unsigned>(v)), v);
  for (int i = 0; i < extra_edges; ++i) {
    int u = node(rng), v = node(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    bool dup = false;
    for (auto& [a, b] : g.edges)
      if (a == u && b == v) dup = true;
    if (!dup) g.edges.emplace_back(u, v);
  }
  return g;
}

inline std::vector<bool> mask_membership(const Hypergraph& h, uint32_t mask) {
  std::vector<bool> membership(static_cast<size_t>(h.node_count()), false);
  membership[static_cast<size_t>(h.s_id())] = true;
  int bit = 0;
  for (int v = 0; v < h.node_count(); ++v) {
    if (v == h.s_id() || v == h.t_id()) continue;
    membership[static_cast<size_t>(v)] = (mask >> bit++ & 1u) != 0;
  }
  return membership;
}

}  // namespace cbcut::testing
