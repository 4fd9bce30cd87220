#include "cbcut/reductions.hpp"

#include <algorithm>
#include <string>

#include "cbcut/error.hpp"

namespace cbcut {

void validate_maxcut(const MaxCutInstance& g) {
  if (g.node_count < 0) fail(Errc::Parameter, "negative node count");
  for (const auto& [u, v] : g.edges) {
    if (u == v) fail(Errc::Parameter, "self-loops are not allowed");
    if (u < 0 || v < 0 || u >= g.node_count || v >= g.node_count)
      fail(Errc::Parameter, "edge endpoint out of range");
  }
}

int max_cut_exhaustive(const MaxCutInstance& g) {
  validate_maxcut(g);
  if (g.node_count > 24) fail(Errc::SizeLimit, "exhaustive MaxCut limited to 24 nodes");
  if (g.node_count == 0) return 0;
  int best = 0;
  // node 0's side is fixed by symmetry
  const uint32_t total = uint32_t{1} << (g.node_count - 1);
  for (uint32_t mask = 0; mask < total; ++mask) {
    int cut = 0;
    for (const auto& [u, v] : g.edges) {
      bool su = u == 0 ? false : ((mask >> (u - 1)) & 1u) != 0;
      bool sv = v == 0 ? false : ((mask >> (v - 1)) & 1u) != 0;
      if (su != sv) ++cut;
    }
    best = std::max(best, cut);
  }
  return best;
}

Hypergraph reduce_maxcut(const MaxCutInstance& g, MaxCutRegime regime, const Rat& w2) {
  validate_maxcut(g);
  const int n = g.node_count;
  if (regime == MaxCutRegime::W2LessThan1) {
    if (w2 <= 0 || w2 >= 1) fail(Errc::Parameter, "regime w2_lt_1 requires 0 < w2 < 1");
    const int s = n, t = n + 1;
    std::vector<Hyperedge> hyperedges;
    for (const auto& [u, v] : g.edges) hyperedges.push_back({{u, v, s, t}, Rat(1)});
    return Hypergraph(n + 2, s, t, 4, std::move(hyperedges), {});
  }

  if (w2 <= 2) fail(Errc::Parameter, "regime w2_gt_2 requires w2 > 2");
  const int s = n, t = n + 1;
  int next = n + 2;
  std::vector<Hyperedge> hyperedges;
  std::vector<PairwiseEdge> pins;
  for (const auto& [u, v] : g.edges) {
    int x = next++, y = next++;
    hyperedges.push_back({{u, v, s, x}, Rat(1)});
    hyperedges.push_back({{u, v, t, y}, Rat(1)});
    pins.push_back({s, x, 2 * w2});
    pins.push_back({t, y, 2 * w2});
  }
  return Hypergraph(next, s, t, 4, std::move(hyperedges), std::move(pins));
}

TightInstance tight_instance(int r, int i, const SplittingVector& w) {
  if (w.r() != r) fail(Errc::ArityMismatch, "splitting vector r mismatch");
  if (i < 1 || i > w.q()) fail(Errc::Parameter, "index must lie in {1.." + std::to_string(w.q()) + "}");

  Rat max_w = 0;
  for (int j = 1; j <= w.q(); ++j) max_w = std::max(max_w, w[j]);
  const Rat pin = 10 * r * max_w;

  // nodes: u_1..u_{r-1} -> 0..r-2, s = r-1, t = r
  const int s = r - 1, t = r;
  std::vector<int> nodes{s};
  for (int j = 0; j < r - 1; ++j) nodes.push_back(j);
  std::vector<Hyperedge> hyperedges{{std::move(nodes), Rat(1)}};
  std::vector<PairwiseEdge> pins;
  for (int j = 0; j < i - 1; ++j) pins.push_back({s, j, pin});      // u_1..u_{i-1} with s
  for (int j = i - 1; j < r - 1; ++j) pins.push_back({t, j, pin});  // the rest with t

  Hypergraph h(r + 1, s, t, r, std::move(hyperedges), std::move(pins));
  std::vector<bool> forced(static_cast<size_t>(r + 1), false);
  forced[static_cast<size_t>(s)] = true;
  for (int j = 0; j < i - 1; ++j) forced[static_cast<size_t>(j)] = true;
  return {std::move(h), std::move(forced)};
}

std::optional<Rat> apx_lower_bound(const Rat& w2) {
  if (w2 <= 0) fail(Errc::Parameter, "w2 must be positive");
  if (w2 > 2) return Rat(1) + (w2 - 2) / (17 * w2 + 34);
  if (w2 < 1) return Rat(1) + (1 - w2) / (17 * (1 + w2));
  return std::nullopt;  // submodular interval
}

}  // namespace cbcut
