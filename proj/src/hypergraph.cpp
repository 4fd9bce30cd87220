#include "cbcut/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "cbcut/error.hpp"

namespace cbcut {

Hypergraph::Hypergraph(int node_count, int s_id, int t_id, int r, std::vector<Hyperedge> hyperedges,
                       std::vector<PairwiseEdge> pairwise_edges)
    : node_count_(node_count),
      s_id_(s_id),
      t_id_(t_id),
      r_(r),
      hyperedges_(std::move(hyperedges)),
      pairwise_edges_(std::move(pairwise_edges)) {
  if (node_count_ < 2) fail(Errc::Parameter, "hypergraph needs at least the two terminals");
  if (r_ < 2) fail(Errc::Parameter, "hyperedge size r must be >= 2");
  if (s_id_ == t_id_) fail(Errc::Parameter, "s and t must be distinct");
  if (s_id_ < 0 || s_id_ >= node_count_ || t_id_ < 0 || t_id_ >= node_count_)
    fail(Errc::Parameter, "terminal index out of range");
  for (auto& e : hyperedges_) {
    if (static_cast<int>(e.nodes.size()) != r_)
      fail(Errc::Parameter, "hyperedge has " + std::to_string(e.nodes.size()) + " nodes, expected r = " +
                                std::to_string(r_));
    std::sort(e.nodes.begin(), e.nodes.end());
    if (std::adjacent_find(e.nodes.begin(), e.nodes.end()) != e.nodes.end())
      fail(Errc::Parameter, "hyperedge nodes must be distinct");
    if (e.nodes.front() < 0 || e.nodes.back() >= node_count_)
      fail(Errc::Parameter, "hyperedge node index out of range");
    if (e.weight < 0) fail(Errc::Parameter, "hyperedge weight must be nonnegative");
  }
  for (auto& e : pairwise_edges_) {
    if (e.u == e.v) fail(Errc::Parameter, "pairwise edge endpoints must be distinct");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= node_count_) fail(Errc::Parameter, "pairwise edge node index out of range");
    if (e.weight < 0) fail(Errc::Parameter, "pairwise edge weight must be nonnegative");
  }
}

SplittingVector::SplittingVector(int r, std::vector<Rat> w) : r_(r), w_(std::move(w)) {
  if (r_ < 2) fail(Errc::Parameter, "splitting vector needs r >= 2");
  if (static_cast<int>(w_.size()) != r_ / 2 + 1)
    fail(Errc::Parameter, "splitting vector for r = " + std::to_string(r_) + " needs q+1 = " +
                              std::to_string(r_ / 2 + 1) + " entries w_0..w_q, got " +
                              std::to_string(w_.size()));
  if (w_[0] != 0) fail(Errc::Parameter, "w_0 must be 0");
  for (const Rat& x : w_)
    if (x < 0) fail(Errc::Parameter, "splitting penalties must be nonnegative");
}

const Rat& SplittingVector::penalty(int in_count) const {
  int small = std::min(in_count, r_ - in_count);
  if (small < 0 || small > q()) fail(Errc::Parameter, "intersection size out of range");
  return w_[static_cast<size_t>(small)];
}

Rat evaluate_cut(const Hypergraph& h, const SplittingVector& w, const std::vector<bool>& membership) {
  if (w.r() != h.r()) fail(Errc::ArityMismatch, "splitting vector r does not match hypergraph r");
  if (static_cast<int>(membership.size()) != h.node_count())
    fail(Errc::Parameter, "membership size does not match node count");
  if (!membership[static_cast<size_t>(h.s_id())] || membership[static_cast<size_t>(h.t_id())])
    fail(Errc::TerminalPlacement, "s must lie on the source side and t on the sink side");

  Rat total = 0;
  for (const auto& e : h.hyperedges()) {
    int in = 0;
    for (int v : e.nodes) in += membership[static_cast<size_t>(v)] ? 1 : 0;
    const Rat& p = w.penalty(in);
    if (p != 0) total += p * e.weight;
  }
  for (const auto& e : h.pairwise_edges())
    if (membership[static_cast<size_t>(e.u)] != membership[static_cast<size_t>(e.v)]) total += e.weight;
  return total;
}

Hypergraph embed_edges_as_hyperedges(const Hypergraph& h, const SplittingVector& w) {
  if (w.r() != h.r()) fail(Errc::ArityMismatch, "splitting vector r does not match hypergraph r");
  if (h.pairwise_edges().empty()) return h;
  if (w[1] == 0) fail(Errc::EmbeddingImpossible, "cannot scale edge weights by 1/w_1 when w_1 = 0");

  std::vector<Hyperedge> hyperedges = h.hyperedges();
  int next = h.node_count();
  for (const auto& e : h.pairwise_edges()) {
    Hyperedge he;
    he.nodes = {e.u, e.v};
    for (int k = 0; k < h.r() - 2; ++k) he.nodes.push_back(next++);
    he.weight = e.weight / w[1];
    hyperedges.push_back(std::move(he));
  }
  return Hypergraph(next, h.s_id(), h.t_id(), h.r(), std::move(hyperedges), {});
}

}  // namespace cbcut
