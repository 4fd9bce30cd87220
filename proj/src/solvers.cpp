#include "cbcut/solvers.hpp"

#include <algorithm>
#include <string>

#include "cbcut/error.hpp"
#include "cbcut/maxflow.hpp"

namespace cbcut {

CutSolution brute_force_min_cut(const Hypergraph& h, const SplittingVector& w) {
  if (w.r() != h.r()) fail(Errc::ArityMismatch, "splitting vector r does not match hypergraph r");
  const int free_count = h.free_node_count();
  if (free_count > 24) fail(Errc::SizeLimit, "brute force limited to 24 non-terminal nodes");

  std::vector<int> free_nodes;
  for (int v = 0; v < h.node_count(); ++v)
    if (v != h.s_id() && v != h.t_id()) free_nodes.push_back(v);

  // per hyperedge: terminal contribution + mask over free nodes
  struct EdgeMask {
    uint32_t mask = 0;
    int base = 0;
    const Rat* weight;
  };
  std::vector<int> free_rank(static_cast<size_t>(h.node_count()), -1);
  for (size_t i = 0; i < free_nodes.size(); ++i) free_rank[static_cast<size_t>(free_nodes[i])] = static_cast<int>(i);

  std::vector<EdgeMask> hyper;
  for (const auto& e : h.hyperedges()) {
    EdgeMask em;
    em.weight = &e.weight;
    for (int v : e.nodes) {
      if (v == h.s_id())
        ++em.base;
      else if (v != h.t_id())
        em.mask |= uint32_t{1} << free_rank[static_cast<size_t>(v)];
    }
    hyper.push_back(em);
  }
  struct PairMask {
    int u_rank, v_rank;  // -1 terminal t side, -2 terminal s side
    const Rat* weight;
  };
  auto rank_of = [&](int v) {
    if (v == h.s_id()) return -2;
    if (v == h.t_id()) return -1;
    return free_rank[static_cast<size_t>(v)];
  };
  std::vector<PairMask> pairs;
  for (const auto& e : h.pairwise_edges()) pairs.push_back({rank_of(e.u), rank_of(e.v), &e.weight});

  auto side = [](uint32_t mask, int rank) {
    if (rank == -2) return true;   // s
    if (rank == -1) return false;  // t
    return (mask >> rank & 1u) != 0;
  };

  bool have_best = false;
  Rat best_value;
  uint32_t best_mask = 0;
  const uint32_t total = free_count >= 32 ? 0 : (uint32_t{1} << free_count);
  for (uint32_t mask = 0;; ++mask) {
    Rat value = 0;
    for (const auto& em : hyper) {
      int in = em.base + __builtin_popcount(mask & em.mask);
      const Rat& p = w.penalty(in);
      if (p != 0) value += p * *em.weight;
    }
    for (const auto& pm : pairs)
      if (side(mask, pm.u_rank) != side(mask, pm.v_rank)) value += *pm.weight;

    if (!have_best || value < best_value) {
      have_best = true;
      best_value = value;
      best_mask = mask;
    } else if (value == best_value) {
      // lexicographically smallest membership vector over node order; free
      // node ranks are already in ascending node order
      for (size_t i = 0; i < free_nodes.size(); ++i) {
        bool cur = (mask >> i & 1u) != 0, old = (best_mask >> i & 1u) != 0;
        if (cur != old) {
          if (!cur) best_mask = mask;
          break;
        }
      }
    }
    if (mask + 1 == total || (total == 0 && mask == UINT32_MAX)) break;
  }

  CutSolution sol;
  sol.membership.assign(static_cast<size_t>(h.node_count()), false);
  sol.membership[static_cast<size_t>(h.s_id())] = true;
  for (size_t i = 0; i < free_nodes.size(); ++i)
    sol.membership[static_cast<size_t>(free_nodes[i])] = (best_mask >> i & 1u) != 0;
  sol.value = best_value;
  return sol;
}

std::vector<Rat> concave_decomposition(const SplittingVector& w_hat) {
  if (classify(w_hat).tag != RegimeTag::Submodular)
    fail(Errc::Regime, "concave decomposition requires a submodular splitting vector");
  const int q = w_hat.q();
  std::vector<Rat> lambda(static_cast<size_t>(q) + 1, Rat(0));  // lambda[1..q]
  for (int b = 1; b < q; ++b)
    lambda[static_cast<size_t>(b)] = (w_hat[b] - w_hat[b - 1]) - (w_hat[b + 1] - w_hat[b]);
  lambda[static_cast<size_t>(q)] = w_hat[q] - w_hat[q - 1];
  return std::vector<Rat>(lambda.begin() + 1, lambda.end());
}

ReductionGraph build_reduction_graph(const Hypergraph& h, const SplittingVector& w_hat) {
  if (w_hat.r() != h.r()) fail(Errc::ArityMismatch, "splitting vector r does not match hypergraph r");
  std::vector<Rat> lambda = concave_decomposition(w_hat);  // throws Regime if not submodular

  ReductionGraph g;
  g.original_count = h.node_count();
  g.source = h.s_id();
  g.sink = h.t_id();
  int next = h.node_count();

  for (size_t ei = 0; ei < h.hyperedges().size(); ++ei) {
    const auto& e = h.hyperedges()[ei];
    if (e.weight == 0) continue;
    for (int b = 1; b <= w_hat.q(); ++b) {
      const Rat& lb = lambda[static_cast<size_t>(b - 1)];
      if (lb == 0) continue;
      const Rat unit = e.weight * lb;
      int in_node = next++, out_node = next++;
      for (int v : e.nodes) g.arcs.push_back({v, in_node, unit});
      g.arcs.push_back({in_node, out_node, unit * b});
      for (int v : e.nodes) g.arcs.push_back({out_node, v, unit});
      g.gadgets.push_back({static_cast<int>(ei), b, in_node, out_node});
    }
  }
  for (const auto& e : h.pairwise_edges()) {
    if (e.weight == 0) continue;
    g.arcs.push_back({e.u, e.v, e.weight});
    g.arcs.push_back({e.v, e.u, e.weight});
  }
  g.node_count = next;
  return g;
}

CutSolution min_cut_via_flow(const ReductionGraph& g) {
  FlowNetwork net(g.node_count);
  for (const auto& a : g.arcs) net.add_arc(a.tail, a.head, a.cap);
  Rat flow = net.max_flow(g.source, g.sink);
  const auto& side = net.source_side();
  CutSolution sol;
  sol.membership.assign(side.begin(), side.begin() + g.original_count);
  sol.value = flow;
  return sol;
}

std::pair<CutSolution, SolveReport> solve(const Hypergraph& h, const SplittingVector& w, SolveMode mode) {
  Regime regime = classify(w);
  SolveReport report;
  report.regime = regime.tag;

  auto degenerate_solution = [&] {
    std::vector<bool> membership(static_cast<size_t>(h.node_count()), false);
    membership[static_cast<size_t>(h.s_id())] = true;
    Rat value = evaluate_cut(h, w, membership);
    return CutSolution{std::move(membership), std::move(value)};
  };
  auto flow_solution = [&](const SplittingVector& wv) {
    CutSolution cut = min_cut_via_flow(build_reduction_graph(h, wv));
    cut.value = evaluate_cut(h, wv, cut.membership);  // equal to the flow value
    return cut;
  };

  switch (mode) {
    case SolveMode::Brute: {
      report.method = "brute";
      return {brute_force_min_cut(h, w), report};
    }
    case SolveMode::Flow: {
      if (regime.tag != RegimeTag::Submodular)
        fail(Errc::Regime, "flow mode requires a submodular splitting vector");
      report.method = "flow";
      return {flow_solution(w), report};
    }
    case SolveMode::Approx: {
      ProjectionResult proj = plc_project(w);  // infinite-ratio error when some w_i = 0
      CutSolution cut = flow_solution(proj.w_hat);
      report.method = "approx";
      report.approximate = true;
      report.rho = proj.rho;
      report.projected_value = cut.value;
      report.w_hat = proj.w_hat;
      cut.value = evaluate_cut(h, w, cut.membership);
      return {std::move(cut), report};
    }
    case SolveMode::Auto: {
      if (regime.tag == RegimeTag::Degenerate) {
        report.method = "degenerate";
        return {degenerate_solution(), report};
      }
      if (regime.tag == RegimeTag::Submodular) {
        report.method = "flow";
        return {flow_solution(w), report};
      }
      return solve(h, w, SolveMode::Approx);
    }
  }
  fail(Errc::Parameter, "unknown solve mode");
}

}  // namespace cbcut
