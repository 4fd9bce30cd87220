#include "cbcut/vcsp.hpp"

#include <algorithm>
#include <string>

#include "cbcut/error.hpp"

namespace cbcut {

int cost_arity(CostKind kind, int r) {
  switch (kind) {
    case CostKind::PhiR: return r;
    case CostKind::PhiS: return r - 1;
    case CostKind::PhiT: return r - 1;
    case CostKind::PhiSt: return r - 2;
    case CostKind::Nae2: return 2;
  }
  fail(Errc::Parameter, "unknown cost kind");
}

const char* cost_kind_name(CostKind kind) {
  switch (kind) {
    case CostKind::PhiR: return "phi_r";
    case CostKind::PhiS: return "phi_s";
    case CostKind::PhiT: return "phi_t";
    case CostKind::PhiSt: return "phi_st";
    case CostKind::Nae2: return "nae2";
  }
  return "?";
}

Rat cost_phi(CostKind kind, const SplittingVector& w, const std::vector<int>& bits) {
  if (static_cast<int>(bits.size()) != cost_arity(kind, w.r()))
    fail(Errc::ArityMismatch, std::string("tuple length does not match the arity of ") + cost_kind_name(kind));
  for (int b : bits)
    if (b != 0 && b != 1) fail(Errc::Parameter, "tuple entries must be 0 or 1");

  if (kind == CostKind::Nae2) return bits[0] != bits[1] ? Rat(1) : Rat(0);

  int ones = 0;
  for (int b : bits) ones += b;
  if (kind == CostKind::PhiS || kind == CostKind::PhiSt) ones += 1;  // s fixed to 1
  // PhiT / PhiSt append a 0, which adds nothing
  return w.penalty(ones);
}

VcspInstance::VcspInstance(int variable_count, int r, std::vector<Constraint> constraints)
    : variable_count_(variable_count), r_(r), constraints_(std::move(constraints)) {
  if (variable_count_ < 0) fail(Errc::Parameter, "negative variable count");
  if (r_ < 2) fail(Errc::Parameter, "r must be >= 2");
  for (auto& c : constraints_) {
    if (static_cast<int>(c.scope.size()) != cost_arity(c.kind, r_))
      fail(Errc::ArityMismatch, std::string("scope size does not match the arity of ") + cost_kind_name(c.kind));
    std::sort(c.scope.begin(), c.scope.end());
    if (std::adjacent_find(c.scope.begin(), c.scope.end()) != c.scope.end())
      fail(Errc::Parameter, "constraint scope variables must be distinct");
    if (!c.scope.empty() && (c.scope.front() < 0 || c.scope.back() >= variable_count_))
      fail(Errc::Parameter, "constraint scope variable out of range");
    if (c.weight < 0) fail(Errc::Parameter, "constraint weight must be nonnegative");
  }
}

Rat vcsp_cost(const VcspInstance& p, const SplittingVector& w, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != p.variable_count())
    fail(Errc::Parameter, "assignment size does not match variable count");
  Rat total = 0;
  std::vector<int> bits;
  for (const auto& c : p.constraints()) {
    bits.clear();
    for (int v : c.scope) bits.push_back(assignment[static_cast<size_t>(v)]);
    Rat phi = cost_phi(c.kind, w, bits);
    if (phi != 0) total += phi * c.weight;
  }
  return total;
}

namespace {
// rank of each non-terminal node among non-terminal nodes, -1 for terminals
std::vector<int> variable_ranks(const Hypergraph& h) {
  std::vector<int> rank(static_cast<size_t>(h.node_count()), -1);
  int next = 0;
  for (int v = 0; v < h.node_count(); ++v)
    if (v != h.s_id() && v != h.t_id()) rank[static_cast<size_t>(v)] = next++;
  return rank;
}
}  // namespace

VcspInstance to_vcsp(const Hypergraph& h, const SplittingVector& w) {
  if (w.r() != h.r()) fail(Errc::ArityMismatch, "splitting vector r does not match hypergraph r");
  std::vector<int> rank = variable_ranks(h);
  std::vector<Constraint> constraints;
  constraints.reserve(h.hyperedges().size() + h.pairwise_edges().size());

  for (const auto& e : h.hyperedges()) {
    bool has_s = std::binary_search(e.nodes.begin(), e.nodes.end(), h.s_id());
    bool has_t = std::binary_search(e.nodes.begin(), e.nodes.end(), h.t_id());
    Constraint c;
    c.kind = has_s ? (has_t ? CostKind::PhiSt : CostKind::PhiS)
                   : (has_t ? CostKind::PhiT : CostKind::PhiR);
    for (int v : e.nodes)
      if (v != h.s_id() && v != h.t_id()) c.scope.push_back(rank[static_cast<size_t>(v)]);
    c.weight = e.weight;
    constraints.push_back(std::move(c));
  }
  for (const auto& e : h.pairwise_edges()) {
    if (e.u == h.s_id() || e.u == h.t_id() || e.v == h.s_id() || e.v == h.t_id())
      fail(Errc::UnsupportedLanguage,
           "pairwise edges incident to a terminal have no binary cost function in the language");
    constraints.push_back(
        {{rank[static_cast<size_t>(e.u)], rank[static_cast<size_t>(e.v)]}, CostKind::Nae2, e.weight});
  }
  return VcspInstance(h.free_node_count(), h.r(), std::move(constraints));
}

Hypergraph from_vcsp(const VcspInstance& p, int r, const SplittingVector& w) {
  if (r != p.r()) fail(Errc::ArityMismatch, "r does not match the instance");
  if (w.r() != r) fail(Errc::ArityMismatch, "splitting vector r does not match");
  const int s = p.variable_count(), t = p.variable_count() + 1;
  std::vector<Hyperedge> hyperedges;
  std::vector<PairwiseEdge> edges;
  for (const auto& c : p.constraints()) {
    if (c.kind == CostKind::Nae2) {
      edges.push_back({c.scope[0], c.scope[1], c.weight});
      continue;
    }
    Hyperedge e;
    e.nodes = c.scope;
    if (c.kind == CostKind::PhiS || c.kind == CostKind::PhiSt) e.nodes.push_back(s);
    if (c.kind == CostKind::PhiT || c.kind == CostKind::PhiSt) e.nodes.push_back(t);
    e.weight = c.weight;
    hyperedges.push_back(std::move(e));
  }
  return Hypergraph(p.variable_count() + 2, s, t, r, std::move(hyperedges), std::move(edges));
}

std::vector<bool> assignment_to_membership(const Hypergraph& h, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != h.free_node_count())
    fail(Errc::Parameter, "assignment size does not match non-terminal node count");
  std::vector<bool> membership(static_cast<size_t>(h.node_count()), false);
  membership[static_cast<size_t>(h.s_id())] = true;
  int next = 0;
  for (int v = 0; v < h.node_count(); ++v)
    if (v != h.s_id() && v != h.t_id()) membership[static_cast<size_t>(v)] = assignment[static_cast<size_t>(next++)] != 0;
  return membership;
}

namespace {

// lexicographic enumeration of {0,1}^m, first entry most significant
bool next_tuple(std::vector<int>& bits) {
  for (int i = static_cast<int>(bits.size()) - 1; i >= 0; --i) {
    if (bits[static_cast<size_t>(i)] == 0) {
      bits[static_cast<size_t>(i)] = 1;
      std::fill(bits.begin() + i + 1, bits.end(), 0);
      return true;
    }
  }
  return false;
}

}  // namespace

MultimorphismReport check_multimorphism(MultimorphismKind f, CostKind kind, const SplittingVector& w) {
  if (w.r() > 8) fail(Errc::SizeLimit, "exhaustive multimorphism checks require r <= 8");
  const int m = cost_arity(kind, w.r());

  if (f == MultimorphismKind::AllZero || f == MultimorphismKind::AllOne) {
    std::vector<int> image(static_cast<size_t>(m), f == MultimorphismKind::AllOne ? 1 : 0);
    const Rat lhs = cost_phi(kind, w, image);
    std::vector<int> x(static_cast<size_t>(m), 0);
    do {
      if (lhs > cost_phi(kind, w, x)) return {false, {x}};
    } while (next_tuple(x));
    return {true, {}};
  }

  // <min,max>: width-2 tuple stacks, i.e. submodularity over vector pairs
  std::vector<int> a(static_cast<size_t>(m), 0);
  do {
    std::vector<int> b(static_cast<size_t>(m), 0);
    do {
      std::vector<int> meet(static_cast<size_t>(m)), join(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i) {
        meet[static_cast<size_t>(i)] = std::min(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)]);
        join[static_cast<size_t>(i)] = std::max(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)]);
      }
      if (cost_phi(kind, w, meet) + cost_phi(kind, w, join) >
          cost_phi(kind, w, a) + cost_phi(kind, w, b))
        return {false, {a, b}};
    } while (next_tuple(b));
  } while (next_tuple(a));
  return {true, {}};
}

}  // namespace cbcut
