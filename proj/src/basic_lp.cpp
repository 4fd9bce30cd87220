#include "cbcut/basic_lp.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "cbcut/error.hpp"
#include "cbcut/solvers.hpp"

namespace cbcut {

SplittingTable cb_table(const SplittingVector& w) {
  SplittingTable table;
  table.arity = w.r();
  const unsigned size = 1u << w.r();
  table.cost.reserve(size);
  for (unsigned mask = 0; mask < size; ++mask)
    table.cost.push_back(w.penalty(__builtin_popcount(mask)));
  return table;
}

SplittingTable nae2_table() { return {2, {Rat(0), Rat(1), Rat(1), Rat(0)}}; }

BasicLpModel::BasicLpModel(int node_count, int s_id, int t_id, std::vector<LpHyperedge> hyperedges)
    : node_count_(node_count), s_id_(s_id), t_id_(t_id), hyperedges_(std::move(hyperedges)) {
  if (node_count_ < 2 || s_id_ == t_id_ || s_id_ < 0 || t_id_ < 0 || s_id_ >= node_count_ ||
      t_id_ >= node_count_)
    fail(Errc::Parameter, "invalid node/terminal configuration");

  int next_var = 2 * node_count_;
  for (auto& e : hyperedges_) {
    const int k = static_cast<int>(e.nodes.size());
    if (k < 2) fail(Errc::Parameter, "hyperedge needs at least two nodes");
    if (k > 6) fail(Errc::SizeLimit, "subset enumeration limited to hyperedges of size <= 6");
    std::sort(e.nodes.begin(), e.nodes.end());
    if (std::adjacent_find(e.nodes.begin(), e.nodes.end()) != e.nodes.end())
      fail(Errc::Parameter, "hyperedge nodes must be distinct");
    if (e.nodes.front() < 0 || e.nodes.back() >= node_count_)
      fail(Errc::Parameter, "hyperedge node out of range");
    if (e.delta < 0) fail(Errc::Parameter, "delta must be nonnegative");
    if (e.table.arity != k || e.table.cost.size() != (size_t{1} << k))
      fail(Errc::ArityMismatch, "splitting table size does not match the hyperedge");
    const unsigned full = (1u << k) - 1;
    if (e.table.cost[0] != 0 || e.table.cost[full] != 0)
      fail(Errc::Parameter, "splitting table must vanish on the trivial splits");
    for (unsigned mask = 0; mask <= full; ++mask) {
      if (e.table.cost[mask] < 0) fail(Errc::Parameter, "splitting penalties must be nonnegative");
      if (e.table.cost[mask] != e.table.cost[full ^ mask])
        fail(Errc::Parameter, "splitting table must be symmetric");
    }
    y_offsets_.push_back(next_var);
    next_var += 1 << k;
  }

  lp_.var_count = next_var;
  lp_.objective.assign(static_cast<size_t>(next_var), Rat(0));
  for (size_t ei = 0; ei < hyperedges_.size(); ++ei) {
    const auto& e = hyperedges_[ei];
    for (unsigned mask = 0; mask < e.table.cost.size(); ++mask)
      lp_.objective[static_cast<size_t>(var_y(static_cast<int>(ei), mask))] = e.delta * e.table.cost[mask];
  }

  auto blank = [&] { return std::vector<Rat>(static_cast<size_t>(next_var), Rat(0)); };
  // marginal consistency (one pair of rows per hyperedge incidence)
  for (size_t ei = 0; ei < hyperedges_.size(); ++ei) {
    const auto& e = hyperedges_[ei];
    for (size_t j = 0; j < e.nodes.size(); ++j) {
      LpRow row_s{blank(), RowSense::Eq, Rat(0)};
      row_s.coeffs[static_cast<size_t>(var_x_s(e.nodes[j]))] = 1;
      LpRow row_t{blank(), RowSense::Eq, Rat(0)};
      row_t.coeffs[static_cast<size_t>(var_x_t(e.nodes[j]))] = 1;
      for (unsigned mask = 0; mask < e.table.cost.size(); ++mask) {
        if (mask & (1u << j))
          row_s.coeffs[static_cast<size_t>(var_y(static_cast<int>(ei), mask))] = -1;
        else
          row_t.coeffs[static_cast<size_t>(var_y(static_cast<int>(ei), mask))] = -1;
      }
      lp_.rows.push_back(std::move(row_s));
      lp_.rows.push_back(std::move(row_t));
    }
  }
  // per-node normalization
  for (int v = 0; v < node_count_; ++v) {
    LpRow row{blank(), RowSense::Eq, Rat(1)};
    row.coeffs[static_cast<size_t>(var_x_s(v))] = 1;
    row.coeffs[static_cast<size_t>(var_x_t(v))] = 1;
    lp_.rows.push_back(std::move(row));
  }
  // terminal pins
  {
    LpRow pin_s{blank(), RowSense::Eq, Rat(1)};
    pin_s.coeffs[static_cast<size_t>(var_x_s(s_id_))] = 1;
    lp_.rows.push_back(std::move(pin_s));
    LpRow pin_t{blank(), RowSense::Eq, Rat(1)};
    pin_t.coeffs[static_cast<size_t>(var_x_t(t_id_))] = 1;
    lp_.rows.push_back(std::move(pin_t));
  }
  // [0,1] boxes (lower bounds are implicit in the standard form)
  for (int var = 0; var < next_var; ++var) {
    LpRow row{blank(), RowSense::Le, Rat(1)};
    row.coeffs[static_cast<size_t>(var)] = 1;
    lp_.rows.push_back(std::move(row));
  }
}

int BasicLpModel::var_y(int e_index, unsigned mask) const {
  return y_offsets_[static_cast<size_t>(e_index)] + static_cast<int>(mask);
}

std::string BasicLpModel::var_name(int var) const {
  if (var < 2 * node_count_) {
    int v = var / 2;
    return "x_" + std::to_string(v) + (var % 2 == 0 ? "_s" : "_t");
  }
  for (size_t ei = 0; ei < hyperedges_.size(); ++ei) {
    int begin = y_offsets_[ei];
    int end = begin + (1 << hyperedges_[ei].nodes.size());
    if (var >= begin && var < end)
      return "y_" + std::to_string(ei) + "_" + std::to_string(var - begin);
  }
  fail(Errc::Parameter, "variable index out of range");
}

BasicLpModel build_basic_lp(const Hypergraph& h, const SplittingVector& w) {
  if (w.r() != h.r()) fail(Errc::ArityMismatch, "splitting vector r does not match hypergraph r");
  std::vector<LpHyperedge> edges;
  SplittingTable table = cb_table(w);
  for (const auto& e : h.hyperedges()) edges.push_back({e.nodes, e.weight, table});
  for (const auto& e : h.pairwise_edges()) edges.push_back({{e.u, e.v}, e.weight, nae2_table()});
  return BasicLpModel(h.node_count(), h.s_id(), h.t_id(), std::move(edges));
}

LpSolution solve_basic_lp(const BasicLpModel& model) {
  LpResult res = solve_lp_exact(model.lp());
  if (res.status != LpStatus::Optimal) fail(Errc::Parameter, "basic LP did not solve");
  return {std::move(res.solution), std::move(res.objective)};
}

void verify_lp_feasible(const BasicLpModel& model, const LpSolution& solution) {
  const LinearProgram& lp = model.lp();
  if (solution.values.size() != static_cast<size_t>(lp.var_count))
    fail(Errc::Parameter, "solution size does not match the model");
  for (const Rat& v : solution.values)
    if (v < 0) fail(Errc::Parameter, "negative variable value");
  for (size_t r = 0; r < lp.rows.size(); ++r) {
    const auto& row = lp.rows[r];
    Rat lhs = 0;
    for (int j = 0; j < lp.var_count; ++j)
      if (row.coeffs[static_cast<size_t>(j)] != 0)
        lhs += row.coeffs[static_cast<size_t>(j)] * solution.values[static_cast<size_t>(j)];
    bool ok = row.sense == RowSense::Le ? lhs <= row.rhs
              : row.sense == RowSense::Ge ? lhs >= row.rhs
                                          : lhs == row.rhs;
    if (!ok)
      fail(Errc::Parameter, "constraint row " + std::to_string(r) + " violated: lhs = " + rat_str(lhs) +
                                ", rhs = " + rat_str(row.rhs));
  }
  Rat obj = lp_objective_value(lp, solution.values);
  if (obj != solution.objective)
    fail(Errc::Parameter, "stored objective " + rat_str(solution.objective) +
                              " does not match recomputed " + rat_str(obj));
}

LpSolution integral_solution(const BasicLpModel& model, const std::vector<bool>& membership) {
  if (static_cast<int>(membership.size()) != model.node_count())
    fail(Errc::Parameter, "membership size mismatch");
  LpSolution sol;
  sol.values.assign(static_cast<size_t>(model.var_count()), Rat(0));
  for (int v = 0; v < model.node_count(); ++v) {
    sol.values[static_cast<size_t>(model.var_x_s(v))] = membership[static_cast<size_t>(v)] ? 1 : 0;
    sol.values[static_cast<size_t>(model.var_x_t(v))] = membership[static_cast<size_t>(v)] ? 0 : 1;
  }
  for (size_t ei = 0; ei < model.lp_hyperedges().size(); ++ei) {
    const auto& e = model.lp_hyperedges()[ei];
    unsigned mask = 0;
    for (size_t j = 0; j < e.nodes.size(); ++j)
      if (membership[static_cast<size_t>(e.nodes[j])]) mask |= 1u << j;
    sol.values[static_cast<size_t>(model.var_y(static_cast<int>(ei), mask))] = 1;
  }
  sol.objective = lp_objective_value(model.lp(), sol.values);
  return sol;
}

GapInstance gap_instance(GapKind kind, const Rat& w2) {
  if (kind == GapKind::W2Small) {
    if (w2 <= 0 || w2 >= 1) fail(Errc::Parameter, "kind w2_small requires 0 < w2 < 1");
    SplittingVector w(4, {Rat(0), Rat(1), w2});
    // nodes 0..3 plus s = 4, t = 5; g = {s,t,1,2}, f = {1,2,3,4} of the figure
    std::vector<Hyperedge> hyperedges{{{0, 1, 4, 5}, Rat(1)}, {{0, 1, 2, 3}, Rat(1) / w2 - 1}};
    Hypergraph h(6, 4, 5, 4, std::move(hyperedges), {});
    BasicLpModel model = build_basic_lp(h, w);

    LpSolution named;
    named.values.assign(static_cast<size_t>(model.var_count()), Rat(0));
    const Rat half = rat_of(1, 2);
    for (int v = 0; v < 4; ++v) {
      named.values[static_cast<size_t>(model.var_x_s(v))] = half;
      named.values[static_cast<size_t>(model.var_x_t(v))] = half;
    }
    named.values[static_cast<size_t>(model.var_x_s(4))] = 1;
    named.values[static_cast<size_t>(model.var_x_t(5))] = 1;
    // g = [0,1,4,5]: y at {s,1} and {s,2} of the figure
    named.values[static_cast<size_t>(model.var_y(0, 0b0101))] = half;
    named.values[static_cast<size_t>(model.var_y(0, 0b0110))] = half;
    // f = [0,1,2,3]: y at the empty set and the full set
    named.values[static_cast<size_t>(model.var_y(1, 0))] = half;
    named.values[static_cast<size_t>(model.var_y(1, 0b1111))] = half;
    named.objective = lp_objective_value(model.lp(), named.values);
    return {std::move(h), std::move(w), std::move(model), std::move(named)};
  }

  if (w2 <= 2) fail(Errc::Parameter, "kind w2_large requires w2 > 2");
  SplittingVector w(4, {Rat(0), Rat(1), w2});
  // figure nodes 1,2,3,4 -> 0,1,2,3; g = {s,1,2,3}, f = {t,1,2,4},
  // pinning edges {s,3}, {t,4}, {1,2} of weight 2*w2
  std::vector<Hyperedge> hyperedges{{{0, 1, 2, 4}, Rat(1)}, {{0, 1, 3, 5}, Rat(1)}};
  std::vector<PairwiseEdge> edges{{2, 4, 2 * w2}, {3, 5, 2 * w2}, {0, 1, 2 * w2}};
  Hypergraph h(6, 4, 5, 4, std::move(hyperedges), std::move(edges));
  BasicLpModel model = build_basic_lp(h, w);

  LpSolution named;
  named.values.assign(static_cast<size_t>(model.var_count()), Rat(0));
  const Rat half = rat_of(1, 2);
  for (int v : {0, 1}) {
    named.values[static_cast<size_t>(model.var_x_s(v))] = half;
    named.values[static_cast<size_t>(model.var_x_t(v))] = half;
  }
  named.values[static_cast<size_t>(model.var_x_s(2))] = 1;  // figure node 3 sits with s
  named.values[static_cast<size_t>(model.var_x_t(3))] = 1;  // figure node 4 sits with t
  named.values[static_cast<size_t>(model.var_x_s(4))] = 1;
  named.values[static_cast<size_t>(model.var_x_t(5))] = 1;
  // g = [0,1,2,4]: y at {s,2,3} and {s,1,3} of the figure
  named.values[static_cast<size_t>(model.var_y(0, 0b1110))] = half;
  named.values[static_cast<size_t>(model.var_y(0, 0b1101))] = half;
  // f = [0,1,3,5]: y at {2} and {1} of the figure
  named.values[static_cast<size_t>(model.var_y(1, 0b0010))] = half;
  named.values[static_cast<size_t>(model.var_y(1, 0b0001))] = half;
  // edge {s,3}: both endpoints on the s side; edge {t,4}: both on the t side
  named.values[static_cast<size_t>(model.var_y(2, 0b11))] = 1;
  named.values[static_cast<size_t>(model.var_y(3, 0))] = 1;
  // edge {1,2}: split evenly between the two uncut placements
  named.values[static_cast<size_t>(model.var_y(4, 0b11))] = half;
  named.values[static_cast<size_t>(model.var_y(4, 0))] = half;
  named.objective = lp_objective_value(model.lp(), named.values);
  return {std::move(h), std::move(w), std::move(model), std::move(named)};
}

Ratio integrality_gap(const Hypergraph& h, const SplittingVector& w) {
  Rat opt = brute_force_min_cut(h, w).value;
  Rat lp = solve_basic_lp(build_basic_lp(h, w)).objective;
  if (lp == 0) {
    if (opt == 0) return Ratio::of(Rat(1));
    return Ratio::inf();  // anomaly: a relaxation cannot sit at 0 under a positive optimum
  }
  return Ratio::of(opt / lp);
}

namespace {
std::string lp_coeff(const Rat& x) {
  mpz_class den = x.get_den();
  while (den % 2 == 0) den /= 2;
  while (den % 5 == 0) den /= 5;
  // decimal-exact coefficients stay exact; anything else is rounded
  return rat_decimal(x, den == 1 ? 30 : 17);
}
}  // namespace

void export_lp_format(const BasicLpModel& model, std::ostream& out) {
  const LinearProgram& lp = model.lp();
  out << "\\ Basic LP relaxation export\n";
  out << "\\ coefficients with non-decimal denominators are rounded to 17 significant digits\n";
  out << "Minimize\n obj:";
  bool first = true;
  for (int j = 0; j < lp.var_count; ++j) {
    const Rat& c = lp.objective[static_cast<size_t>(j)];
    if (c == 0) continue;
    if (first)
      out << ' ' << (c < 0 ? "- " : "") << lp_coeff(abs(c));
    else
      out << (c < 0 ? " - " : " + ") << lp_coeff(abs(c));
    out << ' ' << model.var_name(j);
    first = false;
  }
  if (first) out << " 0 " << model.var_name(0);
  out << "\nSubject To\n";
  for (size_t r = 0; r < lp.rows.size(); ++r) {
    const auto& row = lp.rows[r];
    out << " r" << r << ":";
    bool lead = true;
    for (int j = 0; j < lp.var_count; ++j) {
      const Rat& c = row.coeffs[static_cast<size_t>(j)];
      if (c == 0) continue;
      if (lead)
        out << ' ' << (c < 0 ? "- " : "") << lp_coeff(abs(c));
      else
        out << (c < 0 ? " - " : " + ") << lp_coeff(abs(c));
      out << ' ' << model.var_name(j);
      lead = false;
    }
    const char* rel = row.sense == RowSense::Le ? "<=" : row.sense == RowSense::Ge ? ">=" : "=";
    out << ' ' << rel << ' ' << lp_coeff(row.rhs) << '\n';
  }
  out << "End\n";
}

}  // namespace cbcut
