#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cbcut/hypergraph.hpp"
#include "cbcut/projection.hpp"
#include "cbcut/simplex.hpp"

namespace cbcut {

// General symmetric splitting table over the subsets of a hyperedge:
// cost[mask] with cost[mask] == cost[full ^ mask] and cost 0 at the trivial
// splits. Bit j of mask corresponds to the j-th node of the (sorted)
// hyperedge being on the s side.
struct SplittingTable {
  int arity;
  std::vector<Rat> cost;  // size 1 << arity
};

SplittingTable cb_table(const SplittingVector& w);  // arity = w.r()
SplittingTable nae2_table();

struct LpHyperedge {
  std::vector<int> nodes;  // sorted
  Rat delta;               // scalar weight delta_e
  SplittingTable table;
};

// Basic LP relaxation: variables x_{v,s}, x_{v,t} per node and y_{e,A} per
// (hyperedge, subset); marginal-consistency rows, [0,1] boxes, per-node
// normalization and the two terminal pins.
class BasicLpModel {
 public:
  BasicLpModel(int node_count, int s_id, int t_id, std::vector<LpHyperedge> hyperedges);

  const LinearProgram& lp() const { return lp_; }
  int node_count() const { return node_count_; }
  int s_id() const { return s_id_; }
  int t_id() const { return t_id_; }
  const std::vector<LpHyperedge>& lp_hyperedges() const { return hyperedges_; }

  int var_x_s(int v) const { return 2 * v; }
  int var_x_t(int v) const { return 2 * v + 1; }
  int var_y(int e_index, unsigned mask) const;
  int var_count() const { return lp_.var_count; }
  std::string var_name(int var) const;  // "x_<v>_s", "x_<v>_t", "y_<e>_<mask>"

 private:
  int node_count_, s_id_, t_id_;
  std::vector<LpHyperedge> hyperedges_;
  std::vector<int> y_offsets_;
  LinearProgram lp_;
};

// Hyperedges get the cardinality-based table for w; pairwise edges enter as
// size-2 hyperedges with the (weighted) not-all-equal table. delta_e is the
// hyperedge/edge weight.
BasicLpModel build_basic_lp(const Hypergraph& h, const SplittingVector& w);

struct LpSolution {
  std::vector<Rat> values;  // per model variable
  Rat objective;
};

LpSolution solve_basic_lp(const BasicLpModel& model);

// Exact check of every model row; throws Error(Parameter) naming the first
// violated row.
void verify_lp_feasible(const BasicLpModel& model, const LpSolution& solution);

// Integral point induced by a cut: x_{v,s} = [v in S], y_{e,A} = [A = e cap S].
LpSolution integral_solution(const BasicLpModel& model, const std::vector<bool>& membership);

enum class GapKind { W2Small, W2Large };

struct GapInstance {
  Hypergraph h;
  SplittingVector w;
  BasicLpModel model;
  LpSolution named_point;  // the hand-built feasible fractional solution
};

// The two six-node integrality-gap instances. W2Small requires 0 < w2 < 1
// (gap 1/w2); W2Large requires w2 > 2 (gap w2/2).
GapInstance gap_instance(GapKind kind, const Rat& w2);

// Brute-force integral optimum divided by the Basic LP optimum. 0/0 counts
// as 1; LP = 0 < OPT is reported as an infinite anomaly.
Ratio integrality_gap(const Hypergraph& h, const SplittingVector& w);

// CPLEX-style LP text format with columns named x_<v>_s / x_<v>_t /
// y_<e>_<mask>. Coefficients whose denominator is not of the form 2^a 5^b are
// rounded to 17 significant digits (noted in the header comment).
void export_lp_format(const BasicLpModel& model, std::ostream& out);

}  // namespace cbcut
