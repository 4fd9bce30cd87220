#pragma once

#include <vector>

#include "cbcut/rational.hpp"

namespace cbcut {

enum class RowSense { Le, Eq, Ge };

struct LpRow {
  std::vector<Rat> coeffs;  // dense, size == var_count
  RowSense sense;
  Rat rhs;
};

// minimize objective . x  subject to rows, x >= 0
struct LinearProgram {
  int var_count = 0;
  std::vector<Rat> objective;
  std::vector<LpRow> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  Rat objective;
  std::vector<Rat> solution;
};

// Dense two-phase primal simplex over exact rationals with Bland's
// anti-cycling pivot rule. Deterministic: identical input, identical output.
LpResult solve_lp_exact(const LinearProgram& lp);

// Exact feasibility check of a candidate point (including x >= 0).
bool lp_satisfies(const LinearProgram& lp, const std::vector<Rat>& x);

Rat lp_objective_value(const LinearProgram& lp, const std::vector<Rat>& x);

}  // namespace cbcut
