#include "cbcut/simplex.hpp"

#include <algorithm>
#include <string>

#include "cbcut/error.hpp"

namespace cbcut {

namespace {

struct Tableau {
  // rows: m x (cols + 1), last column is the rhs
  std::vector<std::vector<Rat>> t;
  std::vector<Rat> zrow;  // reduced costs + (-objective) in the rhs slot
  std::vector<int> basic;  // basic column per row
  std::vector<bool> allowed;
  int cols = 0;

  int rhs() const { return cols; }

  void pivot(int prow, int pcol) {
    auto& pr = t[static_cast<size_t>(prow)];
    const Rat inv = pr[static_cast<size_t>(pcol)];
    for (auto& x : pr) x /= inv;
    for (size_t r = 0; r < t.size(); ++r) {
      if (static_cast<int>(r) == prow) continue;
      const Rat factor = t[r][static_cast<size_t>(pcol)];
      if (factor == 0) continue;
      for (size_t c = 0; c < pr.size(); ++c)
        if (pr[c] != 0) t[r][c] -= factor * pr[c];
    }
    const Rat zf = zrow[static_cast<size_t>(pcol)];
    if (zf != 0)
      for (size_t c = 0; c < pr.size(); ++c)
        if (pr[c] != 0) zrow[c] -= zf * pr[c];
    basic[static_cast<size_t>(prow)] = pcol;
  }

  // Bland: entering = lowest-index allowed column with negative reduced cost;
  // leaving = min ratio, ties to the lowest basic column index.
  // Returns {done, unbounded}.
  std::pair<bool, bool> iterate() {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (!allowed[static_cast<size_t>(j)]) continue;
      if (zrow[static_cast<size_t>(j)] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return {true, false};

    int leave = -1;
    Rat best_ratio;
    for (int i = 0; i < static_cast<int>(t.size()); ++i) {
      const Rat& a = t[static_cast<size_t>(i)][static_cast<size_t>(enter)];
      if (a <= 0) continue;
      Rat ratio = t[static_cast<size_t>(i)][static_cast<size_t>(rhs())] / a;
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basic[static_cast<size_t>(i)] < basic[static_cast<size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return {true, true};
    pivot(leave, enter);
    return {false, false};
  }
};

}  // namespace

LpResult solve_lp_exact(const LinearProgram& lp) {
  const int n = lp.var_count;
  if (static_cast<int>(lp.objective.size()) != n) fail(Errc::Parameter, "objective size mismatch");
  for (const auto& row : lp.rows)
    if (static_cast<int>(row.coeffs.size()) != n) fail(Errc::Parameter, "row size mismatch");

  // normalize to nonnegative rhs
  std::vector<LpRow> rows = lp.rows;
  for (auto& row : rows) {
    if (row.rhs < 0) {
      for (auto& c : row.coeffs) c = -c;
      row.rhs = -row.rhs;
      if (row.sense == RowSense::Le)
        row.sense = RowSense::Ge;
      else if (row.sense == RowSense::Ge)
        row.sense = RowSense::Le;
    }
  }

  const int m = static_cast<int>(rows.size());
  int slack_count = 0, artificial_count = 0;
  for (const auto& row : rows) {
    if (row.sense != RowSense::Eq) ++slack_count;
    if (row.sense != RowSense::Le) ++artificial_count;
  }
  const int cols = n + slack_count + artificial_count;
  const int art_begin = n + slack_count;

  Tableau tab;
  tab.cols = cols;
  tab.t.assign(static_cast<size_t>(m), std::vector<Rat>(static_cast<size_t>(cols + 1), Rat(0)));
  tab.basic.assign(static_cast<size_t>(m), -1);
  tab.allowed.assign(static_cast<size_t>(cols), true);

  int next_slack = n, next_art = art_begin;
  for (int i = 0; i < m; ++i) {
    auto& trow = tab.t[static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j) trow[static_cast<size_t>(j)] = rows[static_cast<size_t>(i)].coeffs[static_cast<size_t>(j)];
    trow[static_cast<size_t>(cols)] = rows[static_cast<size_t>(i)].rhs;
    switch (rows[static_cast<size_t>(i)].sense) {
      case RowSense::Le:
        trow[static_cast<size_t>(next_slack)] = 1;
        tab.basic[static_cast<size_t>(i)] = next_slack++;
        break;
      case RowSense::Ge:
        trow[static_cast<size_t>(next_slack)] = -1;
        ++next_slack;
        trow[static_cast<size_t>(next_art)] = 1;
        tab.basic[static_cast<size_t>(i)] = next_art++;
        break;
      case RowSense::Eq:
        trow[static_cast<size_t>(next_art)] = 1;
        tab.basic[static_cast<size_t>(i)] = next_art++;
        break;
    }
  }

  // phase 1: minimize the sum of artificials
  if (artificial_count > 0) {
    tab.zrow.assign(static_cast<size_t>(cols + 1), Rat(0));
    for (int j = art_begin; j < cols; ++j) tab.zrow[static_cast<size_t>(j)] = 1;
    for (int i = 0; i < m; ++i) {
      if (tab.basic[static_cast<size_t>(i)] < art_begin) continue;
      for (int c = 0; c <= cols; ++c)
        if (tab.t[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0)
          tab.zrow[static_cast<size_t>(c)] -= tab.t[static_cast<size_t>(i)][static_cast<size_t>(c)];
    }
    while (true) {
      auto [done, unbounded] = tab.iterate();
      if (unbounded) fail(Errc::Parameter, "phase-1 LP unbounded (internal error)");
      if (done) break;
    }
    if (tab.zrow[static_cast<size_t>(cols)] != 0)  // -objective != 0 means positive infeasibility
      return {LpStatus::Infeasible, Rat(0), {}};

    // drive remaining artificials out of the basis or drop redundant rows
    for (int i = static_cast<int>(tab.t.size()) - 1; i >= 0; --i) {
      if (tab.basic[static_cast<size_t>(i)] < art_begin) continue;
      int col = -1;
      for (int j = 0; j < art_begin; ++j) {
        if (tab.t[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        tab.pivot(i, col);
      } else {
        tab.t.erase(tab.t.begin() + i);
        tab.basic.erase(tab.basic.begin() + i);
      }
    }
    for (int j = art_begin; j < cols; ++j) tab.allowed[static_cast<size_t>(j)] = false;
  }

  // phase 2
  tab.zrow.assign(static_cast<size_t>(cols + 1), Rat(0));
  for (int j = 0; j < n; ++j) tab.zrow[static_cast<size_t>(j)] = lp.objective[static_cast<size_t>(j)];
  for (size_t i = 0; i < tab.t.size(); ++i) {
    const int b = tab.basic[i];
    if (b >= n) continue;  // slack cost 0
    const Rat cb = lp.objective[static_cast<size_t>(b)];
    if (cb == 0) continue;
    for (int c = 0; c <= cols; ++c)
      if (tab.t[i][static_cast<size_t>(c)] != 0) tab.zrow[static_cast<size_t>(c)] -= cb * tab.t[i][static_cast<size_t>(c)];
  }
  while (true) {
    auto [done, unbounded] = tab.iterate();
    if (unbounded) return {LpStatus::Unbounded, Rat(0), {}};
    if (done) break;
  }

  std::vector<Rat> x(static_cast<size_t>(n), Rat(0));
  for (size_t i = 0; i < tab.t.size(); ++i)
    if (tab.basic[i] < n) x[static_cast<size_t>(tab.basic[i])] = tab.t[i][static_cast<size_t>(cols)];
  Rat obj = 0;
  for (int j = 0; j < n; ++j)
    if (lp.objective[static_cast<size_t>(j)] != 0) obj += lp.objective[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
  return {LpStatus::Optimal, obj, std::move(x)};
}

bool lp_satisfies(const LinearProgram& lp, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != lp.var_count) return false;
  for (const Rat& v : x)
    if (v < 0) return false;
  for (const auto& row : lp.rows) {
    Rat lhs = 0;
    for (int j = 0; j < lp.var_count; ++j)
      if (row.coeffs[static_cast<size_t>(j)] != 0) lhs += row.coeffs[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    switch (row.sense) {
      case RowSense::Le:
        if (lhs > row.rhs) return false;
        break;
      case RowSense::Eq:
        if (lhs != row.rhs) return false;
        break;
      case RowSense::Ge:
        if (lhs < row.rhs) return false;
        break;
    }
  }
  return true;
}

Rat lp_objective_value(const LinearProgram& lp, const std::vector<Rat>& x) {
  Rat obj = 0;
  for (int j = 0; j < lp.var_count; ++j)
    if (lp.objective[static_cast<size_t>(j)] != 0) obj += lp.objective[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
  return obj;
}

}  // namespace cbcut
