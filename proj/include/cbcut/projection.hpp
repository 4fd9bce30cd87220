#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cbcut/hypergraph.hpp"
#include "cbcut/regime.hpp"

namespace cbcut {

// A ratio that may be +infinity (when some w_i = 0 < w_hat_i).
struct Ratio {
  bool finite;
  Rat value;  // meaningful when finite

  static Ratio of(Rat v) { return Ratio{true, std::move(v)}; }
  static Ratio inf() { return Ratio{false, Rat(0)}; }
};

// max over i in {1..q} of w_hat_i / w_i, with 0/0 = 1 and x/0 = +inf.
// Requires w_hat >= w componentwise.
Ratio approx_ratio(const SplittingVector& w, const SplittingVector& w_hat);

// Piecewise-linear concave cover sampled at the integers: ordinates f(0..q)
// with f(0) = 0, f nondecreasing, and nonincreasing segment slopes.
struct PlcCover {
  std::vector<Rat> ordinates;  // f(0..q)
  std::vector<Rat> slopes;     // m_1..m_q, m_l = f(l) - f(l-1)
};

// Interpolation of the integer samples of w_hat; throws if the samples do not
// define a valid cover.
PlcCover interpolate_cover(const SplittingVector& w_hat);

enum class ProjectionMethod { Plc, L1, L2, Linf };

const char* projection_method_name(ProjectionMethod m);

struct ProjectionResult {
  SplittingVector w_hat;    // submodular, dominates w
  Rat rho;                  // certified approximation factor
  ProjectionMethod method;
  Rat scale_factor;         // c with w_hat = c * (norm-projected point); 1 for plc
};

// Optimal projection: greedy PLC cover (steepest slope first, largest index
// among equal slopes). rho is the minimum of the min-max ratio problem over
// all dominating submodular vectors. Requires w_i > 0 for all i >= 1.
ProjectionResult plc_project(const SplittingVector& w);

// Independent check for plc_project: solves the min-max ratio problem as a
// small LP in (w_hat_1..w_hat_q, kappa) by exact simplex.
struct MinMaxLpResult {
  Rat kappa;
  SplittingVector w_hat;
};
MinMaxLpResult minmax_lp_oracle(const SplittingVector& w);

// Baselines: find w' minimizing ||w - w'|| over the submodular region with
// w'_1 pinned to w_1, then scale by the smallest c with c*w' >= w.
// l1/linf are exact LPs; l2 runs cyclic Dykstra half-space projection to
// tolerance 1e-9 in doubles and is then rationalized to a nearby exactly
// feasible point (approximate by design). Submodular input returns identity
// with rho = 1.
ProjectionResult norm_project(const SplittingVector& w, ProjectionMethod method);

// ---- heatmap grids (figures for r in {6,7}) ----

struct HeatmapRequest {
  int r;  // 6 or 7 (q = 3); w_1 is fixed to 1
  std::vector<Rat> w2_values;
  std::vector<Rat> w3_values;
  std::vector<ProjectionMethod> methods;
  int threads = 0;  // 0 = hardware concurrency
};

struct HeatmapResult {
  HeatmapRequest request;
  // rho[method_index][i2 * w3_count + i3]
  std::vector<std::vector<Ratio>> rho;
};

HeatmapResult compute_heatmap(const HeatmapRequest& request);

// Exact rational grids.
std::vector<Rat> grid_points(const Rat& start, const Rat& stop, const Rat& step);
std::vector<Rat> grid_linspace(const Rat& start, const Rat& stop, int count);

// CSV: header "w2,w3,method,rho", rho with 12 significant digits, "inf" for
// infinite cells. Rows iterate w2 ascending, then w3 ascending.
void write_heatmap_csv(const HeatmapResult& hm, size_t method_index, std::ostream& out);

// Difference grid rho[a] - rho[b]; header "w2,w3,method,rho" with method
// "<a>-<b>"; "inf" when either cell is infinite.
void write_diff_csv(const HeatmapResult& hm, size_t a, size_t b, std::ostream& out);

// Binary P6 pixmap; one pixel per cell, w3 descending top to bottom, w2
// ascending left to right. Color ramp: t = clamp((rho-1)/9, 0, 1), pixel
// (255-205t, 255-230t, 255-115t); infinite cells are (220, 30, 30).
void write_heatmap_ppm(const HeatmapResult& hm, size_t method_index, std::ostream& out);

}  // namespace cbcut
