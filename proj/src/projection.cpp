#include "cbcut/projection.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <thread>

#include "cbcut/error.hpp"
#include "cbcut/simplex.hpp"

namespace cbcut {

Ratio approx_ratio(const SplittingVector& w, const SplittingVector& w_hat) {
  if (w.q() != w_hat.q()) fail(Errc::ArityMismatch, "splitting vectors differ in q");
  Rat best = 1;
  bool infinite = false;
  for (int i = 1; i <= w.q(); ++i) {
    if (w_hat[i] < w[i]) fail(Errc::DominationViolation, "w_hat must dominate w componentwise");
    if (w[i] == 0) {
      if (w_hat[i] > 0) infinite = true;  // x/0; 0/0 counts as 1
      continue;
    }
    Rat ratio = w_hat[i] / w[i];
    if (ratio > best) best = ratio;
  }
  return infinite ? Ratio::inf() : Ratio::of(best);
}

PlcCover interpolate_cover(const SplittingVector& w_hat) {
  PlcCover cover;
  cover.ordinates = w_hat.values();
  for (int l = 1; l <= w_hat.q(); ++l) cover.slopes.push_back(w_hat[l] - w_hat[l - 1]);
  for (size_t l = 0; l < cover.slopes.size(); ++l) {
    if (cover.slopes[l] < 0) fail(Errc::Parameter, "cover must be nondecreasing");
    if (l > 0 && cover.slopes[l] > cover.slopes[l - 1])
      fail(Errc::Parameter, "cover slopes must be nonincreasing");
  }
  return cover;
}

const char* projection_method_name(ProjectionMethod m) {
  switch (m) {
    case ProjectionMethod::Plc: return "plc";
    case ProjectionMethod::L1: return "l1";
    case ProjectionMethod::L2: return "l2";
    case ProjectionMethod::Linf: return "linf";
  }
  return "?";
}

namespace {

void require_positive_interior(const SplittingVector& w) {
  for (int i = 1; i <= w.q(); ++i)
    if (w[i] == 0)
      fail(Errc::InfiniteRatio, "w_" + std::to_string(i) +
                                    " = 0: no dominating submodular vector has a finite ratio");
}

ProjectionResult identity_result(const SplittingVector& w, ProjectionMethod method) {
  return {w, Rat(1), method, Rat(1)};
}

// c * w_prime with the smallest c such that c * w_prime >= w.
ProjectionResult scale_and_certify(const SplittingVector& w, const std::vector<Rat>& w_prime,
                                   ProjectionMethod method) {
  Rat c = 1;
  for (int i = 1; i <= w.q(); ++i) {
    const Rat& p = w_prime[static_cast<size_t>(i - 1)];
    if (p == 0) {
      if (w[i] > 0) fail(Errc::InfiniteRatio, "projected vector vanishes where w is positive");
      continue;
    }
    Rat need = w[i] / p;
    if (need > c) c = need;
  }
  std::vector<Rat> vals{Rat(0)};
  for (int i = 1; i <= w.q(); ++i) vals.push_back(c * w_prime[static_cast<size_t>(i - 1)]);
  SplittingVector w_hat(w.r(), std::move(vals));
  Ratio rho = approx_ratio(w, w_hat);
  return {std::move(w_hat), rho.value, method, c};
}

// Half-spaces a . z <= b over z = (w'_2, .., w'_q) describing the submodular
// region sliced at w'_1 = w1.
struct HalfSpaces {
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
};

HalfSpaces slice_constraints(int q, const Rat& w1) {
  const int d = q - 1;
  HalfSpaces hs;
  auto row = [&](std::vector<std::pair<int, Rat>> entries, Rat rhs) {
    std::vector<Rat> a(static_cast<size_t>(d), Rat(0));
    for (auto& [idx, coeff] : entries) a[static_cast<size_t>(idx)] = coeff;
    hs.a.push_back(std::move(a));
    hs.b.push_back(std::move(rhs));
  };
  row({{0, Rat(1)}}, 2 * w1);                       // 2w'_1 >= w'_2
  if (q >= 3) row({{0, Rat(-2)}, {1, Rat(1)}}, -w1);  // 2w'_2 >= w'_1 + w'_3
  for (int i = 3; i <= q - 1; ++i)                  // 2w'_i >= w'_{i-1} + w'_{i+1}
    row({{i - 3, Rat(1)}, {i - 2, Rat(-2)}, {i - 1, Rat(1)}}, Rat(0));
  row({{0, Rat(-1)}}, -w1);                         // w'_2 >= w'_1
  for (int i = 2; i <= q - 1; ++i)                  // w'_{i+1} >= w'_i
    row({{i - 2, Rat(1)}, {i - 1, Rat(-1)}}, Rat(0));
  return hs;
}

std::vector<Rat> solve_norm_lp(const SplittingVector& w, bool linf) {
  const int q = w.q(), d = q - 1;
  const int dist_count = linf ? 1 : d;
  LinearProgram lp;
  lp.var_count = d + dist_count;
  lp.objective.assign(static_cast<size_t>(lp.var_count), Rat(0));
  for (int k = 0; k < dist_count; ++k) lp.objective[static_cast<size_t>(d + k)] = 1;

  auto dist_var = [&](int k) { return linf ? d : d + k; };
  for (int k = 0; k < d; ++k) {
    LpRow up{std::vector<Rat>(static_cast<size_t>(lp.var_count), Rat(0)), RowSense::Ge, w[k + 2]};
    up.coeffs[static_cast<size_t>(k)] = 1;
    up.coeffs[static_cast<size_t>(dist_var(k))] = 1;
    lp.rows.push_back(std::move(up));
    LpRow down{std::vector<Rat>(static_cast<size_t>(lp.var_count), Rat(0)), RowSense::Ge, -w[k + 2]};
    down.coeffs[static_cast<size_t>(k)] = -1;
    down.coeffs[static_cast<size_t>(dist_var(k))] = 1;
    lp.rows.push_back(std::move(down));
  }
  HalfSpaces hs = slice_constraints(q, w[1]);
  for (size_t r = 0; r < hs.a.size(); ++r) {
    LpRow row{std::vector<Rat>(static_cast<size_t>(lp.var_count), Rat(0)), RowSense::Le, hs.b[r]};
    for (int k = 0; k < d; ++k) row.coeffs[static_cast<size_t>(k)] = hs.a[r][static_cast<size_t>(k)];
    lp.rows.push_back(std::move(row));
  }

  LpResult res = solve_lp_exact(lp);
  if (res.status != LpStatus::Optimal) fail(Errc::Parameter, "norm projection LP did not solve");
  return std::vector<Rat>(res.solution.begin(), res.solution.begin() + d);
}

// Continued-fraction rational approximation with bounded denominator.
Rat rat_from_double(double x) {
  const double bound = 1e12;
  bool neg = x < 0;
  if (neg) x = -x;
  mpz_class h0(0), h1(1), k0(1), k1(0);  // convergents
  double frac = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 1e17) break;
    mpz_class a(static_cast<unsigned long>(fl));
    mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2.get_d() > bound) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  Rat r(h1, k1 == 0 ? mpz_class(1) : k1);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

// Exact Euclidean projection of (w_2..w_q) onto the slice polytope. Dykstra
// in doubles identifies the active face; the projection onto that face is
// then recovered exactly from the KKT system. Falls back to rationalizing
// the iterate and repairing feasibility with an l1 least-move LP.
std::vector<Rat> solve_l2_projection(const SplittingVector& w) {
  const int q = w.q(), d = q - 1;
  HalfSpaces hs = slice_constraints(q, w[1]);
  const size_t m = hs.a.size();

  std::vector<std::vector<double>> ad(m, std::vector<double>(static_cast<size_t>(d)));
  std::vector<double> bd(m), norm2(m, 0.0);
  for (size_t r = 0; r < m; ++r) {
    for (int k = 0; k < d; ++k) {
      ad[r][static_cast<size_t>(k)] = rat_double(hs.a[r][static_cast<size_t>(k)]);
      norm2[r] += ad[r][static_cast<size_t>(k)] * ad[r][static_cast<size_t>(k)];
    }
    bd[r] = rat_double(hs.b[r]);
  }

  std::vector<double> z(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) z[static_cast<size_t>(k)] = rat_double(w[k + 2]);
  std::vector<std::vector<double>> corr(m, std::vector<double>(static_cast<size_t>(d), 0.0));

  const double tol = 1e-9;
  for (int cycle = 0; cycle < 100000; ++cycle) {
    double moved = 0.0;
    for (size_t r = 0; r < m; ++r) {
      std::vector<double> y(static_cast<size_t>(d));
      for (int k = 0; k < d; ++k) y[static_cast<size_t>(k)] = z[static_cast<size_t>(k)] + corr[r][static_cast<size_t>(k)];
      double resid = -bd[r];
      for (int k = 0; k < d; ++k) resid += ad[r][static_cast<size_t>(k)] * y[static_cast<size_t>(k)];
      std::vector<double> znew = y;
      if (resid > 0) {
        double step = resid / norm2[r];
        for (int k = 0; k < d; ++k) znew[static_cast<size_t>(k)] -= step * ad[r][static_cast<size_t>(k)];
      }
      for (int k = 0; k < d; ++k) {
        corr[r][static_cast<size_t>(k)] = y[static_cast<size_t>(k)] - znew[static_cast<size_t>(k)];
        moved = std::max(moved, std::fabs(znew[static_cast<size_t>(k)] - z[static_cast<size_t>(k)]));
        z[static_cast<size_t>(k)] = znew[static_cast<size_t>(k)];
      }
    }
    if (moved < tol) break;
  }

  // candidate active rows
  std::vector<size_t> near_active;
  for (size_t r = 0; r < m; ++r) {
    double resid = -bd[r];
    for (int k = 0; k < d; ++k) resid += ad[r][static_cast<size_t>(k)] * z[static_cast<size_t>(k)];
    if (std::fabs(resid) <= 1e-6) near_active.push_back(r);
  }

  std::vector<Rat> target;
  for (int k = 0; k < d; ++k) target.push_back(w[k + 2]);

  auto feasible = [&](const std::vector<Rat>& x) {
    for (size_t r = 0; r < m; ++r) {
      Rat lhs = 0;
      for (int k = 0; k < d; ++k)
        if (hs.a[r][static_cast<size_t>(k)] != 0) lhs += hs.a[r][static_cast<size_t>(k)] * x[static_cast<size_t>(k)];
      if (lhs > hs.b[r]) return false;
    }
    return true;
  };

  if (near_active.size() <= 12) {
    // try KKT on every subset of the near-active rows; the true projection's
    // active set is among them when Dykstra converged
    const size_t subsets = size_t{1} << near_active.size();
    for (size_t mask = 0; mask < subsets; ++mask) {
      std::vector<size_t> act;
      for (size_t j = 0; j < near_active.size(); ++j)
        if (mask & (size_t{1} << j)) act.push_back(near_active[j]);
      const size_t na = act.size();
      if (na > static_cast<size_t>(d)) continue;

      // Gram system: sum_k mu_k (a_j . a_k) = a_j . target - b_j
      std::vector<std::vector<Rat>> g(na, std::vector<Rat>(na + 1, Rat(0)));
      for (size_t j = 0; j < na; ++j) {
        for (size_t k = 0; k < na; ++k)
          for (int c = 0; c < d; ++c)
            g[j][k] += hs.a[act[j]][static_cast<size_t>(c)] * hs.a[act[k]][static_cast<size_t>(c)];
        Rat rhs = -hs.b[act[j]];
        for (int c = 0; c < d; ++c) rhs += hs.a[act[j]][static_cast<size_t>(c)] * target[static_cast<size_t>(c)];
        g[j][na] = rhs;
      }
      // Gaussian elimination
      bool singular = false;
      for (size_t col = 0; col < na && !singular; ++col) {
        size_t piv = col;
        while (piv < na && g[piv][col] == 0) ++piv;
        if (piv == na) {
          singular = true;
          break;
        }
        std::swap(g[col], g[piv]);
        for (size_t r2 = 0; r2 < na; ++r2) {
          if (r2 == col || g[r2][col] == 0) continue;
          Rat f = g[r2][col] / g[col][col];
          for (size_t c2 = col; c2 <= na; ++c2) g[r2][c2] -= f * g[col][c2];
        }
      }
      if (singular) continue;
      std::vector<Rat> mu(na);
      bool dual_ok = true;
      for (size_t j = 0; j < na; ++j) {
        mu[j] = g[j][na] / g[j][j];
        if (mu[j] < 0) dual_ok = false;
      }
      if (!dual_ok) continue;
      std::vector<Rat> x = target;
      for (size_t j = 0; j < na; ++j)
        for (int c = 0; c < d; ++c) x[static_cast<size_t>(c)] -= mu[j] * hs.a[act[j]][static_cast<size_t>(c)];
      if (feasible(x)) return x;  // KKT point of a convex program: the projection
    }
  }

  // fallback: rationalize the iterate, then the least l1 move into the polytope
  std::vector<Rat> zr;
  for (int k = 0; k < d; ++k) zr.push_back(rat_from_double(z[static_cast<size_t>(k)]));
  if (feasible(zr)) return zr;
  LinearProgram lp;
  lp.var_count = 2 * d;
  lp.objective.assign(static_cast<size_t>(lp.var_count), Rat(0));
  for (int k = 0; k < d; ++k) lp.objective[static_cast<size_t>(d + k)] = 1;
  for (int k = 0; k < d; ++k) {
    LpRow up{std::vector<Rat>(static_cast<size_t>(lp.var_count), Rat(0)), RowSense::Ge, zr[static_cast<size_t>(k)]};
    up.coeffs[static_cast<size_t>(k)] = 1;
    up.coeffs[static_cast<size_t>(d + k)] = 1;
    lp.rows.push_back(std::move(up));
    LpRow down{std::vector<Rat>(static_cast<size_t>(lp.var_count), Rat(0)), RowSense::Ge, -zr[static_cast<size_t>(k)]};
    down.coeffs[static_cast<size_t>(k)] = -1;
    down.coeffs[static_cast<size_t>(d + k)] = 1;
    lp.rows.push_back(std::move(down));
  }
  for (size_t r = 0; r < m; ++r) {
    LpRow row{std::vector<Rat>(static_cast<size_t>(lp.var_count), Rat(0)), RowSense::Le, hs.b[r]};
    for (int k = 0; k < d; ++k) row.coeffs[static_cast<size_t>(k)] = hs.a[r][static_cast<size_t>(k)];
    lp.rows.push_back(std::move(row));
  }
  LpResult res = solve_lp_exact(lp);
  if (res.status != LpStatus::Optimal) fail(Errc::Parameter, "l2 feasibility repair LP did not solve");
  return std::vector<Rat>(res.solution.begin(), res.solution.begin() + d);
}

}  // namespace

ProjectionResult plc_project(const SplittingVector& w) {
  require_positive_interior(w);
  if (classify(w).tag != RegimeTag::NonSubmodularHard) return identity_result(w, ProjectionMethod::Plc);

  const int q = w.q();
  std::vector<Rat> what(static_cast<size_t>(q) + 1, Rat(0));
  int t = 0;
  while (t < q) {
    int istar = -1;
    Rat best;
    for (int i = t + 1; i <= q; ++i) {
      Rat slope = (w[i] - w[t]) / (i - t);
      if (istar < 0 || slope >= best) {  // ties resolved to the largest index
        istar = i;
        best = slope;
      }
    }
    if (best <= 0) {  // flat line to the end
      for (int i = t + 1; i <= q; ++i) what[static_cast<size_t>(i)] = w[t];
      break;
    }
    for (int i = t + 1; i <= istar; ++i) what[static_cast<size_t>(i)] = w[t] + best * (i - t);
    t = istar;
  }

  SplittingVector w_hat(w.r(), std::move(what));
  Ratio rho = approx_ratio(w, w_hat);
  return {std::move(w_hat), rho.value, ProjectionMethod::Plc, Rat(1)};
}

MinMaxLpResult minmax_lp_oracle(const SplittingVector& w) {
  require_positive_interior(w);
  const int q = w.q();
  LinearProgram lp;
  lp.var_count = q + 1;  // w_hat_1..w_hat_q, kappa
  lp.objective.assign(static_cast<size_t>(lp.var_count), Rat(0));
  lp.objective[static_cast<size_t>(q)] = 1;
  auto blank = [&] { return std::vector<Rat>(static_cast<size_t>(lp.var_count), Rat(0)); };

  for (int i = 1; i <= q; ++i) {  // kappa * w_i - w_hat_i >= 0
    LpRow row{blank(), RowSense::Ge, Rat(0)};
    row.coeffs[static_cast<size_t>(q)] = w[i];
    row.coeffs[static_cast<size_t>(i - 1)] = -1;
    lp.rows.push_back(std::move(row));
  }
  if (q >= 2) {  // concavity at 1, using w_hat_0 = 0
    LpRow row{blank(), RowSense::Ge, Rat(0)};
    row.coeffs[0] = 2;
    row.coeffs[1] = -1;
    lp.rows.push_back(std::move(row));
  }
  for (int i = 2; i <= q - 1; ++i) {
    LpRow row{blank(), RowSense::Ge, Rat(0)};
    row.coeffs[static_cast<size_t>(i - 2)] = -1;
    row.coeffs[static_cast<size_t>(i - 1)] = 2;
    row.coeffs[static_cast<size_t>(i)] = -1;
    lp.rows.push_back(std::move(row));
  }
  for (int i = 1; i <= q - 1; ++i) {  // monotone
    LpRow row{blank(), RowSense::Ge, Rat(0)};
    row.coeffs[static_cast<size_t>(i)] = 1;
    row.coeffs[static_cast<size_t>(i - 1)] = -1;
    lp.rows.push_back(std::move(row));
  }
  for (int i = 1; i <= q; ++i) {  // domination
    LpRow row{blank(), RowSense::Ge, w[i]};
    row.coeffs[static_cast<size_t>(i - 1)] = 1;
    lp.rows.push_back(std::move(row));
  }

  LpResult res = solve_lp_exact(lp);
  if (res.status != LpStatus::Optimal) fail(Errc::Parameter, "min-max ratio LP did not solve");
  std::vector<Rat> vals{Rat(0)};
  for (int i = 0; i < q; ++i) vals.push_back(res.solution[static_cast<size_t>(i)]);
  return {res.solution[static_cast<size_t>(q)], SplittingVector(w.r(), std::move(vals))};
}

ProjectionResult norm_project(const SplittingVector& w, ProjectionMethod method) {
  if (method == ProjectionMethod::Plc) fail(Errc::Parameter, "norm_project expects l1, l2 or linf");
  require_positive_interior(w);
  if (classify(w).tag != RegimeTag::NonSubmodularHard) return identity_result(w, method);

  const int q = w.q();
  std::vector<Rat> z;  // w'_2..w'_q
  switch (method) {
    case ProjectionMethod::L1: z = solve_norm_lp(w, /*linf=*/false); break;
    case ProjectionMethod::Linf: z = solve_norm_lp(w, /*linf=*/true); break;
    case ProjectionMethod::L2: z = solve_l2_projection(w); break;
    default: break;
  }
  std::vector<Rat> w_prime{w[1]};
  for (int i = 2; i <= q; ++i) w_prime.push_back(z[static_cast<size_t>(i - 2)]);
  return scale_and_certify(w, w_prime, method);
}

std::vector<Rat> grid_points(const Rat& start, const Rat& stop, const Rat& step) {
  if (step <= 0) fail(Errc::Parameter, "grid step must be positive");
  if (stop < start) fail(Errc::Parameter, "grid stop before start");
  std::vector<Rat> points;
  for (Rat p = start; p <= stop; p += step) {
    points.push_back(p);
    if (points.size() > 100000) fail(Errc::SizeLimit, "grid too fine");
  }
  return points;
}

std::vector<Rat> grid_linspace(const Rat& start, const Rat& stop, int count) {
  if (count < 1) fail(Errc::Parameter, "grid needs at least one point");
  if (count == 1) return {start};
  std::vector<Rat> points;
  Rat span = stop - start;
  for (int k = 0; k < count; ++k) points.push_back(start + span * k / (count - 1));
  return points;
}

HeatmapResult compute_heatmap(const HeatmapRequest& request) {
  if (request.r != 6 && request.r != 7)
    fail(Errc::Parameter, "heatmaps are defined for r in {6, 7} (q = 3)");
  if (request.methods.empty()) fail(Errc::Parameter, "no projection methods requested");
  for (const Rat& v : request.w2_values)
    if (v < 0) fail(Errc::Parameter, "grid bounds must be nonnegative");
  for (const Rat& v : request.w3_values)
    if (v < 0) fail(Errc::Parameter, "grid bounds must be nonnegative");

  const size_t n2 = request.w2_values.size(), n3 = request.w3_values.size();
  const size_t cells = n2 * n3;
  HeatmapResult out;
  out.request = request;
  out.rho.assign(request.methods.size(), std::vector<Ratio>(cells, Ratio::of(Rat(0))));

  auto worker = [&](size_t begin, size_t end) {
    for (size_t cell = begin; cell < end; ++cell) {
      const Rat& w2 = request.w2_values[cell / n3];
      const Rat& w3 = request.w3_values[cell % n3];
      if (w2 == 0 || w3 == 0) {
        for (size_t mi = 0; mi < request.methods.size(); ++mi) out.rho[mi][cell] = Ratio::inf();
        continue;
      }
      SplittingVector w(request.r, {Rat(0), Rat(1), w2, w3});
      const bool hard = classify(w).tag == RegimeTag::NonSubmodularHard;
      for (size_t mi = 0; mi < request.methods.size(); ++mi) {
        if (!hard) {
          out.rho[mi][cell] = Ratio::of(Rat(1));
          continue;
        }
        ProjectionMethod m = request.methods[mi];
        ProjectionResult res = m == ProjectionMethod::Plc ? plc_project(w) : norm_project(w, m);
        out.rho[mi][cell] = Ratio::of(res.rho);
      }
    }
  };

  int threads = request.threads > 0 ? request.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min<int>(threads, static_cast<int>(cells) > 0 ? static_cast<int>(cells) : 1);
  if (threads == 1 || cells == 0) {
    worker(0, cells);
  } else {
    std::vector<std::thread> pool;
    const size_t chunk = (cells + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
    for (int i = 0; i < threads; ++i) {
      size_t begin = static_cast<size_t>(i) * chunk;
      size_t end = std::min(cells, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

namespace {

// shortest exact decimal when the denominator is 2^a 5^b, else "p/q"
std::string rat_grid_label(const Rat& x) {
  mpz_class den = x.get_den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return rat_str(x);
  int k = std::max(twos, fives);
  if (k == 0) return x.get_num().get_str();
  // numerator * 10^k / denominator is integral by construction
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(k));
  mpz_class digits = x.get_num() * p10 / x.get_den();
  bool neg = digits < 0;
  mpz_class mag = abs(digits);
  std::string body = mag.get_str();
  while (static_cast<int>(body.size()) <= k) body.insert(body.begin(), '0');
  body.insert(body.size() - static_cast<size_t>(k), ".");
  while (body.back() == '0') body.pop_back();
  if (body.back() == '.') body.pop_back();
  return neg ? "-" + body : body;
}

std::string ratio_label(const Ratio& r) { return r.finite ? rat_decimal(r.value, 12) : "inf"; }

}  // namespace

void write_heatmap_csv(const HeatmapResult& hm, size_t method_index, std::ostream& out) {
  const auto& req = hm.request;
  const size_t n3 = req.w3_values.size();
  out << "w2,w3,method,rho\n";
  const char* name = projection_method_name(req.methods[method_index]);
  for (size_t i2 = 0; i2 < req.w2_values.size(); ++i2)
    for (size_t i3 = 0; i3 < n3; ++i3)
      out << rat_grid_label(req.w2_values[i2]) << ',' << rat_grid_label(req.w3_values[i3]) << ','
          << name << ',' << ratio_label(hm.rho[method_index][i2 * n3 + i3]) << '\n';
}

void write_diff_csv(const HeatmapResult& hm, size_t a, size_t b, std::ostream& out) {
  const auto& req = hm.request;
  const size_t n3 = req.w3_values.size();
  std::string name = std::string(projection_method_name(req.methods[a])) + "-" +
                     projection_method_name(req.methods[b]);
  out << "w2,w3,method,rho\n";
  for (size_t i2 = 0; i2 < req.w2_values.size(); ++i2)
    for (size_t i3 = 0; i3 < n3; ++i3) {
      const Ratio& ra = hm.rho[a][i2 * n3 + i3];
      const Ratio& rb = hm.rho[b][i2 * n3 + i3];
      out << rat_grid_label(req.w2_values[i2]) << ',' << rat_grid_label(req.w3_values[i3]) << ','
          << name << ',';
      if (!ra.finite || !rb.finite)
        out << "inf";
      else
        out << rat_decimal(ra.value - rb.value, 12);
      out << '\n';
    }
}

void write_heatmap_ppm(const HeatmapResult& hm, size_t method_index, std::ostream& out) {
  const auto& req = hm.request;
  const size_t n2 = req.w2_values.size(), n3 = req.w3_values.size();
  out << "P6\n" << n2 << ' ' << n3 << "\n255\n";
  for (size_t row = 0; row < n3; ++row) {
    const size_t i3 = n3 - 1 - row;  // top row = largest w3
    for (size_t i2 = 0; i2 < n2; ++i2) {
      const Ratio& r = hm.rho[method_index][i2 * n3 + i3];
      unsigned char rgb[3];
      if (!r.finite) {
        rgb[0] = 220;
        rgb[1] = 30;
        rgb[2] = 30;
      } else {
        double t = (rat_double(r.value) - 1.0) / 9.0;
        t = std::clamp(t, 0.0, 1.0);
        rgb[0] = static_cast<unsigned char>(255 - std::lround(205 * t));
        rgb[1] = static_cast<unsigned char>(255 - std::lround(230 * t));
        rgb[2] = static_cast<unsigned char>(255 - std::lround(115 * t));
      }
      out.write(reinterpret_cast<const char*>(rgb), 3);
    }
  }
}

}  // namespace cbcut
