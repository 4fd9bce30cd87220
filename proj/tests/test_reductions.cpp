#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cbcut/error.hpp"
#include "cbcut/projection.hpp"
#include "cbcut/reductions.hpp"
#include "cbcut/solvers.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cbcut;
using namespace cbcut::testing;

namespace {
MaxCutInstance triangle() { return {3, {{0, 1}, {1, 2}, {0, 2}}}; }
}  // namespace

TEST_CASE("exhaustive MaxCut") {
  CHECK(max_cut_exhaustive(triangle()) == 2);
  CHECK(max_cut_exhaustive({1, {}}) == 0);
  CHECK(max_cut_exhaustive({4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}) == 4);  // C4 is bipartite
  CHECK_THROWS_AS(max_cut_exhaustive({30, {}}), Error);
  CHECK_THROWS_AS(max_cut_exhaustive({3, {{1, 1}}}), Error);  // self-loop
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    MaxCutInstance g = random_connected_graph(rng, 6, 4);
    CHECK(max_cut_exhaustive(g) == reference_max_cut(g));
  }
}

TEST_CASE("reduce_maxcut validates the regime range") {
  CHECK_THROWS_AS(reduce_maxcut(triangle(), MaxCutRegime::W2LessThan1, Rat(1)), Error);
  CHECK_THROWS_AS(reduce_maxcut(triangle(), MaxCutRegime::W2GreaterThan2, Rat(2)), Error);
}

TEST_CASE("triangle, w2 = 1/2: min cut is k* w2 + (m - k*) = 2") {
  Rat w2 = rat_of(1, 2);
  Hypergraph h = reduce_maxcut(triangle(), MaxCutRegime::W2LessThan1, w2);
  CHECK(h.node_count() == 5);
  CHECK(h.hyperedges().size() == 3);
  SplittingVector w(4, {Rat(0), Rat(1), w2});
  CHECK(brute_force_min_cut(h, w).value == Rat(2));  // 2 * 1/2 + 1
}

TEST_CASE("single edge, w2 = 3: min cut is 2k* + (m - k*) w2 = 2") {
  MaxCutInstance g{2, {{0, 1}}};
  Hypergraph h = reduce_maxcut(g, MaxCutRegime::W2GreaterThan2, Rat(3));
  CHECK(h.node_count() == 6);   // u, v, s, t, x, y
  CHECK(h.hyperedges().size() == 2);
  CHECK(h.pairwise_edges().size() == 2);
  SplittingVector w(4, {Rat(0), Rat(1), Rat(3)});
  CHECK(brute_force_min_cut(h, w).value == Rat(2));
  CHECK(reference_reduced_min_cut_gt2(g, Rat(3)) == Rat(2));
}

TEST_CASE("empty graph reduces to the empty hypergraph with min cut 0") {
  MaxCutInstance g{4, {}};
  for (auto [regime, w2] : {std::pair{MaxCutRegime::W2LessThan1, rat_of(1, 2)},
                            std::pair{MaxCutRegime::W2GreaterThan2, Rat(3)}}) {
    Hypergraph h = reduce_maxcut(g, regime, w2);
    SplittingVector w(4, {Rat(0), Rat(1), w2});
    CHECK(brute_force_min_cut(h, w).value == Rat(0));
  }
}

TEST_CASE("MaxCut correspondence on small graphs, both regimes") {
  std::mt19937_64 rng(89);
  Rat small = rat_of(1, 2), large = Rat(3);
  for (int trial = 0; trial < 12; ++trial) {
    MaxCutInstance g = random_connected_graph(rng, 4 + static_cast<int>(rng() % 3), 3);
    int kstar = max_cut_exhaustive(g);
    int m = static_cast<int>(g.edges.size());

    Hypergraph lt = reduce_maxcut(g, MaxCutRegime::W2LessThan1, small);
    SplittingVector w_lt(4, {Rat(0), Rat(1), small});
    CHECK(brute_force_min_cut(lt, w_lt).value == kstar * small + (m - kstar));

    CHECK(reference_reduced_min_cut_gt2(g, large) == 2 * kstar + (m - kstar) * large);
    if (g.node_count + 2 * m <= 14) {
      Hypergraph gt = reduce_maxcut(g, MaxCutRegime::W2GreaterThan2, large);
      SplittingVector w_gt(4, {Rat(0), Rat(1), large});
      CHECK(brute_force_min_cut(gt, w_gt).value == 2 * kstar + (m - kstar) * large);
    }
  }
}

TEST_CASE("no optimal cut severs a pinning edge in the w2 > 2 gadget") {
  std::mt19937_64 rng(97);
  Rat w2 = Rat(3);
  for (int trial = 0; trial < 5; ++trial) {
    MaxCutInstance g = random_connected_graph(rng, 4, 2);
    if (g.node_count + 2 * static_cast<int>(g.edges.size()) > 14) continue;
    Hypergraph h = reduce_maxcut(g, MaxCutRegime::W2GreaterThan2, w2);
    SplittingVector w(4, {Rat(0), Rat(1), w2});
    CutSolution best = brute_force_min_cut(h, w);
    for (const auto& e : h.pairwise_edges())
      CHECK(best.membership[static_cast<size_t>(e.u)] == best.membership[static_cast<size_t>(e.v)]);
  }
}

TEST_CASE("tight instance realizes the per-index ratio exactly") {
  // r = 4, i = 2: ratio w_hat_2 / w_2 = 2
  SplittingVector w(4, {Rat(0), Rat(1), rat_of(1, 2)});
  SplittingVector w_hat(4, {Rat(0), Rat(1), Rat(1)});
  TightInstance tight = tight_instance(4, 2, w);
  CHECK(evaluate_cut(tight.h, w, tight.forced_membership) == rat_of(1, 2));
  CHECK(brute_force_min_cut(tight.h, w).value == rat_of(1, 2));
  CHECK(brute_force_min_cut(tight.h, w_hat).value == Rat(1));
  CHECK(brute_force_min_cut(tight.h, w_hat).value ==
        approx_ratio(w, w_hat).value * brute_force_min_cut(tight.h, w).value);
}

TEST_CASE("tight instance with i = 1 forces S = {s}") {
  SplittingVector w(4, {Rat(0), Rat(2), Rat(3)});
  TightInstance tight = tight_instance(4, 1, w);
  CutSolution best = brute_force_min_cut(tight.h, w);
  CHECK(best.value == Rat(2));  // w_1
  CHECK(best.membership == tight.forced_membership);
}

TEST_CASE("tight instance ratios across indices for r = 6") {
  SplittingVector w(6, {Rat(0), Rat(1), Rat(2), Rat(5)});
  ProjectionResult proj = plc_project(w);
  for (int i = 1; i <= 3; ++i) {
    TightInstance tight = tight_instance(6, i, w);
    Rat opt_w = brute_force_min_cut(tight.h, w).value;
    Rat opt_hat = brute_force_min_cut(tight.h, proj.w_hat).value;
    CHECK(opt_w == w[i]);
    CHECK(opt_hat == proj.w_hat[i]);
    CHECK(opt_hat / opt_w == proj.w_hat[i] / w[i]);
  }
  // at the argmax index the optimal-cover ratio is achieved with equality
  int argmax = 1;
  for (int i = 2; i <= 3; ++i)
    if (proj.w_hat[i] / w[i] > proj.w_hat[argmax] / w[argmax]) argmax = i;
  TightInstance tight = tight_instance(6, argmax, w);
  CHECK(brute_force_min_cut(tight.h, proj.w_hat).value ==
        proj.rho * brute_force_min_cut(tight.h, w).value);
}

TEST_CASE("tight instance validates the index") {
  SplittingVector w(4, {Rat(0), Rat(1), Rat(1)});
  CHECK_THROWS_AS(tight_instance(4, 0, w), Error);
  CHECK_THROWS_AS(tight_instance(4, 3, w), Error);
}

TEST_CASE("apx lower bound formulas") {
  CHECK(*apx_lower_bound(Rat(3)) == rat_of(86, 85));
  CHECK(*apx_lower_bound(rat_of(1, 2)) == rat_of(52, 51));
  CHECK(!apx_lower_bound(Rat(2)).has_value());
  CHECK(!apx_lower_bound(Rat(1)).has_value());
  CHECK(!apx_lower_bound(rat_of(3, 2)).has_value());
  CHECK(apx_lower_bound(rat_of(99, 100)).has_value());
  CHECK_THROWS_AS(apx_lower_bound(Rat(0)), Error);
  CHECK_THROWS_AS(apx_lower_bound(Rat(-1)), Error);
}

TEST_CASE("apx lower bound sits below the projection ratio outside the submodular interval") {
  std::vector<Rat> sweep;
  for (int k = 1; k <= 19; ++k) sweep.push_back(rat_of(k, 20));          // (0, 1)
  for (int k = 5; k <= 40; k += 3) sweep.push_back(rat_of(k, 2));        // (2, 20]
  sweep.push_back(rat_of(1, 10));
  sweep.push_back(Rat(10));
  for (const Rat& w2 : sweep) {
    SplittingVector w(4, {Rat(0), Rat(1), w2});
    CHECK(*apx_lower_bound(w2) < plc_project(w).rho);
  }
}

TEST_CASE("a maximum cut always reaches half the edges") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    MaxCutInstance g = random_connected_graph(rng, 5 + static_cast<int>(rng() % 3), 4);
    CHECK(2 * max_cut_exhaustive(g) >= static_cast<int>(g.edges.size()));
  }
}
