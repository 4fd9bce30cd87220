// Command-line front end: classify, project, solve, heatmap, gap,
// reduce-maxcut, lp, apx-bound. All outputs are deterministic functions of
// the flags; exact rationals are printed as p/q.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "cbcut/basic_lp.hpp"
#include "cbcut/error.hpp"
#include "cbcut/io.hpp"
#include "cbcut/projection.hpp"
#include "cbcut/reductions.hpp"
#include "cbcut/solvers.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace cbcut;

namespace {

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) values.push_back(rat_parse(token));
  return values;
}

SplittingVector parse_w(const std::string& text, int r_flag) {
  std::vector<Rat> values = parse_rat_list(text);
  if (values.size() < 2) fail(Errc::Parameter, "--w expects w_0..w_q");
  int q = static_cast<int>(values.size()) - 1;
  int r = r_flag > 0 ? r_flag : 2 * q;
  return SplittingVector(r, std::move(values));
}

std::vector<Rat> parse_grid(const std::string& text) {
  // start:stop:step
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ':')) parts.push_back(token);
  if (parts.size() != 3) fail(Errc::Parameter, "grid spec must be start:stop:step");
  return grid_points(rat_parse(parts[0]), rat_parse(parts[1]), rat_parse(parts[2]));
}

ProjectionMethod method_from_name(const std::string& name) {
  if (name == "plc") return ProjectionMethod::Plc;
  if (name == "l1") return ProjectionMethod::L1;
  if (name == "l2") return ProjectionMethod::L2;
  if (name == "linf") return ProjectionMethod::Linf;
  fail(Errc::Parameter, "unknown method '" + name + "'");
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Parameter, "cannot open '" + path + "'");
  return parse_instance(in);
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(Errc::Parameter, "cannot create directory '" + dir + "'");
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
  std::ofstream out(fs::path(dir) / name, std::ios::binary);
  if (!out) fail(Errc::Parameter, "cannot write '" + name + "' in '" + dir + "'");
  return out;
}

int run_classify(const std::string& w_text, int r_flag) {
  Regime regime = classify(parse_w(w_text, r_flag));
  switch (regime.tag) {
    case RegimeTag::Submodular: std::cout << "Submodular\n"; return 0;
    case RegimeTag::Degenerate: std::cout << "Degenerate\n"; return 1;
    case RegimeTag::NonSubmodularHard:
      std::cout << "NonSubmodularHard (" << regime.witness << ")\n";
      return 2;
  }
  return 3;
}

int run_project(const std::string& w_text, int r_flag, const std::string& method_name, bool json) {
  SplittingVector w = parse_w(w_text, r_flag);
  ProjectionMethod method = method_from_name(method_name);
  ProjectionResult res =
      method == ProjectionMethod::Plc ? plc_project(w) : norm_project(w, method);
  if (json) {
    nlohmann::json doc;
    doc["method"] = projection_method_name(res.method);
    std::vector<std::string> vals;
    for (const Rat& x : res.w_hat.values()) vals.push_back(rat_str(x));
    doc["w_hat"] = vals;
    doc["rho"] = rat_str(res.rho);
    doc["scale"] = rat_str(res.scale_factor);
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "method " << projection_method_name(res.method) << "\n";
    std::cout << "w_hat";
    for (const Rat& x : res.w_hat.values()) std::cout << ' ' << rat_str(x);
    std::cout << "\n";
    std::cout << "rho " << rat_str(res.rho) << "\n";
    std::cout << "scale " << rat_str(res.scale_factor) << "\n";
  }
  return 0;
}

SolveMode mode_from_name(const std::string& name) {
  if (name == "auto") return SolveMode::Auto;
  if (name == "brute") return SolveMode::Brute;
  if (name == "flow") return SolveMode::Flow;
  if (name == "approx") return SolveMode::Approx;
  fail(Errc::Parameter, "unknown mode '" + name + "'");
}

Instance generate_instance(const std::string& gen_spec, uint64_t seed, const std::string& w_text,
                           int r_flag) {
  std::vector<Rat> dims = parse_rat_list(gen_spec);
  if (dims.size() != 3) fail(Errc::Parameter, "--gen expects n,hyperedges,edges");
  int n = static_cast<int>(rat_double(dims[0]));
  int hyperedge_count = static_cast<int>(rat_double(dims[1]));
  int edge_count = static_cast<int>(rat_double(dims[2]));
  SplittingVector w = parse_w(w_text, r_flag);
  if (n < w.r() + 2) fail(Errc::Parameter, "need at least r + 2 nodes");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> node(0, n - 1), num(1, 10), den(1, 6);
  auto rnd_weight = [&] { return rat_of(num(rng), den(rng)); };
  std::vector<Hyperedge> hyperedges;
  for (int i = 0; i < hyperedge_count; ++i) {
    std::set<int> nodes;
    while (static_cast<int>(nodes.size()) < w.r()) nodes.insert(node(rng));
    hyperedges.push_back({std::vector<int>(nodes.begin(), nodes.end()), rnd_weight()});
  }
  std::vector<PairwiseEdge> edges;
  for (int i = 0; i < edge_count; ++i) {
    int u = node(rng), v = node(rng);
    while (v == u) v = node(rng);
    edges.push_back({u, v, rnd_weight()});
  }
  return {Hypergraph(n, 0, 1, w.r(), std::move(hyperedges), std::move(edges)), std::move(w)};
}

int run_solve(const std::string& input, const std::string& gen_spec, uint64_t seed,
              const std::string& w_text, int r_flag, const std::string& mode_name,
              const std::string& out_dir) {
  Instance inst = !gen_spec.empty() ? generate_instance(gen_spec, seed, w_text, r_flag)
                                    : load_instance(input);
  auto [cut, report] = solve(inst.h, inst.w, mode_from_name(mode_name));
  write_solution(cut, report, std::cout);
  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    auto sol = open_out(out_dir, "solution.txt");
    write_solution(cut, report, sol);
    auto instance_file = open_out(out_dir, "instance.txt");
    write_instance(inst, instance_file);
  }
  return 0;
}

int run_heatmap(int r, const std::string& w2_spec, const std::string& w3_spec,
                const std::string& methods_csv, const std::string& out_dir, int threads) {
  HeatmapRequest req;
  req.r = r;
  req.w2_values = parse_grid(w2_spec);
  req.w3_values = parse_grid(w3_spec);
  req.threads = threads;
  std::string token;
  std::istringstream in(methods_csv);
  while (std::getline(in, token, ',')) req.methods.push_back(method_from_name(token));
  HeatmapResult hm = compute_heatmap(req);

  ensure_dir(out_dir);
  int files = 0;
  for (size_t mi = 0; mi < req.methods.size(); ++mi) {
    const char* name = projection_method_name(req.methods[mi]);
    auto csv = open_out(out_dir, std::string("heatmap_") + name + ".csv");
    write_heatmap_csv(hm, mi, csv);
    auto ppm = open_out(out_dir, std::string("heatmap_") + name + ".ppm");
    write_heatmap_ppm(hm, mi, ppm);
    files += 2;
  }
  // difference grids for every ordered pair, later method minus earlier
  for (size_t a = 0; a < req.methods.size(); ++a)
    for (size_t b = a + 1; b < req.methods.size(); ++b) {
      std::string name = std::string("diff_") + projection_method_name(req.methods[b]) +
                         "_minus_" + projection_method_name(req.methods[a]) + ".csv";
      auto csv = open_out(out_dir, name);
      write_diff_csv(hm, b, a, csv);
      ++files;
    }
  std::cout << "wrote " << files << " files to " << out_dir << " ("
            << req.w2_values.size() << "x" << req.w3_values.size() << " grid)\n";
  return 0;
}

int run_gap(const std::string& kind_name, const std::string& w2_text, const std::string& out_dir) {
  GapKind kind;
  if (kind_name == "w2_small")
    kind = GapKind::W2Small;
  else if (kind_name == "w2_large")
    kind = GapKind::W2Large;
  else
    fail(Errc::Parameter, "kind must be w2_small or w2_large");
  GapInstance gap = gap_instance(kind, rat_parse(w2_text));

  verify_lp_feasible(gap.model, gap.named_point);
  Rat opt = brute_force_min_cut(gap.h, gap.w).value;
  LpSolution lp = solve_basic_lp(gap.model);
  Ratio g = integrality_gap(gap.h, gap.w);
  std::cout << "OPT=" << rat_str(opt) << " LP=" << rat_str(lp.objective)
            << " gap=" << (g.finite ? rat_str(g.value) : "inf") << "\n";
  std::cout << "named_point_objective=" << rat_str(gap.named_point.objective)
            << (lp.objective == gap.named_point.objective ? " (optimal)" : " (suboptimal)") << "\n";

  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    auto inst = open_out(out_dir, "instance.txt");
    write_instance({gap.h, gap.w}, inst);
    auto model = open_out(out_dir, "model.lp");
    export_lp_format(gap.model, model);
    auto named = open_out(out_dir, "named_point.txt");
    for (int v = 0; v < gap.model.var_count(); ++v)
      named << gap.model.var_name(v) << ' '
            << rat_str(gap.named_point.values[static_cast<size_t>(v)]) << "\n";
  }
  return 0;
}

int run_reduce_maxcut(const std::string& input, const std::string& regime_name,
                      const std::string& w2_text, const std::string& out_dir) {
  std::ifstream in(input);
  if (!in) fail(Errc::Parameter, "cannot open '" + input + "'");
  MaxCutInstance g = parse_maxcut(in);
  Rat w2 = rat_parse(w2_text);
  MaxCutRegime regime;
  if (regime_name == "w2_lt_1")
    regime = MaxCutRegime::W2LessThan1;
  else if (regime_name == "w2_gt_2")
    regime = MaxCutRegime::W2GreaterThan2;
  else
    fail(Errc::Parameter, "regime must be w2_lt_1 or w2_gt_2");
  Hypergraph h = reduce_maxcut(g, regime, w2);
  Instance inst{h, SplittingVector(4, {Rat(0), Rat(1), w2})};
  if (out_dir.empty()) {
    write_instance(inst, std::cout);
  } else {
    ensure_dir(out_dir);
    auto out = open_out(out_dir, "instance.txt");
    write_instance(inst, out);
    std::cout << "wrote instance.txt to " << out_dir << "\n";
  }
  return 0;
}

int run_lp(const std::string& input, const std::string& out_dir) {
  Instance inst = load_instance(input);
  BasicLpModel model = build_basic_lp(inst.h, inst.w);
  LpSolution lp = solve_basic_lp(model);
  std::cout << "LP=" << rat_str(lp.objective) << "\n";
  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    auto mf = open_out(out_dir, "model.lp");
    export_lp_format(model, mf);
    auto sol = open_out(out_dir, "solution.txt");
    sol << "objective " << rat_str(lp.objective) << "\n";
    for (int v = 0; v < model.var_count(); ++v)
      sol << model.var_name(v) << ' ' << rat_str(lp.values[static_cast<size_t>(v)]) << "\n";
  }
  return 0;
}

int run_apx_bound(const std::string& w2_text) {
  std::optional<Rat> bound = apx_lower_bound(rat_parse(w2_text));
  if (bound)
    std::cout << rat_str(*bound) << "\n";
  else
    std::cout << "none\n";
  return 0;
}

int error_exit_code(Errc code) {
  switch (code) {
    case Errc::Parse:
    case Errc::Parameter: return 3;
    case Errc::Regime: return 4;
    case Errc::SizeLimit: return 5;
    case Errc::InfiniteRatio: return 6;
    default: return 7;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum s-t cut tools for cardinality-based hypergraph objectives"};
  app.require_subcommand(1);

  std::string w_text, method_name = "plc", input, gen_spec, out_dir, mode_name = "auto";
  std::string w2_spec, w3_spec, methods_csv = "plc,l1,l2,linf", kind_name, regime_name, w2_text;
  int r_flag = 0, heat_r = 6, threads = 0;
  uint64_t seed = 1;
  bool json = false;

  auto* classify_cmd = app.add_subcommand("classify", "classify a splitting vector");
  classify_cmd->add_option("--w", w_text, "w_0..w_q, comma separated")->required();
  classify_cmd->add_option("--r", r_flag, "hyperedge size (default 2q)");

  auto* project_cmd = app.add_subcommand("project", "project onto the submodular region");
  project_cmd->add_option("--w", w_text)->required();
  project_cmd->add_option("--r", r_flag);
  project_cmd->add_option("--method", method_name, "plc|l1|l2|linf");
  project_cmd->add_flag("--json", json, "machine-readable output");

  auto* solve_cmd = app.add_subcommand("solve", "solve a cut instance file");
  solve_cmd->add_option("--input", input, "instance file");
  solve_cmd->add_option("--gen", gen_spec, "generate n,hyperedges,edges instead of reading a file");
  solve_cmd->add_option("--seed", seed, "seed for --gen");
  solve_cmd->add_option("--w", w_text, "splitting vector for --gen");
  solve_cmd->add_option("--r", r_flag);
  solve_cmd->add_option("--mode", mode_name, "auto|brute|flow|approx");
  solve_cmd->add_option("--out", out_dir, "directory for solution files");

  auto* heatmap_cmd = app.add_subcommand("heatmap", "approximation-ratio grids over (w2, w3)");
  heatmap_cmd->add_option("--r", heat_r, "6 or 7");
  heatmap_cmd->add_option("--w2", w2_spec, "grid start:stop:step")->required();
  heatmap_cmd->add_option("--w3", w3_spec, "grid start:stop:step")->required();
  heatmap_cmd->add_option("--methods", methods_csv, "comma list of plc,l1,l2,linf");
  heatmap_cmd->add_option("--out", out_dir, "output directory")->required();
  heatmap_cmd->add_option("--threads", threads, "worker threads (0 = auto)");

  auto* gap_cmd = app.add_subcommand("gap", "integrality-gap instances");
  gap_cmd->add_option("--kind", kind_name, "w2_small|w2_large")->required();
  gap_cmd->add_option("--w2", w2_text)->required();
  gap_cmd->add_option("--out", out_dir);

  auto* reduce_cmd = app.add_subcommand("reduce-maxcut", "MaxCut to 4-uniform cut gadgets");
  reduce_cmd->add_option("--input", input, "edge-list file")->required();
  reduce_cmd->add_option("--regime", regime_name, "w2_lt_1|w2_gt_2")->required();
  reduce_cmd->add_option("--w2", w2_text)->required();
  reduce_cmd->add_option("--out", out_dir);

  auto* lp_cmd = app.add_subcommand("lp", "Basic LP relaxation of an instance file");
  lp_cmd->add_option("--input", input)->required();
  lp_cmd->add_option("--out", out_dir);

  auto* apx_cmd = app.add_subcommand("apx-bound", "NP-hardness approximation floor");
  apx_cmd->add_option("--w2", w2_text)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) return run_classify(w_text, r_flag);
    if (project_cmd->parsed()) return run_project(w_text, r_flag, method_name, json);
    if (solve_cmd->parsed()) {
      if (input.empty() == gen_spec.empty())
        fail(Errc::Parameter, "solve needs exactly one of --input or --gen");
      return run_solve(input, gen_spec, seed, w_text, r_flag, mode_name, out_dir);
    }
    if (heatmap_cmd->parsed()) return run_heatmap(heat_r, w2_spec, w3_spec, methods_csv, out_dir, threads);
    if (gap_cmd->parsed()) return run_gap(kind_name, w2_text, out_dir);
    if (reduce_cmd->parsed()) return run_reduce_maxcut(input, regime_name, w2_text, out_dir);
    if (lp_cmd->parsed()) return run_lp(input, out_dir);
    if (apx_cmd->parsed()) return run_apx_bound(w2_text);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return error_exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 7;
  }
  return 3;
}
