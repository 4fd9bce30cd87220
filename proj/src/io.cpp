#include "cbcut/io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cbcut/error.hpp"

namespace cbcut {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    std::string token;
    while (ss >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void parse_fail(int line, const std::string& message) {
  fail(Errc::Parse, "line " + std::to_string(line) + ": " + message);
}

int parse_int(const Line& line, const std::string& token) {
  try {
    size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    parse_fail(line.number, "expected an integer, got '" + token + "'");
  }
}

Rat parse_rat(const Line& line, const std::string& token) {
  try {
    return rat_parse(token);
  } catch (const Error& e) {
    parse_fail(line.number, e.what());
  }
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::optional<int> n, r, s, t;
  std::optional<std::vector<Rat>> w;
  std::vector<Hyperedge> hyperedges;
  std::vector<PairwiseEdge> edges;
  std::vector<std::pair<int, Hyperedge>> pending_hyperedges;

  for (const Line& line : tokenize(in)) {
    const std::string& key = line.tokens[0];
    if (key == "n" || key == "r" || key == "s" || key == "t") {
      if (line.tokens.size() != 2) parse_fail(line.number, "'" + key + "' expects one integer");
      int value = parse_int(line, line.tokens[1]);
      (key == "n" ? n : key == "r" ? r : key == "s" ? s : t) = value;
    } else if (key == "w") {
      std::vector<Rat> values;
      for (size_t i = 1; i < line.tokens.size(); ++i) values.push_back(parse_rat(line, line.tokens[i]));
      if (values.empty()) parse_fail(line.number, "'w' expects w_0..w_q");
      w = std::move(values);
    } else if (key == "hyperedge") {
      if (line.tokens.size() < 3) parse_fail(line.number, "'hyperedge' expects node ids and a weight");
      Hyperedge e;
      for (size_t i = 1; i + 1 < line.tokens.size(); ++i) e.nodes.push_back(parse_int(line, line.tokens[i]));
      e.weight = parse_rat(line, line.tokens.back());
      pending_hyperedges.emplace_back(line.number, std::move(e));
    } else if (key == "edge") {
      if (line.tokens.size() != 4) parse_fail(line.number, "'edge' expects u v weight");
      edges.push_back({parse_int(line, line.tokens[1]), parse_int(line, line.tokens[2]),
                       parse_rat(line, line.tokens[3])});
    } else {
      parse_fail(line.number, "unknown keyword '" + key + "'");
    }
  }
  if (!n) fail(Errc::Parse, "missing 'n'");
  if (!r) fail(Errc::Parse, "missing 'r'");
  if (!s) fail(Errc::Parse, "missing 's'");
  if (!t) fail(Errc::Parse, "missing 't'");
  if (!w) fail(Errc::Parse, "missing 'w'");

  for (auto& [line, e] : pending_hyperedges) {
    if (static_cast<int>(e.nodes.size()) != *r)
      fail(Errc::Parse, "line " + std::to_string(line) + ": hyperedge has " +
                            std::to_string(e.nodes.size()) + " nodes, expected " + std::to_string(*r));
    hyperedges.push_back(std::move(e));
  }
  return {Hypergraph(*n, *s, *t, *r, std::move(hyperedges), std::move(edges)),
          SplittingVector(*r, std::move(*w))};
}

void write_instance(const Instance& instance, std::ostream& out) {
  const Hypergraph& h = instance.h;
  out << "n " << h.node_count() << "\n";
  out << "r " << h.r() << "\n";
  out << "s " << h.s_id() << "\n";
  out << "t " << h.t_id() << "\n";
  out << "w";
  for (const Rat& x : instance.w.values()) out << ' ' << rat_str(x);
  out << "\n";
  for (const auto& e : h.hyperedges()) {
    out << "hyperedge";
    for (int v : e.nodes) out << ' ' << v;
    out << ' ' << rat_str(e.weight) << "\n";
  }
  for (const auto& e : h.pairwise_edges())
    out << "edge " << e.u << ' ' << e.v << ' ' << rat_str(e.weight) << "\n";
}

VcspInstance parse_vcsp(std::istream& in) {
  std::optional<int> vars, r;
  std::vector<std::pair<int, std::vector<std::string>>> raw_constraints;
  for (const Line& line : tokenize(in)) {
    const std::string& key = line.tokens[0];
    if (key == "vars" || key == "r") {
      if (line.tokens.size() != 2) parse_fail(line.number, "'" + key + "' expects one integer");
      (key == "vars" ? vars : r) = parse_int(line, line.tokens[1]);
    } else if (key == "constraint") {
      if (line.tokens.size() < 4) parse_fail(line.number, "'constraint' expects scope, kind, weight");
      raw_constraints.emplace_back(line.number,
                                   std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()));
    } else {
      parse_fail(line.number, "unknown keyword '" + key + "'");
    }
  }
  if (!vars) fail(Errc::Parse, "missing 'vars'");
  if (!r) fail(Errc::Parse, "missing 'r'");

  std::vector<Constraint> constraints;
  for (auto& [line_no, tokens] : raw_constraints) {
    const std::string& kind_token = tokens[tokens.size() - 2];
    CostKind kind;
    if (kind_token == "phi_r")
      kind = CostKind::PhiR;
    else if (kind_token == "phi_s")
      kind = CostKind::PhiS;
    else if (kind_token == "phi_t")
      kind = CostKind::PhiT;
    else if (kind_token == "phi_st")
      kind = CostKind::PhiSt;
    else if (kind_token == "nae2")
      kind = CostKind::Nae2;
    else
      fail(Errc::UnsupportedLanguage,
           "line " + std::to_string(line_no) + ": unknown cost function '" + kind_token + "'");
    Constraint c;
    c.kind = kind;
    Line fake{line_no, {}};
    for (size_t i = 0; i + 2 < tokens.size(); ++i) c.scope.push_back(parse_int(fake, tokens[i]));
    c.weight = parse_rat(fake, tokens.back());
    constraints.push_back(std::move(c));
  }
  return VcspInstance(*vars, *r, std::move(constraints));
}

void write_vcsp(const VcspInstance& p, std::ostream& out) {
  out << "vars " << p.variable_count() << "\n";
  out << "r " << p.r() << "\n";
  for (const auto& c : p.constraints()) {
    out << "constraint";
    for (int v : c.scope) out << ' ' << v;
    out << ' ' << cost_kind_name(c.kind) << ' ' << rat_str(c.weight) << "\n";
  }
}

MaxCutInstance parse_maxcut(std::istream& in) {
  std::vector<Line> lines = tokenize(in);
  if (lines.empty()) fail(Errc::Parse, "empty MaxCut file");
  if (lines[0].tokens.size() != 1) parse_fail(lines[0].number, "first line must be the node count");
  MaxCutInstance g;
  g.node_count = parse_int(lines[0], lines[0].tokens[0]);
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens.size() != 2) parse_fail(lines[i].number, "expected 'u v'");
    g.edges.emplace_back(parse_int(lines[i], lines[i].tokens[0]), parse_int(lines[i], lines[i].tokens[1]));
  }
  validate_maxcut(g);
  return g;
}

void write_maxcut(const MaxCutInstance& g, std::ostream& out) {
  out << g.node_count << "\n";
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << "\n";
}

void write_solution(const CutSolution& cut, const SolveReport& report, std::ostream& out) {
  out << "membership ";
  for (bool side : cut.membership) out << (side ? '1' : '0');
  out << "\n";
  out << "value " << rat_str(cut.value) << "\n";
  out << "regime " << regime_name(report.regime) << "\n";
  out << "method " << report.method << "\n";
  if (report.approximate) {
    out << "rho " << rat_str(*report.rho) << "\n";
    out << "projected_value " << rat_str(*report.projected_value) << "\n";
    out << "w_hat";
    for (const Rat& x : report.w_hat->values()) out << ' ' << rat_str(x);
    out << "\n";
    out << "certificate value <= " << rat_str(*report.rho) << " * OPT\n";
  }
}

}  // namespace cbcut
