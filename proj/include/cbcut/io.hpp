#pragma once

#include <iosfwd>
#include <string>

#include "cbcut/hypergraph.hpp"
#include "cbcut/reductions.hpp"
#include "cbcut/solvers.hpp"
#include "cbcut/vcsp.hpp"

namespace cbcut {

// A cut instance: the hypergraph together with its splitting vector.
struct Instance {
  Hypergraph h;
  SplittingVector w;
};

// Instance text format (see README for the grammar):
//   n <int>            node count
//   r <int>            hyperedge size
//   s <int>  t <int>   terminals
//   w <rat> ... <rat>  w_0..w_q
//   hyperedge <r node ids> <weight>
//   edge <u> <v> <weight>
// '#' starts a comment; rationals are INT, INT/INT or DECIMAL.
Instance parse_instance(std::istream& in);
void write_instance(const Instance& instance, std::ostream& out);

// VCSP text format:
//   vars <int>
//   r <int>
//   constraint <scope...> <kind> <weight>     kind in {phi_r,phi_s,phi_t,phi_st,nae2}
VcspInstance parse_vcsp(std::istream& in);
void write_vcsp(const VcspInstance& p, std::ostream& out);

// MaxCut edge list: first line is the node count, then one "u v" pair per line.
MaxCutInstance parse_maxcut(std::istream& in);
void write_maxcut(const MaxCutInstance& g, std::ostream& out);

// Solution record: membership bitstring (node order), exact value, regime,
// method, and the rho certificate when approximate.
void write_solution(const CutSolution& cut, const SolveReport& report, std::ostream& out);

}  // namespace cbcut
