#pragma once

#include <string>

#include "cbcut/hypergraph.hpp"

namespace cbcut {

enum class RegimeTag { Submodular, Degenerate, NonSubmodularHard };

struct Regime {
  RegimeTag tag;
  // Named violated inequality, e.g. "2w_2 < w_1 + w_3". Empty unless
  // NonSubmodularHard.
  std::string witness;
};

// Tractability classification of a splitting vector.
//   w_1 = 0                      -> Degenerate
//   2w_1 >= w_2, 2w_j >= w_{j-1}+w_{j+1} (j=2..q-1),
//   w_q >= ... >= w_1 >= 0       -> Submodular
//   otherwise                    -> NonSubmodularHard, first violated
//                                   inequality (in the order above) named.
Regime classify(const SplittingVector& w);

const char* regime_name(RegimeTag tag);

}  // namespace cbcut
