#include "cbcut/regime.hpp"

namespace cbcut {

namespace {
std::string sub(const std::string& pattern, int j) {
  // replaces 'J' with j, 'P' with j-1, 'N' with j+1
  std::string out;
  for (char c : pattern) {
    if (c == 'J')
      out += std::to_string(j);
    else if (c == 'P')
      out += std::to_string(j - 1);
    else if (c == 'N')
      out += std::to_string(j + 1);
    else
      out += c;
  }
  return out;
}
}  // namespace

Regime classify(const SplittingVector& w) {
  const int q = w.q();
  if (w[1] == 0) return {RegimeTag::Degenerate, ""};

  if (q >= 2 && 2 * w[1] < w[2]) return {RegimeTag::NonSubmodularHard, "2w_1 < w_2"};
  for (int j = 2; j <= q - 1; ++j)
    if (2 * w[j] < w[j - 1] + w[j + 1])
      return {RegimeTag::NonSubmodularHard, sub("2w_J < w_P + w_N", j)};
  for (int j = q; j >= 2; --j)
    if (w[j] < w[j - 1]) return {RegimeTag::NonSubmodularHard, sub("w_J < w_P", j)};
  // w_1 >= 0 is a type invariant
  return {RegimeTag::Submodular, ""};
}

const char* regime_name(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::Submodular: return "Submodular";
    case RegimeTag::Degenerate: return "Degenerate";
    case RegimeTag::NonSubmodularHard: return "NonSubmodularHard";
  }
  return "?";
}

}  // namespace cbcut
