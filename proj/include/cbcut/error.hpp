#pragma once

#include <stdexcept>
#include <string>

namespace cbcut {

enum class Errc {
  TerminalPlacement,
  SizeLimit,
  Regime,
  Parameter,
  DominationViolation,
  InfiniteRatio,
  UnsupportedLanguage,
  ArityMismatch,
  EmbeddingImpossible,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message) : std::runtime_error(message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace cbcut
