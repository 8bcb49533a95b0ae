#pragma once

#include <string>
#include <vector>

#include "folw/hilbert/script.hpp"

namespace folw::hilbert {

struct Verdict {
  bool accepted = false;
  /// Index of the first failing step when rejected.
  int step = 0;
  std::string reason;
  /// Hypothesis lines the last step depends on.
  std::vector<int> hypotheses;
};

/// Checks every step against its justification; stops at the first failure.
Verdict check(const Script& script);
Verdict check(const std::vector<Step>& steps, const DefinitionTable& defs);

}  // namespace folw::hilbert
