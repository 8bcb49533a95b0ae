#pragma once

#include <map>
#include <string>

#include "folw/syntax/formula.hpp"

namespace folw {

struct SubstitutionResult {
  Formula formula;
  /// Binders renamed to dodge capture. Zero means the plain textual
  /// replacement was already sound.
  int renames = 0;
};

/// Capture-avoiding replacement of the free occurrences of `var` by `t`.
/// A binder that would capture `t` is renamed to the first `<name><k>`
/// (k = 1, 2, ...) not occurring in the body or the replacement.
Formula substitute(const Formula& f, const std::string& var, const Term& t);
SubstitutionResult substitute_counted(const Formula& f, const std::string& var, const Term& t);

/// Simultaneous capture-avoiding substitution.
SubstitutionResult substitute_all(const Formula& f, const std::map<std::string, Term>& sigma);

}  // namespace folw
