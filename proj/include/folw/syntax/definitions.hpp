#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folw/syntax/formula.hpp"

namespace folw {

class DefinitionError : public Error {
 public:
  using Error::Error;
};

struct Definition {
  std::string name;
  std::vector<std::string> params;
  Formula body;
};

/// Named formula abbreviations such as `phi(x, r) := x in r <-> x notin x`.
///
/// A body may only mention definitions added before it, so unfolding always
/// terminates. The free names of a body must be exactly its parameters.
class DefinitionTable {
 public:
  void add(Definition def);
  bool contains(const std::string& name) const { return defs_.contains(name); }
  const Definition* find(const std::string& name) const;
  bool empty() const { return defs_.empty(); }
  /// Names in the order they were added.
  std::vector<std::string> names() const;

 private:
  std::map<std::string, Definition> defs_;
  std::vector<std::string> order_;
};

/// Replaces every application of a table entry by its instantiated body.
/// Throws DefinitionError on an unknown name or an arity mismatch.
Formula unfold(const DefinitionTable& defs, const Formula& f);

/// Unfolds applications of `only` and leaves every other application alone.
Formula unfold_one(const DefinitionTable& defs, const std::string& only, const Formula& f);

/// Unfolds applications of known entries and leaves unknown names as
/// uninterpreted predicates. Arity mismatches still throw.
Formula unfold_known(const DefinitionTable& defs, const Formula& f);

/// True if `f` contains an application named `name` (any name if empty).
bool mentions_application(const Formula& f, const std::string& name = {});

}  // namespace folw
