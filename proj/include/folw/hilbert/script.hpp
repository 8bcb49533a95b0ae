#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "folw/syntax/definitions.hpp"
#include "folw/syntax/formula.hpp"
#include "folw/syntax/parser.hpp"

namespace folw::hilbert {

enum class Rule {
  Hypothesis,     // hyp
  Tautology,      // taut
  Predicative,    // pred[x:=t]   forall x. f -> f[x:=t]
  IdentityLeft,   // id-left      s = t -> (f(s,t) -> f(s,s))
  IdentityRight,  // id-right     s = t -> (f(s,s) -> f(s,t))
  IdentityRefl,   // id-refl      t = t
  QuantDistrib,   // qdist        forall v (a -> b) -> (exists v a -> exists v b)
  ModusPonens,    // mp i j       j is (i -> this)
  Generalization, // gen i v
  TautCons,       // tautcons i.. up to four lines
  DefUnfold,      // def name i
  QuantifierLaw,  // qlaw kind i
};

enum class QuantLaw { NegForall, NegExists, ExistsIntroFromImplication };

const char* quant_law_name(QuantLaw law);

struct Justification {
  Rule rule = Rule::Hypothesis;
  std::vector<int> refs;  // cited line indices
  std::string var;        // pred: the instantiated variable; gen: the bound variable
  std::string term;       // pred: the instantiating term
  std::string definition; // def: the unfolded name
  QuantLaw law = QuantLaw::NegForall;
};

std::string to_string(const Justification& j);

struct Step {
  int index = 0;
  Formula formula;
  Justification justification;
  int source_line = 0;
};

struct Script {
  DefinitionTable defs;
  std::vector<Step> steps;
};

/// Reads the line format
///
///     # comment
///     def phi(x, r) := x in r <-> x notin x
///     3 | forall r. (forall x. phi(x, r) -> phi(r, r)) | gen 2 r
///
/// The formula is everything between the first and the last `|`, so
/// disjunctions need no escaping. Throws SyntaxError with a file position.
Script parse_script(std::string_view text);

/// Writes a script back in the same format.
std::string render_script(const Script& script);

}  // namespace folw::hilbert
