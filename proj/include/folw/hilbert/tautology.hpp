#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "folw/syntax/formula.hpp"

namespace folw::hilbert {

class AtomBudgetError : public Error {
 public:
  using Error::Error;
};

/// Propositional formula over numbered letters.
struct Prop {
  enum Kind { Letter, False, Not, And, Or, Implies, Iff } kind = False;
  int letter = -1;
  std::shared_ptr<const Prop> lhs;
  std::shared_ptr<const Prop> rhs;

  bool eval(std::uint32_t assignment) const;
};

/// Letter names: p, q, r, s, t, u, v, w, then p8, p9, ...
std::string letter_name(int letter);
std::string render(const Prop& p);

struct Skeleton {
  Prop prop;
  /// atoms[i] is the subformula abstracted to letter i.
  std::vector<Formula> atoms;
};

/// Abstracts atomic and maximal quantified subformulas to letters;
/// alpha-equivalent subformulas share one letter. Falsum stays a constant.
Skeleton skeletonize(const Formula& f);

/// Like skeletonize, but letters are shared across all of `fs`.
std::vector<Prop> skeletonize_all(const std::vector<Formula>& fs, std::vector<Formula>& atoms);

inline constexpr int kMaxAtoms = 20;

struct TautologyResult {
  bool tautology = false;
  /// A falsifying assignment (bit i = value of letter i) when not a tautology.
  std::optional<std::uint32_t> falsifier;
  Skeleton skeleton;
};

/// Truth-table check of the skeleton. Throws AtomBudgetError beyond kMaxAtoms.
TautologyResult check_tautology(const Formula& f);

/// True when the conjunction of `premises` propositionally implies
/// `conclusion`, with letters shared between them.
bool propositional_consequence(const std::vector<Formula>& premises, const Formula& conclusion);

}  // namespace folw::hilbert
