#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace folw {

/// Base class for every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TermKind { Variable, Constant };

/// An individual term. There are no function symbols, so a term is just a
/// name; `kind` records whether it was bound by a quantifier when created.
struct Term {
  TermKind kind = TermKind::Constant;
  std::string name;

  static Term var(std::string n) { return {TermKind::Variable, std::move(n)}; }
  static Term constant(std::string n) { return {TermKind::Constant, std::move(n)}; }

  bool is_variable() const { return kind == TermKind::Variable; }
  friend bool operator==(const Term& a, const Term& b) { return a.name == b.name; }
};

enum class Op { In, Eq, Apply, Falsum, Not, And, Or, Implies, Iff, Forall, Exists };

bool is_binary(Op op);
bool is_quantifier(Op op);
bool is_atomic(Op op);

/// Immutable first-order formula with membership and identity.
///
/// Values share structure; copying a Formula is a reference-count bump.
/// Atomic nodes carry their argument terms (two for In/Eq, any number for a
/// definition application). Quantifier nodes carry the bound name and a body.
class Formula {
 public:
  Formula();  // Falsum

  static Formula in(Term lhs, Term rhs);
  static Formula eq(Term lhs, Term rhs);
  static Formula apply(std::string name, std::vector<Term> args);
  static Formula falsum();
  static Formula not_(Formula f);
  static Formula and_(Formula l, Formula r);
  static Formula or_(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula iff(Formula l, Formula r);
  static Formula binary(Op op, Formula l, Formula r);
  /// Binds `var`; free occurrences of `var` in `body` become variable-kind.
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  static Formula quantifier(Op op, std::string var, Formula body);

  Op op() const;
  /// Arguments of In / Eq / Apply; empty otherwise.
  std::span<const Term> terms() const;
  const Term& lhs_term() const { return terms()[0]; }
  const Term& rhs_term() const { return terms()[1]; }
  /// Bound variable for quantifiers, predicate name for Apply.
  const std::string& name() const;
  /// Operand of Not, body of a quantifier, left side of a binary connective.
  const Formula& left() const;
  const Formula& body() const { return left(); }
  const Formula& operand() const { return left(); }
  const Formula& right() const;

  bool is(Op o) const { return op() == o; }
  bool is_negation_of(Op o) const { return is(Op::Not) && operand().is(o); }

  /// Node identity, not structural equality. Use alpha_equal for that.
  bool same_node(const Formula& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Names with at least one free occurrence, regardless of their TermKind.
std::set<std::string> free_vars(const Formula& f);
/// Every name occurring anywhere in `f`, bound or free, including binders.
std::set<std::string> all_names(const Formula& f);
bool occurs_free(const Formula& f, std::string_view name);

/// Canonical string for the alpha-equivalence class of `f`: bound names are
/// replaced by binder depth indices, free names are kept verbatim.
std::string alpha_key(const Formula& f);
bool alpha_equal(const Formula& a, const Formula& b);

/// Structural size (node count), used by generators and budgets.
std::size_t formula_size(const Formula& f);

}  // namespace folw
