#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "folw/syntax/formula.hpp"

namespace folw::tableau {

class BudgetError : public Error {
 public:
  using Error::Error;
};

struct Budget {
  int max_rule_applications = 500;
  /// How many times one (universal formula, constant) pair may be instantiated
  /// on a branch.
  int max_universal_reuse = 3;

  void validate() const;
};

enum class Rule {
  Premise,
  DoubleNegation,
  Alpha,
  NegatedQuantifier,
  Delta,
  Equality,
  Beta,
  Iff,
  Gamma,
};

const char* rule_name(Rule r);

enum class ClosureKind { Complementary, Falsum, SelfInequality };

struct Closure {
  ClosureKind kind = ClosureKind::Complementary;
  /// Formula ids on the branch that witness the closure. For a complementary
  /// pair `positive` is φ and `negative` is ¬φ; otherwise only `negative`.
  int positive = -1;
  int negative = -1;
};

struct FormulaNode {
  Formula formula;
  std::string key;  // alpha_key(formula)
  int box = -1;
};

/// One rule application on one branch: the formulas it added, stacked as in
/// a drawn semantic tree.
struct Box {
  int id = -1;
  int parent = -1;
  Rule rule = Rule::Premise;
  std::string detail;         // e.g. the constant introduced
  std::vector<int> premises;  // formula ids the rule consumed
  std::vector<int> formulas;  // formula ids added
  std::vector<int> children;
  std::optional<Closure> closure;
  bool saturated = false;
};

struct StepResult {
  enum Kind { Applied, Closed, Saturated } kind = Applied;
  std::string description;
};

/// A semantic tableau under expansion.
///
/// Rules are applied one at a time in a fixed fair order: one-shot
/// non-branching rules first, then equality rewriting, then branching rules,
/// then universal instantiation. Within a tier the oldest pending formula
/// wins; ties go to the leftmost branch. An equality s = t rewrites whichever
/// of s, t entered the tableau later into the other. Definition applications
/// are treated as uninterpreted predicates.
class Tableau {
 public:
  Tableau(const std::vector<Formula>& premises, Budget budget = {});

  StepResult step();

  bool closed() const { return open_.empty(); }
  /// Leaf box of an open branch with no applicable rule, if any.
  std::optional<int> saturated_leaf() const;
  bool terminal() const { return closed() || saturated_leaf().has_value(); }
  /// True when the next step would be a universal instantiation.
  bool next_is_gamma() const;

  int applications() const { return applications_; }
  const Budget& budget() const { return budget_; }

  const std::vector<Box>& boxes() const { return boxes_; }
  const std::vector<FormulaNode>& nodes() const { return nodes_; }
  const Formula& formula(int id) const { return nodes_[static_cast<std::size_t>(id)].formula; }

  /// Leaf boxes of the open branches, left to right.
  std::vector<int> open_leaves() const;
  /// Leaf boxes of every branch (open or closed), left to right.
  std::vector<int> leaves() const;
  /// Formula ids on the path from the root to `leaf_box`, in order.
  std::vector<int> branch_formulas(int leaf_box) const;

 private:
  struct Branch {
    int leaf = 0;
    std::vector<int> formulas;
    std::unordered_map<std::string, int> by_key;
    std::vector<std::string> constants;
    std::set<std::string> constant_set;
    std::set<int> pending;  // one-shot formulas not yet expanded
    std::vector<int> universals;
    std::map<std::pair<int, std::string>, int> gamma_count;
    std::vector<int> equalities;
    std::set<std::pair<int, int>> equality_done;
    std::optional<Closure> closure;
  };

  enum class Tier { NonBranching = 0, Equality = 1, Branching = 2, Gamma = 3, None = 4 };

  struct Candidate {
    Tier tier = Tier::None;
    std::size_t branch = 0;
    int formula = -1;       // pending / universal formula
    int equality = -1;      // equality formula for Tier::Equality
    std::string constant;   // instantiation constant for Tier::Gamma
    bool fresh = false;     // gamma on a branch without constants
  };

  Candidate best_candidate() const;
  std::optional<Candidate> branch_candidate(std::size_t b, Tier tier) const;
  bool has_candidate(std::size_t b) const;

  void apply(const Candidate& c);
  void apply_non_branching(Branch& br, int fid);
  void apply_branching(std::size_t b, int fid);
  void apply_equality(Branch& br, int eq_id, int target);
  void apply_gamma(Branch& br, const Candidate& c);

  int add_box(int parent, Rule rule, std::string detail, std::vector<int> premises);
  /// Adds `fs` to `br` inside box `box`, skipping formulas already present.
  void add_formulas(Branch& br, int box, const std::vector<Formula>& fs);
  void note_constants(Branch& br, const Formula& f);
  void check_closure(Branch& br, int fid);
  std::string fresh_constant();
  std::uint64_t constant_serial(const std::string& name) const;
  /// The side of an equality that rewriting replaces: the later constant.
  const std::string& rewrite_source(const Formula& eq) const;

  Budget budget_;
  std::vector<FormulaNode> nodes_;
  std::vector<Box> boxes_;
  std::vector<Branch> open_;
  std::set<std::string> used_names_;
  std::map<std::string, std::uint64_t> constant_order_;
  std::size_t fresh_counter_ = 0;
  int applications_ = 0;
};

enum class Outcome { Closed, OpenSaturated, BudgetExhausted };

const char* outcome_name(Outcome o);

struct TableauResult {
  Outcome outcome = Outcome::BudgetExhausted;
  Tableau tree;
  /// Leaf boxes of the open branches at termination (the saturated branch for
  /// OpenSaturated).
  std::vector<int> open_branches;
};

/// Expands a tableau rooted at `premises` until every branch closes, a branch
/// saturates, or the rule budget is spent. The budget is checked before each
/// universal instantiation, so the tree is never left with a pending
/// non-instantiation rule on an open branch.
TableauResult refute(const std::vector<Formula>& premises, Budget budget = {});

/// refute({!goal}). Closed means `goal` is valid.
TableauResult prove(const Formula& goal, Budget budget = {});

}  // namespace folw::tableau
