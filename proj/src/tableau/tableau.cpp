#include "folw/tableau/tableau.hpp"

#include <algorithm>
#include <tuple>

#include "folw/syntax/render.hpp"
#include "folw/syntax/substitution.hpp"

namespace folw::tableau {

void Budget::validate() const {
  if (max_rule_applications < 1) throw BudgetError("max rule applications must be at least 1");
  if (max_universal_reuse < 1) throw BudgetError("universal reuse cap must be at least 1");
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Premise: return "premise";
    case Rule::DoubleNegation: return "double negation";
    case Rule::Alpha: return "alpha";
    case Rule::NegatedQuantifier: return "negated quantifier";
    case Rule::Delta: return "delta";
    case Rule::Equality: return "equality";
    case Rule::Beta: return "beta";
    case Rule::Iff: return "iff";
    case Rule::Gamma: return "gamma";
  }
  return "?";
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Closed: return "closed";
    case Outcome::OpenSaturated: return "open";
    case Outcome::BudgetExhausted: return "budget";
  }
  return "?";
}

namespace {

enum class Shape { Literal, DoubleNegation, Alpha, NegatedQuantifier, Delta, Beta, Iff, Universal };

Shape shape_of(const Formula& f) {
  switch (f.op()) {
    case Op::In:
    case Op::Eq:
    case Op::Apply:
    case Op::Falsum:
      return Shape::Literal;
    case Op::And: return Shape::Alpha;
    case Op::Or:
    case Op::Implies: return Shape::Beta;
    case Op::Iff: return Shape::Iff;
    case Op::Exists: return Shape::Delta;
    case Op::Forall: return Shape::Universal;
    case Op::Not: break;
  }
  const Formula& g = f.operand();
  switch (g.op()) {
    case Op::Not: return Shape::DoubleNegation;
    case Op::Or:
    case Op::Implies: return Shape::Alpha;
    case Op::And: return Shape::Beta;
    case Op::Iff: return Shape::Iff;
    case Op::Forall:
    case Op::Exists: return Shape::NegatedQuantifier;
    default: return Shape::Literal;
  }
}

bool non_branching(Shape s) {
  return s == Shape::DoubleNegation || s == Shape::Alpha || s == Shape::NegatedQuantifier ||
         s == Shape::Delta;
}
bool branching(Shape s) { return s == Shape::Beta || s == Shape::Iff; }

// ¬Q1x1 ... Qnxn φ  becomes  Q1'x1 ... Qn'xn ¬φ.
Formula push_negation(const Formula& negated) {
  std::vector<std::pair<Op, std::string>> prefix;
  const Formula* cur = &negated.operand();
  while (is_quantifier(cur->op())) {
    prefix.emplace_back(cur->is(Op::Forall) ? Op::Exists : Op::Forall, cur->name());
    cur = &cur->body();
  }
  Formula out = Formula::not_(*cur);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    out = Formula::quantifier(it->first, it->second, out);
  }
  return out;
}

void free_names_in_order(const Formula& f, std::vector<std::string>& bound,
                         std::vector<std::string>& out) {
  switch (f.op()) {
    case Op::In:
    case Op::Eq:
    case Op::Apply:
      for (const auto& t : f.terms()) {
        if (std::find(bound.begin(), bound.end(), t.name) != bound.end()) continue;
        if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
      }
      return;
    case Op::Falsum:
      return;
    case Op::Not:
      free_names_in_order(f.operand(), bound, out);
      return;
    case Op::Forall:
    case Op::Exists:
      bound.push_back(f.name());
      free_names_in_order(f.body(), bound, out);
      bound.pop_back();
      return;
    default:
      free_names_in_order(f.left(), bound, out);
      free_names_in_order(f.right(), bound, out);
  }
}

std::vector<std::string> free_names_in_order(const Formula& f) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  free_names_in_order(f, bound, out);
  return out;
}

bool is_literal(const Formula& f) {
  return is_atomic(f.op()) || (f.is(Op::Not) && is_atomic(f.operand().op()));
}

}  // namespace

Tableau::Tableau(const std::vector<Formula>& premises, Budget budget) : budget_(budget) {
  budget_.validate();
  for (const auto& p : premises) {
    for (const auto& n : all_names(p)) used_names_.insert(n);
    for (const auto& n : free_names_in_order(p)) {
      constant_order_.emplace(n, constant_order_.size());
    }
  }
  boxes_.emplace_back();
  boxes_.back().id = 0;
  open_.emplace_back();
  Branch& root = open_.back();
  add_formulas(root, 0, premises);
  if (root.closure) {
    boxes_[0].closure = root.closure;
    open_.clear();
  }
}

int Tableau::add_box(int parent, Rule rule, std::string detail, std::vector<int> premises) {
  Box box;
  box.id = static_cast<int>(boxes_.size());
  box.parent = parent;
  box.rule = rule;
  box.detail = std::move(detail);
  box.premises = std::move(premises);
  boxes_.push_back(std::move(box));
  boxes_[static_cast<std::size_t>(parent)].children.push_back(boxes_.back().id);
  return boxes_.back().id;
}

void Tableau::note_constants(Branch& br, const Formula& f) {
  for (const auto& n : free_names_in_order(f)) {
    if (br.constant_set.insert(n).second) br.constants.push_back(n);
    constant_order_.emplace(n, constant_order_.size());
  }
}

std::uint64_t Tableau::constant_serial(const std::string& name) const {
  auto it = constant_order_.find(name);
  return it == constant_order_.end() ? ~std::uint64_t{0} : it->second;
}

void Tableau::check_closure(Branch& br, int fid) {
  if (br.closure) return;
  const Formula& f = formula(fid);
  if (f.is(Op::Falsum)) {
    br.closure = Closure{ClosureKind::Falsum, -1, fid};
    return;
  }
  if (f.is_negation_of(Op::Eq) && f.operand().lhs_term().name == f.operand().rhs_term().name) {
    br.closure = Closure{ClosureKind::SelfInequality, -1, fid};
    return;
  }
  // Pairs are matched as (φ, ¬φ) with φ not itself a negation; a ¬¬φ is
  // reduced by double negation first, which keeps the evidence atomic where
  // the tree allows it.
  if (f.is(Op::Not)) {
    if (f.operand().is(Op::Not)) return;
    if (auto it = br.by_key.find(alpha_key(f.operand())); it != br.by_key.end()) {
      br.closure = Closure{ClosureKind::Complementary, it->second, fid};
    }
    return;
  }
  const auto& key = nodes_[static_cast<std::size_t>(fid)].key;
  if (auto it = br.by_key.find("(!" + key + ")"); it != br.by_key.end()) {
    br.closure = Closure{ClosureKind::Complementary, fid, it->second};
  }
}

void Tableau::add_formulas(Branch& br, int box, const std::vector<Formula>& fs) {
  for (const auto& f : fs) {
    auto key = alpha_key(f);
    if (br.by_key.contains(key)) continue;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(FormulaNode{f, key, box});
    boxes_[static_cast<std::size_t>(box)].formulas.push_back(id);
    br.formulas.push_back(id);
    br.by_key.emplace(std::move(key), id);
    note_constants(br, f);

    const Shape s = shape_of(f);
    if (s == Shape::Universal) {
      br.universals.push_back(id);
    } else if (s != Shape::Literal) {
      br.pending.insert(id);
    } else if (f.is(Op::Eq) && f.lhs_term().name != f.rhs_term().name) {
      br.equalities.push_back(id);
    }
    check_closure(br, id);
  }
  br.leaf = box;
}

std::string Tableau::fresh_constant() {
  for (;;) {
    const std::size_t k = fresh_counter_++;
    std::string name(1, static_cast<char>('a' + k % 26));
    if (k >= 26) name += std::to_string(k / 26);
    if (used_names_.insert(name).second) {
      constant_order_.emplace(name, constant_order_.size());
      return name;
    }
  }
}

std::optional<Tableau::Candidate> Tableau::branch_candidate(std::size_t b, Tier tier) const {
  const Branch& br = open_[b];
  Candidate c;
  c.tier = tier;
  c.branch = b;
  switch (tier) {
    case Tier::NonBranching:
    case Tier::Branching:
      for (int fid : br.pending) {  // ascending
        const Shape s = shape_of(formula(fid));
        if (tier == Tier::NonBranching ? non_branching(s) : branching(s)) {
          c.formula = fid;
          return c;
        }
      }
      return std::nullopt;
    case Tier::Equality: {
      std::optional<std::tuple<int, int, int>> best;
      for (int e : br.equalities) {
        const Formula& eq = formula(e);
        const auto& from = rewrite_source(eq);
        for (int target : br.formulas) {
          if (target == e || br.equality_done.contains({e, target})) continue;
          const Formula& tf = formula(target);
          if (!is_literal(tf) && !br.pending.contains(target)) continue;
          if (!occurs_free(tf, from)) continue;
          std::tuple<int, int, int> key{std::max(e, target), e, target};
          if (!best || key < *best) best = key;
        }
      }
      if (!best) return std::nullopt;
      c.equality = std::get<1>(*best);
      c.formula = std::get<2>(*best);
      return c;
    }
    case Tier::Gamma: {
      if (br.universals.empty()) return std::nullopt;
      if (br.constants.empty()) {
        c.formula = br.universals.front();
        c.fresh = true;
        return c;
      }
      std::optional<std::tuple<int, int, std::uint64_t>> best;
      for (int u : br.universals) {
        for (const auto& k : br.constants) {
          auto it = br.gamma_count.find({u, k});
          const int count = it == br.gamma_count.end() ? 0 : it->second;
          if (count >= budget_.max_universal_reuse) continue;
          std::tuple<int, int, std::uint64_t> key{count, u, constant_serial(k)};
          if (!best || key < *best) {
            best = key;
            c.formula = u;
            c.constant = k;
          }
        }
      }
      if (!best) return std::nullopt;
      return c;
    }
    case Tier::None:
      break;
  }
  return std::nullopt;
}

bool Tableau::has_candidate(std::size_t b) const {
  for (Tier t : {Tier::NonBranching, Tier::Equality, Tier::Branching, Tier::Gamma}) {
    if (branch_candidate(b, t)) return true;
  }
  return false;
}

Tableau::Candidate Tableau::best_candidate() const {
  for (Tier t : {Tier::NonBranching, Tier::Equality, Tier::Branching, Tier::Gamma}) {
    std::optional<Candidate> best;
    auto rank = [&](const Candidate& c) {
      switch (t) {
        case Tier::Equality:
          return std::make_tuple(std::uint64_t(std::max(c.equality, c.formula)),
                                 std::uint64_t(c.equality), std::uint64_t(c.formula));
        case Tier::Gamma: {
          const auto& br = open_[c.branch];
          if (c.fresh) return std::make_tuple(std::uint64_t{0}, std::uint64_t(c.formula), std::uint64_t{0});
          auto it = br.gamma_count.find({c.formula, c.constant});
          const int count = it == br.gamma_count.end() ? 0 : it->second;
          return std::make_tuple(std::uint64_t(count), std::uint64_t(c.formula),
                                 constant_serial(c.constant));
        }
        default:
          return std::make_tuple(std::uint64_t(c.formula), std::uint64_t{0}, std::uint64_t{0});
      }
    };
    for (std::size_t b = 0; b < open_.size(); ++b) {
      auto c = branch_candidate(b, t);
      if (c && (!best || rank(*c) < rank(*best))) best = c;
    }
    if (best) return *best;
  }
  return Candidate{};
}

std::optional<int> Tableau::saturated_leaf() const {
  for (std::size_t b = 0; b < open_.size(); ++b) {
    if (!has_candidate(b)) return open_[b].leaf;
  }
  return std::nullopt;
}

bool Tableau::next_is_gamma() const {
  return !terminal() && best_candidate().tier == Tier::Gamma;
}

void Tableau::apply_non_branching(Branch& br, int fid) {
  br.pending.erase(fid);
  const Formula f = formula(fid);
  const Shape s = shape_of(f);
  std::vector<Formula> out;
  Rule rule = Rule::Alpha;
  std::string detail;
  switch (s) {
    case Shape::DoubleNegation:
      rule = Rule::DoubleNegation;
      out.push_back(f.operand().operand());
      break;
    case Shape::Alpha:
      if (f.is(Op::And)) {
        out = {f.left(), f.right()};
      } else if (f.operand().is(Op::Or)) {
        out = {Formula::not_(f.operand().left()), Formula::not_(f.operand().right())};
      } else {
        out = {f.operand().left(), Formula::not_(f.operand().right())};
      }
      break;
    case Shape::NegatedQuantifier:
      rule = Rule::NegatedQuantifier;
      out.push_back(push_negation(f));
      break;
    case Shape::Delta: {
      rule = Rule::Delta;
      detail = fresh_constant();
      out.push_back(substitute(f.body(), f.name(), Term::constant(detail)));
      break;
    }
    default:
      return;
  }
  std::vector<Formula> fresh;
  for (const auto& g : out) {
    if (!br.by_key.contains(alpha_key(g))) fresh.push_back(g);
  }
  if (fresh.empty()) return;
  const int box = add_box(br.leaf, rule, std::move(detail), {fid});
  add_formulas(br, box, fresh);
}

void Tableau::apply_branching(std::size_t b, int fid) {
  Branch base = std::move(open_[b]);
  base.pending.erase(fid);
  const Formula f = formula(fid);
  std::vector<std::vector<Formula>> alternatives;
  Rule rule = Rule::Beta;
  if (f.is(Op::Or)) {
    alternatives = {{f.left()}, {f.right()}};
  } else if (f.is(Op::Implies)) {
    alternatives = {{Formula::not_(f.left())}, {f.right()}};
  } else if (f.is(Op::Iff)) {
    rule = Rule::Iff;
    alternatives = {{f.left(), f.right()}, {Formula::not_(f.left()), Formula::not_(f.right())}};
  } else if (f.operand().is(Op::And)) {
    alternatives = {{Formula::not_(f.operand().left())}, {Formula::not_(f.operand().right())}};
  } else {
    rule = Rule::Iff;
    const Formula& g = f.operand();
    alternatives = {{g.left(), Formula::not_(g.right())}, {Formula::not_(g.left()), g.right()}};
  }
  std::vector<Branch> children;
  for (const auto& alt : alternatives) {
    Branch child = base;
    const int box = add_box(base.leaf, rule, {}, {fid});
    add_formulas(child, box, alt);
    children.push_back(std::move(child));
  }
  open_.erase(open_.begin() + static_cast<std::ptrdiff_t>(b));
  open_.insert(open_.begin() + static_cast<std::ptrdiff_t>(b),
               std::make_move_iterator(children.begin()), std::make_move_iterator(children.end()));
}

const std::string& Tableau::rewrite_source(const Formula& eq) const {
  const auto& s = eq.lhs_term().name;
  const auto& t = eq.rhs_term().name;
  return constant_serial(s) > constant_serial(t) ? s : t;
}

void Tableau::apply_equality(Branch& br, int eq_id, int target) {
  br.equality_done.insert({eq_id, target});
  const Formula& eq = formula(eq_id);
  const std::string from = rewrite_source(eq);
  const std::string to = from == eq.lhs_term().name ? eq.rhs_term().name : eq.lhs_term().name;
  const Formula g = substitute(formula(target), from, Term::constant(to));
  if (br.by_key.contains(alpha_key(g))) return;
  if (g.is(Op::Eq) && g.lhs_term().name == g.rhs_term().name) return;
  // The rewritten copy carries the obligation; the original is equivalent
  // on this branch and need not be expanded separately.
  br.pending.erase(target);
  const int box = add_box(br.leaf, Rule::Equality, eq.lhs_term().name + "=" + eq.rhs_term().name,
                          {eq_id, target});
  add_formulas(br, box, {g});
}

void Tableau::apply_gamma(Branch& br, const Candidate& c) {
  const Formula u = formula(c.formula);
  const std::string k = c.fresh ? fresh_constant() : c.constant;
  if (br.constant_set.insert(k).second) br.constants.push_back(k);
  ++br.gamma_count[{c.formula, k}];
  auto instance = substitute(u.body(), u.name(), Term::constant(k));
  // Re-instantiation of a pair already on the branch: counted, not drawn.
  if (br.by_key.contains(alpha_key(instance))) return;
  const int box = add_box(br.leaf, Rule::Gamma, k, {c.formula});
  add_formulas(br, box, {instance});
}

void Tableau::apply(const Candidate& c) {
  switch (c.tier) {
    case Tier::NonBranching:
      apply_non_branching(open_[c.branch], c.formula);
      break;
    case Tier::Equality:
      apply_equality(open_[c.branch], c.equality, c.formula);
      break;
    case Tier::Branching:
      apply_branching(c.branch, c.formula);
      break;
    case Tier::Gamma:
      apply_gamma(open_[c.branch], c);
      break;
    case Tier::None:
      return;
  }
  // Retire closed branches.
  std::vector<Branch> still_open;
  still_open.reserve(open_.size());
  for (auto& br : open_) {
    if (br.closure) {
      boxes_[static_cast<std::size_t>(br.leaf)].closure = br.closure;
    } else {
      still_open.push_back(std::move(br));
    }
  }
  open_ = std::move(still_open);
}

StepResult Tableau::step() {
  for (;;) {
    if (closed()) return {StepResult::Closed, "closed"};
    if (auto leaf = saturated_leaf()) {
      boxes_[static_cast<std::size_t>(*leaf)].saturated = true;
      return {StepResult::Saturated, "saturated"};
    }
    const Candidate c = best_candidate();
    const std::size_t before = boxes_.size();
    apply(c);
    if (boxes_.size() == before) continue;
    ++applications_;
    const Box& last = boxes_.back();
    std::string desc = rule_name(last.rule);
    if (!last.detail.empty()) desc += " " + last.detail;
    desc += " on " + render(formula(last.premises.back()));
    if (last.rule == Rule::Beta || last.rule == Rule::Iff) {
      desc += " (split)";
    } else if (!last.formulas.empty()) {
      desc += " => ";
      for (std::size_t i = 0; i < last.formulas.size(); ++i) {
        if (i) desc += ", ";
        desc += render(formula(last.formulas[i]));
      }
    }
    return {StepResult::Applied, desc};
  }
}

std::vector<int> Tableau::open_leaves() const {
  std::vector<int> out;
  for (const auto& br : open_) out.push_back(br.leaf);
  return out;
}

std::vector<int> Tableau::leaves() const {
  std::vector<int> out;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    const Box& b = boxes_[static_cast<std::size_t>(id)];
    if (b.children.empty()) out.push_back(id);
    for (auto it = b.children.rbegin(); it != b.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<int> Tableau::branch_formulas(int leaf_box) const {
  std::vector<int> chain;
  for (int id = leaf_box; id >= 0; id = boxes_[static_cast<std::size_t>(id)].parent) {
    chain.push_back(id);
  }
  std::vector<int> out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const auto& fs = boxes_[static_cast<std::size_t>(*it)].formulas;
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

TableauResult refute(const std::vector<Formula>& premises, Budget budget) {
  Tableau tree(premises, budget);
  for (;;) {
    if (tree.closed()) return {Outcome::Closed, std::move(tree), {}};
    if (auto leaf = tree.saturated_leaf()) {
      tree.step();  // marks the saturated leaf
      return {Outcome::OpenSaturated, std::move(tree), {*leaf}};
    }
    if (tree.applications() >= budget.max_rule_applications && tree.next_is_gamma()) {
      auto leaves = tree.open_leaves();
      return {Outcome::BudgetExhausted, std::move(tree), std::move(leaves)};
    }
    tree.step();
  }
}

TableauResult prove(const Formula& goal, Budget budget) {
  return refute({Formula::not_(goal)}, budget);
}

}  // namespace folw::tableau
