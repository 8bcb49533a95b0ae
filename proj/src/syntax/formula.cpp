#include "folw/syntax/formula.hpp"

#include <cassert>
#include <string>
#include <utility>
#include <vector>

namespace folw {

struct Formula::Node {
  Op op = Op::Falsum;
  std::vector<Term> terms;
  std::string name;
  // Null children; a default-constructed Formula would allocate a Falsum.
  Formula left{std::shared_ptr<const Node>{}};
  Formula right{std::shared_ptr<const Node>{}};
};

bool is_binary(Op op) {
  return op == Op::And || op == Op::Or || op == Op::Implies || op == Op::Iff;
}
bool is_quantifier(Op op) { return op == Op::Forall || op == Op::Exists; }
bool is_atomic(Op op) {
  return op == Op::In || op == Op::Eq || op == Op::Apply || op == Op::Falsum;
}

namespace {

// Re-tags free occurrences of `var` as variables after a binder is placed.
Formula mark_bound(const Formula& f, const std::string& var) {
  switch (f.op()) {
    case Op::In:
    case Op::Eq:
    case Op::Apply: {
      bool touched = false;
      std::vector<Term> ts(f.terms().begin(), f.terms().end());
      for (auto& t : ts) {
        if (t.name == var && !t.is_variable()) {
          t.kind = TermKind::Variable;
          touched = true;
        }
      }
      if (!touched) return f;
      if (f.is(Op::In)) return Formula::in(ts[0], ts[1]);
      if (f.is(Op::Eq)) return Formula::eq(ts[0], ts[1]);
      return Formula::apply(f.name(), std::move(ts));
    }
    case Op::Falsum:
      return f;
    case Op::Not: {
      auto inner = mark_bound(f.operand(), var);
      return inner.same_node(f.operand()) ? f : Formula::not_(std::move(inner));
    }
    case Op::Forall:
    case Op::Exists:
      if (f.name() == var) return f;
      {
        auto inner = mark_bound(f.body(), var);
        if (inner.same_node(f.body())) return f;
        return Formula::quantifier(f.op(), f.name(), std::move(inner));
      }
    default: {
      auto l = mark_bound(f.left(), var);
      auto r = mark_bound(f.right(), var);
      if (l.same_node(f.left()) && r.same_node(f.right())) return f;
      return Formula::binary(f.op(), std::move(l), std::move(r));
    }
  }
}

}  // namespace

Formula::Formula() : node_(falsum().node_) {}

Formula Formula::in(Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->op = Op::In;
  n->terms = {std::move(lhs), std::move(rhs)};
  return Formula(std::move(n));
}

Formula Formula::eq(Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->op = Op::Eq;
  n->terms = {std::move(lhs), std::move(rhs)};
  return Formula(std::move(n));
}

Formula Formula::apply(std::string name, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->op = Op::Apply;
  n->name = std::move(name);
  n->terms = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::falsum() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->op = Op::Falsum;
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::not_(Formula f) {
  auto n = std::make_shared<Node>();
  n->op = Op::Not;
  n->left = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::binary(Op op, Formula l, Formula r) {
  assert(is_binary(op));
  auto n = std::make_shared<Node>();
  n->op = op;
  n->left = std::move(l);
  n->right = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::and_(Formula l, Formula r) { return binary(Op::And, std::move(l), std::move(r)); }
Formula Formula::or_(Formula l, Formula r) { return binary(Op::Or, std::move(l), std::move(r)); }
Formula Formula::implies(Formula l, Formula r) {
  return binary(Op::Implies, std::move(l), std::move(r));
}
Formula Formula::iff(Formula l, Formula r) { return binary(Op::Iff, std::move(l), std::move(r)); }

Formula Formula::quantifier(Op op, std::string var, Formula body) {
  assert(is_quantifier(op));
  auto n = std::make_shared<Node>();
  n->op = op;
  n->left = mark_bound(body, var);
  n->name = std::move(var);
  return Formula(std::move(n));
}

Formula Formula::forall(std::string var, Formula body) {
  return quantifier(Op::Forall, std::move(var), std::move(body));
}
Formula Formula::exists(std::string var, Formula body) {
  return quantifier(Op::Exists, std::move(var), std::move(body));
}

Op Formula::op() const { return node_->op; }
std::span<const Term> Formula::terms() const { return node_->terms; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::left() const { return node_->left; }
const Formula& Formula::right() const { return node_->right; }

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  auto is_bound = [&](const std::string& n) {
    for (const auto& b : bound)
      if (b == n) return true;
    return false;
  };
  switch (f.op()) {
    case Op::In:
    case Op::Eq:
    case Op::Apply:
      for (const auto& t : f.terms())
        if (!is_bound(t.name)) out.insert(t.name);
      return;
    case Op::Falsum:
      return;
    case Op::Not:
      collect_free(f.operand(), bound, out);
      return;
    case Op::Forall:
    case Op::Exists:
      bound.push_back(f.name());
      collect_free(f.body(), bound, out);
      bound.pop_back();
      return;
    default:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
  }
}

void collect_all(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::In:
    case Op::Eq:
    case Op::Apply:
      for (const auto& t : f.terms()) out.insert(t.name);
      return;
    case Op::Falsum:
      return;
    case Op::Not:
      collect_all(f.operand(), out);
      return;
    case Op::Forall:
    case Op::Exists:
      out.insert(f.name());
      collect_all(f.body(), out);
      return;
    default:
      collect_all(f.left(), out);
      collect_all(f.right(), out);
  }
}

void write_alpha(const Formula& f, std::vector<std::string>& binders, std::string& out) {
  auto term = [&](const Term& t) {
    for (std::size_t i = binders.size(); i-- > 0;) {
      if (binders[i] == t.name) {
        out += '#';
        out += std::to_string(binders.size() - 1 - i);
        return;
      }
    }
    out += t.name;
  };
  switch (f.op()) {
    case Op::In:
      out += "(in ";
      term(f.lhs_term());
      out += ' ';
      term(f.rhs_term());
      out += ')';
      return;
    case Op::Eq:
      out += "(= ";
      term(f.lhs_term());
      out += ' ';
      term(f.rhs_term());
      out += ')';
      return;
    case Op::Apply:
      out += "(@";
      out += f.name();
      for (const auto& t : f.terms()) {
        out += ' ';
        term(t);
      }
      out += ')';
      return;
    case Op::Falsum:
      out += "F";
      return;
    case Op::Not:
      out += "(!";
      write_alpha(f.operand(), binders, out);
      out += ')';
      return;
    case Op::Forall:
    case Op::Exists:
      out += f.is(Op::Forall) ? "(A " : "(E ";
      binders.push_back(f.name());
      write_alpha(f.body(), binders, out);
      binders.pop_back();
      out += ')';
      return;
    default: {
      switch (f.op()) {
        case Op::And: out += "(& "; break;
        case Op::Or: out += "(| "; break;
        case Op::Implies: out += "(> "; break;
        default: out += "(<> "; break;
      }
      write_alpha(f.left(), binders, out);
      out += ' ';
      write_alpha(f.right(), binders, out);
      out += ')';
    }
  }
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_names(const Formula& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

bool occurs_free(const Formula& f, std::string_view name) {
  return free_vars(f).contains(std::string(name));
}

std::string alpha_key(const Formula& f) {
  std::string out;
  std::vector<std::string> binders;
  write_alpha(f, binders, out);
  return out;
}

bool alpha_equal(const Formula& a, const Formula& b) {
  return a.same_node(b) || alpha_key(a) == alpha_key(b);
}

std::size_t formula_size(const Formula& f) {
  switch (f.op()) {
    case Op::In:
    case Op::Eq:
    case Op::Apply:
    case Op::Falsum:
      return 1;
    case Op::Not:
    case Op::Forall:
    case Op::Exists:
      return 1 + formula_size(f.left());
    default:
      return 1 + formula_size(f.left()) + formula_size(f.right());
  }
}

}  // namespace folw
