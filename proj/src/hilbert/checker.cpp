#include "folw/hilbert/checker.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "folw/hilbert/tautology.hpp"
#include "folw/syntax/render.hpp"
#include "folw/syntax/substitution.hpp"

namespace folw::hilbert {

namespace {

struct Rejection {
  std::string reason;
};

[[noreturn]] void reject(std::string reason) { throw Rejection{std::move(reason)}; }

std::string show(const Formula& f) { return render(f); }

// B is A with some free occurrences of `from` replaced by `to`.
bool leibniz(const Formula& a, const Formula& b, const std::string& from, const std::string& to,
             std::vector<std::string>& bound) {
  if (a.op() != b.op()) return false;
  auto is_bound = [&](const std::string& n) {
    return std::find(bound.begin(), bound.end(), n) != bound.end();
  };
  switch (a.op()) {
    case Op::Falsum:
      return true;
    case Op::In:
    case Op::Eq:
    case Op::Apply: {
      if (a.op() == Op::Apply && a.name() != b.name()) return false;
      if (a.terms().size() != b.terms().size()) return false;
      for (std::size_t i = 0; i < a.terms().size(); ++i) {
        const auto& x = a.terms()[i].name;
        const auto& y = b.terms()[i].name;
        if (x == y) continue;
        if (x == from && y == to && !is_bound(from) && !is_bound(to)) continue;
        return false;
      }
      return true;
    }
    case Op::Not:
      return leibniz(a.operand(), b.operand(), from, to, bound);
    case Op::Forall:
    case Op::Exists: {
      if (a.name() != b.name()) return false;
      bound.push_back(a.name());
      const bool ok = leibniz(a.body(), b.body(), from, to, bound);
      bound.pop_back();
      return ok;
    }
    default:
      return leibniz(a.left(), b.left(), from, to, bound) &&
             leibniz(a.right(), b.right(), from, to, bound);
  }
}

bool leibniz(const Formula& a, const Formula& b, const std::string& from, const std::string& to) {
  std::vector<std::string> bound;
  return leibniz(a, b, from, to, bound);
}

std::string assignment_text(const Skeleton& s, std::uint32_t a) {
  std::string out;
  for (std::size_t i = 0; i < s.atoms.size(); ++i) {
    if (i) out += ", ";
    out += letter_name(static_cast<int>(i)) + " (" + show(s.atoms[i]) + ") = " +
           (((a >> i) & 1u) ? "true" : "false");
  }
  return out;
}

class Checker {
 public:
  explicit Checker(const DefinitionTable& defs) : defs_(defs) {}

  void check_step(const Step& s) {
    const Justification& j = s.justification;
    std::set<int> deps;
    for (int r : j.refs) {
      if (!lines_.contains(r)) {
        reject("cites line " + std::to_string(r) + ", which is not an earlier line");
      }
      const auto& d = deps_.at(r);
      deps.insert(d.begin(), d.end());
    }
    const Formula& f = s.formula;
    switch (j.rule) {
      case Rule::Hypothesis:
        deps.insert(s.index);
        break;
      case Rule::Tautology:
        tautology(f);
        break;
      case Rule::Predicative:
        predicative(f, j.var, j.term);
        break;
      case Rule::IdentityLeft:
      case Rule::IdentityRight:
        identity(f, j.rule == Rule::IdentityLeft);
        break;
      case Rule::IdentityRefl:
        if (!f.is(Op::Eq) || f.lhs_term().name != f.rhs_term().name) reject("not of the form t = t");
        break;
      case Rule::QuantDistrib:
        quant_distrib(f);
        break;
      case Rule::ModusPonens: {
        const Formula& minor = line(j.refs[0]);
        const Formula& major = line(j.refs[1]);
        if (!major.is(Op::Implies)) {
          reject("line " + std::to_string(j.refs[1]) + " is not an implication");
        }
        if (!alpha_equal(major.left(), minor)) {
          reject("antecedent of line " + std::to_string(j.refs[1]) + " is not line " +
                 std::to_string(j.refs[0]));
        }
        if (!alpha_equal(major.right(), f)) {
          reject("consequent of line " + std::to_string(j.refs[1]) + " is not this formula");
        }
        break;
      }
      case Rule::Generalization: {
        if (!alpha_equal(f, Formula::forall(j.var, line(j.refs[0])))) {
          reject("not forall " + j.var + " applied to line " + std::to_string(j.refs[0]));
        }
        for (int h : deps) {
          if (occurs_free(line(h), j.var)) {
            reject(j.var + " is free in hypothesis " + std::to_string(h));
          }
        }
        break;
      }
      case Rule::TautCons: {
        std::vector<Formula> premises;
        for (int r : j.refs) premises.push_back(line(r));
        if (!propositional_consequence(premises, f)) {
          reject("does not follow propositionally from the cited lines");
        }
        break;
      }
      case Rule::DefUnfold:
        def_unfold(f, j.definition, line(j.refs[0]));
        break;
      case Rule::QuantifierLaw:
        quantifier_law(f, j.law, line(j.refs[0]));
        break;
    }
    lines_.emplace(s.index, f);
    deps_.emplace(s.index, std::move(deps));
  }

  std::vector<int> hypotheses(int index) const {
    const auto& d = deps_.at(index);
    return {d.begin(), d.end()};
  }

 private:
  const Formula& line(int index) const { return lines_.at(index); }

  bool has_definitions(const Formula& f) const {
    return !defs_.empty() && mentions_application(f);
  }

  Formula unfolded(const Formula& f) const {
    try {
      return unfold_known(defs_, f);
    } catch (const DefinitionError& e) {
      reject(e.what());
    }
  }

  // Definition applications stay opaque here; a script moves between folded
  // and unfolded forms only through explicit def steps.
  static void tautology(const Formula& f) {
    auto r = check_tautology(f);
    if (!r.tautology) {
      reject("not a tautology; false when " + assignment_text(r.skeleton, *r.falsifier));
    }
  }

  static void instance_of(const Formula& f, const std::string& var, const std::string& term) {
    if (!f.is(Op::Implies) || !f.left().is(Op::Forall) || f.left().name() != var) {
      reject("not of the form forall " + var + ". f -> f[" + var + ":=" + term + "]");
    }
    auto inst = substitute_counted(f.left().body(), var, Term::constant(term));
    if (inst.renames > 0) reject("substituting " + term + " for " + var + " is not capture-free");
    if (!alpha_equal(inst.formula, f.right())) {
      reject("consequent is not the instance " + show(inst.formula));
    }
  }

  void predicative(const Formula& f, const std::string& var, const std::string& term) const {
    instance_of(f, var, term);
    // The folded form may hide a binder that the unfolded body would capture.
    if (has_definitions(f)) instance_of(unfolded(f), var, term);
  }

  static void identity(const Formula& f, bool left) {
    if (!f.is(Op::Implies) || !f.left().is(Op::Eq) || !f.right().is(Op::Implies)) {
      reject(left ? "not of the form s = t -> (f(s,t) -> f(s,s))"
                  : "not of the form s = t -> (f(s,s) -> f(s,t))");
    }
    const auto& s = f.left().lhs_term().name;
    const auto& t = f.left().rhs_term().name;
    const Formula& a = f.right().left();
    const Formula& b = f.right().right();
    const bool ok = left ? leibniz(a, b, t, s) : leibniz(a, b, s, t);
    if (!ok) {
      reject(left ? "consequent is not the antecedent with some free " + t + " replaced by " + s
                  : "consequent is not the antecedent with some free " + s + " replaced by " + t);
    }
  }

  static void quant_distrib(const Formula& f) {
    const char* shape = "not of the form forall v (a -> b) -> (exists v a -> exists v b)";
    if (!f.is(Op::Implies) || !f.left().is(Op::Forall) || !f.left().body().is(Op::Implies)) reject(shape);
    const std::string& v = f.left().name();
    const Formula& a = f.left().body().left();
    const Formula& b = f.left().body().right();
    auto expected = Formula::implies(f.left(), Formula::implies(Formula::exists(v, a), Formula::exists(v, b)));
    if (!alpha_equal(expected, f)) reject(shape);
  }

  void def_unfold(const Formula& f, const std::string& name, const Formula& source) const {
    if (!defs_.contains(name)) reject("no definition named " + name);
    if (!mentions_application(f, name) && !mentions_application(source, name)) {
      reject(name + " occurs in neither this line nor the cited line");
    }
    try {
      if (!alpha_equal(unfold_one(defs_, name, f), unfold_one(defs_, name, source))) {
        reject("does not match the cited line with " + name + " unfolded");
      }
    } catch (const DefinitionError& e) {
      reject(e.what());
    }
  }

  static void quantifier_law(const Formula& f, QuantLaw law, const Formula& g) {
    switch (law) {
      case QuantLaw::NegForall:
      case QuantLaw::NegExists: {
        const Op inner = law == QuantLaw::NegForall ? Op::Forall : Op::Exists;
        const Op dual = law == QuantLaw::NegForall ? Op::Exists : Op::Forall;
        // Either direction: !Q v. a  <=>  Q' v. !a
        auto matches = [&](const Formula& neg, const Formula& pushed) {
          if (!neg.is_negation_of(inner)) return false;
          const Formula& q = neg.operand();
          return alpha_equal(pushed, Formula::quantifier(dual, q.name(), Formula::not_(q.body())));
        };
        if (matches(g, f) || matches(f, g)) return;
        reject(law == QuantLaw::NegForall ? "not the dual of !forall" : "not the dual of !exists");
      }
      case QuantLaw::ExistsIntroFromImplication: {
        if (!g.is(Op::Forall) || !g.body().is(Op::Implies)) {
          reject("cited line is not of the form forall v (a -> b)");
        }
        const std::string& v = g.name();
        const Formula& b = g.body().right();
        if (occurs_free(b, v)) reject(v + " is free in the consequent");
        if (!alpha_equal(f, Formula::implies(Formula::exists(v, g.body().left()), b))) {
          reject("not exists " + v + " a -> b for the cited line");
        }
        return;
      }
    }
  }

  const DefinitionTable& defs_;
  std::map<int, Formula> lines_;
  std::map<int, std::set<int>> deps_;
};

}  // namespace

Verdict check(const std::vector<Step>& steps, const DefinitionTable& defs) {
  Verdict v;
  if (steps.empty()) {
    v.reason = "empty script";
    return v;
  }
  Checker checker(defs);
  int previous = 0;
  for (const auto& s : steps) {
    try {
      if (s.index <= previous) {
        reject("index " + std::to_string(s.index) + " does not increase");
      }
      checker.check_step(s);
    } catch (const Rejection& r) {
      v.step = s.index;
      v.reason = r.reason;
      return v;
    } catch (const Error& e) {
      v.step = s.index;
      v.reason = e.what();
      return v;
    }
    previous = s.index;
  }
  v.accepted = true;
  v.hypotheses = checker.hypotheses(steps.back().index);
  return v;
}

Verdict check(const Script& script) { return check(script.steps, script.defs); }

}  // namespace folw::hilbert
