#include "folw/syntax/substitution.hpp"

#include <set>
#include <vector>

namespace folw {

namespace {

struct Substituter {
  int renames = 0;

  Formula run(const Formula& f, const std::map<std::string, Term>& sigma) {
    if (sigma.empty()) return f;
    switch (f.op()) {
      case Op::In:
      case Op::Eq:
      case Op::Apply: {
        std::vector<Term> ts(f.terms().begin(), f.terms().end());
        bool touched = false;
        for (auto& t : ts) {
          if (auto it = sigma.find(t.name); it != sigma.end()) {
            t = it->second;
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
        auto inner = run(f.operand(), sigma);
        return inner.same_node(f.operand()) ? f : Formula::not_(std::move(inner));
      }
      case Op::Forall:
      case Op::Exists:
        return quantifier(f, sigma);
      default: {
        auto l = run(f.left(), sigma);
        auto r = run(f.right(), sigma);
        if (l.same_node(f.left()) && r.same_node(f.right())) return f;
        return Formula::binary(f.op(), std::move(l), std::move(r));
      }
    }
  }

  Formula quantifier(const Formula& f, const std::map<std::string, Term>& sigma) {
    const std::string& bound = f.name();
    const auto body_free = free_vars(f.body());

    // Only entries that actually fire under this binder matter.
    std::map<std::string, Term> inner;
    for (const auto& [name, term] : sigma) {
      if (name != bound && body_free.contains(name)) inner.emplace(name, term);
    }
    if (inner.empty()) return f;

    bool captures = false;
    for (const auto& [name, term] : inner) {
      if (term.name == bound) captures = true;
    }
    if (!captures) {
      auto body = run(f.body(), inner);
      return body.same_node(f.body()) ? f : Formula::quantifier(f.op(), bound, std::move(body));
    }

    std::set<std::string> avoid = all_names(f.body());
    for (const auto& [name, term] : inner) {
      avoid.insert(name);
      avoid.insert(term.name);
    }
    std::string fresh;
    for (int k = 1;; ++k) {
      fresh = bound + std::to_string(k);
      if (!avoid.contains(fresh)) break;
    }
    ++renames;
    inner.emplace(bound, Term::var(fresh));
    return Formula::quantifier(f.op(), fresh, run(f.body(), inner));
  }
};

}  // namespace

SubstitutionResult substitute_all(const Formula& f, const std::map<std::string, Term>& sigma) {
  Substituter s;
  auto out = s.run(f, sigma);
  return {std::move(out), s.renames};
}

SubstitutionResult substitute_counted(const Formula& f, const std::string& var, const Term& t) {
  return substitute_all(f, {{var, t}});
}

Formula substitute(const Formula& f, const std::string& var, const Term& t) {
  return substitute_counted(f, var, t).formula;
}

}  // namespace folw
