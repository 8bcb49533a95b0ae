#include <algorithm>

#include "folw/model/model.hpp"

namespace folw::model {

namespace {

class Evaluator {
 public:
  Evaluator(const Interpretation& m, std::map<std::string, int> env) : m_(m), env_(std::move(env)) {}

  bool eval(const Formula& f) {
    switch (f.op()) {
      case Op::Falsum:
        return false;
      case Op::In:
        return m_.member(value(f.lhs_term()), value(f.rhs_term()));
      case Op::Eq:
        return value(f.lhs_term()) == value(f.rhs_term());
      case Op::Apply:
        throw Error("cannot evaluate " + f.name() + "(...): unfold definitions first");
      case Op::Not:
        return !eval(f.operand());
      case Op::And:
        return eval(f.left()) && eval(f.right());
      case Op::Or:
        return eval(f.left()) || eval(f.right());
      case Op::Implies:
        return !eval(f.left()) || eval(f.right());
      case Op::Iff:
        return eval(f.left()) == eval(f.right());
      case Op::Forall:
      case Op::Exists: {
        const bool universal = f.is(Op::Forall);
        auto saved = env_.find(f.name()) == env_.end() ? std::optional<int>{} : env_[f.name()];
        bool result = universal;
        for (int e = 0; e < m_.size(); ++e) {
          env_[f.name()] = e;
          if (eval(f.body()) != universal) {
            result = !universal;
            break;
          }
        }
        if (saved)
          env_[f.name()] = *saved;
        else
          env_.erase(f.name());
        return result;
      }
    }
    return false;
  }

 private:
  int value(const Term& t) const { return env_.at(t.name); }

  const Interpretation& m_;
  std::map<std::string, int> env_;
};

}  // namespace

bool evaluate(const Formula& f, const Interpretation& m, const std::map<std::string, int>& env) {
  std::vector<std::string> missing;
  for (const auto& n : free_vars(f))
    if (!env.contains(n)) missing.push_back(n);
  if (!missing.empty()) throw FreeVariableError(std::move(missing));
  for (const auto& [name, e] : env)
    if (e < 0 || e >= m.size()) throw Error("assignment of " + name + " is outside the domain");
  return Evaluator(m, env).eval(f);
}

}  // namespace folw::model
