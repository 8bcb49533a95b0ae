#pragma once

// Random formula generator shared by the property tests and the acceptance
// suite. Deterministic for a given seed.

#include <random>
#include <string>
#include <vector>

#include "folw/syntax/formula.hpp"

namespace folw::testing {

class FormulaGen {
 public:
  explicit FormulaGen(std::uint64_t seed) : rng_(seed) {}

  Formula formula(int depth) {
    std::vector<std::string> scope;
    return gen(depth, scope);
  }

  Term term() { return Term::constant(pick(names_)); }
  std::string name() { return pick(names_); }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  const std::string& pick(const std::vector<std::string>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

  Term term_in(const std::vector<std::string>& scope) {
    const std::string& n = pick(names_);
    for (const auto& s : scope)
      if (s == n) return Term::var(n);
    return Term::constant(n);
  }

  Formula atom(const std::vector<std::string>& scope) {
    switch (uniform(0, 5)) {
      case 0:
        return Formula::falsum();
      case 1:
      case 2:
        return Formula::in(term_in(scope), term_in(scope));
      case 3:
        return Formula::eq(term_in(scope), term_in(scope));
      case 4:
        return Formula::apply("p", {term_in(scope)});
      default:
        return Formula::apply("q", {term_in(scope), term_in(scope)});
    }
  }

  Formula gen(int depth, std::vector<std::string>& scope) {
    if (depth <= 1 || uniform(0, 9) < 2) return atom(scope);
    switch (uniform(0, 7)) {
      case 0:
        return Formula::not_(gen(depth - 1, scope));
      case 1:
      case 2: {
        const Op op = uniform(0, 1) == 0 ? Op::Forall : Op::Exists;
        std::string v = pick(names_);
        scope.push_back(v);
        auto body = gen(depth - 1, scope);
        scope.pop_back();
        return Formula::quantifier(op, v, body);
      }
      default: {
        static constexpr Op ops[] = {Op::And, Op::Or, Op::Implies, Op::Iff};
        const Op op = ops[uniform(0, 3)];
        auto l = gen(depth - 1, scope);
        auto r = gen(depth - 1, scope);
        return Formula::binary(op, l, r);
      }
    }
  }

  std::mt19937_64 rng_;
  std::vector<std::string> names_{"x", "y", "z", "r", "a", "b"};
};

inline int depth_of(const Formula& f) {
  switch (f.op()) {
    case Op::In:
    case Op::Eq:
    case Op::Apply:
    case Op::Falsum:
      return 1;
    case Op::Not:
    case Op::Forall:
    case Op::Exists:
      return 1 + depth_of(f.left());
    default: {
      const int l = depth_of(f.left());
      const int r = depth_of(f.right());
      return 1 + (l > r ? l : r);
    }
  }
}

}  // namespace folw::testing
