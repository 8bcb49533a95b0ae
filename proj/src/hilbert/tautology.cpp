#include "folw/hilbert/tautology.hpp"

#include <functional>
#include <unordered_map>

namespace folw::hilbert {

bool Prop::eval(std::uint32_t a) const {
  switch (kind) {
    case Letter: return (a >> letter) & 1u;
    case False: return false;
    case Not: return !lhs->eval(a);
    case And: return lhs->eval(a) && rhs->eval(a);
    case Or: return lhs->eval(a) || rhs->eval(a);
    case Implies: return !lhs->eval(a) || rhs->eval(a);
    case Iff: return lhs->eval(a) == rhs->eval(a);
  }
  return false;
}

std::string letter_name(int letter) {
  static constexpr char kLetters[] = "pqrstuvw";
  if (letter < 8) return std::string(1, kLetters[letter]);
  return "p" + std::to_string(letter);
}

std::string render(const Prop& p) {
  auto wrap = [](const Prop& q) {
    return q.kind == Prop::Letter || q.kind == Prop::False || q.kind == Prop::Not
               ? render(q)
               : "(" + render(q) + ")";
  };
  switch (p.kind) {
    case Prop::Letter: return letter_name(p.letter);
    case Prop::False: return "false";
    case Prop::Not: return "!" + wrap(*p.lhs);
    case Prop::And: return wrap(*p.lhs) + " & " + wrap(*p.rhs);
    case Prop::Or: return wrap(*p.lhs) + " | " + wrap(*p.rhs);
    case Prop::Implies: return wrap(*p.lhs) + " -> " + wrap(*p.rhs);
    case Prop::Iff: return wrap(*p.lhs) + " <-> " + wrap(*p.rhs);
  }
  return "?";
}

namespace {

class Abstractor {
 public:
  explicit Abstractor(std::vector<Formula>& atoms) : atoms_(atoms) {
    for (std::size_t i = 0; i < atoms_.size(); ++i) letters_.emplace(alpha_key(atoms_[i]), i);
  }

  Prop run(const Formula& f) {
    auto node = [this](const Formula& g) { return std::make_shared<const Prop>(run(g)); };
    Prop p;
    switch (f.op()) {
      case Op::Falsum:
        p.kind = Prop::False;
        return p;
      case Op::Not:
        p.kind = Prop::Not;
        p.lhs = node(f.operand());
        return p;
      case Op::And: p.kind = Prop::And; break;
      case Op::Or: p.kind = Prop::Or; break;
      case Op::Implies: p.kind = Prop::Implies; break;
      case Op::Iff: p.kind = Prop::Iff; break;
      default: {
        auto [it, added] = letters_.emplace(alpha_key(f), atoms_.size());
        if (added) atoms_.push_back(f);
        p.kind = Prop::Letter;
        p.letter = static_cast<int>(it->second);
        return p;
      }
    }
    p.lhs = node(f.left());
    p.rhs = node(f.right());
    return p;
  }

 private:
  std::vector<Formula>& atoms_;
  std::unordered_map<std::string, std::size_t> letters_;
};

bool all_assignments(std::size_t atoms, const std::function<bool(std::uint32_t)>& holds,
                     std::optional<std::uint32_t>* falsifier) {
  if (atoms > static_cast<std::size_t>(kMaxAtoms)) {
    throw AtomBudgetError("propositional skeleton has " + std::to_string(atoms) +
                          " letters; at most " + std::to_string(kMaxAtoms) + " are checked");
  }
  const std::uint32_t rows = std::uint32_t{1} << atoms;
  for (std::uint32_t a = 0; a < rows; ++a) {
    if (!holds(a)) {
      if (falsifier) *falsifier = a;
      return false;
    }
  }
  return true;
}

}  // namespace

Skeleton skeletonize(const Formula& f) {
  Skeleton s;
  s.prop = Abstractor(s.atoms).run(f);
  return s;
}

std::vector<Prop> skeletonize_all(const std::vector<Formula>& fs, std::vector<Formula>& atoms) {
  Abstractor abs(atoms);
  std::vector<Prop> out;
  for (const auto& f : fs) out.push_back(abs.run(f));
  return out;
}

TautologyResult check_tautology(const Formula& f) {
  TautologyResult r;
  r.skeleton = skeletonize(f);
  const Prop& p = r.skeleton.prop;
  r.tautology = all_assignments(
      r.skeleton.atoms.size(), [&](std::uint32_t a) { return p.eval(a); }, &r.falsifier);
  return r;
}

bool propositional_consequence(const std::vector<Formula>& premises, const Formula& conclusion) {
  std::vector<Formula> all = premises;
  all.push_back(conclusion);
  std::vector<Formula> atoms;
  auto props = skeletonize_all(all, atoms);
  return all_assignments(
      atoms.size(),
      [&](std::uint32_t a) {
        for (std::size_t i = 0; i + 1 < props.size(); ++i) {
          if (!props[i].eval(a)) return true;
        }
        return props.back().eval(a);
      },
      nullptr);
}

}  // namespace folw::hilbert
