#include "folw/syntax/definitions.hpp"

#include <set>

#include "folw/syntax/substitution.hpp"

namespace folw {

void DefinitionTable::add(Definition def) {
  if (defs_.contains(def.name)) throw DefinitionError("duplicate definition '" + def.name + "'");
  std::set<std::string> params;
  for (const auto& p : def.params) {
    if (!params.insert(p).second) {
      throw DefinitionError("definition '" + def.name + "' repeats parameter '" + p + "'");
    }
  }
  if (free_vars(def.body) != params) {
    throw DefinitionError("free names of '" + def.name + "' must be exactly its parameters");
  }
  if (mentions_application(def.body, def.name)) {
    throw DefinitionError("definition '" + def.name + "' is recursive");
  }
  // Every application in the body must refer to an earlier entry with the
  // right arity; unfold_known checks arity and we check the names here.
  struct Walker {
    const DefinitionTable& table;
    const std::string& owner;
    void operator()(const Formula& f) const {
      switch (f.op()) {
        case Op::Apply:
          if (!table.contains(f.name())) {
            throw DefinitionError("definition '" + owner + "' uses unknown '" + f.name() + "'");
          }
          return;
        case Op::In:
        case Op::Eq:
        case Op::Falsum:
          return;
        case Op::Not:
        case Op::Forall:
        case Op::Exists:
          (*this)(f.left());
          return;
        default:
          (*this)(f.left());
          (*this)(f.right());
      }
    }
  };
  Walker{*this, def.name}(def.body);
  unfold(*this, def.body);
  order_.push_back(def.name);
  std::string name = def.name;
  defs_.emplace(std::move(name), std::move(def));
}

const Definition* DefinitionTable::find(const std::string& name) const {
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

std::vector<std::string> DefinitionTable::names() const { return order_; }

namespace {

enum class Mode { All, One, Known };

Formula expand(const DefinitionTable& defs, const Formula& f, Mode mode, const std::string& only) {
  switch (f.op()) {
    case Op::Apply: {
      if (mode == Mode::One && f.name() != only) return f;
      const Definition* d = defs.find(f.name());
      if (d == nullptr) {
        if (mode == Mode::All || mode == Mode::One) {
          throw DefinitionError("unknown definition '" + f.name() + "'");
        }
        return f;
      }
      if (d->params.size() != f.terms().size()) {
        throw DefinitionError("'" + f.name() + "' expects " + std::to_string(d->params.size()) +
                              " arguments, got " + std::to_string(f.terms().size()));
      }
      std::map<std::string, Term> sigma;
      for (std::size_t i = 0; i < d->params.size(); ++i) sigma.emplace(d->params[i], f.terms()[i]);
      auto instance = substitute_all(d->body, sigma).formula;
      // The body may itself use earlier definitions.
      return mode == Mode::One ? instance : expand(defs, instance, mode, only);
    }
    case Op::In:
    case Op::Eq:
    case Op::Falsum:
      return f;
    case Op::Not: {
      auto inner = expand(defs, f.operand(), mode, only);
      return inner.same_node(f.operand()) ? f : Formula::not_(std::move(inner));
    }
    case Op::Forall:
    case Op::Exists: {
      auto inner = expand(defs, f.body(), mode, only);
      return inner.same_node(f.body()) ? f : Formula::quantifier(f.op(), f.name(), std::move(inner));
    }
    default: {
      auto l = expand(defs, f.left(), mode, only);
      auto r = expand(defs, f.right(), mode, only);
      if (l.same_node(f.left()) && r.same_node(f.right())) return f;
      return Formula::binary(f.op(), std::move(l), std::move(r));
    }
  }
}

}  // namespace

Formula unfold(const DefinitionTable& defs, const Formula& f) {
  return expand(defs, f, Mode::All, {});
}

Formula unfold_one(const DefinitionTable& defs, const std::string& only, const Formula& f) {
  return expand(defs, f, Mode::One, only);
}

Formula unfold_known(const DefinitionTable& defs, const Formula& f) {
  return expand(defs, f, Mode::Known, {});
}

bool mentions_application(const Formula& f, const std::string& name) {
  switch (f.op()) {
    case Op::Apply:
      return name.empty() || f.name() == name;
    case Op::In:
    case Op::Eq:
    case Op::Falsum:
      return false;
    case Op::Not:
    case Op::Forall:
    case Op::Exists:
      return mentions_application(f.left(), name);
    default:
      return mentions_application(f.left(), name) || mentions_application(f.right(), name);
  }
}

}  // namespace folw
