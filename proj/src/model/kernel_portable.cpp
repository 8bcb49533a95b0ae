#include <bit>
#include <string>

#include "folw/model/model.hpp"
#include "program.hpp"

namespace folw::model::detail {

namespace {

struct Compiler {
  Program prog;
  std::vector<std::pair<std::string, int>> scope;

  int slot_of(const Term& t) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == t.name) return it->second;
    return -1;
  }

  int emit(Instr i) {
    prog.code.push_back(i);
    return static_cast<int>(prog.code.size()) - 1;
  }

  int compile(const Formula& f) {
    switch (f.op()) {
      case Op::Falsum:
        return emit({Instr::False, 0, 0});
      case Op::In:
      case Op::Eq:
        return emit({f.is(Op::In) ? Instr::In : Instr::Eq, slot_of(f.lhs_term()), slot_of(f.rhs_term())});
      case Op::Apply:
        throw Error("cannot evaluate " + f.name() + "(...): unfold definitions first");
      case Op::Not: {
        const int c = compile(f.operand());
        return emit({Instr::Not, c, 0});
      }
      case Op::And:
      case Op::Or:
      case Op::Implies:
      case Op::Iff: {
        const int l = compile(f.left());
        const int r = compile(f.right());
        static constexpr Instr::Kind kinds[] = {Instr::And, Instr::Or, Instr::Implies, Instr::Iff};
        return emit({kinds[static_cast<int>(f.op()) - static_cast<int>(Op::And)], l, r});
      }
      case Op::Forall:
      case Op::Exists: {
        const int slot = prog.slots++;
        scope.emplace_back(f.name(), slot);
        const int body = compile(f.body());
        scope.pop_back();
        return emit({f.is(Op::Forall) ? Instr::Forall : Instr::Exists, slot, body});
      }
    }
    return emit({Instr::False, 0, 0});
  }
};

class Portable {
 public:
  Portable(const Program& p, int n) : p_(p), n_(n), env_(static_cast<std::size_t>(p.slots), 0) {}

  std::uint64_t run(const std::uint64_t* cells) {
    cells_ = cells;
    return eval(p_.root);
  }

 private:
  std::uint64_t eval(int idx) {
    const Instr& i = p_.code[static_cast<std::size_t>(idx)];
    switch (i.kind) {
      case Instr::False:
        return 0;
      case Instr::In:
        return cells_[env_[i.a] * n_ + env_[i.b]];
      case Instr::Eq:
        return env_[i.a] == env_[i.b] ? ~0ull : 0;
      case Instr::Not:
        return ~eval(i.a);
      case Instr::And: {
        const auto l = eval(i.a);
        return l == 0 ? 0 : l & eval(i.b);
      }
      case Instr::Or: {
        const auto l = eval(i.a);
        return l == ~0ull ? l : l | eval(i.b);
      }
      case Instr::Implies: {
        const auto l = eval(i.a);
        return l == 0 ? ~0ull : ~l | eval(i.b);
      }
      case Instr::Iff:
        return ~(eval(i.a) ^ eval(i.b));
      case Instr::Forall: {
        std::uint64_t acc = ~0ull;
        for (int e = 0; e < n_ && acc != 0; ++e) {
          env_[i.a] = e;
          acc &= eval(i.b);
        }
        return acc;
      }
      case Instr::Exists: {
        std::uint64_t acc = 0;
        for (int e = 0; e < n_ && acc != ~0ull; ++e) {
          env_[i.a] = e;
          acc |= eval(i.b);
        }
        return acc;
      }
    }
    return 0;
  }

  const Program& p_;
  int n_;
  std::vector<int> env_;
  const std::uint64_t* cells_ = nullptr;
};

}  // namespace

Program compile(const Formula& sentence) {
  const auto free = free_vars(sentence);
  std::vector<std::string> names(free.begin(), free.end());
  if (!names.empty()) throw FreeVariableError(std::move(names));
  Compiler c;
  c.prog.root = c.compile(sentence);
  return std::move(c.prog);
}

void absorb(RawCount& acc, std::uint64_t base, std::uint64_t word, std::uint64_t valid) {
  const std::uint64_t sat = word & valid;
  const std::uint64_t unsat = ~word & valid;
  acc.models += static_cast<std::uint64_t>(std::popcount(sat));
  if (!acc.first_model && sat) acc.first_model = base + static_cast<std::uint64_t>(std::countr_zero(sat));
  if (!acc.first_countermodel && unsat)
    acc.first_countermodel = base + static_cast<std::uint64_t>(std::countr_zero(unsat));
}

RawCount run_portable(const Program& p, int n) {
  const int bits = n * n;
  const std::uint64_t total = 1ull << bits;
  const std::uint64_t valid = total >= 64 ? ~0ull : (1ull << total) - 1;
  std::vector<std::uint64_t> cells(static_cast<std::size_t>(bits));
  Portable kernel(p, n);
  RawCount acc;
  for (std::uint64_t base = 0; base < total; base += 64) {
    for (int k = 0; k < bits; ++k) {
      const int bit = bits - 1 - k;
      cells[static_cast<std::size_t>(k)] = bit < 6 ? kLaneBits[bit] : ((base >> bit) & 1 ? ~0ull : 0);
    }
    absorb(acc, base, kernel.run(cells.data()), valid);
  }
  return acc;
}

}  // namespace folw::model::detail
