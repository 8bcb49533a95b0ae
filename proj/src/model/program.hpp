#pragma once

// Compiled form of a sentence shared by the bitsliced kernels. Every binder
// gets its own slot; atoms refer to slots.

#include <cstdint>
#include <optional>
#include <vector>

#include "folw/syntax/formula.hpp"

namespace folw::model::detail {

struct Instr {
  enum Kind : std::uint8_t { False, In, Eq, Not, And, Or, Implies, Iff, Forall, Exists } kind = False;
  int a = 0;  // In/Eq: lhs slot; Not/binary: left child; quantifier: slot
  int b = 0;  // In/Eq: rhs slot; binary: right child; quantifier: body
};

struct Program {
  std::vector<Instr> code;
  int root = 0;
  int slots = 0;
};

Program compile(const Formula& sentence);

struct RawCount {
  std::uint64_t models = 0;
  std::optional<std::uint64_t> first_model;
  std::optional<std::uint64_t> first_countermodel;
};

/// Lane masks for the low six index bits: bit l of kLaneBits[p] is bit p of l.
inline constexpr std::uint64_t kLaneBits[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

/// Folds one 64-lane result word starting at matrix index `base` into `acc`.
void absorb(RawCount& acc, std::uint64_t base, std::uint64_t word, std::uint64_t valid);

RawCount run_portable(const Program& p, int n);
bool avx2_supported();
RawCount run_avx2(const Program& p, int n);

}  // namespace folw::model::detail
