// 256 matrices per pass. Only the functions below are compiled for AVX2, so
// the rest of the library stays runnable on older CPUs.

#include "program.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define FOLW_HAVE_X86 1
#endif

namespace folw::model::detail {

#ifdef FOLW_HAVE_X86

namespace {

class Avx2 {
 public:
  __attribute__((target("avx2"))) Avx2(const Program& p, int n)
      : p_(p), n_(n), env_(static_cast<std::size_t>(p.slots), 0) {}

  __attribute__((target("avx2"))) __m256i run(const std::uint64_t* cells) {
    cells_ = cells;
    return eval(p_.root);
  }

 private:
  __attribute__((target("avx2"))) static __m256i ones() { return _mm256_set1_epi64x(-1); }
  __attribute__((target("avx2"))) static bool all_zero(__m256i v) { return _mm256_testz_si256(v, v); }
  __attribute__((target("avx2"))) static bool all_ones(__m256i v) { return _mm256_testc_si256(v, ones()); }

  __attribute__((target("avx2"))) __m256i eval(int idx) {
    const Instr& i = p_.code[static_cast<std::size_t>(idx)];
    switch (i.kind) {
      case Instr::False:
        return _mm256_setzero_si256();
      case Instr::In:
        return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(
            cells_ + 4 * (env_[static_cast<std::size_t>(i.a)] * n_ + env_[static_cast<std::size_t>(i.b)])));
      case Instr::Eq:
        return env_[static_cast<std::size_t>(i.a)] == env_[static_cast<std::size_t>(i.b)] ? ones()
                                                                                          : _mm256_setzero_si256();
      case Instr::Not:
        return _mm256_xor_si256(eval(i.a), ones());
      case Instr::And: {
        const __m256i l = eval(i.a);
        return all_zero(l) ? l : _mm256_and_si256(l, eval(i.b));
      }
      case Instr::Or: {
        const __m256i l = eval(i.a);
        return all_ones(l) ? l : _mm256_or_si256(l, eval(i.b));
      }
      case Instr::Implies: {
        const __m256i l = eval(i.a);
        return all_zero(l) ? ones() : _mm256_or_si256(_mm256_xor_si256(l, ones()), eval(i.b));
      }
      case Instr::Iff:
        return _mm256_xor_si256(_mm256_xor_si256(eval(i.a), eval(i.b)), ones());
      case Instr::Forall: {
        __m256i acc = ones();
        for (int e = 0; e < n_ && !all_zero(acc); ++e) {
          env_[static_cast<std::size_t>(i.a)] = e;
          acc = _mm256_and_si256(acc, eval(i.b));
        }
        return acc;
      }
      case Instr::Exists: {
        __m256i acc = _mm256_setzero_si256();
        for (int e = 0; e < n_ && !all_ones(acc); ++e) {
          env_[static_cast<std::size_t>(i.a)] = e;
          acc = _mm256_or_si256(acc, eval(i.b));
        }
        return acc;
      }
    }
    return _mm256_setzero_si256();
  }

  const Program& p_;
  int n_;
  std::vector<int> env_;
  const std::uint64_t* cells_ = nullptr;  // four words per cell
};

__attribute__((target("avx2"))) RawCount run_blocks(const Program& p, int n) {
  const int bits = n * n;
  const std::uint64_t total = 1ull << bits;
  std::vector<std::uint64_t> cells(4 * static_cast<std::size_t>(bits));
  Avx2 kernel(p, n);
  RawCount acc;
  std::uint64_t words[4];
  for (std::uint64_t base = 0; base < total; base += 256) {
    for (int k = 0; k < bits; ++k) {
      const int bit = bits - 1 - k;
      for (int w = 0; w < 4; ++w) {
        const std::uint64_t start = base + 64 * static_cast<std::uint64_t>(w);
        cells[4 * static_cast<std::size_t>(k) + static_cast<std::size_t>(w)] =
            bit < 6 ? kLaneBits[bit] : ((start >> bit) & 1 ? ~0ull : 0);
      }
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(words), kernel.run(cells.data()));
    for (int w = 0; w < 4; ++w) absorb(acc, base + 64 * static_cast<std::uint64_t>(w), words[w], ~0ull);
  }
  return acc;
}

}  // namespace

bool avx2_supported() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}

RawCount run_avx2(const Program& p, int n) {
  // Below 256 matrices a block would be mostly padding.
  if (n * n < 8 || !avx2_supported()) return run_portable(p, n);
  return run_blocks(p, n);
}

#else

bool avx2_supported() { return false; }
RawCount run_avx2(const Program& p, int n) { return run_portable(p, n); }

#endif

}  // namespace folw::model::detail
