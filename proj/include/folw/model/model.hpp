#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folw/syntax/formula.hpp"

namespace folw::model {

class FreeVariableError : public Error {
 public:
  explicit FreeVariableError(std::vector<std::string> names);
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// A finite domain {0, ..., size-1} with a membership matrix. Identity is
/// the equality of the domain.
class Interpretation {
 public:
  explicit Interpretation(int size);
  /// The matrix with row-major enumeration index `index` (cell (0,0) is the
  /// most significant bit).
  static Interpretation from_index(int size, std::uint64_t index);

  int size() const { return size_; }
  bool member(int i, int j) const { return cells_[cell(i, j)] != 0; }
  void set_member(int i, int j, bool v) { cells_[cell(i, j)] = v ? 1 : 0; }
  std::uint64_t index() const;

  /// One row per element, e.g. "01\n00\n".
  std::string dump() const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  std::size_t cell(int i, int j) const;
  int size_;
  std::vector<std::uint8_t> cells_;
};

/// Reference evaluator. `env` assigns domain elements to free names; any
/// free name without an entry raises FreeVariableError. Definition
/// applications must be unfolded beforehand.
bool evaluate(const Formula& f, const Interpretation& m, const std::map<std::string, int>& env = {});

/// Bitsliced evaluation kernels: each checks a block of consecutive matrices
/// per pass. All give identical results; Auto picks the widest one the CPU
/// supports.
enum class Kernel { Auto, Scalar, Portable64, Avx2 };

const char* kernel_name(Kernel k);
bool kernel_available(Kernel k);
Kernel best_kernel();

inline constexpr int kDefaultMaxSize = 4;
inline constexpr int kHardMaxSize = 5;

struct Limits {
  /// Raises the size cap from kDefaultMaxSize to kHardMaxSize (2^25 matrices).
  bool allow_large = false;

  int cap() const { return allow_large ? kHardMaxSize : kDefaultMaxSize; }
};

struct SizeCount {
  int size = 0;
  std::uint64_t matrices = 0;
  std::uint64_t models = 0;
  std::optional<Interpretation> first_model;
  std::optional<Interpretation> first_countermodel;
};

/// Counts the matrices of the given size satisfying a sentence, visiting them
/// in row-major lexicographic order.
SizeCount enumerate(const Formula& sentence, int size, Limits limits = {}, Kernel kernel = Kernel::Auto);

enum class Verdict { ValidUpTo, UnsatUpTo, Mixed };

const char* verdict_name(Verdict v);

struct SearchReport {
  Formula sentence;
  int max_size = 0;
  std::vector<SizeCount> per_size;
  Verdict verdict = Verdict::Mixed;
  /// Lexicographically least at the smallest size where one exists.
  std::optional<Interpretation> countermodel;
  std::optional<Interpretation> model;
};

SearchReport validity_sweep(const Formula& sentence, int max_size, Limits limits = {},
                            Kernel kernel = Kernel::Auto);

/// Plain-text table; with `dump_first`, the first model (or countermodel)
/// of each size as 0/1 rows.
std::string format_report(const SearchReport& report, bool dump_first = false);

/// forall-closes the free names of `f`, in order of first appearance.
Formula universal_closure(const Formula& f);

}  // namespace folw::model
