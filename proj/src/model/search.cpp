#include <set>
#include <sstream>

#include "folw/model/model.hpp"
#include "folw/syntax/render.hpp"
#include "program.hpp"

namespace folw::model {

const char* kernel_name(Kernel k) {
  switch (k) {
    case Kernel::Auto:
      return "auto";
    case Kernel::Scalar:
      return "scalar";
    case Kernel::Portable64:
      return "portable64";
    case Kernel::Avx2:
      return "avx2";
  }
  return "?";
}

bool kernel_available(Kernel k) { return k != Kernel::Avx2 || detail::avx2_supported(); }

Kernel best_kernel() { return detail::avx2_supported() ? Kernel::Avx2 : Kernel::Portable64; }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ValidUpTo:
      return "valid-up-to";
    case Verdict::UnsatUpTo:
      return "unsat-up-to";
    case Verdict::Mixed:
      return "mixed";
  }
  return "?";
}

namespace {

detail::RawCount run_scalar(const Formula& sentence, int n) {
  detail::RawCount acc;
  const std::uint64_t total = 1ull << (n * n);
  for (std::uint64_t index = 0; index < total; ++index) {
    if (evaluate(sentence, Interpretation::from_index(n, index))) {
      ++acc.models;
      if (!acc.first_model) acc.first_model = index;
    } else if (!acc.first_countermodel) {
      acc.first_countermodel = index;
    }
  }
  return acc;
}

void check_size(int size, Limits limits) {
  if (size < 1) throw SizeLimitError("domain size must be at least 1");
  if (size > limits.cap()) {
    std::string msg = "domain size " + std::to_string(size) + " exceeds the cap of " + std::to_string(limits.cap());
    if (!limits.allow_large && size <= kHardMaxSize) msg += " (allow large sizes to go up to " + std::to_string(kHardMaxSize) + ")";
    throw SizeLimitError(msg);
  }
}

void closure_names(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out) {
  auto note = [&](const Term& t) {
    for (const auto& b : bound)
      if (b == t.name) return;
    for (const auto& o : out)
      if (o == t.name) return;
    out.push_back(t.name);
  };
  if (is_atomic(f.op())) {
    for (const auto& t : f.terms()) note(t);
  } else if (is_quantifier(f.op())) {
    bound.push_back(f.name());
    closure_names(f.body(), bound, out);
    bound.pop_back();
  } else if (f.is(Op::Not)) {
    closure_names(f.operand(), bound, out);
  } else {
    closure_names(f.left(), bound, out);
    closure_names(f.right(), bound, out);
  }
}

}  // namespace

SizeCount enumerate(const Formula& sentence, int size, Limits limits, Kernel kernel) {
  check_size(size, limits);
  if (kernel == Kernel::Auto) kernel = best_kernel();
  if (!kernel_available(kernel)) throw Error(std::string("kernel not supported on this CPU: ") + kernel_name(kernel));
  detail::RawCount raw;
  if (kernel == Kernel::Scalar) {
    detail::compile(sentence);  // same errors as the other kernels
    raw = run_scalar(sentence, size);
  } else {
    const auto program = detail::compile(sentence);
    raw = kernel == Kernel::Avx2 ? detail::run_avx2(program, size) : detail::run_portable(program, size);
  }
  SizeCount out;
  out.size = size;
  out.matrices = 1ull << (size * size);
  out.models = raw.models;
  if (raw.first_model) out.first_model = Interpretation::from_index(size, *raw.first_model);
  if (raw.first_countermodel) out.first_countermodel = Interpretation::from_index(size, *raw.first_countermodel);
  return out;
}

SearchReport validity_sweep(const Formula& sentence, int max_size, Limits limits, Kernel kernel) {
  check_size(max_size, limits);
  SearchReport report{sentence, max_size, {}, Verdict::Mixed, {}, {}};
  bool all_valid = true;
  bool all_unsat = true;
  for (int n = 1; n <= max_size; ++n) {
    auto count = enumerate(sentence, n, limits, kernel);
    all_valid = all_valid && count.models == count.matrices;
    all_unsat = all_unsat && count.models == 0;
    if (!report.model && count.first_model) report.model = count.first_model;
    if (!report.countermodel && count.first_countermodel) report.countermodel = count.first_countermodel;
    report.per_size.push_back(std::move(count));
  }
  report.verdict = all_valid ? Verdict::ValidUpTo : all_unsat ? Verdict::UnsatUpTo : Verdict::Mixed;
  return report;
}

std::string format_report(const SearchReport& report, bool dump_first) {
  std::ostringstream out;
  out << "sentence: " << render(report.sentence) << '\n';
  out << "size  matrices  models  first\n";
  for (const auto& s : report.per_size) {
    std::string matrices = std::to_string(s.matrices);
    std::string models = std::to_string(s.models);
    out << s.size << std::string(6 - std::to_string(s.size).size(), ' ') << matrices
        << std::string(matrices.size() < 10 ? 10 - matrices.size() : 1, ' ') << models
        << std::string(models.size() < 8 ? 8 - models.size() : 1, ' ')
        << (s.first_model ? "#" + std::to_string(s.first_model->index()) : std::string("-")) << '\n';
  }
  out << "verdict: " << verdict_name(report.verdict);
  if (report.verdict == Verdict::Mixed)
    out << " (countermodel at size " << report.countermodel->size() << ", model at size " << report.model->size()
        << ")";
  else
    out << ' ' << report.max_size;
  out << '\n';
  if (dump_first) {
    for (const auto& s : report.per_size) {
      if (s.first_model)
        out << "first model, size " << s.size << ":\n" << s.first_model->dump();
      else
        out << "no model of size " << s.size << '\n';
    }
    if (report.countermodel)
      out << "first countermodel, size " << report.countermodel->size() << ":\n" << report.countermodel->dump();
  }
  return out.str();
}

Formula universal_closure(const Formula& f) {
  std::vector<std::string> bound;
  std::vector<std::string> names;
  closure_names(f, bound, names);
  Formula out = f;
  for (auto it = names.rbegin(); it != names.rend(); ++it) out = Formula::forall(*it, out);
  return out;
}

}  // namespace folw::model
