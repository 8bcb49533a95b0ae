#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "folw/syntax/document.hpp"

namespace folw::corpus {

class IoError : public Error {
 public:
  using Error::Error;
};

enum class Kind { TableauClosed, TableauOpen, ScriptAccepted, ModelValid, ModelUnsat };

const char* kind_name(Kind k);

/// How a tableau entry uses its formulas: `prove` takes the single formula
/// as a goal, `refute` takes every formula as a root premise.
enum class Mode { Prove, Refute };

struct Entry {
  std::string id;
  Kind kind = Kind::TableauClosed;
  std::filesystem::path input;  // absolute
  Mode mode = Mode::Prove;
  /// Rendered expectation, compared verbatim with the rendered outcome.
  std::string expected;
  // Kind-specific expectations.
  int closures = -1;                              // tableau-closed
  std::string outcome = "budget";                 // tableau-open: "budget" or "open"
  std::vector<std::vector<std::string>> branches;  // tableau-open: formulas some open branch holds
  std::vector<int> hypotheses;                    // script-accepted
  int max_size = 3;                               // model-*
  std::vector<std::uint64_t> counts;              // model-*: per size, optional
};

/// Reads a manifest (JSON: {"entries": [...]}); inputs resolve against its
/// directory. Entries come back sorted by id; duplicate ids are an error.
std::vector<Entry> load_manifest(const std::filesystem::path& manifest);

/// Throws IoError when the file can't be read.
std::string read_file(const std::filesystem::path& path);

/// The single sentence an entry stands for: the goal, or the negated
/// conjunction of the premises for a refutation. Definitions stay folded.
Formula entry_sentence(const Entry& e, const Document& doc);

struct Result {
  std::string id;
  Kind kind = Kind::TableauClosed;
  bool passed = false;
  std::string expected;
  std::string actual;
  long long millis = 0;
};

struct Report {
  std::vector<Result> results;

  std::size_t passed() const;
  std::size_t failed() const { return results.size() - passed(); }
  /// One line per entry plus a summary. Timings are left out unless asked
  /// for, so that repeated runs produce identical text.
  std::string format(bool timings = false) const;
};

Result run_entry(const Entry& e);

/// Runs the entries whose id matches the shell-style `filter` (all if empty).
Report run(const std::vector<Entry>& entries, const std::string& filter = {});

bool id_matches(const std::string& id, const std::string& filter);

}  // namespace folw::corpus
