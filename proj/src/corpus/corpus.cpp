#include "folw/corpus/corpus.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "folw/hilbert/checker.hpp"
#include "folw/hilbert/script.hpp"
#include "folw/model/model.hpp"
#include "folw/syntax/render.hpp"
#include "folw/tableau/tableau.hpp"
#include "json.hpp"

namespace folw::corpus {

namespace {

using nlohmann::json;

Kind parse_kind(const std::string& s) {
  for (Kind k : {Kind::TableauClosed, Kind::TableauOpen, Kind::ScriptAccepted, Kind::ModelValid, Kind::ModelUnsat})
    if (s == kind_name(k)) return k;
  throw Error("unknown corpus kind '" + s + "'");
}

std::string braces(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "}";
}

std::string counts_text(const std::vector<std::uint64_t>& counts) {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) out += (i ? "/" : "") + std::to_string(counts[i]);
  return out;
}

std::string describe_expected(const Entry& e) {
  switch (e.kind) {
    case Kind::TableauClosed:
      return "closed, " + std::to_string(e.closures) + " closures";
    case Kind::TableauOpen: {
      std::string out = e.outcome;
      for (const auto& b : e.branches) out += ", branch " + braces(b);
      return out;
    }
    case Kind::ScriptAccepted: {
      std::vector<std::string> hyps;
      for (int h : e.hypotheses) hyps.push_back(std::to_string(h));
      return "accepted, hypotheses " + braces(hyps);
    }
    case Kind::ModelValid:
    case Kind::ModelUnsat: {
      std::string out = std::string(e.kind == Kind::ModelValid ? "valid-up-to " : "unsat-up-to ") +
                        std::to_string(e.max_size);
      if (!e.counts.empty()) out += ", models " + counts_text(e.counts);
      return out;
    }
  }
  return {};
}

Document load_document(const Entry& e) { return parse_document(read_file(e.input)); }

std::string run_tableau(const Entry& e) {
  const auto doc = load_document(e);
  if (doc.formulas.empty()) throw Error("no formula in " + e.input.filename().string());
  auto res = e.mode == Mode::Prove ? tableau::prove(entry_sentence(e, doc)) : tableau::refute(doc.formulas);
  const auto& t = res.tree;
  if (e.kind == Kind::TableauClosed || res.outcome == tableau::Outcome::Closed) {
    if (res.outcome != tableau::Outcome::Closed) return tableau::outcome_name(res.outcome);
    int closures = 0;
    for (int leaf : t.leaves()) closures += t.boxes()[static_cast<std::size_t>(leaf)].closure ? 1 : 0;
    return "closed, " + std::to_string(closures) + " closures";
  }
  std::string out = tableau::outcome_name(res.outcome);
  std::vector<std::set<std::string>> open;
  for (int leaf : res.open_branches) {
    std::set<std::string> fs;
    for (int id : t.branch_formulas(leaf)) fs.insert(render(t.formula(id)));
    open.push_back(std::move(fs));
  }
  for (const auto& want : e.branches) {
    const bool found = std::any_of(open.begin(), open.end(), [&](const std::set<std::string>& fs) {
      return std::all_of(want.begin(), want.end(), [&](const std::string& f) { return fs.contains(f); });
    });
    out += (found ? ", branch " : ", no branch ") + braces(want);
  }
  return out;
}

std::string run_script(const Entry& e) {
  const auto script = hilbert::parse_script(read_file(e.input));
  const auto v = hilbert::check(script);
  if (!v.accepted) return "rejected at line " + std::to_string(v.step) + ": " + v.reason;
  std::vector<std::string> hyps;
  for (int h : v.hypotheses) hyps.push_back(std::to_string(h));
  return "accepted, hypotheses " + braces(hyps);
}

std::string run_models(const Entry& e) {
  const auto doc = load_document(e);
  const auto sentence = model::universal_closure(unfold(doc.defs, entry_sentence(e, doc)));
  const auto report = model::validity_sweep(sentence, e.max_size);
  std::string out = model::verdict_name(report.verdict);
  if (report.verdict != model::Verdict::Mixed) out += " " + std::to_string(e.max_size);
  if (!e.counts.empty()) {
    std::vector<std::uint64_t> counts;
    for (const auto& s : report.per_size) counts.push_back(s.models);
    out += ", models " + counts_text(counts);
  }
  return out;
}

}  // namespace

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::TableauClosed:
      return "tableau-closed";
    case Kind::TableauOpen:
      return "tableau-open";
    case Kind::ScriptAccepted:
      return "script-accepted";
    case Kind::ModelValid:
      return "model-valid";
    case Kind::ModelUnsat:
      return "model-unsat";
  }
  return "?";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Entry> load_manifest(const std::filesystem::path& manifest) {
  const json doc = json::parse(read_file(manifest));
  const auto dir = std::filesystem::absolute(manifest).parent_path();
  std::vector<Entry> entries;
  std::set<std::string> ids;
  for (const auto& j : doc.at("entries")) {
    Entry e;
    e.id = j.at("id").get<std::string>();
    if (!ids.insert(e.id).second) throw Error("duplicate corpus id '" + e.id + "'");
    e.kind = parse_kind(j.at("kind").get<std::string>());
    e.input = dir / j.at("input").get<std::string>();
    e.mode = j.value("mode", std::string("prove")) == "refute" ? Mode::Refute : Mode::Prove;
    const json expect = j.value("expect", json::object());
    e.closures = expect.value("closures", -1);
    e.outcome = expect.value("outcome", std::string("budget"));
    e.branches = expect.value("branches", std::vector<std::vector<std::string>>{});
    e.hypotheses = expect.value("hypotheses", std::vector<int>{});
    e.max_size = expect.value("max_size", 3);
    e.counts = expect.value("counts", std::vector<std::uint64_t>{});
    e.expected = describe_expected(e);
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
  return entries;
}

Formula entry_sentence(const Entry& e, const Document& doc) {
  if (doc.formulas.empty()) throw Error("no formula in " + e.input.filename().string());
  Formula all = doc.formulas.front();
  for (std::size_t i = 1; i < doc.formulas.size(); ++i) all = Formula::and_(all, doc.formulas[i]);
  return e.mode == Mode::Refute ? Formula::not_(all) : all;
}

Result run_entry(const Entry& e) {
  Result r{e.id, e.kind, false, e.expected, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (e.kind) {
      case Kind::TableauClosed:
      case Kind::TableauOpen:
        r.actual = run_tableau(e);
        break;
      case Kind::ScriptAccepted:
        r.actual = run_script(e);
        break;
      case Kind::ModelValid:
      case Kind::ModelUnsat:
        r.actual = run_models(e);
        break;
    }
  } catch (const std::exception& ex) {
    r.actual = std::string("error: ") + ex.what();
  }
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  r.passed = r.actual == r.expected;
  return r;
}

bool id_matches(const std::string& id, const std::string& filter) {
  return filter.empty() || fnmatch(filter.c_str(), id.c_str(), 0) == 0;
}

Report run(const std::vector<Entry>& entries, const std::string& filter) {
  Report report;
  for (const auto& e : entries)
    if (id_matches(e.id, filter)) report.results.push_back(run_entry(e));
  return report;
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const Result& r) { return r.passed; }));
}

std::string Report::format(bool timings) const {
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.id.size());
  std::ostringstream out;
  for (const auto& r : results) {
    out << r.id << std::string(width - r.id.size() + 2, ' ') << (r.passed ? "PASS" : "FAIL") << "  expected: "
        << r.expected << "  actual: " << r.actual;
    if (timings) out << "  " << r.millis << " ms";
    out << '\n';
  }
  out << "summary: " << results.size() << " entries, " << passed() << " passed, " << failed() << " failed\n";
  return out.str();
}

}  // namespace folw::corpus
