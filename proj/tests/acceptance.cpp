// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "corpus_files.hpp"
#include "folw/corpus/corpus.hpp"
#include "folw/hilbert/checker.hpp"
#include "folw/hilbert/script.hpp"
#include "folw/model/model.hpp"
#include "folw/syntax/document.hpp"
#include "folw/syntax/render.hpp"
#include "folw/syntax/substitution.hpp"
#include "folw/tableau/tableau.hpp"
#include "generators.hpp"
#include "tableau_fixtures.hpp"

namespace {

using namespace folw;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << v;
  return out.str();
}

Document load(const std::string& name) { return parse_document(testing::read_corpus(name)); }

std::vector<std::string> branch(const tableau::Tableau& t, int leaf) {
  std::vector<std::string> out;
  for (int id : t.branch_formulas(leaf)) out.push_back(render(t.formula(id)));
  return out;
}

bool holds(const std::vector<std::string>& fs, const std::string& f) {
  return std::find(fs.begin(), fs.end(), f) != fs.end();
}

std::vector<int> closed_leaves(const tableau::Tableau& t) {
  std::vector<int> out;
  for (int leaf : t.leaves())
    if (t.boxes()[static_cast<std::size_t>(leaf)].closure) out.push_back(leaf);
  return out;
}

// The pair (or single formula) a closed leaf was closed on.
std::string closure_text(const tableau::Tableau& t, int leaf) {
  const auto& c = *t.boxes()[static_cast<std::size_t>(leaf)].closure;
  std::string out = render(t.formula(c.negative));
  if (c.positive >= 0) out = render(t.formula(c.positive)) + " / " + out;
  return out;
}

Outcome figures() {
  Outcome o;
  struct Fig {
    const char* file;
    bool refute;
    std::vector<std::string> closures;  // empty: only the count of 2 is checked
  };
  const std::vector<Fig> closed = {
      {"fig1.fol", true, {"a in a / a notin a", "a in a / a notin a"}},
      {"fig3.fol", true, {}},
      {"fig4.fol", false, {"phi(r, r) / !phi(r, r)", "r != r"}},
      {"fig5.fol", false, {}},
      {"fig6.fol", true, {}},
  };
  for (const auto& f : closed) {
    const auto doc = load(f.file);
    const auto start = Clock::now();
    auto res = f.refute ? tableau::refute(doc.formulas) : tableau::prove(doc.formulas.front());
    const double secs = seconds_since(start);
    const auto& t = res.tree;
    const std::string name = std::string(f.file).substr(0, 4);
    o.require(res.outcome == tableau::Outcome::Closed, name + " closes");
    o.require(t.applications() <= 500, name + " within 500 rule applications");
    o.require(secs < 1.0, name + " under 1 s");
    const auto leaves = closed_leaves(t);
    o.require(leaves.size() == 2 && t.leaves().size() == 2, name + " has exactly two closed leaves");
    if (!f.closures.empty()) {
      std::vector<std::string> got;
      for (int leaf : leaves) got.push_back(closure_text(t, leaf));
      o.require(got == f.closures, name + " closes on the drawn pairs");
    }
    if (name == "fig3") {
      const auto b = branch(t, leaves.front());
      o.require(holds(b, "x = y") && holds(b, "x in x <-> x notin x"), "fig3 rewrites y to x before closing");
    }
    o.note(name + ": closed, " + std::to_string(t.applications()) + " rules, " + fixed(secs) + " s");
  }

  const auto doc = load("fig2.fol");
  auto res = tableau::refute(doc.formulas);
  o.require(res.outcome == tableau::Outcome::BudgetExhausted, "fig2 exhausts its budget");
  bool in_in = false;
  bool out_out = false;
  for (int leaf : res.open_branches) {
    const auto b = branch(res.tree, leaf);
    in_in |= holds(b, "b in a") && holds(b, "b in b");
    out_out |= holds(b, "b notin a") && holds(b, "b notin b");
  }
  o.require(in_in && out_out, "fig2 has open branches {b in a, b in b} and {b notin a, b notin b}");
  o.note("fig2: " + std::string(tableau::outcome_name(res.outcome)) + " after " +
         std::to_string(res.tree.applications()) + " rules, " + std::to_string(res.open_branches.size()) +
         " open branches");
  return o;
}

Outcome theorems() {
  Outcome o;
  for (const auto& goal : {"!" + std::string(testing::kRussell), std::string(testing::kDistinctness)}) {
    const auto start = Clock::now();
    auto res = tableau::prove(parse(goal));
    const double secs = seconds_since(start);
    o.require(res.outcome == tableau::Outcome::Closed, goal + " closes");
    o.require(secs < 1.0, goal + " under 1 s");
    o.note(std::string(tableau::outcome_name(res.outcome)) + " in " + fixed(secs) + " s: " + goal);
  }
  return o;
}

struct Mutation {
  std::string script;
  int line = 0;
  int old_ref = 0;
  int new_ref = 0;
  hilbert::Script mutated;
};

// Every way of redirecting one cited index to another earlier line, in
// script order.
std::vector<Mutation> single_index_mutations(const std::string& name, const hilbert::Script& s) {
  std::vector<Mutation> out;
  for (std::size_t k = 0; k < s.steps.size(); ++k) {
    const auto& refs = s.steps[k].justification.refs;
    for (std::size_t r = 0; r < refs.size(); ++r) {
      for (const auto& earlier : s.steps) {
        if (earlier.index >= s.steps[k].index) break;
        if (earlier.index == refs[r]) continue;
        Mutation m{name, s.steps[k].index, refs[r], earlier.index, s};
        m.mutated.steps[k].justification.refs[r] = earlier.index;
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

Outcome scripts() {
  Outcome o;
  std::vector<std::vector<Mutation>> per_script;
  for (const char* name : testing::kScripts) {
    const auto script = hilbert::parse_script(testing::read_corpus(name));
    const auto v = hilbert::check(script);
    o.require(v.accepted, std::string(name) + " accepted" + (v.accepted ? "" : " (line " + std::to_string(v.step) + ": " + v.reason + ")"));
    per_script.push_back(single_index_mutations(name, script));
  }
  // Four per script, evenly spaced through each script's list, interleaved.
  std::vector<const Mutation*> suite;
  for (int i = 0; i < 4; ++i)
    for (const auto& all : per_script)
      if (!all.empty()) suite.push_back(&all[all.size() * static_cast<std::size_t>(i) / 4]);
  o.require(suite.size() == 20, "mutation suite has 20 cases");
  int rejected = 0;
  std::string listing;
  for (const auto* m : suite) {
    listing += (listing.empty() ? "" : ", ") + m->script.substr(0, m->script.find('.')) + ":" +
               std::to_string(m->line) + " " + std::to_string(m->old_ref) + "->" + std::to_string(m->new_ref);
    const bool ok = !hilbert::check(m->mutated).accepted;
    rejected += ok ? 1 : 0;
    o.require(ok, m->script + " line " + std::to_string(m->line) + " citing " + std::to_string(m->new_ref) +
                      " instead of " + std::to_string(m->old_ref) + " is rejected");
  }
  o.note("5 scripts accepted; " + std::to_string(rejected) + "/" + std::to_string(suite.size()) +
         " mutations rejected");
  o.note("suite: " + listing);
  return o;
}

Outcome models() {
  Outcome o;
  const auto r = parse(testing::kRussell);
  const auto start = Clock::now();
  const std::uint64_t matrices[] = {2, 16, 512};
  for (int n = 1; n <= 3; ++n) {
    const auto c = model::enumerate(r, n);
    o.require(c.matrices == matrices[n - 1] && c.models == 0 && !c.first_model,
              "no model of size " + std::to_string(n) + " among " + std::to_string(matrices[n - 1]));
  }
  const double secs = seconds_since(start);
  o.require(secs < 1.0, "enumeration under 1 s");
  const auto sweep = model::validity_sweep(parse(testing::kDistinctness), 3);
  o.require(sweep.verdict == model::Verdict::ValidUpTo, "distinctness valid up to 3");
  o.note("0/0/0 models over 2/16/512 matrices in " + fixed(secs) + " s; distinctness " +
         model::verdict_name(sweep.verdict) + " 3; kernel " + model::kernel_name(model::best_kernel()));
  return o;
}

Outcome cross_engine() {
  Outcome o;
  std::vector<std::pair<std::string, Formula>> sentences;  // label, folded sentence
  std::map<std::string, DefinitionTable> defs;
  const auto entries = corpus::load_manifest(testing::corpus_path("corpus.json"));
  std::set<std::string> seen;
  for (const auto& e : entries) {
    if (e.kind == corpus::Kind::ScriptAccepted) continue;
    const auto doc = parse_document(corpus::read_file(e.input));
    const auto label = e.input.filename().string() + (e.mode == corpus::Mode::Refute ? " (refuted)" : "");
    if (!seen.insert(label).second) continue;
    defs[label] = doc.defs;
    sentences.emplace_back(label, corpus::entry_sentence(e, doc));
  }
  for (const char* name : testing::kScripts) {
    const auto script = hilbert::parse_script(testing::read_corpus(name));
    for (const auto& s : script.steps) {
      const auto label = std::string(name) + " line " + std::to_string(s.index);
      defs[label] = script.defs;
      sentences.emplace_back(label, s.formula);
    }
  }
  int closed = 0;
  int discrepancies = 0;
  for (const auto& [label, f] : sentences) {
    const auto goal = model::universal_closure(f);
    if (tableau::prove(goal).outcome != tableau::Outcome::Closed) continue;
    ++closed;
    const auto sweep = model::validity_sweep(unfold(defs[label], goal), 3);
    if (sweep.verdict != model::Verdict::ValidUpTo) {
      ++discrepancies;
      o.require(false, label + " closes but is " + model::verdict_name(sweep.verdict));
    }
  }
  o.require(closed > 0, "some corpus sentence closes");
  o.note(std::to_string(sentences.size()) + " corpus sentences, " + std::to_string(closed) +
         " closed, all valid up to 3; " + std::to_string(discrepancies) + " discrepancies");
  return o;
}

Outcome syntax_properties() {
  Outcome o;
  testing::FormulaGen gen(0xacce97);
  int round_trips = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto f = gen.formula(6);
    if (testing::depth_of(f) <= 6 && alpha_equal(parse(render(f)), f)) ++round_trips;
  }
  o.require(round_trips == 1000, std::to_string(1000 - round_trips) + " round trips lost alpha-equivalence");
  int law = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto f = gen.formula(6);
    const auto var = gen.name();
    const auto t = gen.term();
    auto expected = free_vars(f);
    const bool was_free = expected.erase(var) > 0;
    if (was_free) expected.insert(t.name);
    if (free_vars(substitute(f, var, t)) == expected) ++law;
  }
  o.require(law == 1000, std::to_string(1000 - law) + " substitutions broke the free-variable law");
  o.note(std::to_string(round_trips) + "/1000 round trips, " + std::to_string(law) + "/1000 substitution triples");
  return o;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = "'" FOLW_CLI "' " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {};
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
  pclose(p);
  return out;
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "folw-acceptance";
  std::filesystem::create_directories(dir);
  const auto a = dir / "first.txt";
  const auto b = dir / "second.txt";
  run_cli("corpus run --report '" + a.string() + "'");
  run_cli("corpus run --report '" + b.string() + "'");
  const auto ta = corpus::read_file(a);
  const auto tb = corpus::read_file(b);
  o.require(!ta.empty(), "corpus run wrote a report");
  o.require(ta == tb, "reports are byte-identical");
  std::filesystem::remove_all(dir);
  o.note(std::to_string(ta.size()) + "-byte reports, identical: " + (ta == tb ? "yes" : "no"));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"tableau reproduction of the drawn trees", figures},
      {"theoremhood of the two closed sentences", theorems},
      {"proof scripts accepted, mutations rejected", scripts},
      {"finite-model oracle", models},
      {"cross-engine soundness", cross_engine},
      {"syntax properties", syntax_properties},
      {"determinism of corpus runs", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += o.pass ? 0 : 1;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << '\n';
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
  }
  return failed == 0 ? 0 : 1;
}
