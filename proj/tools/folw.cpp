// Command-line front end. Exit codes: 0 affirmative, 1 negative verdict,
// 2 syntax, 3 I/O, 4 usage, budget or size cap.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "folw/corpus/corpus.hpp"
#include "folw/hilbert/checker.hpp"
#include "folw/hilbert/script.hpp"
#include "folw/model/model.hpp"
#include "folw/syntax/document.hpp"
#include "folw/syntax/render.hpp"
#include "folw/tableau/export.hpp"
#include "folw/tableau/tableau.hpp"

namespace {

using namespace folw;

enum Exit { kOk = 0, kNegative = 1, kSyntax = 2, kIo = 3, kUsage = 4 };

struct UsageError : Error {
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return corpus::read_file(path);
}

void report_warnings(const std::string& file, const std::vector<ParseWarning>& warnings) {
  for (const auto& w : warnings)
    std::cerr << file << ":" << w.pos.line << ":" << w.pos.column << ": warning: " << w.message << '\n';
}

Document load_document(const std::string& path, const std::string& defs_path) {
  auto doc = parse_document(read_input(path));
  report_warnings(path, doc.warnings);
  if (!defs_path.empty()) {
    auto extra = parse_definitions(read_input(defs_path));
    for (const auto& name : extra.names()) {
      try {
        doc.defs.add(*extra.find(name));
      } catch (const DefinitionError& e) {
        throw SyntaxError({1, 1}, std::string(e.what()) + " (from " + defs_path + ")");
      }
    }
  }
  if (doc.formulas.empty()) throw SyntaxError({1, 1}, "no formula in " + path);
  return doc;
}

struct ParseOpts {
  std::string file;
  std::string format = "ascii";
};

int cmd_parse(const ParseOpts& o) {
  const auto doc = load_document(o.file, {});
  const auto fmt = o.format == "sexpr" ? RenderFormat::Sexpr : RenderFormat::Ascii;
  for (const auto& name : doc.defs.names()) std::cout << render_definition(*doc.defs.find(name)) << '\n';
  for (const auto& f : doc.formulas) std::cout << render(f, fmt) << '\n';
  return kOk;
}

struct ProveOpts {
  std::string file;
  int budget = 500;
  int reuse = 3;
  std::string tree;
  std::string defs;
  bool refute = false;
  bool unfold_defs = false;
};

int cmd_prove(const ProveOpts& o) {
  const tableau::Budget budget{o.budget, o.reuse};
  budget.validate();
  auto doc = load_document(o.file, o.defs);
  auto formulas = doc.formulas;
  if (o.unfold_defs)
    for (auto& f : formulas) f = unfold_known(doc.defs, f);
  if (!o.refute && formulas.size() != 1)
    throw UsageError("prove takes one goal; use --refute to refute several premises");
  auto res = o.refute ? tableau::refute(formulas, budget) : tableau::prove(formulas.front(), budget);
  static constexpr const char* kStatus[] = {"CLOSED", "OPEN", "BUDGET"};
  std::cout << kStatus[static_cast<int>(res.outcome)] << " after " << res.tree.applications() << " rule applications\n";
  if (!o.tree.empty())
    std::cout << tableau::export_tree(res.tree, o.tree == "dot" ? tableau::TreeFormat::Dot : tableau::TreeFormat::Ascii);
  return res.outcome == tableau::Outcome::Closed ? kOk : kNegative;
}

int cmd_check(const std::string& file) {
  const auto script = hilbert::parse_script(read_input(file));
  const auto v = hilbert::check(script);
  if (!v.accepted) {
    std::cout << "REJECTED at line " << v.step << ": " << v.reason << '\n';
    return kNegative;
  }
  std::cout << "ACCEPTED, " << script.steps.size() << " lines";
  if (v.hypotheses.empty()) {
    std::cout << ", no hypotheses\n";
  } else {
    std::cout << ", depends on hypotheses";
    for (int h : v.hypotheses) std::cout << ' ' << h;
    std::cout << '\n';
  }
  return kOk;
}

struct ModelsOpts {
  std::string file;
  int max_size = 3;
  bool dump_first = false;
  std::string expect;
  bool allow_large = false;
  std::string kernel = "auto";
  std::string defs;
};

int cmd_models(const ModelsOpts& o) {
  const auto doc = load_document(o.file, o.defs);
  Formula all = doc.formulas.front();
  for (std::size_t i = 1; i < doc.formulas.size(); ++i) all = Formula::and_(all, doc.formulas[i]);
  const auto sentence = model::universal_closure(unfold(doc.defs, all));
  static const std::map<std::string, model::Kernel> kernels = {{"auto", model::Kernel::Auto},
                                                              {"scalar", model::Kernel::Scalar},
                                                              {"portable64", model::Kernel::Portable64},
                                                              {"avx2", model::Kernel::Avx2}};
  const auto report = model::validity_sweep(sentence, o.max_size, model::Limits{o.allow_large}, kernels.at(o.kernel));
  std::cout << model::format_report(report, o.dump_first);
  if (o.expect.empty()) return kOk;
  static const std::map<std::string, model::Verdict> verdicts = {
      {"valid", model::Verdict::ValidUpTo}, {"unsat", model::Verdict::UnsatUpTo}, {"mixed", model::Verdict::Mixed}};
  const bool match = verdicts.at(o.expect) == report.verdict;
  std::cout << "expected " << o.expect << ": " << (match ? "yes" : "no") << '\n';
  return match ? kOk : kNegative;
}

struct CorpusOpts {
  std::string manifest = std::string(FOLW_CORPUS_DIR) + "/corpus.json";
  std::string filter;
  std::string report;
  bool timings = false;
};

int cmd_corpus(const CorpusOpts& o) {
  const auto entries = corpus::load_manifest(o.manifest);
  const auto report = corpus::run(entries, o.filter);
  if (report.results.empty()) throw UsageError("no corpus entry matches '" + o.filter + "'");
  const auto text = report.format(o.timings);
  std::cout << text;
  if (!o.report.empty()) {
    std::ofstream out(o.report, std::ios::binary);
    out << text;
    if (!out) throw corpus::IoError("cannot write " + o.report);
  }
  return report.failed() == 0 ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order logic workbench: tableau prover, proof-script checker, finite-model search"};
  app.require_subcommand(1);

  ParseOpts parse_opts;
  auto* parse = app.add_subcommand("parse", "Parse a formula file and print it");
  parse->add_option("file", parse_opts.file, "Input file, or - for stdin")->required();
  parse->add_option("--format", parse_opts.format, "Rendering")->check(CLI::IsMember({"ascii", "sexpr"}));

  ProveOpts prove_opts;
  auto* prove = app.add_subcommand("prove", "Run the tableau on a goal (or, with --refute, on premises)");
  prove->add_option("file", prove_opts.file, "Formula file, or - for stdin")->required();
  prove->add_option("--budget", prove_opts.budget, "Maximum rule applications");
  prove->add_option("--reuse", prove_opts.reuse, "Instantiations per universal formula and constant");
  prove->add_option("--tree", prove_opts.tree, "Print the tree")->check(CLI::IsMember({"ascii", "dot"}));
  prove->add_option("--defs", prove_opts.defs, "File of def lines");
  prove->add_flag("--refute", prove_opts.refute, "Use every formula as a root premise");
  prove->add_flag("--unfold", prove_opts.unfold_defs, "Unfold definitions before expanding");

  std::string check_file;
  auto* check = app.add_subcommand("check", "Check a proof script");
  check->add_option("script", check_file, "Script file, or - for stdin")->required();

  ModelsOpts models_opts;
  auto* models = app.add_subcommand("models", "Search every membership relation up to a domain size");
  models->add_option("file", models_opts.file, "Formula file, or - for stdin")->required();
  models->add_option("--max-size", models_opts.max_size, "Largest domain size");
  models->add_flag("--dump-first", models_opts.dump_first, "Print first models as 0/1 rows");
  models->add_option("--expect", models_opts.expect, "Expected verdict")
      ->check(CLI::IsMember({"valid", "unsat", "mixed"}));
  models->add_flag("--allow-large", models_opts.allow_large, "Permit domain size 5");
  models->add_option("--kernel", models_opts.kernel, "Evaluation kernel")
      ->check(CLI::IsMember({"auto", "scalar", "portable64", "avx2"}));
  models->add_option("--defs", models_opts.defs, "File of def lines");

  CorpusOpts corpus_opts;
  auto* corpus_cmd = app.add_subcommand("corpus", "Bundled regression corpus");
  corpus_cmd->require_subcommand(1);
  auto* run = corpus_cmd->add_subcommand("run", "Run the corpus");
  run->add_option("--filter", corpus_opts.filter, "Shell-style id pattern");
  run->add_option("--report", corpus_opts.report, "Also write the report here");
  run->add_option("--manifest", corpus_opts.manifest, "Corpus manifest");
  run->add_flag("--timings", corpus_opts.timings, "Add wall-clock milliseconds per entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*parse) return cmd_parse(parse_opts);
    if (*prove) return cmd_prove(prove_opts);
    if (*check) return cmd_check(check_file);
    if (*models) return cmd_models(models_opts);
    if (*run) return cmd_corpus(corpus_opts);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error at line " << e.pos().line << ", column " << e.pos().column << ": " << e.detail()
              << '\n';
    return kSyntax;
  } catch (const DefinitionError& e) {
    std::cerr << "definition error: " << e.what() << '\n';
    return kSyntax;
  } catch (const corpus::IoError& e) {
    std::cerr << e.what() << '\n';
    return kIo;
  } catch (const tableau::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return kUsage;
  } catch (const model::SizeLimitError& e) {
    std::cerr << "size error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "manifest error: " << e.what() << '\n';
    return kSyntax;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
