#include "folw/hilbert/script.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "folw/syntax/document.hpp"
#include "folw/syntax/render.hpp"

namespace folw::hilbert {

const char* quant_law_name(QuantLaw law) {
  switch (law) {
    case QuantLaw::NegForall: return "neg-forall";
    case QuantLaw::NegExists: return "neg-exists";
    case QuantLaw::ExistsIntroFromImplication: return "exists-intro-from-implication";
  }
  return "?";
}

std::string to_string(const Justification& j) {
  std::ostringstream out;
  auto refs = [&] {
    for (int r : j.refs) out << " " << r;
  };
  switch (j.rule) {
    case Rule::Hypothesis: out << "hyp"; break;
    case Rule::Tautology: out << "taut"; break;
    case Rule::Predicative: out << "pred[" << j.var << ":=" << j.term << "]"; break;
    case Rule::IdentityLeft: out << "id-left"; break;
    case Rule::IdentityRight: out << "id-right"; break;
    case Rule::IdentityRefl: out << "id-refl"; break;
    case Rule::QuantDistrib: out << "qdist"; break;
    case Rule::ModusPonens: out << "mp"; refs(); break;
    case Rule::Generalization: out << "gen"; refs(); out << " " << j.var; break;
    case Rule::TautCons: out << "tautcons"; refs(); break;
    case Rule::DefUnfold: out << "def " << j.definition; refs(); break;
    case Rule::QuantifierLaw: out << "qlaw " << quant_law_name(j.law); refs(); break;
  }
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

class LineParser {
 public:
  LineParser(std::string_view line, int number) : line_(line), number_(number) {}

  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    throw SyntaxError({number_, static_cast<int>(offset) + 1}, message);
  }

  std::size_t offset_of(std::string_view part) const {
    return static_cast<std::size_t>(part.data() - line_.data());
  }

  int integer(std::string_view text) const {
    int value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value < 1) {
      fail(offset_of(text), "expected a positive line index, found '" + std::string(text) + "'");
    }
    return value;
  }

  Formula formula(std::string_view text) const {
    return parse_formula(text, {number_, static_cast<int>(offset_of(text)) + 1}).formula;
  }

  Definition definition(std::string_view rest) const {
    return parse_definition(rest, {number_, static_cast<int>(offset_of(rest)) + 1});
  }

  Justification justification(std::string_view text) const {
    Justification j;
    auto w = words(text);
    if (w.empty()) fail(offset_of(text), "missing justification");
    const std::string& head = w[0];
    auto expect_args = [&](std::size_t n) {
      if (w.size() != n + 1) {
        fail(offset_of(text), "'" + head + "' takes " + std::to_string(n) + " argument(s)");
      }
    };
    auto ref = [&](const std::string& s) {
      const auto pos = text.find(s);
      return integer(text.substr(pos == std::string_view::npos ? 0 : pos, s.size()));
    };
    if (head == "hyp" || head == "taut" || head == "id-left" || head == "id-right" ||
        head == "id-refl" || head == "qdist") {
      expect_args(0);
      j.rule = head == "hyp"        ? Rule::Hypothesis
               : head == "taut"     ? Rule::Tautology
               : head == "id-left"  ? Rule::IdentityLeft
               : head == "id-right" ? Rule::IdentityRight
               : head == "id-refl"  ? Rule::IdentityRefl
                                    : Rule::QuantDistrib;
    } else if (head.starts_with("pred[")) {
      // pred[x:=t], spaces allowed inside the brackets
      std::string joined;
      for (const auto& part : w) joined += part;
      const auto assign = joined.find(":=");
      if (assign == std::string::npos || joined.back() != ']') {
        fail(offset_of(text), "expected pred[x:=t]");
      }
      j.rule = Rule::Predicative;
      j.var = joined.substr(5, assign - 5);
      j.term = joined.substr(assign + 2, joined.size() - assign - 3);
      if (!is_identifier(j.var) || !is_identifier(j.term) || is_keyword(j.var) || is_keyword(j.term)) {
        fail(offset_of(text), "expected pred[x:=t] with plain names");
      }
    } else if (head == "mp") {
      expect_args(2);
      j.rule = Rule::ModusPonens;
      j.refs = {ref(w[1]), ref(w[2])};
    } else if (head == "gen") {
      expect_args(2);
      j.rule = Rule::Generalization;
      j.refs = {ref(w[1])};
      j.var = w[2];
      if (!is_identifier(j.var) || is_keyword(j.var)) fail(offset_of(text), "gen needs a variable name");
    } else if (head == "tautcons") {
      if (w.size() < 2 || w.size() > 5) fail(offset_of(text), "tautcons cites one to four lines");
      j.rule = Rule::TautCons;
      for (std::size_t i = 1; i < w.size(); ++i) j.refs.push_back(ref(w[i]));
    } else if (head == "def") {
      expect_args(2);
      j.rule = Rule::DefUnfold;
      j.definition = w[1];
      j.refs = {ref(w[2])};
    } else if (head == "qlaw") {
      expect_args(2);
      j.rule = Rule::QuantifierLaw;
      if (w[1] == "neg-forall") {
        j.law = QuantLaw::NegForall;
      } else if (w[1] == "neg-exists") {
        j.law = QuantLaw::NegExists;
      } else if (w[1] == "exists-intro-from-implication") {
        j.law = QuantLaw::ExistsIntroFromImplication;
      } else {
        fail(offset_of(text), "unknown quantifier law '" + w[1] + "'");
      }
      j.refs = {ref(w[2])};
    } else {
      fail(offset_of(text), "unknown justification '" + head + "'");
    }
    return j;
  }

  Step step() const {
    const auto first = line_.find('|');
    const auto last = line_.rfind('|');
    if (first == std::string_view::npos || first == last) {
      fail(0, "expected '<index> | <formula> | <justification>'");
    }
    Step s;
    s.source_line = number_;
    s.index = integer(trim(line_.substr(0, first)));
    auto body = trim(line_.substr(first + 1, last - first - 1));
    if (body.empty()) fail(first + 1, "missing formula");
    s.formula = formula(body);
    s.justification = justification(trim(line_.substr(last + 1)));
    return s;
  }

 private:
  std::string_view line_;
  int number_;
};

}  // namespace

Script parse_script(std::string_view text) {
  Script script;
  int number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    LineParser p(line, number);
    if (content.starts_with("def ")) {
      auto def = p.definition(trim(content.substr(4)));
      try {
        script.defs.add(std::move(def));
      } catch (const DefinitionError& e) {
        p.fail(p.offset_of(content), e.what());
      }
      continue;
    }
    script.steps.push_back(p.step());
  }
  return script;
}

std::string render_script(const Script& script) {
  std::ostringstream out;
  for (const auto& name : script.defs.names()) out << render_definition(*script.defs.find(name)) << "\n";
  for (const auto& s : script.steps) {
    out << s.index << " | " << render(s.formula) << " | " << to_string(s.justification) << "\n";
  }
  return out.str();
}

}  // namespace folw::hilbert
