#include "folw/syntax/document.hpp"

#include <cctype>

#include "folw/syntax/render.hpp"

namespace folw {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class OnLine>
void for_each_line(std::string_view text, OnLine on_line) {
  int number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    on_line(content, SourcePos{number, static_cast<int>(content.data() - line.data()) + 1});
  }
}

void add_definition(DefinitionTable& defs, std::string_view content, SourcePos pos) {
  try {
    defs.add(parse_definition(trim(content.substr(4)), {pos.line, pos.column + 4}));
  } catch (const DefinitionError& e) {
    throw SyntaxError(pos, e.what());
  }
}

bool is_def_line(std::string_view content) { return content.starts_with("def "); }

}  // namespace

Definition parse_definition(std::string_view text, SourcePos origin) {
  auto at = [&](std::string_view part) {
    return SourcePos{origin.line, origin.column + static_cast<int>(part.data() - text.data())};
  };
  const auto assign = text.find(":=");
  if (assign == std::string_view::npos) throw SyntaxError(origin, "definition needs ':='");
  auto head = trim(text.substr(0, assign));
  auto body = trim(text.substr(assign + 2));
  const auto open = head.find('(');
  if (open == std::string_view::npos || head.back() != ')')
    throw SyntaxError(at(head), "definition head must look like name(x, y)");
  Definition def;
  def.name = std::string(trim(head.substr(0, open)));
  if (!is_predicate_name(def.name))
    throw SyntaxError(at(head), "bad definition name '" + def.name + "'");
  auto params = head.substr(open + 1, head.size() - open - 2);
  while (!params.empty()) {
    const auto comma = params.find(',');
    auto p = trim(params.substr(0, comma));
    if (!is_identifier(p) || is_keyword(p))
      throw SyntaxError(at(p.empty() ? params : p), "bad parameter '" + std::string(p) + "'");
    def.params.emplace_back(p);
    if (comma == std::string_view::npos) break;
    params.remove_prefix(comma + 1);
  }
  if (body.empty()) throw SyntaxError(at(text.substr(assign)), "definition body is empty");
  def.body = parse_formula(body, at(body)).formula;
  return def;
}

std::string render_definition(const Definition& def) {
  std::string out = "def " + def.name + "(";
  for (std::size_t i = 0; i < def.params.size(); ++i) out += (i ? ", " : "") + def.params[i];
  return out + ") := " + render(def.body);
}

Document parse_document(std::string_view text) {
  Document doc;
  for_each_line(text, [&](std::string_view content, SourcePos pos) {
    if (is_def_line(content)) {
      add_definition(doc.defs, content, pos);
      return;
    }
    auto res = parse_formula(content, pos);
    doc.formulas.push_back(res.formula);
    doc.warnings.insert(doc.warnings.end(), res.warnings.begin(), res.warnings.end());
  });
  return doc;
}

DefinitionTable parse_definitions(std::string_view text) {
  DefinitionTable defs;
  for_each_line(text, [&](std::string_view content, SourcePos pos) {
    if (!is_def_line(content)) throw SyntaxError(pos, "expected a 'def' line");
    add_definition(defs, content, pos);
  });
  return defs;
}

}  // namespace folw
