#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "folw/syntax/definitions.hpp"
#include "folw/syntax/parser.hpp"

namespace folw {

/// Parses `name(x, y) := body`. `origin` is the position of text[0].
Definition parse_definition(std::string_view text, SourcePos origin = {});

/// "def name(x, y) := body"
std::string render_definition(const Definition& def);

/// A formula file: `#` comments, `def` lines and one formula per remaining
/// line, in order.
struct Document {
  DefinitionTable defs;
  std::vector<Formula> formulas;
  std::vector<ParseWarning> warnings;
};

Document parse_document(std::string_view text);

/// Reads `def` lines only; any other non-comment line is an error.
DefinitionTable parse_definitions(std::string_view text);

}  // namespace folw
