#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "folw/syntax/formula.hpp"

namespace folw {

struct SourcePos {
  int line = 1;
  int column = 1;
};

class SyntaxError : public Error {
 public:
  SyntaxError(SourcePos pos, const std::string& message);
  SourcePos pos() const { return pos_; }
  const std::string& detail() const { return detail_; }

 private:
  SourcePos pos_;
  std::string detail_;
};

struct ParseWarning {
  SourcePos pos;
  std::string message;
};

struct ParseResult {
  Formula formula;
  std::vector<ParseWarning> warnings;
};

/// Parses one formula. Grammar, loosest binding first:
///
///     formula := iff
///     iff     := imp { "<->" imp }
///     imp     := or [ "->" imp ]
///     or      := and { "|" and }
///     and     := unary { "&" unary }
///     unary   := "!" unary | ("forall" | "exists") IDENT "." unary
///              | "(" formula ")" | atom
///     atom    := "false" | IDENT ("in" | "notin" | "=" | "!=") IDENT
///              | IDENT "(" IDENT { "," IDENT } ")"
///
/// An identifier is a variable when an enclosing quantifier binds it and a
/// constant otherwise. `origin` is the position of text[0] in its file and
/// only affects error locations.
ParseResult parse_formula(std::string_view text, SourcePos origin = {});

/// parse_formula without the warnings.
Formula parse(std::string_view text);

bool is_identifier(std::string_view s);
bool is_keyword(std::string_view s);
/// Application names may also start with an uppercase letter.
bool is_predicate_name(std::string_view s);

}  // namespace folw
