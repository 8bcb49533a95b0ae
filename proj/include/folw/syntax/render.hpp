#pragma once

#include <string>

#include "folw/syntax/formula.hpp"

namespace folw {

enum class RenderFormat {
  Ascii,     // parser input syntax, minimal parentheses
  DotLabel,  // Ascii escaped for a double-quoted graphviz label
  Sexpr,     // fully parenthesised prefix form
};

std::string render(const Formula& f, RenderFormat format = RenderFormat::Ascii);

/// Escapes `"` and `\` and turns newlines into `\n` for graphviz labels.
std::string escape_dot(const std::string& text);

}  // namespace folw
