#pragma once

#include <string>

#include "folw/tableau/tableau.hpp"

namespace folw::tableau {

enum class TreeFormat { Ascii, Dot };

/// Indented outline; closed leaves end in "×". The first line states the
/// budget and how much of it was used.
std::string export_ascii(const Tableau& tree);

/// Graphviz digraph, one node per rule application, edges labelled with the
/// rule. Closed leaves are drawn as boxes with a "×" line.
std::string export_dot(const Tableau& tree);

std::string export_tree(const Tableau& tree, TreeFormat format);

}  // namespace folw::tableau
