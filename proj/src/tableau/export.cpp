#include "folw/tableau/export.hpp"

#include <sstream>

#include "folw/syntax/render.hpp"

namespace folw::tableau {

namespace {

std::string budget_line(const Tableau& tree) {
  std::ostringstream out;
  out << "rules " << tree.applications() << "/" << tree.budget().max_rule_applications
      << ", reuse cap " << tree.budget().max_universal_reuse;
  return out.str();
}

std::string status(const Tableau& tree) {
  if (tree.closed()) return "closed";
  if (tree.saturated_leaf()) return "open";
  if (tree.applications() >= tree.budget().max_rule_applications) return "budget exhausted";
  return "in progress";
}

std::string justification(const Box& b) {
  std::string out = rule_name(b.rule);
  if (!b.detail.empty()) out += " " + b.detail;
  if (!b.premises.empty()) {
    out += " [";
    for (std::size_t i = 0; i < b.premises.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(b.premises[i] + 1);
    }
    out += "]";
  }
  return out;
}

void ascii_box(const Tableau& tree, int id, int depth, std::ostringstream& out) {
  const Box& b = tree.boxes()[static_cast<std::size_t>(id)];
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  const bool leaf = b.children.empty();
  const std::string why = b.rule == Rule::Premise ? "premise" : justification(b);
  if (b.formulas.empty()) {
    out << indent << "-  (" << why << ")";
    if (leaf && b.closure) out << " ×";
    out << "\n";
  }
  for (std::size_t i = 0; i < b.formulas.size(); ++i) {
    const int fid = b.formulas[i];
    out << indent << fid + 1 << ". " << render(tree.formula(fid)) << "    (" << why << ")";
    if (leaf && b.closure && i + 1 == b.formulas.size()) out << " ×";
    out << "\n";
  }
  if (leaf && b.saturated) out << indent << "(open, saturated)\n";
  const bool split = b.children.size() > 1;
  for (int child : b.children) {
    if (split) out << indent << "+ branch\n";
    ascii_box(tree, child, split ? depth + 1 : depth, out);
  }
}

}  // namespace

std::string export_ascii(const Tableau& tree) {
  std::ostringstream out;
  out << "# tableau " << status(tree) << "; " << budget_line(tree) << "\n";
  ascii_box(tree, 0, 0, out);
  return out.str();
}

std::string export_dot(const Tableau& tree) {
  std::ostringstream out;
  out << "digraph tableau {\n";
  out << "  label=\"" << status(tree) << "; " << budget_line(tree) << "\";\n";
  out << "  node [shape=plaintext, fontname=\"monospace\"];\n";
  for (const Box& b : tree.boxes()) {
    std::string label;
    for (int fid : b.formulas) label += render(tree.formula(fid)) + "\n";
    const bool closed_leaf = b.children.empty() && b.closure;
    if (closed_leaf) label += "×";
    if (label.empty()) label = " ";
    if (!label.empty() && label.back() == '\n') label.pop_back();
    out << "  n" << b.id << " [label=\"" << escape_dot(label) << "\"";
    if (closed_leaf) out << ", shape=box, peripheries=2";
    if (b.children.empty() && b.saturated) out << ", shape=box, style=dashed";
    out << "];\n";
  }
  for (const Box& b : tree.boxes()) {
    for (int child : b.children) {
      const Box& c = tree.boxes()[static_cast<std::size_t>(child)];
      std::string label = rule_name(c.rule);
      if (!c.detail.empty()) label += " " + c.detail;
      out << "  n" << b.id << " -> n" << child << " [label=\"" << escape_dot(label) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_tree(const Tableau& tree, TreeFormat format) {
  return format == TreeFormat::Dot ? export_dot(tree) : export_ascii(tree);
}

}  // namespace folw::tableau
