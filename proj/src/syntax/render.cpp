#include "folw/syntax/render.hpp"

namespace folw {

namespace {

// Binding strength, loosest first; matches the parser's grammar levels.
enum Level { kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kUnary = 5 };

int level_of(const Formula& f) {
  switch (f.op()) {
    case Op::Iff: return kIff;
    case Op::Implies: return kImp;
    case Op::Or: return kOr;
    case Op::And: return kAnd;
    default: return kUnary;
  }
}

const char* infix(Op op) {
  switch (op) {
    case Op::Iff: return " <-> ";
    case Op::Implies: return " -> ";
    case Op::Or: return " | ";
    default: return " & ";
  }
}

void term_list(const Formula& f, std::string& out) {
  out += f.name();
  out += '(';
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) out += ", ";
    out += t.name;
    first = false;
  }
  out += ')';
}

void ascii(const Formula& f, std::string& out);

// Renders `f` where the grammar position demands at least `min_level`.
// Quantifiers inside binary connectives are bracketed for legibility even
// where the grammar would not need it.
void operand(const Formula& f, int min_level, std::string& out) {
  const bool bracket = level_of(f) < min_level || is_quantifier(f.op());
  if (bracket) out += '(';
  ascii(f, out);
  if (bracket) out += ')';
}

void ascii(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::In:
      out += f.lhs_term().name + " in " + f.rhs_term().name;
      return;
    case Op::Eq:
      out += f.lhs_term().name + " = " + f.rhs_term().name;
      return;
    case Op::Apply:
      term_list(f, out);
      return;
    case Op::Falsum:
      out += "false";
      return;
    case Op::Not: {
      const Formula& g = f.operand();
      if (g.is(Op::In)) {
        out += g.lhs_term().name + " notin " + g.rhs_term().name;
        return;
      }
      if (g.is(Op::Eq)) {
        out += g.lhs_term().name + " != " + g.rhs_term().name;
        return;
      }
      out += '!';
      if (is_binary(g.op())) {
        out += '(';
        ascii(g, out);
        out += ')';
      } else {
        ascii(g, out);
      }
      return;
    }
    case Op::Forall:
    case Op::Exists: {
      out += f.is(Op::Forall) ? "forall " : "exists ";
      out += f.name();
      out += ". ";
      const Formula& b = f.body();
      if (is_binary(b.op())) {
        out += '(';
        ascii(b, out);
        out += ')';
      } else {
        ascii(b, out);
      }
      return;
    }
    default: {
      const int lvl = level_of(f);
      // Left-associative loops for <->, |, &; right-associative ->.
      const bool right_assoc = f.is(Op::Implies);
      operand(f.left(), right_assoc ? lvl + 1 : lvl, out);
      out += infix(f.op());
      operand(f.right(), right_assoc ? lvl : lvl + 1, out);
    }
  }
}

void sexpr(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::In:
      out += "(in " + f.lhs_term().name + " " + f.rhs_term().name + ")";
      return;
    case Op::Eq:
      out += "(= " + f.lhs_term().name + " " + f.rhs_term().name + ")";
      return;
    case Op::Apply:
      out += "(" + f.name();
      for (const auto& t : f.terms()) out += " " + t.name;
      out += ")";
      return;
    case Op::Falsum:
      out += "false";
      return;
    case Op::Not:
      out += "(not ";
      sexpr(f.operand(), out);
      out += ")";
      return;
    case Op::Forall:
    case Op::Exists:
      out += f.is(Op::Forall) ? "(forall " : "(exists ";
      out += f.name() + " ";
      sexpr(f.body(), out);
      out += ")";
      return;
    default: {
      const char* head = f.is(Op::And) ? "(and " : f.is(Op::Or) ? "(or " : f.is(Op::Implies) ? "(implies " : "(iff ";
      out += head;
      sexpr(f.left(), out);
      out += " ";
      sexpr(f.right(), out);
      out += ")";
    }
  }
}

}  // namespace

std::string escape_dot(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

std::string render(const Formula& f, RenderFormat format) {
  std::string out;
  switch (format) {
    case RenderFormat::Ascii:
      ascii(f, out);
      return out;
    case RenderFormat::DotLabel:
      ascii(f, out);
      return escape_dot(out);
    case RenderFormat::Sexpr:
      sexpr(f, out);
      return out;
  }
  return out;
}

}  // namespace folw
