#include "folw/syntax/parser.hpp"

#include <cctype>
#include <optional>

namespace folw {

SyntaxError::SyntaxError(SourcePos pos, const std::string& message)
    : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      detail_(message) {}

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  Comma,
  Dot,
  Bang,
  Amp,
  Pipe,
  Arrow,
  DoubleArrow,
  Equals,
  NotEquals,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Lexer {
 public:
  Lexer(std::string_view text, SourcePos origin) : text_(text), pos_(origin) {}

  Token next() {
    skip_space();
    Token t;
    t.pos = pos_;
    if (i_ >= text_.size()) return t;
    char c = text_[i_];
    auto take = [&](Tok k, std::size_t n) {
      t.kind = k;
      t.text = std::string(text_.substr(i_, n));
      advance(n);
      return t;
    };
    if (ident_start(c)) {
      std::size_t n = 1;
      while (i_ + n < text_.size() && ident_char(text_[i_ + n])) ++n;
      return take(Tok::Ident, n);
    }
    switch (c) {
      case '(': return take(Tok::LParen, 1);
      case ')': return take(Tok::RParen, 1);
      case ',': return take(Tok::Comma, 1);
      case '.': return take(Tok::Dot, 1);
      case '&': return take(Tok::Amp, 1);
      case '|': return take(Tok::Pipe, 1);
      case '=': return take(Tok::Equals, 1);
      case '!':
        if (peek_is(1, '=')) return take(Tok::NotEquals, 2);
        return take(Tok::Bang, 1);
      case '-':
        if (peek_is(1, '>')) return take(Tok::Arrow, 2);
        break;
      case '<':
        if (peek_is(1, '-') && peek_is(2, '>')) return take(Tok::DoubleArrow, 3);
        break;
      default:
        break;
    }
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

 private:
  bool peek_is(std::size_t ahead, char c) const {
    return i_ + ahead < text_.size() && text_[i_ + ahead] == c;
  }
  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text_[i_] == '\n') {
        ++pos_.line;
        pos_.column = 1;
      } else {
        ++pos_.column;
      }
      ++i_;
    }
  }
  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) advance(1);
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

class Parser {
 public:
  Parser(std::string_view text, SourcePos origin) : lex_(text, origin) { tok_ = lex_.next(); }

  ParseResult run() {
    auto f = iff();
    if (tok_.kind != Tok::End) fail("unexpected '" + tok_.text + "' after formula");
    return {std::move(f), std::move(warnings_)};
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(tok_.pos, msg); }

  void advance() { tok_ = lex_.next(); }

  bool at_keyword(std::string_view kw) const { return tok_.kind == Tok::Ident && tok_.text == kw; }

  void expect(Tok k, const char* what) {
    if (tok_.kind != k) fail(std::string("expected ") + what + describe_found());
    advance();
  }

  std::string describe_found() const {
    return tok_.kind == Tok::End ? ", found end of input" : ", found '" + tok_.text + "'";
  }

  Formula iff() {
    auto lhs = imp();
    while (tok_.kind == Tok::DoubleArrow) {
      advance();
      lhs = Formula::iff(std::move(lhs), imp());
    }
    return lhs;
  }

  Formula imp() {
    auto lhs = disj();
    if (tok_.kind == Tok::Arrow) {
      advance();
      return Formula::implies(std::move(lhs), imp());
    }
    return lhs;
  }

  Formula disj() {
    auto lhs = conj();
    while (tok_.kind == Tok::Pipe) {
      advance();
      lhs = Formula::or_(std::move(lhs), conj());
    }
    return lhs;
  }

  Formula conj() {
    auto lhs = unary();
    while (tok_.kind == Tok::Amp) {
      advance();
      lhs = Formula::and_(std::move(lhs), unary());
    }
    return lhs;
  }

  Formula unary() {
    if (tok_.kind == Tok::Bang) {
      advance();
      return Formula::not_(unary());
    }
    if (at_keyword("forall") || at_keyword("exists")) {
      const Op op = tok_.text == "forall" ? Op::Forall : Op::Exists;
      advance();
      if (tok_.kind != Tok::Ident || is_keyword(tok_.text) || !is_identifier(tok_.text)) {
        fail("expected variable after quantifier" + describe_found());
      }
      std::string var = tok_.text;
      for (const auto& b : scope_) {
        if (b == var) {
          warnings_.push_back({tok_.pos, "'" + var + "' shadows an enclosing binding"});
          break;
        }
      }
      advance();
      expect(Tok::Dot, "'.'");
      scope_.push_back(var);
      auto body = unary();
      scope_.pop_back();
      return Formula::quantifier(op, std::move(var), std::move(body));
    }
    if (tok_.kind == Tok::LParen) {
      advance();
      auto f = iff();
      expect(Tok::RParen, "')'");
      return f;
    }
    return atom();
  }

  Term term_from(const Token& t) const {
    if (t.kind != Tok::Ident || is_keyword(t.text) || !is_identifier(t.text)) {
      throw SyntaxError(t.pos, "expected a term" + (t.kind == Tok::End
                                                        ? std::string(", found end of input")
                                                        : ", found '" + t.text + "'"));
    }
    for (const auto& b : scope_) {
      if (b == t.text) return Term::var(t.text);
    }
    return Term::constant(t.text);
  }

  Formula atom() {
    if (at_keyword("false")) {
      advance();
      return Formula::falsum();
    }
    if (tok_.kind != Tok::Ident || is_keyword(tok_.text)) {
      fail("expected a formula" + describe_found());
    }
    Token head = tok_;
    advance();
    if (tok_.kind == Tok::LParen) {
      advance();
      std::vector<Term> args;
      args.push_back(term_from(tok_));
      advance();
      while (tok_.kind == Tok::Comma) {
        advance();
        args.push_back(term_from(tok_));
        advance();
      }
      expect(Tok::RParen, "')' closing argument list");
      return Formula::apply(head.text, std::move(args));
    }
    Term lhs = term_from(head);
    std::optional<Op> op;
    bool negated = false;
    if (at_keyword("in")) {
      op = Op::In;
    } else if (at_keyword("notin")) {
      op = Op::In;
      negated = true;
    } else if (tok_.kind == Tok::Equals) {
      op = Op::Eq;
    } else if (tok_.kind == Tok::NotEquals) {
      op = Op::Eq;
      negated = true;
    } else {
      fail("expected 'in', 'notin', '=' or '!='" + describe_found());
    }
    advance();
    Term rhs = term_from(tok_);
    advance();
    auto f = *op == Op::In ? Formula::in(std::move(lhs), std::move(rhs))
                           : Formula::eq(std::move(lhs), std::move(rhs));
    return negated ? Formula::not_(std::move(f)) : f;
  }

  Lexer lex_;
  Token tok_;
  std::vector<std::string> scope_;
  std::vector<ParseWarning> warnings_;
};

}  // namespace

bool is_keyword(std::string_view s) {
  return s == "forall" || s == "exists" || s == "in" || s == "notin" || s == "false";
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!ident_char(c)) return false;
  }
  return true;
}

bool is_predicate_name(std::string_view s) {
  if (s.empty() || !ident_start(s[0]) || is_keyword(s)) return false;
  for (char c : s) {
    if (!ident_char(c)) return false;
  }
  return true;
}

ParseResult parse_formula(std::string_view text, SourcePos origin) {
  return Parser(text, origin).run();
}

Formula parse(std::string_view text) { return parse_formula(text).formula; }

}  // namespace folw
