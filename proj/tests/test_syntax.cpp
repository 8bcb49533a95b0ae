#include <algorithm>

#include "doctest.h"
#include "folw/syntax/definitions.hpp"
#include "folw/syntax/document.hpp"
#include "folw/syntax/parser.hpp"
#include "folw/syntax/render.hpp"
#include "folw/syntax/substitution.hpp"
#include "generators.hpp"

using namespace folw;

namespace {

Term c(const char* n) { return Term::constant(n); }
Term v(const char* n) { return Term::var(n); }

const char* kRussell = "exists y. forall x. (x in y <-> x notin x)";

DefinitionTable phi_table() {
  DefinitionTable defs;
  defs.add({"phi", {"x", "r"}, parse("x in r <-> x notin x")});
  return defs;
}

}  // namespace

TEST_CASE("parse builds the expected tree") {
  auto f = parse(kRussell);
  auto expected = Formula::exists(
      "y", Formula::forall("x", Formula::iff(Formula::in(v("x"), v("y")),
                                             Formula::not_(Formula::in(v("x"), v("x"))))));
  CHECK(alpha_key(f) == alpha_key(expected));
  REQUIRE(f.is(Op::Exists));
  CHECK(f.name() == "y");
  const auto& body = f.body().body();
  REQUIRE(body.is(Op::Iff));
  CHECK(body.left().lhs_term().is_variable());
  CHECK(body.right().is_negation_of(Op::In));
}

TEST_CASE("atoms and constants") {
  CHECK(parse("false").is(Op::Falsum));
  auto eq = parse("a = a");
  REQUIRE(eq.is(Op::Eq));
  CHECK_FALSE(eq.lhs_term().is_variable());
  CHECK_FALSE(eq.rhs_term().is_variable());
  CHECK(parse("x != y").is_negation_of(Op::Eq));
  auto app = parse("phi(b, a)");
  REQUIRE(app.is(Op::Apply));
  CHECK(app.terms().size() == 2);
}

TEST_CASE("precedence and associativity") {
  CHECK(render(parse("p(a) & q(a) | r(a)"), RenderFormat::Sexpr) ==
        "(or (and (p a) (q a)) (r a))");
  CHECK(render(parse("p(a) -> q(a) -> r(a)"), RenderFormat::Sexpr) ==
        "(implies (p a) (implies (q a) (r a)))");
  CHECK(render(parse("p(a) <-> q(a) <-> r(a)"), RenderFormat::Sexpr) ==
        "(iff (iff (p a) (q a)) (r a))");
  CHECK(render(parse("!p(a) & q(a)"), RenderFormat::Sexpr) == "(and (not (p a)) (q a))");
  CHECK(render(parse("forall x. p(x) & q(x)"), RenderFormat::Sexpr) ==
        "(and (forall x (p x)) (q x))");
}

TEST_CASE("syntax errors carry a location") {
  try {
    parse("x in");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.pos().line == 1);
    CHECK(e.pos().column == 5);
  }
  CHECK_THROWS_AS(parse("forall . x in x"), SyntaxError);
  CHECK_THROWS_AS(parse("(x in y"), SyntaxError);
  CHECK_THROWS_AS(parse("x in y)"), SyntaxError);
  CHECK_THROWS_AS(parse("x < y"), SyntaxError);
  CHECK_THROWS_AS(parse("in in in"), SyntaxError);
  try {
    parse_formula("x in\n  y in", {3, 1});
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.pos().line == 4);
  }
}

TEST_CASE("shadowing is accepted with a warning") {
  auto res = parse_formula("forall x. exists x. x in x");
  CHECK(res.warnings.size() == 1);
  CHECK(free_vars(res.formula).empty());
}

TEST_CASE("render") {
  auto f = Formula::not_(parse(kRussell));
  CHECK(render(f) == "!exists y. forall x. (x in y <-> x notin x)");
  CHECK(render(Formula::falsum()) == "false");
  auto g = Formula::forall("x", Formula::forall("y", Formula::eq(c("x"), c("y"))));
  CHECK(render(g) == "forall x. forall y. x = y");
  CHECK(render(parse("!!(a in b)")) == "!a notin b");
  CHECK(render(parse("(forall x. x in a) -> a in a")) == "(forall x. x in a) -> a in a");
  CHECK(render(parse("say(a)"), RenderFormat::DotLabel) == "say(a)");
  CHECK(escape_dot("a \"b\"\\") == "a \\\"b\\\"\\\\");
}

TEST_CASE("free variables") {
  CHECK(free_vars(parse(kRussell)).empty());
  CHECK(free_vars(parse("x in r <-> x notin x")) == std::set<std::string>{"r", "x"});
  CHECK(free_vars(Formula::falsum()).empty());
  CHECK(free_vars(parse("forall x. phi(x, r)")) == std::set<std::string>{"r"});
}

TEST_CASE("substitution") {
  auto body = parse("forall x. (x in r <-> x notin x)");
  CHECK(alpha_equal(substitute(body, "r", c("r")), body));

  auto phi = parse("x in r <-> x notin x");
  CHECK(render(substitute(phi, "x", c("r"))) == "r in r <-> r notin r");

  auto res = substitute_counted(parse("exists y. x = y"), "x", c("y"));
  CHECK(render(res.formula) == "exists y1. y = y1");
  CHECK(res.renames == 1);

  // A bound occurrence is untouched.
  CHECK(render(substitute(parse("forall x. x in y"), "x", c("a"))) == "forall x. x in y");
  CHECK(substitute_counted(parse("forall x. x in y"), "y", c("a")).renames == 0);

  // Simultaneous, not sequential.
  auto swapped = substitute_all(parse("x in r"), {{"x", c("r")}, {"r", c("x")}}).formula;
  CHECK(render(swapped) == "r in x");
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_equal(parse("forall x. x in a"), parse("forall y. y in a")));
  CHECK_FALSE(alpha_equal(parse("forall x. x in a"), parse("forall a. a in a")));
  CHECK_FALSE(alpha_equal(parse("forall x. x in y"), parse("forall y. y in y")));
  CHECK(alpha_equal(parse("forall x. forall r. (x in r)"), parse("forall x. forall y. x in y")));
}

TEST_CASE("definition unfolding") {
  auto defs = phi_table();
  CHECK(render(unfold(defs, parse("phi(r, r)"))) == "r in r <-> r notin r");
  CHECK(render(unfold(defs, parse("phi(x, r)"))) == "x in r <-> x notin x");
  CHECK(render(unfold(defs, parse("phi(b, a)"))) == "b in a <-> b notin b");
  // Instantiation under a binder named like a parameter.
  CHECK(render(unfold(defs, parse("forall x. phi(x, r)"))) ==
        "forall x. (x in r <-> x notin x)");

  CHECK_THROWS_AS(unfold(defs, parse("psi(a)")), DefinitionError);
  CHECK_THROWS_AS(unfold(defs, parse("phi(a)")), DefinitionError);
  CHECK(render(unfold_known(defs, parse("psi(a) & phi(a, a)"))) == "psi(a) & (a in a <-> a notin a)");
}

TEST_CASE("definition table validation") {
  DefinitionTable defs;
  CHECK_THROWS_AS(defs.add({"bad", {"x"}, parse("x in y")}), DefinitionError);
  CHECK_THROWS_AS(defs.add({"bad", {"x", "x"}, parse("x in x")}), DefinitionError);
  CHECK_THROWS_AS(defs.add({"rec", {"x"}, parse("rec(x)")}), DefinitionError);
  CHECK_THROWS_AS(defs.add({"fwd", {"x"}, parse("later(x)")}), DefinitionError);
  defs.add({"self", {"x"}, parse("x in x")});
  defs.add({"russell", {"y"}, parse("forall x. (x in y <-> !self(x))")});
  CHECK(render(unfold(defs, parse("russell(a)"))) == "forall x. (x in a <-> x notin x)");
  CHECK_THROWS_AS(defs.add({"self", {"x"}, parse("x in x")}), DefinitionError);
}

TEST_CASE("formula files") {
  auto doc = parse_document("# comment\ndef R(x, y) := x in y\n\nR(a, b) | a = b\n  exists x. x in x\n");
  CHECK(doc.defs.contains("R"));
  REQUIRE(doc.formulas.size() == 2);
  CHECK(render(doc.formulas[0]) == "R(a, b) | a = b");
  CHECK(render_definition(*doc.defs.find("R")) == "def R(x, y) := x in y");
  try {
    parse_document("a in a\n  b in\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.pos().line == 2);
    CHECK(e.pos().column == 7);
  }
  CHECK_THROWS_AS(parse_document("def p(x) := x in y\n"), SyntaxError);
  CHECK_THROWS_AS(parse_document("def p x := x in x\n"), SyntaxError);
  CHECK_THROWS_AS(parse_definitions("def p(x) := x in x\na in a\n"), SyntaxError);
  CHECK(parse_definitions("def p(x) := x in x\n").names() == std::vector<std::string>{"p"});
}

TEST_CASE("property: render/parse round trip") {
  testing::FormulaGen gen(0x5eed);
  for (int i = 0; i < 1000; ++i) {
    auto f = gen.formula(6);
    REQUIRE(testing::depth_of(f) <= 6);
    auto text = render(f);
    auto back = parse(text);
    INFO(text);
    REQUIRE(alpha_equal(back, f));
  }
}

TEST_CASE("property: substitution free-variable law") {
  testing::FormulaGen gen(42);
  for (int i = 0; i < 1000; ++i) {
    auto f = gen.formula(6);
    auto var = gen.name();
    auto t = gen.term();
    auto before = free_vars(f);
    auto expected = before;
    expected.erase(var);
    if (before.contains(var)) expected.insert(t.name);
    INFO(render(f), " [", var, ":=", t.name, "]");
    REQUIRE(free_vars(substitute(f, var, t)) == expected);
  }
}

TEST_CASE("property: substitution through a fresh name") {
  testing::FormulaGen gen(7);
  for (int i = 0; i < 500; ++i) {
    auto f = gen.formula(5);
    auto var = gen.name();
    auto t = gen.term();
    const Term fresh = Term::constant("w0");
    auto two_step = substitute(substitute(f, var, fresh), "w0", t);
    INFO(render(f), " [", var, ":=", t.name, "]");
    REQUIRE(alpha_equal(two_step, substitute(f, var, t)));
  }
}
