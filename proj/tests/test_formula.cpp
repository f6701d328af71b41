#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modal/formula.hpp"
#include "modal/sampling.hpp"

using namespace modal;

namespace {

Formula x() { return Formula::variable("x"); }
Formula y() { return Formula::variable("y"); }
Formula p() { return Formula::atom(param_p()); }
Formula q() { return Formula::atom(param_q()); }

std::vector<Atom> gen_atoms() {
  return {Atom::variable("x"), Atom::variable("y"), param_p(), param_q()};
}

// Rebuilds a guarded box expansion with its second and third antecedents
// swapped; mapping boxplus onto boxminus and back.
Formula swap_middle_guards(const Formula& f) {
  Formula g1 = f.left().child();                                  // ~p & ~q
  Formula layer1 = f.right().child();                             // [] (...)
  Formula g2 = layer1.left().child();
  Formula layer2 = layer1.right().child();
  Formula g3 = layer2.left().child();
  Formula inner = layer2.right();
  return Formula::imp(g1, Formula::box(Formula::imp(g3, Formula::box(Formula::imp(g2, inner)))));
}

}  // namespace

TEST_CASE("atoms: reserved names and namespaces") {
  CHECK_THROWS_AS(Atom::variable("p"), std::invalid_argument);
  CHECK_THROWS_AS(Atom::variable("q"), std::invalid_argument);
  CHECK_NOTHROW(Atom::parameter("p"));
  CHECK_NOTHROW(Atom::variable("p1"));
  // Same name, different kinds: distinct atoms.
  CHECK(Atom::variable("a") == Atom::variable("a"));
  CHECK_FALSE(Atom::variable("a") == Atom::parameter("a"));
  CHECK(Atom::parameter("r").text() == "#r");
  CHECK(Atom::variable("r").text() == "r");
}

TEST_CASE("parse: grammar basics") {
  CHECK(parse("false") == Formula::bot());
  CHECK(parse("true") == Formula::top());
  CHECK(parse("~#p -> [] ~ [] #p") ==
        Formula::imp(Formula::neg(p()), Formula::box(Formula::neg(Formula::box(p())))));
  CHECK(parse("[+] false") == boxplus(Formula::bot()));
  CHECK(parse("[-] true") == boxminus(Formula::top()));
  CHECK(parse("[+^2] false") == boxplus_iter(2, Formula::bot()));
  CHECK(parse("[-<3] x") == boxminus_bounded(3, x()));
  CHECK(parse("<> x") == Formula::diamond(x()));
  CHECK(parse("x & y | x") == Formula::disj(Formula::conj(x(), y()), x()));
  CHECK(parse("x | y & x") == Formula::disj(x(), Formula::conj(y(), x())));
  CHECK(parse("x -> y -> x") == Formula::imp(x(), Formula::imp(y(), x())));
  CHECK(parse("x <-> y") == Formula::iff(x(), y()));
  CHECK(parse("(x | y) & x") == Formula::conj(Formula::disj(x(), y()), x()));
  CHECK(parse("~x & y") == Formula::conj(Formula::neg(x()), y()));
}

TEST_CASE("parse: errors carry positions") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("x &"), ParseError);
  CHECK_THROWS_AS(parse("(x"), ParseError);
  CHECK_THROWS_AS(parse("x y"), ParseError);
  CHECK_THROWS_AS(parse("[+^] x"), ParseError);
  CHECK_THROWS_AS(parse("p"), ParseError);  // reserved parameter name, bare
  try {
    parse("x | (y &)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("print: canonical text") {
  CHECK(print(Formula::bot()) == "false");
  CHECK(print(Formula::top()) == "true");
  CHECK(print(Formula::neg(p())) == "~#p");
  CHECK(print(Formula::conj(x(), Formula::bot())) == "x & false");
  CHECK(print(Formula::imp(x(), y())) == "x -> y");
  CHECK(print(Formula::iff(x(), y())) == "x <-> y");
  CHECK(print(Formula::diamond(x())) == "<> x");
  CHECK(print(Formula::disj(x(), Formula::disj(y(), x()))) == "x | (y | x)");
  CHECK(print(Formula::disj(Formula::disj(x(), y()), x())) == "x | y | x");
  CHECK(print(Formula::imp(Formula::imp(x(), y()), x())) == "(x -> y) -> x");
  CHECK(print(Formula::neg(Formula::disj(x(), y()))) == "~(x | y)");
}

TEST_CASE("round-trip: parse after print is the identity on random formulas") {
  Rng rng(2024);
  std::vector<Atom> atoms = gen_atoms();
  for (int i = 0; i < 500; ++i) {
    Formula f = random_formula(rng, 5, atoms);
    CAPTURE(print(f));
    CHECK(parse(print(f)) == f);
  }
}

TEST_CASE("degree: base cases") {
  CHECK(x().degree() == 0);
  CHECK(p().degree() == 0);
  CHECK(Formula::bot().degree() == 0);
  CHECK(Formula::box(x()).degree() == 1);
  CHECK(boxplus(Formula::bot()).degree() == 3);
  CHECK(boxminus(x()).degree() == 3);
  CHECK(boxplus_iter(2, Formula::bot()).degree() == 6);
  CHECK(boxminus_iter(3, Formula::bot()).degree() == 9);
  CHECK(boxplus_bounded(0, x()).degree() == 0);
}

TEST_CASE("degree: the six identities on random formulas, k <= 5") {
  Rng rng(7);
  std::vector<Atom> atoms = gen_atoms();
  for (int i = 0; i < 100; ++i) {
    Formula f = random_formula(rng, 4, atoms);
    int d = f.degree();
    CHECK(boxplus(f).degree() == d + 3);
    CHECK(boxminus(f).degree() == d + 3);
    for (int k = 0; k <= 5; ++k) {
      CHECK(boxplus_iter(k, f).degree() == d + 3 * k);
      CHECK(boxminus_iter(k, f).degree() == d + 3 * k);
      int bounded = k == 0 ? 0 : d + 3 * (k - 1);
      CHECK(boxplus_bounded(k, f).degree() == bounded);
      CHECK(boxminus_bounded(k, f).degree() == bounded);
    }
  }
}

TEST_CASE("guarded boxes: literal expansions") {
  Formula not_p = Formula::neg(p());
  Formula not_q = Formula::neg(q());
  Formula vv = Formula::conj(not_p, not_q);
  Formula tg = Formula::conj(p(), not_q);
  Formula ug = Formula::conj(not_p, q());
  Formula expected = Formula::imp(
      vv, Formula::box(Formula::imp(
              tg, Formula::box(Formula::imp(
                      ug, Formula::box(Formula::imp(vv, Formula::bot())))))));
  CHECK(boxplus(Formula::bot()) == expected);
  Formula expected_minus = Formula::imp(
      vv, Formula::box(Formula::imp(
              ug, Formula::box(Formula::imp(
                      tg, Formula::box(Formula::imp(vv, Formula::top())))))));
  CHECK(boxminus(Formula::top()) == expected_minus);
}

TEST_CASE("guarded boxes: iteration and bounds") {
  CHECK(boxplus_iter(0, x()) == x());
  CHECK(boxplus_iter(1, Formula::bot()) == boxplus(Formula::bot()));
  CHECK(boxplus_iter(2, x()) == boxplus(boxplus(x())));
  CHECK(boxplus_bounded(0, x()) == Formula::top());
  CHECK(boxplus_bounded(1, x()) == Formula::conj(Formula::top(), x()));
  CHECK(boxminus_bounded(2, Formula::bot()) ==
        Formula::conj(Formula::conj(Formula::top(), Formula::bot()),
                      boxminus(Formula::bot())));
}

TEST_CASE("guarded boxes: plus and minus differ by swapping the middle guards") {
  Rng rng(99);
  std::vector<Atom> atoms = gen_atoms();
  for (int i = 0; i < 50; ++i) {
    Formula f = random_formula(rng, 3, atoms);
    CHECK(swap_middle_guards(boxplus(f)) == boxminus(f));
    CHECK(swap_middle_guards(boxminus(f)) == boxplus(f));
  }
}

TEST_CASE("guarded boxes: expansions introduce no new variables") {
  Rng rng(5);
  std::vector<Atom> atoms = gen_atoms();
  for (int i = 0; i < 50; ++i) {
    Formula f = random_formula(rng, 3, atoms);
    CHECK(boxplus(f).variables() == f.variables());
    CHECK(boxminus(f).variables() == f.variables());
  }
}

TEST_CASE("atoms / variables / parameters") {
  CHECK(boxplus(Formula::bot()).atoms() == std::set<Atom>{param_p(), param_q()});
  CHECK(Formula::imp(x(), Formula::box(y())).variables() ==
        std::set<Atom>{Atom::variable("x"), Atom::variable("y")});
  CHECK(x().parameters().empty());
  CHECK(boxplus(x()).parameters() == std::set<Atom>{param_p(), param_q()});
}

TEST_CASE("structural equality and ordering") {
  CHECK(Formula::conj(x(), y()) == Formula::conj(x(), y()));
  CHECK(Formula::conj(x(), y()) != Formula::conj(y(), x()));
  CHECK(Formula::top() == Formula::neg(Formula::bot()));
  // compare is a total order consistent with equality.
  Rng rng(3);
  std::vector<Atom> atoms = gen_atoms();
  for (int i = 0; i < 60; ++i) {
    Formula a = random_formula(rng, 3, atoms);
    Formula b = random_formula(rng, 3, atoms);
    int ab = Formula::compare(a, b);
    int ba = Formula::compare(b, a);
    CHECK(ab == -ba);
    CHECK((ab == 0) == (a == b));
  }
}
