#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtree/engine.hpp"
#include "qtree/parser.hpp"
#include "qtree/rng.hpp"

using namespace qtree;

namespace {

const Alphabet k2(2);
const Alphabet k3(3);
const Alphabet k4(4);

Element E(const char* text, const Alphabet& a = k2) {
  return parse_element(text, a);
}

std::string reduced_str(const char* text, const Alphabet& a = k2) {
  return to_string(reduce(E(text, a)).result);
}

}  // namespace

TEST_CASE("parse basics") {
  Element e = E("a[0,1]*a[01,10] + 2*a[1,1]");
  CHECK(e.terms().size() == 2);
  CHECK(to_string(e) == "2*a[1,1] + a[0,1]*a[01,10]");

  CHECK(E("a[e,e]").is_unit());
  CHECK(E("1").is_unit());
  CHECK(to_string(E("a[0,1] - a[0,1]")) == "0");
  CHECK(to_string(E("-a[0,1]")) == "-a[0,1]");
  CHECK(to_string(E("1/2*a[0,1] + 1/2*a[0,1]")) == "a[0,1]");
  CHECK(to_string(E("3 - 1")) == "2");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(E("a[01,1]"), ParseError);
  CHECK_THROWS_AS(E("a[2,0]"), ParseError);      // letter out of range at k=2
  CHECK_THROWS_AS(E("a[0,1"), ParseError);
  CHECK_THROWS_AS(E("a[0,1] +"), ParseError);
  CHECK_THROWS_AS(E(""), ParseError);
  CHECK_THROWS_AS(E("b[0,1]"), ParseError);
  try {
    E("a[0,1] @ a[1,0]");
    CHECK(false);
  } catch (const ParseError& err) {
    CHECK(err.position() == 7);
  }
}

TEST_CASE("round trip through the grammar") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Element e = random_element(rng, 2 + rng.below(2), 2, 3, 4);
    Element back = parse_element(to_string(e), Alphabet(e.alphabet_size()));
    CHECK(back == e);
  }
}

TEST_CASE("multiply: defining relation examples") {
  CHECK(to_string(E("a[0,1]") * E("a[0,1]")) == "a[0,1]");        // idempotent
  CHECK((E("a[0,1]") * E("a[1,1]")).is_zero());                   // column rule
  CHECK(to_string(E("a[0,1]") * E("a[01,10]")) == "a[01,10]");    // absorption
  CHECK(to_string(E("a[01,10]") * E("a[0,1]")) == "a[01,10]");    // both sides
  CHECK((E("a[00,00]") * E("a[01,00]")).is_zero());               // same col
  CHECK((E("a[00,00]") * E("a[00,01]")).is_zero());               // same row
  CHECK((E("a[0,0]") * E("a[00,11]")).is_zero());  // mixed depth, one prefix
  // both prefixes of the shorter factor match: absorption, not zero
  CHECK(to_string(E("a[0,0]") * E("a[00,01]")) == "a[00,01]");
  // rows agree one level deeper than columns: zero
  CHECK((E("a[10,11]") * E("a[11,01]")).is_zero());
}

TEST_CASE("multiply requires one alphabet") {
  CHECK_THROWS_AS(E("a[0,1]") * E("a[0,1]", k3), std::invalid_argument);
}

TEST_CASE("adjoint is an involutive anti-automorphism") {
  CHECK(to_string(adjoint(E("a[0,1]*a[10,01]"))) == "a[10,01]*a[0,1]");
  CHECK(to_string(adjoint(E("a[0,1]"))) == "a[0,1]");
  CHECK(adjoint(Element::unit(2)).is_unit());

  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    int k = 2 + rng.below(2);
    Element x = random_element(rng, k, 2, 3, 3);
    Element y = random_element(rng, k, 2, 3, 3);
    CHECK(adjoint(adjoint(x)) == x);
    CHECK(reduce(adjoint(x * y)).result ==
          reduce(adjoint(y) * adjoint(x)).result);
  }
}

TEST_CASE("reduce: sum collapse and orthogonality") {
  CHECK(reduced_str("a[00,10]+a[00,11]") == "a[0,1]");
  CHECK(reduced_str("a[00,10]+a[01,10]") == "a[0,1]");
  CHECK(reduced_str("a[00,00]*a[01,00]") == "0");
  // collapse down to the unit
  CHECK(reduced_str("a[0,0]+a[0,1]") == "1");
  CHECK(reduced_str("a[0,0]+a[1,0]") == "1");
  // full depth-1 magic square sums to k times the unit
  CHECK(reduced_str("a[0,0]+a[0,1]+a[1,0]+a[1,1]") == "2");
  // a full depth-2 row of the square collapses all the way to the unit
  CHECK(reduced_str("a[00,00]+a[00,01]+a[00,10]+a[00,11]") == "1");
  // coefficients must match within a collapse group
  CHECK(reduced_str("2*a[00,10]+2*a[00,11]") == "2*a[0,1]");
  CHECK(reduced_str("2*a[00,10]+3*a[00,11]") == "2*a[00,10] + 3*a[00,11]");
  // collapse inside a product
  CHECK(reduced_str("a[00,00]*a[11,10] + a[00,01]*a[11,10]") ==
        "a[0,0]*a[11,10]");
}

TEST_CASE("reduce terminates at a fixpoint and is stable") {
  Rng rng(17);
  for (int i = 0; i < 80; ++i) {
    int k = 2 + rng.below(2);
    Element x = random_element(rng, k, 2, 3, 4);
    ReductionOutcome once = reduce(x);
    ReductionOutcome twice = reduce(once.result);
    CHECK(once.result == twice.result);
    CHECK(once.certificate != Certificate::BudgetExhausted);
  }
}

TEST_CASE("budget exhaustion is an outcome") {
  Element big(3);
  for (const Word& u : enumerate_words(k3, 2)) {
    for (const Word& v : enumerate_words(k3, 2)) {
      big += Element::from_generator(3, Generator(u, v));
    }
  }
  ReductionOutcome out = reduce(big, ReductionBudget{3});
  CHECK(out.certificate == Certificate::BudgetExhausted);
}

TEST_CASE("refine: canonical expansions") {
  // one application of the square relation, row side padded with 0
  CHECK(to_string(refine(E("a[0,1]"), 2)) == "a[00,10] + a[00,11]");
  CHECK(to_string(refine_cols(E("a[0,1]"), 2)) == "a[00,10] + a[01,10]");
  CHECK(to_string(refine(E("1"), 1)) == "a[0,0] + a[0,1]");
  CHECK(to_string(refine(E("a[0,1]"), 1)) == "a[0,1]");
  CHECK_THROWS_AS(refine(E("a[01,10]"), 1), std::invalid_argument);
  // a refined element collapses back
  CHECK(to_string(reduce(refine(E("a[0,1]"), 3)).result) == "a[0,1]");
}

TEST_CASE("prove_zero: certified identities") {
  CHECK(prove_zero(E("a[0,1]*a[0,1] - a[0,1]")).proved_zero());
  CHECK(prove_zero(E("a[0,0]*a[1,0] + a[0,1]*a[1,1]")).proved_zero());
  CHECK(prove_zero(E("a[00,10]+a[00,11]-a[0,1]")).proved_zero());
  // depth-mismatch difference needs refinement
  CHECK(prove_zero(E("a[0,1] - a[00,10] - a[00,11]")).proved_zero());
}

TEST_CASE("prove_zero never certifies the noncommutativity witness") {
  // distinct-row distinct-column generators do not commute for k = 4
  Element x = E("a[0,0]*a[1,1] - a[1,1]*a[0,0]", k4);
  ReductionOutcome out = prove_zero(x);
  CHECK_FALSE(out.proved_zero());
  // nor the depth-2 pair at k = 2
  Element y = E("a[00,00]*a[10,10] - a[10,10]*a[00,00]");
  CHECK_FALSE(prove_zero(y).proved_zero());
}

TEST_CASE("magic square row and column sums collapse at depth <= 3") {
  for (int k : {2, 3}) {
    Alphabet a(k);
    for (int n = 0; n <= 2; ++n) {
      for (const Word& u : enumerate_words(a, n)) {
        for (const Word& v : enumerate_words(a, n)) {
          Element base = Element::from_generator(k, Generator(u, v));
          for (int x = 0; x < k; ++x) {
            Element rows(k), cols(k);
            for (int y = 0; y < k; ++y) {
              rows += Element::from_generator(
                  k, Generator(u.append(x), v.append(y)));
              cols += Element::from_generator(
                  k, Generator(u.append(y), v.append(x)));
            }
            CHECK(prove_zero(rows - base).proved_zero());
            CHECK(prove_zero(cols - base).proved_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("substitute realizes the universal property") {
  // substitute into plain rationals via the counit-style assignment
  auto img = [](GenId g) {
    const Generator& gen = Registry::instance().generator(g);
    return Rational(gen.row == gen.col ? 1 : 0);
  };
  auto mul = [](const Rational& a, const Rational& b) { return a * b; };
  auto add = [](const Rational& a, const Rational& b) { return a + b; };
  auto scale = [](const Rational& c, const Rational& a) { return c * a; };
  CHECK(substitute(E("a[01,01]"), img, Rational(1), mul, add, scale) == 1);
  CHECK(substitute(E("a[01,10]"), img, Rational(1), mul, add, scale) == 0);
  CHECK(substitute(Element::unit(2), img, Rational(1), mul, add, scale) == 1);
  CHECK(substitute(E("a[0,0]*a[01,01] - 3"), img, Rational(1), mul, add,
                   scale) == -2);
}
