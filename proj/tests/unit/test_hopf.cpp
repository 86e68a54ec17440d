#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtree/classical.hpp"
#include "qtree/hopf.hpp"
#include "qtree/parser.hpp"
#include "qtree/rng.hpp"

using namespace qtree;

namespace {

const Alphabet k2(2);

Element E(const char* expr) { return parse_element(expr, k2); }

}  // namespace

TEST_CASE("delta on generators and the unit") {
  CHECK(to_string(delta(E("a[0,1]"))) ==
        "a[0,0] ox a[0,1] + a[0,1] ox a[1,1]");
  CHECK(to_string(delta(E("1"))) == "1 ox 1");
  // homomorphism property by construction
  Element prod = E("a[0,1]*a[1,0]");
  CHECK(delta(prod) == multiply_pointwise(delta(E("a[0,1]")), delta(E("a[1,0]"))));
}

TEST_CASE("delta is a *-homomorphism on random elements") {
  Rng rng(47);
  for (int i = 0; i < 25; ++i) {
    int k = 2 + rng.below(2);
    Element x = random_element(rng, k, k == 2 ? 2 : 1, 2, 2);
    Element y = random_element(rng, k, k == 2 ? 2 : 1, 2, 2);
    CHECK(prove_zero_tensor(delta(x * y) -
                            multiply_pointwise(delta(x), delta(y)))
              .proved_zero());
    CHECK(prove_zero_tensor(delta(adjoint(x)) - tensor_adjoint(delta(x)))
              .proved_zero());
  }
}

TEST_CASE("counit") {
  CHECK(counit(E("a[01,01]")) == 1);
  CHECK(counit(E("a[01,10]")) == 0);
  CHECK(counit(E("a[0,0]*a[01,01] - 3")) == -2);
}

TEST_CASE("antipode") {
  CHECK(to_string(antipode(E("a[01,10]"))) == "a[10,01]");
  CHECK(to_string(antipode(E("a[0,1]*a[01,11]"))) == "a[11,01]*a[1,0]");
  Rng rng(53);
  for (int i = 0; i < 40; ++i) {
    int k = 2 + rng.below(2);
    Element x = random_element(rng, k, 2, 2, 3);
    Element y = random_element(rng, k, 2, 2, 3);
    CHECK(antipode(antipode(x)) == x);
    // kappa(xy) = kappa(y) kappa(x), and eps . kappa = eps
    CHECK(prove_zero(antipode(x * y) - antipode(y) * antipode(x))
              .proved_zero());
    CHECK(counit(antipode(x)) == counit(x));
  }
}

TEST_CASE("gamma coaction values") {
  CHECK(to_string(gamma(1, FunctionElement::basis(2, Word{0}))) ==
        "a[0,0] ox p[0] + a[0,1] ox p[1]");
  // gamma_1(1_1) = 1 ox 1_1
  TensorElement lhs = gamma(1, FunctionElement::unit(2, 1));
  TensorElement rhs =
      tensor_product(TensorElement::from_element(Element::unit(2)),
                     TensorElement::function_unit(2, 1));
  CHECK(prove_zero_tensor(lhs - rhs).proved_zero());
  CHECK(gamma(2, FunctionElement::basis(2, Word::parse("01"))).terms().size() ==
        4);
}

TEST_CASE("cqg axioms suite") {
  SuiteConfig cfg;
  cfg.k = 2;
  cfg.d = 2;
  cfg.samples = 10;
  VerificationReport r = verify_cqg_axioms(cfg);
  CHECK(r.pass());
  CHECK(!r.identities.empty());

  SuiteConfig cfg3;
  cfg3.k = 3;
  cfg3.d = 1;
  cfg3.samples = 10;
  CHECK(verify_cqg_axioms(cfg3).pass());
}

TEST_CASE("hopf laws suite") {
  SuiteConfig cfg;
  cfg.k = 2;
  cfg.d = 2;
  CHECK(verify_hopf_laws(cfg).pass());
  SuiteConfig cfg3;
  cfg3.k = 3;
  cfg3.d = 1;
  CHECK(verify_hopf_laws(cfg3).pass());
}

TEST_CASE("antipode law instance collapses to the counit") {
  // m(kappa ox id) Delta(a[0,1]) = sum_w a[w,0] a[w,1] = 0 = eps(a[0,1]) 1
  Element sum(2);
  for (const Word& w : enumerate_words(k2, 1)) {
    sum += Element::from_generator(2, Generator(w, Word{0})) *
           Element::from_generator(2, Generator(w, Word{1}));
  }
  CHECK(prove_zero(sum).proved_zero());
}

TEST_CASE("coaction suite") {
  SuiteConfig cfg;
  cfg.k = 2;
  cfg.d = 2;
  CHECK(verify_coaction(cfg).pass());
  SuiteConfig cfg3;
  cfg3.k = 3;
  cfg3.d = 1;
  CHECK(verify_coaction(cfg3).pass());
}

TEST_CASE("podles span instance") {
  // sum_u gamma_1(p_u)(a[u,0] ox 1) = 1 ox p_0
  TensorElement lhs(2, {Leg::algebra(), Leg::function(1)});
  for (const Word& u : enumerate_words(k2, 1)) {
    TensorElement gu = gamma(1, FunctionElement::basis(2, u));
    TensorElement mult = tensor_product(
        TensorElement::from_element(Element::from_generator(2, Generator(u, Word{0}))),
        TensorElement::function_unit(2, 1));
    lhs += multiply_pointwise(gu, mult);
  }
  TensorElement rhs =
      tensor_product(TensorElement::from_element(Element::unit(2)),
                     TensorElement::function_basis(2, Word{0}));
  CHECK(prove_zero_tensor(lhs - rhs).proved_zero());
}

TEST_CASE("duality against the classical oracle") {
  SuiteConfig cfg;
  cfg.k = 2;
  cfg.d = 2;
  VerificationReport r = verify_duality(cfg);
  CHECK(r.pass());
  REQUIRE(r.identities.size() == 4);
}

TEST_CASE("delta dualizes multiplication pointwise at depth 3") {
  // f_{u,v}(gh) = sum_w f_{u,w}(g) f_{w,v}(h), spot-checked deeper
  auto group = enumerate_aut(2, 3);
  auto& reg = Registry::instance();
  Generator a(Word::parse("010"), Word::parse("110"));
  TensorElement da = delta(Element::from_generator(2, a));
  Rng rng(59);
  for (int i = 0; i < 50; ++i) {
    const Portrait& g = group[rng.below(group.size())];
    const Portrait& h = group[rng.below(group.size())];
    Rational sum = 0;
    for (const auto& [tuple, c] : da.terms()) {
      Rational l = 1, r = 1;
      for (GenId f : reg.factors(tuple[0]))
        l *= indicator_eval(reg.generator(f), g);
      for (GenId f : reg.factors(tuple[1]))
        r *= indicator_eval(reg.generator(f), h);
      sum += c * l * r;
    }
    CHECK(sum == indicator_eval(a, g.compose(h)));
  }
}
