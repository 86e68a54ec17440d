#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtree/classical.hpp"
#include "qtree/engine.hpp"
#include "qtree/parser.hpp"
#include "qtree/rng.hpp"

using namespace qtree;

namespace {

std::vector<Generator> generators_up_to(int k, int depth) {
  std::vector<Generator> out;
  for (int n = 1; n <= depth; ++n) {
    for (const Word& u : enumerate_words(Alphabet(k), n)) {
      for (const Word& v : enumerate_words(Alphabet(k), n)) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

bool oracle_equal(const Element& a, const Element& b,
                  const std::vector<Portrait>& group) {
  for (const Portrait& g : group) {
    if (abelian_eval(a, g) != abelian_eval(b, g)) return false;
  }
  return true;
}

}  // namespace

// The adjacent-pair rule set is validated against the brute-force abelian
// oracle before anything else relies on it: for every generator pair, the
// rewritten product must evaluate like the pointwise product of indicators
// on every portrait of the truncated automorphism group.
TEST_CASE("pair rule validation against the abelian oracle") {
  for (int k : {2, 3}) {
    const int depth = 2;
    std::vector<Portrait> group = enumerate_aut(k, depth);
    auto gens = generators_up_to(k, depth);
    for (const Generator& a : gens) {
      Element ea = Element::from_generator(k, a);
      for (const Generator& b : gens) {
        Element eb = Element::from_generator(k, b);
        Element product = ea * eb;  // rewritten by the rule set
        for (const Portrait& g : group) {
          Rational expect =
              Rational(indicator_eval(a, g)) * indicator_eval(b, g);
          REQUIRE(abelian_eval(product, g) == expect);
        }
      }
    }
  }
}

// The "otherwise zero" reading of the letter-versus-word display is wrong:
// when both prefixes differ the product need not vanish. This pins the
// classical witness so the rule set never adopts the unsound extension.
TEST_CASE("both-prefixes-differ products are classically nonzero") {
  Element p = parse_element("a[1,0]*a[01,11]", Alphabet(2));
  std::vector<Portrait> group = enumerate_aut(2, 2);
  bool nonzero = false;
  for (const Portrait& g : group) {
    if (abelian_eval(p, g) != 0) nonzero = true;
  }
  CHECK(nonzero);
  // and the engine must not reduce it to zero
  CHECK_FALSE(prove_zero(p).proved_zero());
}

TEST_CASE("refine preserves oracle evaluation") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int k = 2 + rng.below(2);
    int depth = k == 2 ? 3 : 2;
    std::vector<Portrait> group = enumerate_aut(k, depth);
    Element x = random_element(rng, k, 2, 2, 3);
    CHECK(oracle_equal(x, refine(x, depth), group));
    CHECK(oracle_equal(x, refine_cols(x, depth), group));
  }
}

TEST_CASE("reduce and multiply preserve oracle evaluation") {
  Rng rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 2 + rng.below(2);
    int depth = k == 2 ? 3 : 2;
    std::vector<Portrait> group = enumerate_aut(k, depth);
    Element x = random_element(rng, k, depth == 3 ? 3 : 2, 2, 3);
    Element y = random_element(rng, k, depth == 3 ? 3 : 2, 2, 3);
    CHECK(oracle_equal(x, reduce(x).result, group));
    // product reduction agrees with pointwise products of evaluations
    Element xy = x * y;
    for (const Portrait& g : group) {
      CHECK(abelian_eval(xy, g) == abelian_eval(x, g) * abelian_eval(y, g));
    }
  }
}

TEST_CASE("prove_zero is sound on reduced random elements") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 2 + rng.below(2);
    int depth = 2;
    std::vector<Portrait> group = enumerate_aut(k, depth);
    Element x = random_element(rng, k, depth, 2, 3);
    // x - (a rewriting of x) is certified zero; the oracle must agree
    Element zero_candidate = x - refine(x, depth);
    ReductionOutcome out = prove_zero(zero_candidate);
    if (out.proved_zero()) {
      for (const Portrait& g : group) {
        REQUIRE(abelian_eval(zero_candidate, g) == 0);
      }
    }
  }
}
