#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtree/parser.hpp"
#include "qtree/rng.hpp"
#include "qtree/tensor.hpp"

using namespace qtree;

namespace {

const Alphabet k2(2);

TensorElement T(const char* expr) {
  return TensorElement::from_element(parse_element(expr, k2));
}

TensorElement P(const char* w) {
  return TensorElement::function_basis(2, Word::parse(w));
}

TensorElement random_tensor(Rng& rng, int k, const Signature& sig) {
  TensorElement out(k, sig);
  int terms = 1 + rng.below(3);
  for (int t = 0; t < terms; ++t) {
    TensorElement piece = TensorElement::scalar(k, 1 + rng.below(3));
    for (const Leg& leg : sig) {
      if (leg.kind == LegKind::Algebra) {
        piece = tensor_product(
            piece, TensorElement::from_element(random_monomial(rng, k, 2, 2)));
      } else {
        Word w;
        for (int i = 0; i < leg.n; ++i) w = w.append(rng.below(k));
        piece = tensor_product(piece, TensorElement::function_basis(k, w));
      }
    }
    out += piece;
  }
  return out;
}

}  // namespace

TEST_CASE("tensor product shapes") {
  TensorElement t = tensor_product(T("a[0,1]"), P("0"));
  CHECK(t.terms().size() == 1);
  CHECK(t.signature() == Signature{Leg::algebra(), Leg::function(1)});
  CHECK(to_string(t) == "a[0,1] ox p[0]");

  // unit of C(X^n) expands to all k^n minimal projections
  TensorElement u = tensor_product(T("1"), TensorElement::function_unit(2, 2));
  CHECK(u.terms().size() == 4);

  TensorElement two = tensor_product(T("a[0,1]+a[1,0]"), T("a[0,0]"));
  CHECK(two.terms().size() == 2);
}

TEST_CASE("pointwise products") {
  TensorElement a = tensor_product(T("a[0,1]"), P("0"));
  CHECK(multiply_pointwise(a, a) == a);  // projections in both legs
  TensorElement b = tensor_product(T("1"), P("0"));
  TensorElement c = tensor_product(T("1"), P("1"));
  CHECK(multiply_pointwise(b, c).is_zero());  // orthogonal projections
  TensorElement d = tensor_product(T("a[1,1]"), P("0"));
  CHECK(multiply_pointwise(a, d).is_zero());  // column rule in the algebra leg
}

TEST_CASE("pointwise product is associative on random triples") {
  Rng rng(37);
  Signature sig{Leg::algebra(), Leg::function(1)};
  for (int i = 0; i < 40; ++i) {
    int k = 2 + rng.below(2);
    TensorElement x = random_tensor(rng, k, sig);
    TensorElement y = random_tensor(rng, k, sig);
    TensorElement z = random_tensor(rng, k, sig);
    CHECK(multiply_pointwise(multiply_pointwise(x, y), z) ==
          multiply_pointwise(x, multiply_pointwise(y, z)));
  }
}

TEST_CASE("function legs form a commutative idempotent semiring") {
  Rng rng(41);
  Signature sig{Leg::function(2)};
  for (int i = 0; i < 30; ++i) {
    TensorElement x = random_tensor(rng, 2, sig);
    TensorElement y = random_tensor(rng, 2, sig);
    CHECK(multiply_pointwise(x, y) == multiply_pointwise(y, x));
  }
  CHECK(multiply_pointwise(P("01"), P("01")) == P("01"));
  CHECK(multiply_pointwise(P("01"), P("10")).is_zero());
}

TEST_CASE("apply_on_leg identity map") {
  TensorElement t = tensor_product(T("a[0,1]"), P("0"));
  TensorElement same =
      apply_on_leg(t, 0, {Leg::algebra()}, [](std::uint32_t m) {
        TensorElement out(2, {Leg::algebra()});
        out.add_term({m}, 1);
        return out;
      });
  CHECK(same == t);
}

TEST_CASE("maps on disjoint legs commute") {
  Rng rng(43);
  Signature sig{Leg::algebra(), Leg::algebra(), Leg::function(1)};
  auto dup_word = [](std::uint32_t wid) {
    auto& reg = Registry::instance();
    TensorElement out(2, {Leg::function(2)});
    const Word w = reg.word(wid);
    out.add_term({reg.word_id(w.concat(w))}, 1);
    return out;
  };
  auto adjoint_leg = [](std::uint32_t m) {
    auto& reg = Registry::instance();
    auto f = reg.factors(m);
    std::vector<GenId> rev(f.rbegin(), f.rend());
    TensorElement out(2, {Leg::algebra()});
    out.add_term({reg.mon_id(rev)}, 1);
    return out;
  };
  for (int i = 0; i < 30; ++i) {
    TensorElement t = random_tensor(rng, 2, sig);
    TensorElement ab = apply_on_leg(
        apply_on_leg(t, 0, {Leg::algebra()}, adjoint_leg), 2,
        {Leg::function(2)}, dup_word);
    TensorElement ba = apply_on_leg(
        apply_on_leg(t, 2, {Leg::function(2)}, dup_word), 0, {Leg::algebra()},
        adjoint_leg);
    CHECK(ab == ba);
  }
}

TEST_CASE("collapse fires inside a leg with the other legs fixed") {
  // sum_y a[0,y] ox p_0 collapses to 1 ox p_0
  TensorElement sum(2, {Leg::algebra(), Leg::function(1)});
  sum += tensor_product(T("a[0,0]"), P("0"));
  sum += tensor_product(T("a[0,1]"), P("0"));
  TensorElement expected = tensor_product(T("1"), P("0"));
  CHECK(prove_zero_tensor(sum - expected).proved_zero());

  // but not across distinct function-leg entries
  TensorElement split(2, {Leg::algebra(), Leg::function(1)});
  split += tensor_product(T("a[0,0]"), P("0"));
  split += tensor_product(T("a[0,1]"), P("1"));
  CHECK_FALSE(prove_zero_tensor(split).proved_zero());
}

TEST_CASE("merge_algebra_legs multiplies adjacent legs") {
  TensorElement t = tensor_product(T("a[0,1]"), T("a[0,1]"));
  CHECK(merge_algebra_legs(t, 0) == T("a[0,1]"));
  TensorElement t2 = tensor_product(T("a[0,1]"), T("a[1,1]"));
  CHECK(merge_algebra_legs(t2, 0).is_zero());
}

TEST_CASE("signature mismatches are rejected") {
  CHECK_THROWS_AS(multiply_pointwise(T("a[0,1]"), P("0")),
                  std::invalid_argument);
  TensorElement t(2, {Leg::algebra()});
  CHECK_THROWS_AS(t.add_term({0u, 0u}, 1), std::invalid_argument);
}
