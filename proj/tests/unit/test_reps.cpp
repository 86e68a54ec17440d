#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qtree/parser.hpp"
#include "qtree/reps.hpp"

using namespace qtree;

namespace {

const Alphabet k2(2);

Element E(const char* expr, int k = 2) {
  return parse_element(expr, Alphabet(k));
}

}  // namespace

TEST_CASE("two-projection model passes the relations") {
  for (double theta : {0.3, 0.7, 1.1, M_PI / 4}) {
    MatrixRep rep = MatrixRep::two_projection(theta, 3);
    NumericReport r = rep.check_relations(3);
    CHECK_MESSAGE(r.max_residual < 1e-12, "theta=" << theta);
  }
  CHECK_THROWS_AS(MatrixRep::two_projection(0.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(MatrixRep::two_projection(M_PI / 2, 2),
                  std::invalid_argument);
}

TEST_CASE("two-projection block values") {
  MatrixRep rep = MatrixRep::two_projection(M_PI / 4, 3);
  // b[00,01] = 1 - p
  Mat b = *rep.image(Generator(Word::parse("00"), Word::parse("01")));
  Eigen::MatrixXcd expect(2, 2);
  expect << 0, 0, 0, 1;
  CHECK((b.dense - expect).norm() < 1e-14);
  // depth-1 images: identity on the diagonal, zero off it
  CHECK((*rep.image(Generator(Word{0}, Word{0}))).dense.isIdentity(1e-14));
  CHECK((*rep.image(Generator(Word{0}, Word{1}))).dense.norm() < 1e-14);
  // deeper extension b[uw,vw'] = [w==w'] b[u,v]
  Mat d3 = *rep.image(Generator(Word::parse("000"), Word::parse("010")));
  CHECK((d3.dense - expect).norm() < 1e-14);
  CHECK((*rep.image(Generator(Word::parse("000"), Word::parse("011"))))
            .dense.norm() < 1e-14);
  CHECK_FALSE(rep.image(Generator(Word::parse("0000"), Word::parse("0000")))
                  .has_value());
}

TEST_CASE("commutator norm is |cos sin|") {
  for (double theta : {0.3, 0.7, M_PI / 4}) {
    MatrixRep rep = MatrixRep::two_projection(theta, 3);
    Element comm = E("a[00,00]*a[10,10] - a[10,10]*a[00,00]");
    double n = numeric_eval(comm, rep).norm();
    CHECK(std::abs(n - std::abs(std::cos(theta) * std::sin(theta))) < 1e-12);
  }
  // theta = pi/4: exactly 1/2
  MatrixRep rep = MatrixRep::two_projection(M_PI / 4, 3);
  double n = numeric_eval(E("a[00,00]*a[10,10] - a[10,10]*a[00,00]"), rep).norm();
  CHECK(std::abs(n - 0.5) < 1e-12);
}

TEST_CASE("classical rep is exact and group-checked") {
  auto group = enumerate_aut(2, 1);
  MatrixRep rep = MatrixRep::classical(2, group, 1);
  // a[0,1] -> diag over {id, swap} of [g.1 == 0]
  Mat m = *rep.image(Generator(Word{0}, Word{1}));
  CHECK(m.diagonal);
  CHECK(std::abs(m.diag(0).real() - 0.0) < 1e-15);
  CHECK(std::abs(m.diag(1).real() - 1.0) < 1e-15);
  CHECK(rep.check_relations(1).max_residual == 0.0);

  auto partial = enumerate_aut(2, 2);
  partial.pop_back();
  CHECK_THROWS_AS(MatrixRep::classical(2, partial, 2), std::invalid_argument);
}

TEST_CASE("numeric_eval on tensors") {
  MatrixRep rep = MatrixRep::two_projection(M_PI / 4, 2);
  Element a = E("a[00,01]");
  // a ox a evaluates to kron of the leg values
  TensorElement t = tensor_product(TensorElement::from_element(a),
                                   TensorElement::from_element(a));
  Mat m = numeric_eval(t, rep);
  CHECK(m.dense.rows() == 4);
  Mat single = numeric_eval(a, rep);
  CHECK((m.dense - single.kron(single).dense).norm() < 1e-14);
  // function legs map to diagonal basis projections
  TensorElement tf = tensor_product(TensorElement::from_element(a),
                                    TensorElement::function_basis(2, Word{1}));
  Mat mf = numeric_eval(tf, rep);
  CHECK(mf.dense.rows() == 4);
  CHECK(std::abs(mf.dense(1, 1).real() - single.dense(0, 0).real()) < 1e-14);
}

TEST_CASE("refute") {
  MatrixRep two = MatrixRep::two_projection(M_PI / 4, 3);
  std::vector<const MatrixRep*> reps{&two};
  // distinct-row distinct-column depth-2 generators do not commute
  CHECK(refute(E("a[00,00]*a[10,10]"), E("a[10,10]*a[00,00]"), reps) ==
        RefuteResult::Refuted);
  CHECK(refute(E("a[0,1]"), E("a[0,1]"), reps) == RefuteResult::Inconclusive);
  // a true identity is never refuted
  CHECK(refute(E("a[00,00]+a[00,01]"), E("a[0,0]"), reps) ==
        RefuteResult::Inconclusive);
}

TEST_CASE("magic4 witnesses depth-1 noncommutativity on four points") {
  MatrixRep rep = MatrixRep::magic4(M_PI / 4);
  CHECK(rep.check_relations(1).max_residual < 1e-12);
  Element comm = E("a[0,0]*a[2,2] - a[2,2]*a[0,0]", 4);
  CHECK(numeric_eval(comm, rep).norm() > 0.4);
  std::vector<const MatrixRep*> reps{&rep};
  CHECK(refute(E("a[0,0]*a[2,2]", 4), E("a[2,2]*a[0,0]", 4), reps) ==
        RefuteResult::Refuted);
}

TEST_CASE("numeric soundness of certified zeros") {
  MatrixRep rep = MatrixRep::two_projection(M_PI / 4, 3);
  const char* identities[] = {
      "a[0,1]*a[0,1] - a[0,1]",
      "a[00,10]+a[00,11]-a[0,1]",
      "a[0,0]*a[1,0] + a[0,1]*a[1,1]",
      "a[00,00]*a[01,00]",
  };
  for (const char* s : identities) {
    Element e = E(s);
    REQUIRE(prove_zero(e).proved_zero());
    CHECK(numeric_eval(e, rep).norm() < 1e-12);
  }
}
