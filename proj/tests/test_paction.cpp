#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qweyl/minorops.hpp"
#include "qweyl/paction.hpp"
#include "qweyl/suites.hpp"

using namespace qweyl;

namespace {

WeylElement gen(AlgebraSpec s, GenRef g) { return WeylElement::generator(s, g); }

WeylElement tpow(AlgebraSpec s, int i, int j, int e) {
  PBWMonomial mono = PBWMonomial::unit(s.m, s.n);
  mono.addT(i, j, s.n, e);
  return WeylElement::monomial(s, mono);
}

}  // namespace

TEST_CASE("c scalars") {
  CHECK(c_scalar(0) == RatQ(1));
  CHECK(c_scalar(-1) == RatQ(0));
  CHECK(c_scalar(2) == RatQ(1) + RatQ::qpow(2) + RatQ::qpow(4));

  CHECK(c2_scalar(1, 0) == RatQ(1) + RatQ::qpow(2));
  CHECK(c2_scalar(0, 1) == RatQ(0));
  CHECK(c2_scalar(2, 1) == (RatQ(1) + RatQ::qpow(2) + RatQ::qpow(4)) * (RatQ(1) + RatQ::qpow(2)));
  CHECK(c2_scalar(3, -1) == RatQ(1));
}

TEST_CASE("basic actions") {
  AlgebraSpec s11 = filtered(1, 1);
  for (int a = 0; a <= 4; ++a) {
    WeylElement got = act(gen(s11, dGen(1, 1)), tpow(s11, 1, 1, a + 1));
    CHECK(got == tpow(s11, 1, 1, a).scaled(c_scalar(a)));
  }

  AlgebraSpec s22 = filtered(2, 2);
  WeylElement f = tpow(s22, 2, 2, 1);
  CHECK(act(WeylElement::one(s22), f) == f);
  CHECK(act(gen(s22, dGen(1, 1)), f).isZero());
}

TEST_CASE("action kills larger derivative exponents") {
  AlgebraSpec s13 = filtered(1, 3);
  // d^b . t^a = 0 whenever some b_i > a_i.
  WeylElement f = multiply(tpow(s13, 1, 1, 1), tpow(s13, 1, 2, 2));
  WeylElement D = multiply(gen(s13, dGen(1, 1)), multiply(gen(s13, dGen(1, 1)), gen(s13, dGen(1, 2))));
  CHECK(act(D, f).isZero());
}

TEST_CASE("action matrices") {
  AlgebraSpec s11 = filtered(1, 1);
  CHECK(action_matrix(WeylElement::one(s11), 3) == QMatrix::identity(1));
  AlgebraSpec s13 = filtered(1, 3);
  CHECK(action_matrix(WeylElement::one(s13), 1) == QMatrix::identity(3));
  CHECK(action_matrix(WeylElement::one(s13), 2) == QMatrix::identity(6));

  WeylElement td = multiply(gen(s11, tGen(1, 1)), gen(s11, dGen(1, 1)));
  QMatrix m = action_matrix(td, 1);
  REQUIRE(m.rows() == 1);
  CHECK(m.at(0, 0) == RatQ(1));

  // The scalar sum acts on the degree-2 component of the 2x2 algebra by q^4.
  AlgebraSpec s22 = filtered(2, 2);
  WeylElement S(s22);
  RatQ q2m1 = RatQ::qpow(2) - RatQ(1);
  for (long r = 0; r <= 2; ++r) S = S + D_r(r, 2, 2).scaled(q2m1.pow(r));
  QMatrix got = action_matrix(S, 2);
  QMatrix want = QMatrix::identity(got.rows());
  for (int i = 0; i < want.rows(); ++i) want.at(i, i) = RatQ::qpow(4);
  CHECK(got == want);
}

TEST_CASE("parallel and serial action matrices agree") {
  WeylElement D = D_opr(1, 2, 2);
  for (long d = 0; d <= 3; ++d) CHECK(action_matrix(D, d) == action_matrix_serial(D, d));
}

TEST_CASE("module axiom on random elements") {
  Rng rng(17);
  AlgebraSpec s22 = filtered(2, 2);
  for (int t = 0; t < 50; ++t) {
    WeylElement D = random_element(rng, s22, 2, 3);
    WeylElement E = random_element(rng, s22, 2, 3);
    WeylElement f(s22);
    WeylElement sample = random_element(rng, s22, 2, 3);
    for (const auto& [mono, c] : sample.terms())
      if (mono.dDegree() == 0) f.add(mono, c);
    CHECK(act(multiply(D, E), f) == act(D, act(E, f)));
  }
}

TEST_CASE("act validates its inputs") {
  AlgebraSpec s22 = filtered(2, 2);
  WeylElement notPoly = gen(s22, dGen(1, 1));
  CHECK_THROWS_AS(act(WeylElement::one(s22), notPoly), std::invalid_argument);
  AlgebraSpec g22 = graded(2, 2);
  CHECK_THROWS_AS(act(WeylElement::one(g22), WeylElement::one(g22)), std::invalid_argument);
}
