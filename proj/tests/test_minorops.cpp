#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qweyl/minorops.hpp"
#include "qweyl/paction.hpp"
#include "qweyl/uqact.hpp"

using namespace qweyl;

namespace {

WeylElement gen(AlgebraSpec s, GenRef g) { return WeylElement::generator(s, g); }

}  // namespace

TEST_CASE("quantum minors") {
  AlgebraSpec s22 = filtered(2, 2);
  WeylElement m = qminor_t({1, 2}, {1, 2}, s22);
  WeylElement want = multiply(gen(s22, tGen(1, 1)), gen(s22, tGen(2, 2))) -
                     multiply(gen(s22, tGen(2, 1)), gen(s22, tGen(1, 2))).scaled(RatQ::q());
  CHECK(m == want);

  CHECK(qminor_t({2}, {1}, s22) == gen(s22, tGen(2, 1)));
  CHECK(qminor_d({2}, {1}, s22) == gen(s22, dGen(2, 1)));

  WeylElement mbar = qminor_d({1, 2}, {1, 2}, s22);
  WeylElement wantBar = multiply(gen(s22, dGen(1, 1)), gen(s22, dGen(2, 2))) -
                        multiply(gen(s22, dGen(2, 1)), gen(s22, dGen(1, 2))).scaled(RatQ::qpow(-1));
  CHECK(mbar == wantBar);

  // Order-3 minor: six permutations with Coxeter lengths 0,1,1,2,2,3.
  AlgebraSpec s33 = filtered(3, 3);
  WeylElement m3 = qminor_t({1, 2, 3}, {1, 2, 3}, s33);
  auto tw = [&](std::initializer_list<int> rows) {
    std::vector<GenRef> w;
    int col = 1;
    for (int r : rows) w.push_back(tGen(r, col++));
    return normal_form(w, s33);
  };
  RatQ mq = -RatQ::q();
  WeylElement want3 = tw({1, 2, 3}) + tw({2, 1, 3}).scaled(mq) + tw({1, 3, 2}).scaled(mq) +
                      tw({2, 3, 1}).scaled(mq * mq) + tw({3, 1, 2}).scaled(mq * mq) +
                      tw({3, 2, 1}).scaled(mq * mq * mq);
  CHECK(m3 == want3);

  // Annihilation: the top-row minor kills polynomials supported on lower rows.
  CHECK(act(qminor_d({1, 2}, {1, 2}, s22),
            multiply(gen(s22, tGen(2, 1)), gen(s22, tGen(2, 2))))
            .isZero());
}

TEST_CASE("determinantal operators") {
  CHECK(D_opr(0, 2, 2) == WeylElement::one(filtered(2, 2)));
  CHECK(D_opr(3, 2, 2).isZero());

  AlgebraSpec s11 = filtered(1, 1);
  CHECK(D_opr(1, 1, 1) == multiply(gen(s11, tGen(1, 1)), gen(s11, dGen(1, 1))));

  AlgebraSpec s22 = filtered(2, 2);
  WeylElement want(s22);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) want = want + multiply(gen(s22, tGen(i, j)), gen(s22, dGen(i, j)));
  CHECK(D_opr(1, 2, 2) == want);
}

TEST_CASE("corner embedded operators") {
  CHECK(D_kr(2, 0, 2, 3, false) == WeylElement::one(filtered(2, 3)));
  CHECK(D_kr(1, 0, 2, 3, true) == WeylElement::one(filtered(2, 3)));
  CHECK(D_kr(2, 3, 3, 3, false).isZero());

  // D'_{1,1} in m x n is the bottom-row sum of t d pairs.
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      AlgebraSpec spec = filtered(m, n);
      WeylElement want(spec);
      for (int j = 1; j <= n; ++j)
        want = want + multiply(gen(spec, tGen(m, j)), gen(spec, dGen(m, j)));
      CHECK(D_kr(1, 1, m, n, true) == want);
    }

  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (long r = 0; r <= 3; ++r) CHECK(D_kr(n, r, m, n, false) == D_kr(m, r, m, n, true));
}

TEST_CASE("Cartan images act diagonally") {
  AlgebraSpec s22 = filtered(2, 2);
  WeylElement L1 = cartan_image(1, Side::Left, 2, 2);
  WeylElement want = WeylElement::one(s22) +
                     (multiply(gen(s22, tGen(2, 1)), gen(s22, dGen(2, 1))) +
                      multiply(gen(s22, tGen(2, 2)), gen(s22, dGen(2, 2))))
                         .scaled(RatQ::qpow(2) - RatQ(1));
  CHECK(L1 == want);

  CHECK(act(L1, gen(s22, tGen(2, 1))) == gen(s22, tGen(2, 1)).scaled(RatQ::qpow(2)));
  CHECK(act(L1, gen(s22, tGen(1, 1))) == gen(s22, tGen(1, 1)));

  // Full-size right image scales degree-d polynomials by q^{2d}.
  WeylElement Rn = cartan_image(2, Side::Right, 2, 2);
  for (long d = 0; d <= 3; ++d)
    for (const PBWMonomial& mono : p_basis(s22, d)) {
      WeylElement f = WeylElement::monomial(s22, mono);
      CHECK(act(Rn, f) == f.scaled(RatQ::qpow(2 * d)));
    }

  // L_1 agrees with the diagonal bottom-row scaling up to degree 4.
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      AlgebraSpec spec = filtered(m, n);
      WeylElement Lb = cartan_image(1, Side::Left, m, n);
      for (long d = 0; d <= 4; ++d)
        for (const PBWMonomial& mono : p_basis(spec, d)) {
          WeylElement f = WeylElement::monomial(spec, mono);
          long rowCount = 0;
          for (int j = 1; j <= n; ++j) rowCount += mono.t(m, j, n);
          CHECK(act(Lb, f) == f.scaled(RatQ::qpow(2 * rowCount)));
        }
    }
}

TEST_CASE("polarization operators") {
  AlgebraSpec s12 = filtered(1, 2);
  CHECK(polarization(1, 1, PolKind::L, s12) ==
        multiply(gen(s12, tGen(1, 1)), gen(s12, dGen(1, 1))) +
            multiply(gen(s12, tGen(1, 2)), gen(s12, dGen(1, 2))));

  AlgebraSpec s22 = filtered(2, 2);
  CHECK(polarization(1, 2, PolKind::R, s22) ==
        multiply(gen(s22, tGen(1, 1)), gen(s22, dGen(1, 2))) +
            multiply(gen(s22, tGen(2, 1)), gen(s22, dGen(2, 2))));

  AlgebraSpec s33 = filtered(3, 3);
  WeylElement lt = polarization(1, 1, PolKind::Ltilde, s33);
  WeylElement want(s33);
  for (int r = 1; r <= 3; ++r) want = want + multiply(gen(s33, tGen(3, r)), gen(s33, dGen(3, r)));
  CHECK(lt == want);

  CHECK_THROWS_AS(polarization(4, 1, PolKind::L, s33), std::invalid_argument);
}

TEST_CASE("polarization operators commute across the two sides") {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      AlgebraSpec spec = filtered(m, n);
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
              WeylElement L = polarization(i, j, PolKind::L, spec);
              WeylElement R = polarization(k, l, PolKind::R, spec);
              CHECK(multiply(L, R) == multiply(R, L));
            }
    }
}
