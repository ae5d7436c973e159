#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qweyl/minorops.hpp"
#include "qweyl/schur.hpp"
#include "qweyl/suites.hpp"
#include "qweyl/uqact.hpp"

using namespace qweyl;

namespace {

WeylElement gen(AlgebraSpec s, GenRef g) { return WeylElement::generator(s, g); }

}  // namespace

TEST_CASE("generator actions on single generators") {
  AlgebraSpec s22 = filtered(2, 2);
  // Right E_1 on t_{1,1} gives -q^{-1} t_{1,2}.
  CHECK(act_gen(uE(Side::Right, 1), gen(s22, tGen(1, 1))) ==
        gen(s22, tGen(1, 2)).scaled(-RatQ::qpow(-1)));
  // Right K_{eps_1} scales d_{1,1} by q.
  CHECK(act_gen(uK(Side::Right, 1), gen(s22, dGen(1, 1))) == gen(s22, dGen(1, 1)).scaled(RatQ::q()));
  // Left side acts on row indices.
  CHECK(act_gen(uE(Side::Left, 1), gen(s22, tGen(1, 1))) ==
        gen(s22, tGen(2, 1)).scaled(-RatQ::qpow(-1)));
  CHECK(act_gen(uE(Side::Right, 1), gen(s22, dGen(1, 2))) == gen(s22, dGen(1, 1)));
}

TEST_CASE("orbit relation on polarization operators") {
  AlgebraSpec s22 = filtered(2, 2);
  WeylElement lhs = act_gen(uF(Side::Right, 1), polarization(2, 1, PolKind::R, s22));
  WeylElement rhs = polarization(1, 1, PolKind::R, s22).scaled(-RatQ::q()) +
                    polarization(2, 2, PolKind::R, s22).scaled(RatQ::qpow(-1));
  CHECK(lhs == rhs);
}

TEST_CASE("word action and the EF commutation relation") {
  AlgebraSpec s12 = filtered(1, 2);
  WeylElement x = gen(s12, tGen(1, 1));
  CHECK(act_word({}, x) == x);
  CHECK(act_word({uK(Side::Right, 1), uKinv(Side::Right, 1)}, x) == x);

  // (E F - F E) t_{1,1} = (K - K^{-1})/(q - q^{-1}) t_{1,1} = -t_{1,1} at n = 2.
  WeylElement comm = act_word({uE(Side::Right, 1), uF(Side::Right, 1)}, x) -
                     act_word({uF(Side::Right, 1), uE(Side::Right, 1)}, x);
  CHECK(comm == x.scaled(RatQ(-1)));
}

TEST_CASE("closed-form diagonal action") {
  AlgebraSpec s23 = filtered(2, 3);
  Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    WeylElement x = random_element(rng, s23, 3, 3);
    // lambda = 0 acts as the identity.
    WeightVector zero;
    zero.exponents.assign(3, 0);
    CHECK(act_Klambda(zero, Side::Right, x) == x);
  }
  // lambda_{R,1} scales a degree-d polynomial by q^{2d}.
  WeightVector lam = lambda_corner(1, 3);
  for (long d = 0; d <= 3; ++d)
    for (const PBWMonomial& mono : p_basis(s23, d)) {
      WeylElement f = WeylElement::monomial(s23, mono);
      CHECK(act_Klambda(lam, Side::Right, f) == f.scaled(RatQ::qpow(2 * d)));
    }
  // lambda_{L,m} scales t_{a,b} by q^2 exactly when a = m.
  WeightVector lamL = lambda_corner(2, 2);
  CHECK(act_Klambda(lamL, Side::Left, gen(s23, tGen(2, 1))) ==
        gen(s23, tGen(2, 1)).scaled(RatQ::qpow(2)));
  CHECK(act_Klambda(lamL, Side::Left, gen(s23, tGen(1, 1))) == gen(s23, tGen(1, 1)));
}

TEST_CASE("closed-form weights agree with generator words") {
  AlgebraSpec s22 = filtered(2, 2);
  Rng rng(19);
  for (int t = 0; t < 25; ++t) {
    WeylElement x = random_element(rng, s22, 2, 3);
    for (Side side : {Side::Left, Side::Right})
      for (int a = 1; a <= 2; ++a) {
        WeightVector lam = lambda_corner(a, 2);
        UGenWord w;
        for (int i = a; i <= 2; ++i) {
          w.push_back(uKinv(side, i));
          w.push_back(uKinv(side, i));
        }
        CHECK(act_Klambda(lam, side, x) == act_word(w, x));
      }
  }
}

TEST_CASE("invariant basis dimensions and the corner vector") {
  auto basis = invariant_basis(1, 1, 2, 1);
  REQUIRE(basis.size() == 1);
  AlgebraSpec g22 = graded(2, 2);
  WeylElement expected = polarization(1, 1, PolKind::LtildeGr, g22);
  // The reported vector is a scalar multiple of t_{2,1} d_{2,1} + t_{2,2} d_{2,2}.
  const WeylElement& v = basis[0];
  REQUIRE_FALSE(v.isZero());
  RatQ ratio;
  bool first = true;
  for (const auto& [mono, c] : v.terms()) {
    RatQ ec = expected.coeff(mono);
    REQUIRE_FALSE(ec.isZero());
    RatQ r = c / ec;
    if (first) {
      ratio = r;
      first = false;
    } else {
      CHECK(r == ratio);
    }
  }
  CHECK(v.termCount() == expected.termCount());

  auto unitBasis = invariant_basis(1, 1, 2, 0);
  REQUIRE(unitBasis.size() == 1);
  CHECK(unitBasis[0] == WeylElement::one(graded(2, 2)).scaled(unitBasis[0].terms().begin()->second));
  CHECK(invariant_basis(2, 2, 2, 1).size() == 4);
}

TEST_CASE("invariant basis vectors are annihilated and fixed") {
  for (auto [k, l, n, r] : std::vector<std::array<int, 4>>{{1, 1, 2, 1}, {2, 2, 2, 1}, {1, 2, 2, 2}}) {
    for (const WeylElement& v : invariant_basis(k, l, n, r)) {
      for (int s = 1; s <= n - 1; ++s) {
        CHECK(act_gen(uE(Side::Right, s), v).isZero());
        CHECK(act_gen(uF(Side::Right, s), v).isZero());
      }
      for (int s = 1; s <= n; ++s) CHECK(act_gen(uK(Side::Right, s), v) == v);
    }
  }
}

TEST_CASE("invariant dimensions match the Weyl dimension formula") {
  for (auto [k, l, n] : std::vector<std::array<int, 3>>{{1, 1, 2}, {2, 2, 2}, {1, 2, 2}}) {
    int d = std::min({k, l, n});
    for (long r = 0; r <= 2; ++r) {
      long want = 0;
      for (const Partition& lam : partitions_into(r, d)) want += weyl_dim(lam, k) * weyl_dim(lam, l);
      CHECK(static_cast<long>(invariant_basis(k, l, n, r).size()) == want);
    }
  }
}

TEST_CASE("index range validation") {
  AlgebraSpec s22 = filtered(2, 2);
  CHECK_THROWS_AS(act_gen(uE(Side::Right, 2), WeylElement::one(s22)), std::invalid_argument);
  CHECK_THROWS_AS(act_gen(uK(Side::Left, 3), WeylElement::one(s22)), std::invalid_argument);
}
