#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qweyl/expr.hpp"
#include "qweyl/paction.hpp"
#include "qweyl/suites.hpp"

using namespace qweyl;

TEST_CASE("parsing shapes") {
  ExprPtr e = parse("d[1,1]*t[1,1]");
  REQUIRE(e->kind == Expr::Kind::Mul);
  CHECK(e->lhs->kind == Expr::Kind::GenD);
  CHECK(e->rhs->kind == Expr::Kind::GenT);

  ExprPtr f = parse("q^2*t[1,1]*d[1,1] + 1");
  REQUIRE(f->kind == Expr::Kind::Add);
  CHECK(f->rhs->kind == Expr::Kind::Rational);
  CHECK(f->lhs->kind == Expr::Kind::Mul);

  CHECK(parse("-2/3")->num == -2);
  CHECK(parse("(q + 1)^3")->kind == Expr::Kind::Pow);
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse("t[0,1]"), ParseError);
  try {
    parse("t[0,1]");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("index must be >= 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("t[1,1] t[1,2]"), ParseError);  // juxtaposition is not multiplication
  CHECK_THROWS_AS(parse("q^-1"), ParseError);
  CHECK_THROWS_AS(parse("1/0"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("documented canonical output") {
  AlgebraSpec s11 = filtered(1, 1);
  CHECK(evaluate(*parse("d[1,1]*t[1,1]"), s11).str() == "1 + q^2*t[1,1]*d[1,1]");
  CHECK(evaluate(*parse("t[1,1]"), s11).str() == "t[1,1]");

  WeylElement D = evaluate(*parse("d[1,1]"), s11);
  WeylElement f = evaluate(*parse("t[1,1]^2"), s11);
  CHECK(act(D, f).str() == "(1+q^2)*t[1,1]");
}

TEST_CASE("round trip through printing") {
  Rng rng(47);
  AlgebraSpec s22 = filtered(2, 2);
  auto randomExpr = [&](auto&& self, int depth) -> ExprPtr {
    auto node = std::make_shared<Expr>();
    long pick = depth > 2 ? rng.below(4) + 4 : rng.below(8);
    switch (pick) {
      case 0:
      case 1: {
        node->kind = pick == 0 ? Expr::Kind::Add : Expr::Kind::Sub;
        node->lhs = self(self, depth + 1);
        node->rhs = self(self, depth + 1);
        return node;
      }
      case 2: {
        node->kind = Expr::Kind::Mul;
        node->lhs = self(self, depth + 1);
        node->rhs = self(self, depth + 1);
        return node;
      }
      case 3: {
        node->kind = Expr::Kind::Pow;
        node->lhs = self(self, depth + 1);
        node->power = static_cast<unsigned long>(rng.below(3));
        return node;
      }
      case 4: {
        node->kind = Expr::Kind::GenT;
        node->row = rng.below(2) + 1;
        node->col = rng.below(2) + 1;
        return node;
      }
      case 5: {
        node->kind = Expr::Kind::GenD;
        node->row = rng.below(2) + 1;
        node->col = rng.below(2) + 1;
        return node;
      }
      case 6: {
        node->kind = Expr::Kind::Q;
        return node;
      }
      default: {
        node->kind = Expr::Kind::Rational;
        node->num = rng.below(7) - 3;
        node->den = rng.below(3) + 1;
        return node;
      }
    }
  };
  for (int t = 0; t < 200; ++t) {
    ExprPtr e = randomExpr(randomExpr, 0);
    ExprPtr back = parse(print_expr(*e));
    CHECK(evaluate(*back, s22) == evaluate(*e, s22));
  }
}
