#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qweyl/weyl.hpp"

namespace qweyl {

struct ParseError : std::runtime_error {
  size_t offset;
  ParseError(const std::string& msg, size_t off)
      : std::runtime_error(msg + " at byte " + std::to_string(off)), offset(off) {}
};

/// Abstract syntax over generator atoms t[i,j], d[i,j], the symbol q,
/// rational literals, +, -, *, and non-negative integer powers.
struct Expr {
  enum class Kind { Add, Sub, Mul, Pow, GenT, GenD, Q, Rational } kind;
  std::shared_ptr<Expr> lhs, rhs;  // Add/Sub/Mul/Pow (Pow: rhs unused)
  long row = 0, col = 0;           // GenT/GenD
  long num = 0, den = 1;           // Rational
  unsigned long power = 0;         // Pow
};

using ExprPtr = std::shared_ptr<Expr>;

/// Parses the grammar
///   expr := term {("+"|"-") term}; term := factor {"*" factor};
///   factor := atom ["^" uint];
///   atom := "t[" uint "," uint "]" | "d[" uint "," uint "]" | "q" | rational | "(" expr ")";
///   rational := ["-"] uint ["/" uint].
/// Whitespace is insignificant. Throws ParseError with a byte offset.
ExprPtr parse(const std::string& src);

/// Prints an expression back into the grammar above.
std::string print_expr(const Expr& e);

/// Evaluates inside the given algebra; throws std::invalid_argument for
/// indices out of range.
WeylElement evaluate(const Expr& e, AlgebraSpec spec);

}  // namespace qweyl
