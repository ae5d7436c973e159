#include "qweyl/expr.hpp"

#include <cctype>
#include <sstream>

namespace qweyl {

namespace {

struct Parser {
  const std::string& src;
  size_t pos = 0;

  explicit Parser(const std::string& s) : src(s) {}

  void skipWs() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool peek(char c) {
    skipWs();
    return pos < src.size() && src[pos] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos);
  }

  unsigned long parseUint() {
    skipWs();
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      throw ParseError("expected an unsigned integer", pos);
    unsigned long v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + static_cast<unsigned long>(src[pos] - '0');
      if (v > 1000000000UL) throw ParseError("integer literal too large", pos);
      ++pos;
    }
    return v;
  }

  ExprPtr parseGen(Expr::Kind kind) {
    ++pos;  // consume 't' or 'd'
    expect('[', "after generator name");
    size_t at = pos;
    long i = static_cast<long>(parseUint());
    expect(',', "between generator indices");
    size_t at2 = pos;
    long j = static_cast<long>(parseUint());
    expect(']', "after generator indices");
    if (i < 1) throw ParseError("index must be >= 1", at);
    if (j < 1) throw ParseError("index must be >= 1", at2);
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->row = i;
    e->col = j;
    return e;
  }

  ExprPtr parseAtom() {
    skipWs();
    if (pos >= src.size()) throw ParseError("unexpected end of input", pos);
    char c = src[pos];
    if (c == 't') return parseGen(Expr::Kind::GenT);
    if (c == 'd') return parseGen(Expr::Kind::GenD);
    if (c == 'q') {
      ++pos;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Q;
      return e;
    }
    if (c == '(') {
      ++pos;
      ExprPtr e = parseExpr();
      expect(')', "to close parenthesis");
      return e;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      bool neg = c == '-';
      if (neg) ++pos;
      long num = static_cast<long>(parseUint());
      long den = 1;
      if (accept('/')) {
        size_t at = pos;
        den = static_cast<long>(parseUint());
        if (den == 0) throw ParseError("zero denominator", at);
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Rational;
      e->num = neg ? -num : num;
      e->den = den;
      return e;
    }
    throw ParseError("unexpected character", pos);
  }

  ExprPtr parseFactor() {
    ExprPtr atom = parseAtom();
    if (accept('^')) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Pow;
      e->lhs = atom;
      e->power = parseUint();
      return e;
    }
    return atom;
  }

  ExprPtr parseTerm() {
    ExprPtr e = parseFactor();
    while (accept('*')) {
      auto m = std::make_shared<Expr>();
      m->kind = Expr::Kind::Mul;
      m->lhs = e;
      m->rhs = parseFactor();
      e = m;
    }
    return e;
  }

  ExprPtr parseExpr() {
    ExprPtr e = parseTerm();
    while (true) {
      skipWs();
      if (pos >= src.size()) break;
      char c = src[pos];
      // A '-' starting a rational literal still binds as subtraction here:
      // expr-level +/- are the only binary uses.
      if (c != '+' && c != '-') break;
      ++pos;
      auto a = std::make_shared<Expr>();
      a->kind = c == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
      a->lhs = e;
      a->rhs = parseTerm();
      e = a;
    }
    return e;
  }
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Pow: return 3;
    default: return 4;
  }
}

void printRec(const Expr& e, int parentPrec, std::ostringstream& os) {
  int prec = precedence(e.kind);
  bool parens = prec < parentPrec ||
                (e.kind == Expr::Kind::Rational && (e.num < 0 || e.den != 1) && parentPrec >= 2);
  if (parens) os << "(";
  switch (e.kind) {
    case Expr::Kind::Add:
      printRec(*e.lhs, prec, os);
      os << " + ";
      printRec(*e.rhs, prec + 1, os);
      break;
    case Expr::Kind::Sub:
      printRec(*e.lhs, prec, os);
      os << " - ";
      printRec(*e.rhs, prec + 1, os);
      break;
    case Expr::Kind::Mul:
      printRec(*e.lhs, prec, os);
      os << "*";
      printRec(*e.rhs, prec + 1, os);
      break;
    case Expr::Kind::Pow:
      printRec(*e.lhs, prec + 1, os);
      os << "^" << e.power;
      break;
    case Expr::Kind::GenT:
      os << "t[" << e.row << "," << e.col << "]";
      break;
    case Expr::Kind::GenD:
      os << "d[" << e.row << "," << e.col << "]";
      break;
    case Expr::Kind::Q:
      os << "q";
      break;
    case Expr::Kind::Rational:
      os << e.num;
      if (e.den != 1) os << "/" << e.den;
      break;
  }
  if (parens) os << ")";
}

}  // namespace

ExprPtr parse(const std::string& src) {
  Parser p(src);
  ExprPtr e = p.parseExpr();
  p.skipWs();
  if (p.pos != src.size()) throw ParseError("trailing input", p.pos);
  return e;
}

std::string print_expr(const Expr& e) {
  std::ostringstream os;
  printRec(e, 0, os);
  return os.str();
}

WeylElement evaluate(const Expr& e, AlgebraSpec spec) {
  switch (e.kind) {
    case Expr::Kind::Add: return evaluate(*e.lhs, spec) + evaluate(*e.rhs, spec);
    case Expr::Kind::Sub: return evaluate(*e.lhs, spec) - evaluate(*e.rhs, spec);
    case Expr::Kind::Mul: return multiply(evaluate(*e.lhs, spec), evaluate(*e.rhs, spec));
    case Expr::Kind::Pow: {
      WeylElement base = evaluate(*e.lhs, spec);
      WeylElement acc = WeylElement::one(spec);
      for (unsigned long i = 0; i < e.power; ++i) acc = multiply(acc, base);
      return acc;
    }
    case Expr::Kind::GenT: return WeylElement::generator(spec, tGen(static_cast<int>(e.row), static_cast<int>(e.col)));
    case Expr::Kind::GenD: return WeylElement::generator(spec, dGen(static_cast<int>(e.row), static_cast<int>(e.col)));
    case Expr::Kind::Q: return WeylElement::scalar(spec, RatQ::q());
    case Expr::Kind::Rational: return WeylElement::scalar(spec, RatQ::fraction(e.num, e.den));
  }
  throw std::logic_error("bad expression node");
}

}  // namespace qweyl
