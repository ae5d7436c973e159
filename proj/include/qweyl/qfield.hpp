#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qweyl {

using BigInt = mpz_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero in Q(q)") {}
};

/// Polynomial in q with arbitrary-precision integer coefficients.
/// Stored densely as coefficients of q^0, q^1, ...; trailing zeros trimmed,
/// so the zero polynomial is the empty vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(long c) { coeffs_.assign(1, BigInt(c)); trim(); }
  explicit IntPoly(BigInt c) { coeffs_.assign(1, std::move(c)); trim(); }

  static IntPoly monomial(BigInt coeff, int power);

  bool isZero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int lowestPower() const;  // -1 for zero
  BigInt coeff(int k) const;
  const BigInt& leading() const { return coeffs_.back(); }
  bool isOne() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  /// True when the polynomial is c*q^k for a single k.
  bool isMonomial() const;

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;

  /// gcd of coefficient absolute values; 0 for the zero polynomial.
  BigInt content() const;
  IntPoly scaledByInt(const BigInt& c) const;
  IntPoly divByInt(const BigInt& c) const;  // exact

  /// Exact polynomial division; asserts divisibility.
  static IntPoly divExact(const IntPoly& a, const IntPoly& b);
  /// Primitive gcd with positive leading coefficient (primitive PRS).
  static IntPoly gcd(IntPoly a, IntPoly b);

  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }
  bool operator<(const IntPoly& o) const { return coeffs_ < o.coeffs_; }

  /// Ascending-power text form, e.g. "1+q^2", "-1+q^4", "2*q^3".
  std::string str() const;

 private:
  std::vector<BigInt> coeffs_;
  void trim();
};

/// Element of Q(q), a normalized ratio of integer polynomials in q.
/// Canonical form: gcd(num,den) = 1 over Q[q], gcd(content(num),content(den)) = 1,
/// den has positive leading coefficient, zero is 0/1.
class RatQ {
 public:
  RatQ() : num_(), den_(1) {}
  RatQ(long k) : num_(k), den_(1) {}
  explicit RatQ(IntPoly p) : num_(std::move(p)), den_(1) {}
  RatQ(IntPoly num, IntPoly den);

  /// q^k for k of either sign.
  static RatQ qpow(long k);
  static RatQ q() { return qpow(1); }
  /// q - q^{-1}
  static RatQ qMinusQinv() { return qpow(1) - qpow(-1); }
  static RatQ fraction(long num, long den);

  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  RatQ operator-() const;
  RatQ operator+(const RatQ& o) const;
  RatQ operator-(const RatQ& o) const;
  RatQ operator*(const RatQ& o) const;
  RatQ operator/(const RatQ& o) const;  // throws DivisionByZero
  RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
  RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
  RatQ& operator*=(const RatQ& o) { return *this = *this * o; }

  RatQ pow(long e) const;  // e >= 0, or e < 0 for nonzero values

  bool operator==(const RatQ& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatQ& o) const { return !(*this == o); }
  bool operator<(const RatQ& o) const;  // structural, for ordered containers

  /// Text form: "q^2", "1+q^2", "(1+q^2)/q", "1/(q^2-...)", "-2/3".
  std::string str() const;
  /// True when str() is a single product-free token (one-term num, den == 1).
  bool isSingleTerm() const { return den_.isOne() && !num_.isZero() && num_.isMonomial(); }

 private:
  IntPoly num_, den_;
  void normalize();
};

enum class RatOp { Add, Sub, Mul, Div };
RatQ ratq_arith(const RatQ& a, const RatQ& b, RatOp op);
inline RatQ laurent_monomial(long k) { return RatQ::qpow(k); }

/// Dense matrix over Q(q), row major.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RatQ& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const RatQ& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  bool isZero() const;
  bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  int rows_, cols_;
  std::vector<RatQ> a_;
};

/// Basis of the right null space, computed by fraction-free (Bareiss)
/// elimination over Z[q] after clearing denominators row by row.
/// Each basis vector has one designated free coordinate set to 1.
std::vector<std::vector<RatQ>> kernel(const QMatrix& m);
int rank(const QMatrix& m);

/// Product (M - roots[0] I)(M - roots[1] I)..., factors applied left to right.
QMatrix eval_matrix_poly(const QMatrix& m, const std::vector<RatQ>& roots);

}  // namespace qweyl
