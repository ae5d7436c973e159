#include "qweyl/qfield.hpp"

#include <cassert>
#include <sstream>

namespace qweyl {

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(BigInt coeff, int power) {
  IntPoly p;
  if (coeff == 0) return p;
  p.coeffs_.assign(power + 1, BigInt(0));
  p.coeffs_[power] = std::move(coeff);
  return p;
}

int IntPoly::lowestPower() const {
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<int>(k);
  return -1;
}

BigInt IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigInt(0);
  return coeffs_[k];
}

bool IntPoly::isMonomial() const {
  if (coeffs_.empty()) return false;
  for (size_t k = 0; k + 1 < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
  r.trim();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  IntPoly r;
  if (isZero() || o.isZero()) return r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

BigInt IntPoly::content() const {
  BigInt g(0);
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::scaledByInt(const BigInt& c) const {
  IntPoly r(*this);
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

IntPoly IntPoly::divByInt(const BigInt& c) const {
  assert(c != 0);
  IntPoly r(*this);
  for (auto& x : r.coeffs_) {
    BigInt quo, rem;
    mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    assert(rem == 0);
    x = quo;
  }
  r.trim();
  return r;
}

IntPoly IntPoly::divExact(const IntPoly& a, const IntPoly& b) {
  assert(!b.isZero());
  if (a.isZero()) return IntPoly();
  // Long division over Q[q], verified exact at the end.
  // Work with rational coefficients via scaling: multiply a by lead(b)^(deg diff + 1),
  // divide, then remove the introduced factor.
  int da = a.degree(), db = b.degree();
  assert(da >= db);
  BigInt lb = b.leading();
  BigInt scale(1);
  mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(da - db + 1));
  IntPoly rem = a.scaledByInt(scale);
  IntPoly quo;
  quo.coeffs_.assign(da - db + 1, BigInt(0));
  while (!rem.isZero() && rem.degree() >= db) {
    int k = rem.degree() - db;
    BigInt c = rem.leading() / lb;
    assert(rem.leading() % lb == 0);
    quo.coeffs_[k] += c;
    rem = rem - b * IntPoly::monomial(c, k);
  }
  assert(rem.isZero());
  quo.trim();
  return quo.divByInt(scale);
}

namespace {

// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b.
IntPoly prem(IntPoly a, const IntPoly& b) {
  int db = b.degree();
  const BigInt& lb = b.leading();
  while (!a.isZero() && a.degree() >= db) {
    int k = a.degree() - db;
    BigInt c = a.leading();
    a = a.scaledByInt(lb) - b * IntPoly::monomial(c, k);
  }
  return a;
}

IntPoly primitivePart(const IntPoly& p) {
  if (p.isZero()) return p;
  IntPoly r = p.divByInt(p.content());
  if (r.leading() < 0) r = -r;
  return r;
}

}  // namespace

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
  if (a.isZero()) return primitivePart(b);
  if (b.isZero()) return primitivePart(a);
  a = primitivePart(a);
  b = primitivePart(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.isZero()) {
    IntPoly r = primitivePart(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string IntPoly::str() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    if (k == 0) {
      os << ac.get_str();
    } else {
      if (ac != 1) os << ac.get_str() << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

RatQ::RatQ(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) throw DivisionByZero();
  normalize();
}

void RatQ::normalize() {
  if (num_.isZero()) {
    den_ = IntPoly(1);
    return;
  }
  IntPoly g = IntPoly::gcd(num_, den_);
  if (!g.isOne()) {
    num_ = IntPoly::divExact(num_, g);
    den_ = IntPoly::divExact(den_, g);
  }
  BigInt cn = num_.content(), cd = den_.content();
  BigInt ci;
  mpz_gcd(ci.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (ci != 1) {
    num_ = num_.divByInt(ci);
    den_ = den_.divByInt(ci);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatQ RatQ::qpow(long k) {
  if (k >= 0) return RatQ(IntPoly::monomial(BigInt(1), static_cast<int>(k)));
  RatQ r;
  r.num_ = IntPoly(1);
  r.den_ = IntPoly::monomial(BigInt(1), static_cast<int>(-k));
  return r;
}

RatQ RatQ::fraction(long num, long den) { return RatQ(IntPoly(num), IntPoly(den)); }

RatQ RatQ::operator-() const {
  RatQ r(*this);
  r.num_ = -r.num_;
  return r;
}

RatQ RatQ::operator+(const RatQ& o) const {
  if (isZero()) return o;
  if (o.isZero()) return *this;
  return RatQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatQ RatQ::operator-(const RatQ& o) const { return *this + (-o); }

RatQ RatQ::operator*(const RatQ& o) const {
  if (isZero() || o.isZero()) return RatQ();
  return RatQ(num_ * o.num_, den_ * o.den_);
}

RatQ RatQ::operator/(const RatQ& o) const {
  if (o.isZero()) throw DivisionByZero();
  if (isZero()) return RatQ();
  return RatQ(num_ * o.den_, den_ * o.num_);
}

RatQ RatQ::pow(long e) const {
  if (e < 0) return RatQ(1) / pow(-e);
  RatQ r(1), base(*this);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool RatQ::operator<(const RatQ& o) const {
  if (num_ != o.num_) return num_ < o.num_;
  return den_ < o.den_;
}

std::string RatQ::str() const {
  if (den_.isOne()) return num_.str();
  std::string ns = num_.str();
  if (!num_.isMonomial()) ns = "(" + ns + ")";
  std::string ds = den_.str();
  // Parenthesize the denominator unless it is a bare power of q or an integer.
  bool bare = den_.isMonomial() && (den_.leading() == 1 || den_.degree() == 0);
  if (!bare) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

RatQ ratq_arith(const RatQ& a, const RatQ& b, RatOp op) {
  switch (op) {
    case RatOp::Add: return a + b;
    case RatOp::Sub: return a - b;
    case RatOp::Mul: return a * b;
    case RatOp::Div: return a / b;
  }
  throw std::logic_error("bad RatOp");
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RatQ(1);
  return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  QMatrix r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  QMatrix r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const RatQ& x = at(i, k);
      if (x.isZero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const RatQ& y = o.at(k, j);
        if (y.isZero()) continue;
        r.at(i, j) += x * y;
      }
    }
  return r;
}

bool QMatrix::isZero() const {
  for (const auto& x : a_) if (!x.isZero()) return false;
  return true;
}

namespace {

struct Echelon {
  std::vector<std::vector<IntPoly>> rows;  // echelon rows over Z[q]
  std::vector<int> pivotCol;               // pivot column of each kept row
};

// Fraction-free (Bareiss) forward elimination after clearing denominators.
Echelon eliminate(const QMatrix& m) {
  int R = m.rows(), C = m.cols();
  std::vector<std::vector<IntPoly>> a(R, std::vector<IntPoly>(C));
  for (int i = 0; i < R; ++i) {
    IntPoly lcm(1);
    for (int j = 0; j < C; ++j) {
      const IntPoly& d = m.at(i, j).den();
      lcm = IntPoly::divExact(lcm * d, IntPoly::gcd(lcm, d));
    }
    for (int j = 0; j < C; ++j) {
      const RatQ& x = m.at(i, j);
      a[i][j] = x.num() * IntPoly::divExact(lcm, x.den());
    }
  }
  Echelon e;
  IntPoly prev(1);
  int row = 0;
  for (int col = 0; col < C && row < R; ++col) {
    int piv = -1;
    for (int i = row; i < R; ++i)
      if (!a[i][col].isZero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    for (int i = row + 1; i < R; ++i) {
      for (int j = col + 1; j < C; ++j)
        a[i][j] = IntPoly::divExact(a[row][col] * a[i][j] - a[i][col] * a[row][j], prev);
      a[i][col] = IntPoly();
    }
    prev = a[row][col];
    e.pivotCol.push_back(col);
    ++row;
  }
  a.resize(row);
  e.rows = std::move(a);
  return e;
}

}  // namespace

std::vector<std::vector<RatQ>> kernel(const QMatrix& m) {
  int C = m.cols();
  Echelon e = eliminate(m);
  int r = static_cast<int>(e.pivotCol.size());
  std::vector<bool> isPivot(C, false);
  for (int c : e.pivotCol) isPivot[c] = true;
  std::vector<std::vector<RatQ>> basis;
  for (int freeCol = 0; freeCol < C; ++freeCol) {
    if (isPivot[freeCol]) continue;
    std::vector<RatQ> v(C);
    v[freeCol] = RatQ(1);
    // Back substitution over the echelon rows.
    for (int i = r - 1; i >= 0; --i) {
      int pc = e.pivotCol[i];
      if (pc > freeCol) continue;
      RatQ s;
      for (int j = pc + 1; j < C; ++j) {
        if (v[j].isZero() || e.rows[i][j].isZero()) continue;
        s += RatQ(e.rows[i][j]) * v[j];
      }
      v[pc] = -s / RatQ(e.rows[i][pc]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const QMatrix& m) { return static_cast<int>(eliminate(m).pivotCol.size()); }

QMatrix eval_matrix_poly(const QMatrix& m, const std::vector<RatQ>& roots) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eval_matrix_poly needs a square matrix");
  QMatrix acc = QMatrix::identity(m.rows());
  for (const RatQ& r : roots) {
    QMatrix factor = m;
    for (int i = 0; i < m.rows(); ++i) factor.at(i, i) = factor.at(i, i) - r;
    acc = acc * factor;
  }
  return acc;
}

}  // namespace qweyl
