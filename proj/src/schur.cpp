#include "qweyl/schur.hpp"

#include <sstream>
#include <stdexcept>

namespace qweyl {

void Partition::normalize() {
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

long Partition::size() const {
  long s = 0;
  for (long p : parts) s += p;
  return s;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

std::vector<Partition> partitions_into(long r, int d) {
  std::vector<Partition> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long left, long maxPart) -> void {
    if (left == 0) {
      out.emplace_back(std::vector<long>(cur));
      return;
    }
    if (static_cast<int>(cur.size()) == d) return;
    for (long p = std::min(left, maxPart); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, r, r);
  return out;
}

namespace {

RatQ determinant(std::vector<std::vector<RatQ>> a) {
  int n = static_cast<int>(a.size());
  RatQ det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!a[i][col].isZero()) { piv = i; break; }
    if (piv < 0) return RatQ();
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int i = col + 1; i < n; ++i) {
      if (a[i][col].isZero()) continue;
      RatQ f = a[i][col] / a[col][col];
      for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

}  // namespace

RatQ qfact_schur(const Partition& nu, const std::vector<RatQ>& args, const RatQ& qparam) {
  int n = static_cast<int>(args.size());
  if (nu.length() > n) throw std::invalid_argument("qfact_schur: needs |args| >= length of partition");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (args[i] == args[j]) throw DivisionByZero();
  std::vector<std::vector<RatQ>> mat(n, std::vector<RatQ>(n));
  for (int j = 0; j < n; ++j) {
    long top = nu.part(j) + n - (j + 1) - 1;  // product over q^0 .. q^top
    for (int i = 0; i < n; ++i) {
      RatQ e(1);
      for (long k = 0; k <= top; ++k) e *= args[i] - qparam.pow(k);
      mat[i][j] = e;
    }
  }
  RatQ numDet = determinant(std::move(mat));
  RatQ vand(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) vand *= args[i] - args[j];
  return numDet / vand;
}

RatQ phi_eigen(const Partition& lambda, long r, int n) {
  if (lambda.length() > n || r < 0 || r > n) throw std::invalid_argument("phi_eigen: bad arguments");
  if (r == 0) return RatQ(1);
  std::vector<RatQ> args;
  args.reserve(n);
  for (int i = 1; i <= n; ++i) args.push_back(RatQ::qpow(2 * (lambda.part(i - 1) + n - i)));
  Partition column(std::vector<long>(r, 1));
  RatQ s = qfact_schur(column, args, RatQ::qpow(2));
  RatQ pref = RatQ::qpow(r - r * r - 2 * r * (n - r)) / (RatQ(1) - RatQ::qpow(2)).pow(r);
  if (r % 2 == 1) pref = -pref;
  return pref * s;
}

bool schur_sum_identity_check(const Partition& mu, int n) {
  if (mu.length() > n) throw std::invalid_argument("schur_sum_identity_check: length of mu exceeds n");
  std::vector<RatQ> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(RatQ::qpow(mu.part(i - 1)));
  RatQ qq = RatQ::q();
  RatQ lhs;
  for (long r = 0; r <= n; ++r) {
    std::vector<RatQ> shifted;
    for (int i = 1; i <= n; ++i) shifted.push_back(RatQ::qpow(n - i) * xs[i - 1]);
    Partition column(std::vector<long>(r, 1));
    RatQ s = qfact_schur(column, shifted, qq);
    lhs += RatQ::qpow(-(r * (r - 1)) / 2 - r * (n - r)) * s;
  }
  RatQ rhs(1);
  for (const RatQ& x : xs) rhs *= x;
  return lhs == rhs;
}

long weyl_dim(const Partition& lambda, int k) {
  if (lambda.length() > k) throw std::invalid_argument("weyl_dim: length of lambda exceeds k");
  BigInt num(1), den(1);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      num *= BigInt(lambda.part(i - 1) - lambda.part(j - 1) + j - i);
      den *= BigInt(j - i);
    }
  BigInt quo, rem;
  mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw std::logic_error("weyl_dim: non-integral dimension");
  return quo.get_si();
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r.get_si();
}

}  // namespace qweyl
