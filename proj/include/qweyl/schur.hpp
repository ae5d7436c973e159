#pragma once

#include "qweyl/qfield.hpp"

namespace qweyl {

/// Integer partition, weakly decreasing with trailing zeros trimmed.
struct Partition {
  std::vector<long> parts;

  Partition() = default;
  Partition(std::initializer_list<long> p) : parts(p) { normalize(); }
  explicit Partition(std::vector<long> p) : parts(std::move(p)) { normalize(); }

  void normalize();
  long size() const;                          // |lambda|
  int length() const { return static_cast<int>(parts.size()); }
  long part(int i) const { return i < length() ? parts[i] : 0; }  // 0-based
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
  std::string str() const;
};

/// Partitions of r with at most d parts.
std::vector<Partition> partitions_into(long r, int d);

/// q-factorial Schur polynomial: the determinant of the shifted factorial
/// products divided by the Vandermonde determinant, evaluated exactly.
/// Requires pairwise distinct args.
RatQ qfact_schur(const Partition& nu, const std::vector<RatQ>& args, const RatQ& qparam);

/// Capelli eigenvalue scalar:
/// (-1)^r q^{r - r^2 - 2r(n-r)} / (1-q^2)^r *
///   s_{(1^r)}(q^{2(lambda_1+n-1)}, ..., q^{2 lambda_n}; q^2).
RatQ phi_eigen(const Partition& lambda, long r, int n);

/// Checks sum_r q^{-C(r,2)-r(n-r)} s_{(1^r)}(q^{n-1}x_1, ..., x_n; q) = x_1...x_n
/// at the evaluation point x_i = q^{mu_i}.
bool schur_sum_identity_check(const Partition& mu, int n);

/// Classical Weyl dimension of the gl_k module with highest weight lambda.
long weyl_dim(const Partition& lambda, int k);

long binomial(long n, long k);

}  // namespace qweyl
