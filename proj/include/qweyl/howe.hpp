#pragma once

#include <array>
#include <utility>

#include "qweyl/weyl.hpp"

namespace qweyl {

enum class FactorKind : uint8_t { P, D };

/// Element of a two-fold tensor product of the polynomial part and/or the
/// constant-coefficient part over a square n x n ambient. Leg monomials are
/// pure (t only for P, d only for D).
class TensorElement {
 public:
  TensorElement(FactorKind left, FactorKind right, int n)
      : leftKind_(left), rightKind_(right), n_(n) {}

  FactorKind leftKind() const { return leftKind_; }
  FactorKind rightKind() const { return rightKind_; }
  int n() const { return n_; }
  const std::map<std::pair<PBWMonomial, PBWMonomial>, RatQ>& terms() const { return terms_; }

  void add(const PBWMonomial& a, const PBWMonomial& b, const RatQ& c);
  bool isZero() const { return terms_.empty(); }

  /// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
  TensorElement operator*(const TensorElement& o) const;
  TensorElement operator+(const TensorElement& o) const;
  bool operator==(const TensorElement& o) const;

 private:
  FactorKind leftKind_, rightKind_;
  int n_;
  std::map<std::pair<PBWMonomial, PBWMonomial>, RatQ> terms_;
};

/// Coproduct t_{i,j} -> sum_k t_{i,k} (x) t_{k,j} (and likewise for d),
/// extended as an algebra morphism. u must be a pure element of a square
/// ambient algebra.
TensorElement coproduct(const WeylElement& u);

/// Sweedler triple legs of the coproduct; leftFirst selects (Delta (x) 1) Delta
/// versus (1 (x) Delta) Delta.
std::map<std::array<PBWMonomial, 3>, RatQ> coproduct3(const WeylElement& u, bool leftFirst);

/// Multiplicative extension of t_{i,j}, d_{i,j} -> [i == j].
RatQ counit(const WeylElement& u);

/// Bialgebra anti-isomorphism onto the constant-coefficient part:
/// reverse each word and map t_{i,j} -> d_{j,i}.
WeylElement iota(const WeylElement& u);

/// Index transpose d_{i,j} -> d_{j,i} extended as an algebra homomorphism
/// (the dual of the Hopf isomorphism onto the opposite algebra).
WeylElement natural_inv(const WeylElement& u);

/// The composite of iota with natural_inv: anti-homomorphism t_{i,j} -> d_{i,j}.
WeylElement iota_natural(const WeylElement& u);

/// Gamma_n = (1 (x) iota) o Delta on the polynomial part of the square algebra.
TensorElement gamma_n(const WeylElement& u);

/// Identifies a P (x) D tensor with the graded algebra element whose PBW
/// exponent tables are the two legs.
WeylElement tensor_to_graded(const TensorElement& x);

/// Gamma through the corner embedding: lands in the corner subalgebra of the
/// graded n x n algebra.
WeylElement gamma_kln(const WeylElement& u, int n);

enum class PairOrder : uint8_t { LeftFirst, RightFirst };

/// R-matrix pairing on the constant-coefficient part: fundamental base values
/// extended through the coproduct recursions
///   <ff' (x) h> = sum <f (x) h_1><f' (x) h_2>,
///   <f (x) gg'> = sum <f_1 (x) g'><f_2 (x) g>.
RatQ rpair(const WeylElement& f, const WeylElement& g, PairOrder order = PairOrder::LeftFirst);
RatQ rpair_words(const std::vector<GenRef>& f, const std::vector<GenRef>& g, int n,
                 PairOrder order = PairOrder::LeftFirst);

/// The twisting map on tensor squares of the polynomial part of the n x n
/// ambient: Upsilon(u (x) v) = sum <ibar(v_1) (x) ibar(u_3), R>
/// <iota(v_3) (x) iota(u_2), R> u_1 (x) v_2. Inputs are elements of the
/// n x n polynomial part.
TensorElement upsilon(const WeylElement& u, const WeylElement& v);

/// Deformed product on the k x l polynomial part through the n x n ambient:
/// u * v = e^{-1}( m( Upsilon(e(u) (x) e(v)) ) ).
WeylElement star(const WeylElement& u, const WeylElement& v, int n);

/// P(a (x) b) = ab inside the filtered algebra; on basis tensors this is the
/// exponent-table identification.
WeylElement p_map(const TensorElement& x);

}  // namespace qweyl
