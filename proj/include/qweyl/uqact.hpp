#pragma once

#include "qweyl/qfield.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

enum class Side : uint8_t { Left, Right };
enum class UKind : uint8_t { E, F, Kplus, Kminus };

/// Generator of one tensor factor of U_q(gl_m) (x) U_q(gl_n) acting on the
/// algebra. index ranges over 1..size-1 for E/F and 1..size for K.
struct UGen {
  Side side;
  UKind kind;
  int index;
};

inline UGen uE(Side s, int i) { return {s, UKind::E, i}; }
inline UGen uF(Side s, int i) { return {s, UKind::F, i}; }
inline UGen uK(Side s, int i) { return {s, UKind::Kplus, i}; }
inline UGen uKinv(Side s, int i) { return {s, UKind::Kminus, i}; }

/// Word of generators, applied right to left as operators.
using UGenWord = std::vector<UGen>;

/// Integer weight lambda = sum lambda_i eps_i for one side.
struct WeightVector {
  std::vector<long> exponents;
};

/// lambda_{L,a} = -2(eps_a + ... + eps_m); pass size = m (or n for the right side).
WeightVector lambda_corner(int a, int size);

/// Module-algebra action of one generator, extended over products by the
/// coproducts Delta(E) = E (x) K + 1 (x) E, Delta(F) = F (x) 1 + K^{-1} (x) F,
/// Delta(K) = K (x) K.
WeylElement act_gen(const UGen& g, const WeylElement& x);

WeylElement act_word(const UGenWord& w, const WeylElement& x);

/// Diagonal action of K_lambda computed in closed form from exponent tables.
WeylElement act_Klambda(const WeightVector& lambda, Side side, const WeylElement& x);

/// q-power by which K_{eps_k} on the given side scales the monomial.
long k_weight(const PBWMonomial& mono, const AlgebraSpec& spec, Side side, int k);

/// Basis of the right-counit-invariant part of the (r,r) graded component of
/// the corner subalgebra with t rows in the bottom k rows and d rows in the
/// bottom l rows, inside the graded n x n algebra: joint kernel of all right
/// E_s, F_s with all K_{eps_s} acting as 1.
std::vector<WeylElement> invariant_basis(int k, int l, int n, long r);

}  // namespace qweyl
