#pragma once

#include "qweyl/uqact.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

/// Strictly increasing tuple of row or column indices.
using IndexTuple = std::vector<int>;

/// Quantum minor in the t generators: sum over permutations of
/// (-q)^{l(sigma)} t_{i_{sigma(1)},j_1} ... t_{i_{sigma(r)},j_r}.
WeylElement qminor_t(const IndexTuple& rows, const IndexTuple& cols, AlgebraSpec spec);
/// Quantum minor in the d generators, with weights (-q^{-1})^{l(sigma)}.
WeylElement qminor_d(const IndexTuple& rows, const IndexTuple& cols, AlgebraSpec spec);

/// D(r,a,b): sum over all increasing r-tuples of the products M * Mbar.
/// Equals 1 for r = 0 and 0 for r > min{a,b}.
WeylElement D_opr(long r, int a, int b, Variant variant = Variant::Filtered);

/// D_{k,r} (primed = false): corner embedding of D(r,m,k) into m x n.
/// D'_{k,r} (primed = true): corner embedding of D(r,k,n) into m x n.
WeylElement D_kr(int k, long r, int m, int n, bool primed);

/// D_r = D_{n,r} = D'_{m,r}; both routes are computed and asserted equal.
WeylElement D_r(long r, int m, int n);

/// R_a = sum_r (q^2-1)^r D_{a,r} (side = Right, 1 <= a <= n) or
/// L_b = sum_r (q^2-1)^r D'_{b,r} (side = Left, 1 <= b <= m).
WeylElement cartan_image(int a_or_b, Side side, int m, int n);

enum class PolKind : uint8_t { L, R, Ltilde, LtildeGr };

/// Polarization operators: L_{i,j} = sum_r t_{i,r} d_{j,r},
/// R_{i,j} = sum_r t_{r,i} d_{r,j}, and the bottom-row relabeled variants
/// Ltilde_{i,j} = sum_r t_{m-i+1,r} d_{m-j+1,r} (graded for LtildeGr).
WeylElement polarization(int i, int j, PolKind kind, AlgebraSpec spec);

/// Number of inversions of a permutation (Coxeter length in S_r).
int inversion_count(const std::vector<int>& perm);

}  // namespace qweyl
