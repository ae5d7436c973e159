#pragma once

#include "qweyl/weyl.hpp"

namespace qweyl {

/// The module action of the filtered algebra on its polynomial part:
/// multiply and discard every monomial with a nonzero d part.
/// f must have dExp identically zero; both arguments filtered, same spec.
WeylElement act(const WeylElement& D, const WeylElement& f);

/// c(a) = sum_{i=0}^{a} q^{2i} for a >= 0, and 0 otherwise.
RatQ c_scalar(long a);

/// c(a,b) = c(a) c(a-1) ... c(a-b) for a >= b >= 0; 0 for -1 <= a < b;
/// 1 for b = -1.
RatQ c2_scalar(long a, long b);

/// Matrix of act(D, -) on the degree-d monomial basis of the polynomial part,
/// columns indexed lexicographically by exponent table; rows use the same
/// basis. D must preserve the degree-d component (bidegree-balanced terms);
/// an image outside it raises std::invalid_argument. Columns are filled in
/// parallel; the _serial variant is the reference implementation.
QMatrix action_matrix(const WeylElement& D, long d);
QMatrix action_matrix_serial(const WeylElement& D, long d);

}  // namespace qweyl
