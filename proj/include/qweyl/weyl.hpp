#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qweyl/qfield.hpp"

namespace qweyl {

enum class Variant : uint8_t { Filtered, Graded };

struct AlgebraSpec {
  int m = 1, n = 1;
  Variant variant = Variant::Filtered;
  bool operator==(const AlgebraSpec& o) const { return m == o.m && n == o.n && variant == o.variant; }
  bool operator!=(const AlgebraSpec& o) const { return !(*this == o); }
  std::string str() const;
};

inline AlgebraSpec filtered(int m, int n) { return {m, n, Variant::Filtered}; }
inline AlgebraSpec graded(int m, int n) { return {m, n, Variant::Graded}; }

enum class GenKind : uint8_t { T, Del };

/// Generator reference t_{row,col} or d_{row,col}; indices are 1-based.
struct GenRef {
  GenKind kind;
  int row, col;
  bool operator==(const GenRef& o) const { return kind == o.kind && row == o.row && col == o.col; }
};

inline GenRef tGen(int i, int j) { return {GenKind::T, i, j}; }
inline GenRef dGen(int i, int j) { return {GenKind::Del, i, j}; }

/// Exponent tables (row major, m x n) of a normally ordered basis monomial:
/// t factors in lexicographic ascending order of (row,col), then d factors
/// in lexicographic descending order.
struct PBWMonomial {
  std::vector<uint32_t> tExp, dExp;

  static PBWMonomial unit(int m, int n) {
    PBWMonomial p;
    p.tExp.assign(static_cast<size_t>(m) * n, 0);
    p.dExp.assign(static_cast<size_t>(m) * n, 0);
    return p;
  }
  uint32_t t(int i, int j, int n) const { return tExp[static_cast<size_t>(i - 1) * n + (j - 1)]; }
  uint32_t d(int i, int j, int n) const { return dExp[static_cast<size_t>(i - 1) * n + (j - 1)]; }
  void addT(int i, int j, int n, uint32_t e = 1) { tExp[static_cast<size_t>(i - 1) * n + (j - 1)] += e; }
  void addD(int i, int j, int n, uint32_t e = 1) { dExp[static_cast<size_t>(i - 1) * n + (j - 1)] += e; }
  long tDegree() const;
  long dDegree() const;
  bool isUnit() const { return tDegree() == 0 && dDegree() == 0; }
  bool operator==(const PBWMonomial& o) const { return tExp == o.tExp && dExp == o.dExp; }
  bool operator<(const PBWMonomial& o) const {
    if (tExp != o.tExp) return tExp < o.tExp;
    return dExp < o.dExp;
  }
};

/// Finitely supported linear combination of PBW basis monomials.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(AlgebraSpec spec) : spec_(spec) {}

  static WeylElement zero(AlgebraSpec spec) { return WeylElement(spec); }
  static WeylElement one(AlgebraSpec spec);
  static WeylElement scalar(AlgebraSpec spec, const RatQ& c);
  static WeylElement generator(AlgebraSpec spec, GenRef g);
  static WeylElement monomial(AlgebraSpec spec, PBWMonomial mono, RatQ c = RatQ(1));

  const AlgebraSpec& spec() const { return spec_; }
  const std::map<PBWMonomial, RatQ>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  size_t termCount() const { return terms_.size(); }
  /// Adds c * mono, erasing the entry if the sum cancels.
  void add(const PBWMonomial& mono, const RatQ& c);
  RatQ coeff(const PBWMonomial& mono) const;

  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement operator-() const;
  WeylElement scaled(const RatQ& c) const;
  bool operator==(const WeylElement& o) const { return spec_ == o.spec_ && terms_ == o.terms_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  AlgebraSpec spec_;
  std::map<PBWMonomial, RatQ> terms_;
};

/// Which PBW ordering a straightening pass targets. Default is the basis
/// above; LexDesc/PrecDesc variants realize the alternative orderings
/// (t part descending, d part ascending).
enum class PBWOrder : uint8_t { Default, Reversed, Degree };

enum class ReduceStrategy : uint8_t { Leftmost, Rightmost };

/// Expands the product of the word's generators in the PBW basis.
WeylElement normal_form(const std::vector<GenRef>& word, AlgebraSpec spec,
                        ReduceStrategy strategy = ReduceStrategy::Leftmost);

/// Normal form followed by projection onto monomials with zero d part.
/// Branches that can no longer cancel all their d factors are pruned early,
/// so this is much faster than reducing and discarding.
WeylElement normal_form_project_p(const std::vector<GenRef>& word, AlgebraSpec spec);

/// Re-expands an element in the alternative ordered basis; keys of the result
/// are exponent tables read in that ordering.
std::map<PBWMonomial, RatQ> expand_in_order(const WeylElement& x, PBWOrder order);
/// Inverse of expand_in_order: reads keys in the given ordering and
/// re-expresses the element in the default PBW basis.
WeylElement element_from_order(const std::map<PBWMonomial, RatQ>& terms, AlgebraSpec spec, PBWOrder order);

/// Canonical generator word of a basis monomial under the given ordering.
std::vector<GenRef> canonical_word(const PBWMonomial& mono, const AlgebraSpec& spec,
                                   PBWOrder order = PBWOrder::Default);

WeylElement multiply(const WeylElement& a, const WeylElement& b);
WeylElement multiply(const WeylElement& a, const WeylElement& b, const WeylElement& c);

/// Bottom-right corner embedding: t_{i,j} -> t_{i+m-a, j+n-b}.
WeylElement embed(const WeylElement& x, AlgebraSpec target);
/// Inverse of embed on corner-supported elements; throws std::invalid_argument
/// if some monomial lies outside the corner image.
WeylElement embed_inverse(const WeylElement& x, AlgebraSpec source);
bool corner_supported(const WeylElement& x, int a, int b);

/// Index transpose t_{i,j} -> t_{j,i}, an isomorphism onto the n x m algebra.
WeylElement transpose(const WeylElement& x);

/// True iff every monomial uses only t rows in the bottom k rows and d rows
/// in the bottom l rows of the ambient algebra.
bool in_subalgebra_A(const WeylElement& x, int k, int l);

/// Projection onto monomials of t-degree r and d-degree s.
WeylElement graded_component(const WeylElement& x, long r, long s);

/// All exponent vectors of length len summing to deg, lexicographically ascending.
std::vector<std::vector<uint32_t>> exponent_vectors(int len, long deg);
/// Degree-d monomials of the polynomial part (dExp = 0), lex ascending.
std::vector<PBWMonomial> p_basis(const AlgebraSpec& spec, long d);

}  // namespace qweyl
