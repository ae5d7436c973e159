#include "qweyl/uqact.hpp"

#include <stdexcept>

#include "qweyl/parallel.hpp"

namespace qweyl {

WeightVector lambda_corner(int a, int size) {
  WeightVector w;
  w.exponents.assign(size, 0);
  for (int i = a; i <= size; ++i) w.exponents[i - 1] = -2;
  return w;
}

namespace {

int sideIndex(const GenRef& g, Side side) { return side == Side::Right ? g.col : g.row; }

// Action of E_k / F_k on a single generator; returns false when it vanishes.
// Right side acts on column indices, left side on row indices.
bool raiseLower(const UGen& u, const GenRef& g, GenRef& out, RatQ& coeff) {
  int idx = sideIndex(g, u.side);
  int k = u.index;
  auto replace = [&](int v) {
    out = g;
    if (u.side == Side::Right) out.col = v;
    else out.row = v;
  };
  if (u.kind == UKind::E) {
    if (g.kind == GenKind::Del && idx == k + 1) { replace(k); coeff = RatQ(1); return true; }
    if (g.kind == GenKind::T && idx == k) { replace(k + 1); coeff = -RatQ::qpow(-1); return true; }
    return false;
  }
  if (u.kind == UKind::F) {
    if (g.kind == GenKind::Del && idx == k) { replace(k + 1); coeff = RatQ(1); return true; }
    if (g.kind == GenKind::T && idx == k + 1) { replace(k); coeff = -RatQ::qpow(1); return true; }
    return false;
  }
  return false;
}

// Exponent of q by which K_{eps_k} scales one generator.
long kEpsWeight(const GenRef& g, Side side, int k) {
  int idx = sideIndex(g, side);
  if (idx != k) return 0;
  return g.kind == GenKind::T ? -1 : 1;
}

// Exponent of q by which K_k = K_{eps_k} K_{eps_{k+1}}^{-1} scales one generator.
long kCompositeWeight(const GenRef& g, Side side, int k) {
  return kEpsWeight(g, side, k) - kEpsWeight(g, side, k + 1);
}

void checkRange(const UGen& g, const AlgebraSpec& spec) {
  int size = g.side == Side::Right ? spec.n : spec.m;
  int hi = (g.kind == UKind::E || g.kind == UKind::F) ? size - 1 : size;
  if (g.index < 1 || g.index > hi)
    throw std::invalid_argument("U generator index out of range for " + spec.str());
}

}  // namespace

long k_weight(const PBWMonomial& mono, const AlgebraSpec& spec, Side side, int k) {
  long w = 0;
  for (int i = 1; i <= spec.m; ++i)
    for (int j = 1; j <= spec.n; ++j) {
      int idx = side == Side::Right ? j : i;
      if (idx != k) continue;
      w += static_cast<long>(mono.d(i, j, spec.n)) - static_cast<long>(mono.t(i, j, spec.n));
    }
  return w;
}

WeylElement act_gen(const UGen& g, const WeylElement& x) {
  const AlgebraSpec& spec = x.spec();
  checkRange(g, spec);
  WeylElement out(spec);
  if (g.kind == UKind::Kplus || g.kind == UKind::Kminus) {
    long sign = g.kind == UKind::Kplus ? 1 : -1;
    for (const auto& [mono, c] : x.terms())
      out.add(mono, c * RatQ::qpow(sign * k_weight(mono, spec, g.side, g.index)));
    return out;
  }
  // Derivation rule: for E, sum over positions with a K_k twist on the tail;
  // for F, with a K_k^{-1} twist on the head.
  for (const auto& [mono, c] : x.terms()) {
    std::vector<GenRef> w = canonical_word(mono, spec);
    for (size_t p = 0; p < w.size(); ++p) {
      GenRef repl;
      RatQ base;
      if (!raiseLower(g, w[p], repl, base)) continue;
      long twist = 0;
      if (g.kind == UKind::E) {
        for (size_t t = p + 1; t < w.size(); ++t) twist += kCompositeWeight(w[t], g.side, g.index);
      } else {
        for (size_t t = 0; t < p; ++t) twist -= kCompositeWeight(w[t], g.side, g.index);
      }
      std::vector<GenRef> w2 = w;
      w2[p] = repl;
      RatQ coeff = c * base * RatQ::qpow(twist);
      WeylElement nf = normal_form(w2, spec);
      for (const auto& [m2, c2] : nf.terms()) out.add(m2, coeff * c2);
    }
  }
  return out;
}

WeylElement act_word(const UGenWord& w, const WeylElement& x) {
  WeylElement cur = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act_gen(*it, cur);
  return cur;
}

WeylElement act_Klambda(const WeightVector& lambda, Side side, const WeylElement& x) {
  const AlgebraSpec& spec = x.spec();
  int size = side == Side::Right ? spec.n : spec.m;
  if (static_cast<int>(lambda.exponents.size()) != size)
    throw std::invalid_argument("act_Klambda: weight length mismatch");
  WeylElement out(spec);
  for (const auto& [mono, c] : x.terms()) {
    long w = 0;
    for (int k = 1; k <= size; ++k)
      if (lambda.exponents[k - 1] != 0) w += lambda.exponents[k - 1] * k_weight(mono, spec, side, k);
    out.add(mono, c * RatQ::qpow(w));
  }
  return out;
}

std::vector<WeylElement> invariant_basis(int k, int l, int n, long r) {
  if (k > n || l > n) throw std::invalid_argument("invariant_basis: needs k,l <= n");
  AlgebraSpec spec = graded(n, n);
  // Basis of the (r,r) component of the corner subalgebra.
  std::vector<PBWMonomial> comp;
  {
    auto tParts = exponent_vectors(k * n, r);
    auto dParts = exponent_vectors(l * n, r);
    for (const auto& tv : tParts)
      for (const auto& dv : dParts) {
        PBWMonomial mono = PBWMonomial::unit(n, n);
        for (int i = 1; i <= k; ++i)
          for (int j = 1; j <= n; ++j)
            if (auto e = tv[static_cast<size_t>(i - 1) * n + (j - 1)]) mono.addT(n - k + i, j, n, e);
        for (int i = 1; i <= l; ++i)
          for (int j = 1; j <= n; ++j)
            if (auto e = dv[static_cast<size_t>(i - 1) * n + (j - 1)]) mono.addD(n - l + i, j, n, e);
        comp.push_back(std::move(mono));
      }
  }
  // The K_{eps_s} - 1 rows of the stacked system vanish exactly on the span
  // of weight-zero monomials, so restrict to those first.
  std::vector<PBWMonomial> w0;
  for (const auto& mono : comp) {
    bool zero = true;
    for (int s = 1; s <= n && zero; ++s) zero = k_weight(mono, spec, Side::Right, s) == 0;
    if (zero) w0.push_back(mono);
  }
  if (w0.empty()) return {};
  std::map<PBWMonomial, int> compIndex;
  for (size_t i = 0; i < comp.size(); ++i) compIndex.emplace(comp[i], static_cast<int>(i));
  int C = static_cast<int>(w0.size());
  int R = static_cast<int>(comp.size());
  std::vector<UGen> ops;
  for (int s = 1; s <= n - 1; ++s) {
    ops.push_back(uE(Side::Right, s));
    ops.push_back(uF(Side::Right, s));
  }
  QMatrix stacked(static_cast<int>(ops.size()) * R, C);
  // Columns are filled independently; rows of distinct operators never clash.
  parallel_for(w0.size(), [&](size_t col) {
    WeylElement v = WeylElement::monomial(spec, w0[col]);
    for (size_t o = 0; o < ops.size(); ++o) {
      WeylElement img = act_gen(ops[o], v);
      for (const auto& [mono, c] : img.terms()) {
        auto it = compIndex.find(mono);
        if (it == compIndex.end()) throw std::logic_error("invariant_basis: image left the component");
        stacked.at(static_cast<int>(o) * R + it->second, static_cast<int>(col)) = c;
      }
    }
  });
  std::vector<WeylElement> out;
  for (const auto& vec : kernel(stacked)) {
    WeylElement x(spec);
    for (int i = 0; i < C; ++i) x.add(w0[i], vec[i]);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace qweyl
