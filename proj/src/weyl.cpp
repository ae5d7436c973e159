#include "qweyl/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace qweyl {

std::string AlgebraSpec::str() const {
  std::ostringstream os;
  os << (variant == Variant::Filtered ? "PD" : "PDgr") << "_" << m << "x" << n;
  return os.str();
}

long PBWMonomial::tDegree() const {
  long s = 0;
  for (auto e : tExp) s += e;
  return s;
}

long PBWMonomial::dDegree() const {
  long s = 0;
  for (auto e : dExp) s += e;
  return s;
}

WeylElement WeylElement::one(AlgebraSpec spec) { return scalar(spec, RatQ(1)); }

WeylElement WeylElement::scalar(AlgebraSpec spec, const RatQ& c) {
  WeylElement x(spec);
  x.add(PBWMonomial::unit(spec.m, spec.n), c);
  return x;
}

WeylElement WeylElement::generator(AlgebraSpec spec, GenRef g) {
  if (g.row < 1 || g.row > spec.m || g.col < 1 || g.col > spec.n)
    throw std::invalid_argument("generator index out of range for " + spec.str());
  PBWMonomial mono = PBWMonomial::unit(spec.m, spec.n);
  if (g.kind == GenKind::T) mono.addT(g.row, g.col, spec.n);
  else mono.addD(g.row, g.col, spec.n);
  return monomial(spec, mono);
}

WeylElement WeylElement::monomial(AlgebraSpec spec, PBWMonomial mono, RatQ c) {
  WeylElement x(spec);
  x.add(mono, c);
  return x;
}

void WeylElement::add(const PBWMonomial& mono, const RatQ& c) {
  if (c.isZero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

RatQ WeylElement::coeff(const PBWMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? RatQ() : it->second;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  if (spec_ != o.spec_) throw std::invalid_argument("algebra spec mismatch");
  WeylElement r(*this);
  for (const auto& [mono, c] : o.terms_) r.add(mono, c);
  return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const { return *this + (-o); }

WeylElement WeylElement::operator-() const {
  WeylElement r(spec_);
  for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
  return r;
}

WeylElement WeylElement::scaled(const RatQ& c) const {
  WeylElement r(spec_);
  if (c.isZero()) return r;
  for (const auto& [mono, x] : terms_) r.terms_.emplace(mono, x * c);
  return r;
}

namespace {

// Position orders for the supported PBW bases.
int lexCmp(const GenRef& a, const GenRef& b) {
  if (a.row != b.row) return a.row < b.row ? -1 : 1;
  if (a.col != b.col) return a.col < b.col ? -1 : 1;
  return 0;
}

int precCmp(const GenRef& a, const GenRef& b) {
  int sa = a.row + a.col, sb = b.row + b.col;
  if (sa != sb) return sa < sb ? -1 : 1;
  if (a.row != b.row) return a.row < b.row ? -1 : 1;
  return 0;
}

// True if a must come strictly before b in the sorted word.
bool seqBefore(PBWOrder order, GenKind kind, const GenRef& a, const GenRef& b) {
  int c = order == PBWOrder::Degree ? precCmp(a, b) : lexCmp(a, b);
  if (c == 0) return false;
  bool ascending;
  switch (order) {
    case PBWOrder::Default: ascending = (kind == GenKind::T); break;
    case PBWOrder::Reversed: ascending = (kind == GenKind::Del); break;
    case PBWOrder::Degree: ascending = (kind == GenKind::Del); break;
    default: throw std::logic_error("bad order");
  }
  return ascending ? c < 0 : c > 0;
}

struct Rewrite {
  // Replacement for an adjacent pair: a list of (factors, coefficient).
  struct Alt {
    GenRef g0, g1;
    int len;  // 0, 1 or 2 factors used
    RatQ c;
  };
  std::vector<Alt> alts;
};

struct EngineConsts {
  RatQ q = RatQ::qpow(1);
  RatQ qinv = RatQ::qpow(-1);
  RatQ qmq = RatQ::qMinusQinv();
  RatQ qsq = RatQ::qpow(2);
  RatQ q_qmq = RatQ::qpow(1) * RatQ::qMinusQinv();
  RatQ qmq2 = RatQ::qMinusQinv() * RatQ::qMinusQinv();
};

// Straightening rule for a same-kind adjacent pair (A, B) that is out of order.
Rewrite sameKindRewrite(const EngineConsts& k, const GenRef& A, const GenRef& B) {
  Rewrite rw;
  const bool isT = A.kind == GenKind::T;
  if (A.row == B.row) {
    bool colAsc = A.col < B.col;
    RatQ c = (isT ? colAsc : !colAsc) ? k.q : k.qinv;
    rw.alts.push_back({B, A, 2, c});
    return rw;
  }
  if (A.col == B.col) {
    bool rowAsc = A.row < B.row;
    RatQ c = (isT ? rowAsc : !rowAsc) ? k.q : k.qinv;
    rw.alts.push_back({B, A, 2, c});
    return rw;
  }
  bool diagonal = (A.row < B.row) == (A.col < B.col);
  if (!diagonal) {
    rw.alts.push_back({B, A, 2, RatQ(1)});
    return rw;
  }
  // Diagonal pair: swap plus a correction supported on the anti-diagonal.
  bool aNW = A.row < B.row;
  GenRef ne{A.kind, std::min(A.row, B.row), std::max(A.col, B.col)};
  GenRef sw{A.kind, std::max(A.row, B.row), std::min(A.col, B.col)};
  rw.alts.push_back({B, A, 2, RatQ(1)});
  if (isT) {
    if (aNW) rw.alts.push_back({ne, sw, 2, k.qmq});
    else rw.alts.push_back({ne, sw, 2, -k.qmq});
  } else {
    if (aNW) rw.alts.push_back({sw, ne, 2, -k.qmq});
    else rw.alts.push_back({sw, ne, 2, k.qmq});
  }
  return rw;
}

// Mixed relations: A = d_{c,b}, B = t_{d,a}.
Rewrite mixedRewrite(const EngineConsts& k, const AlgebraSpec& spec, const GenRef& A, const GenRef& B) {
  Rewrite rw;
  int c = A.row, b = A.col, d = B.row, a = B.col;
  if (c != d && b != a) {
    rw.alts.push_back({B, A, 2, RatQ(1)});
  } else if (c == d && b != a) {
    rw.alts.push_back({tGen(c, a), dGen(c, b), 2, k.q});
    for (int c2 = c + 1; c2 <= spec.m; ++c2)
      rw.alts.push_back({tGen(c2, a), dGen(c2, b), 2, k.qmq});
  } else if (c != d && b == a) {
    rw.alts.push_back({tGen(d, a), dGen(c, a), 2, k.q});
    for (int a2 = a + 1; a2 <= spec.n; ++a2)
      rw.alts.push_back({tGen(d, a2), dGen(c, a2), 2, k.qmq});
  } else {
    if (spec.variant == Variant::Filtered) rw.alts.push_back({A, B, 0, RatQ(1)});
    for (int c2 = c; c2 <= spec.m; ++c2)
      for (int b2 = b; b2 <= spec.n; ++b2) {
        const RatQ& w = (c2 == c && b2 == b) ? k.qsq
                        : (c2 == c || b2 == b) ? k.q_qmq
                                               : k.qmq2;
        rw.alts.push_back({tGen(c2, b2), dGen(c2, b2), 2, w});
      }
  }
  return rw;
}

struct WordTerm {
  std::vector<GenRef> w;
  RatQ c;
};

int findReducible(const std::vector<GenRef>& w, PBWOrder order, ReduceStrategy strategy) {
  auto reducible = [&](int p) {
    const GenRef& A = w[p];
    const GenRef& B = w[p + 1];
    if (A.kind == GenKind::Del && B.kind == GenKind::T) return true;
    if (A.kind != B.kind) return false;
    return seqBefore(order, A.kind, B, A);
  };
  int last = static_cast<int>(w.size()) - 1;
  if (strategy == ReduceStrategy::Leftmost) {
    for (int p = 0; p < last; ++p)
      if (reducible(p)) return p;
  } else {
    for (int p = last - 1; p >= 0; --p)
      if (reducible(p)) return p;
  }
  return -1;
}

PBWMonomial compress(const std::vector<GenRef>& w, const AlgebraSpec& spec) {
  PBWMonomial mono = PBWMonomial::unit(spec.m, spec.n);
  for (const GenRef& g : w) {
    if (g.kind == GenKind::T) mono.addT(g.row, g.col, spec.n);
    else mono.addD(g.row, g.col, spec.n);
  }
  return mono;
}

// A d factor can only vanish by meeting a t factor to its right, and t
// factors never move rightward past a d factor; a branch whose d count
// exceeds the t count right of its first d can never reach the polynomial
// part.
bool canReachP(const std::vector<GenRef>& w) {
  long dcount = 0;
  long tAfterFirstD = 0;
  bool seenD = false;
  for (const GenRef& g : w) {
    if (g.kind == GenKind::Del) {
      ++dcount;
      seenD = true;
    } else if (seenD) {
      ++tAfterFirstD;
    }
  }
  return dcount <= tAfterFirstD;
}

std::map<PBWMonomial, RatQ> reduceWord(const std::vector<GenRef>& word, const AlgebraSpec& spec,
                                       PBWOrder order, ReduceStrategy strategy,
                                       bool projectP = false) {
  for (const GenRef& g : word)
    if (g.row < 1 || g.row > spec.m || g.col < 1 || g.col > spec.n)
      throw std::invalid_argument("word index out of range for " + spec.str());
  static const EngineConsts k;
  std::map<PBWMonomial, RatQ> result;
  std::vector<WordTerm> stack;
  stack.push_back({word, RatQ(1)});
  long fuel = 200000000;
  while (!stack.empty()) {
    if (--fuel < 0) throw std::logic_error("straightening did not terminate");
    WordTerm t = std::move(stack.back());
    stack.pop_back();
    if (projectP && !canReachP(t.w)) continue;
    int p = findReducible(t.w, order, strategy);
    if (p < 0) {
      PBWMonomial mono = compress(t.w, spec);
      auto it = result.find(mono);
      if (it == result.end()) result.emplace(std::move(mono), t.c);
      else {
        it->second += t.c;
        if (it->second.isZero()) result.erase(it);
      }
      continue;
    }
    const GenRef A = t.w[p], B = t.w[p + 1];
    Rewrite rw = (A.kind == B.kind) ? sameKindRewrite(k, A, B) : mixedRewrite(k, spec, A, B);
    for (const auto& alt : rw.alts) {
      WordTerm nt;
      nt.c = t.c * alt.c;
      nt.w.reserve(t.w.size() - 2 + alt.len);
      nt.w.insert(nt.w.end(), t.w.begin(), t.w.begin() + p);
      if (alt.len >= 1) nt.w.push_back(alt.g0);
      if (alt.len >= 2) nt.w.push_back(alt.g1);
      nt.w.insert(nt.w.end(), t.w.begin() + p + 2, t.w.end());
      stack.push_back(std::move(nt));
    }
  }
  return result;
}

}  // namespace

std::vector<GenRef> canonical_word(const PBWMonomial& mono, const AlgebraSpec& spec, PBWOrder order) {
  std::vector<GenRef> ts, ds;
  for (int i = 1; i <= spec.m; ++i)
    for (int j = 1; j <= spec.n; ++j) {
      for (uint32_t e = 0; e < mono.t(i, j, spec.n); ++e) ts.push_back(tGen(i, j));
      for (uint32_t e = 0; e < mono.d(i, j, spec.n); ++e) ds.push_back(dGen(i, j));
    }
  auto sortBy = [&](std::vector<GenRef>& v, GenKind kind) {
    std::stable_sort(v.begin(), v.end(), [&](const GenRef& a, const GenRef& b) {
      return seqBefore(order, kind, a, b);
    });
  };
  sortBy(ts, GenKind::T);
  sortBy(ds, GenKind::Del);
  ts.insert(ts.end(), ds.begin(), ds.end());
  return ts;
}

WeylElement normal_form(const std::vector<GenRef>& word, AlgebraSpec spec, ReduceStrategy strategy) {
  WeylElement x(spec);
  for (auto& [mono, c] : reduceWord(word, spec, PBWOrder::Default, strategy)) x.add(mono, c);
  return x;
}

WeylElement normal_form_project_p(const std::vector<GenRef>& word, AlgebraSpec spec) {
  WeylElement x(spec);
  for (auto& [mono, c] :
       reduceWord(word, spec, PBWOrder::Default, ReduceStrategy::Leftmost, /*projectP=*/true)) {
    if (mono.dDegree() == 0) x.add(mono, c);
  }
  return x;
}

std::map<PBWMonomial, RatQ> expand_in_order(const WeylElement& x, PBWOrder order) {
  std::map<PBWMonomial, RatQ> result;
  for (const auto& [mono, c] : x.terms()) {
    auto part = reduceWord(canonical_word(mono, x.spec()), x.spec(), order, ReduceStrategy::Leftmost);
    for (auto& [m2, c2] : part) {
      auto it = result.find(m2);
      if (it == result.end()) result.emplace(m2, c * c2);
      else {
        it->second += c * c2;
        if (it->second.isZero()) result.erase(it);
      }
    }
  }
  return result;
}

WeylElement element_from_order(const std::map<PBWMonomial, RatQ>& terms, AlgebraSpec spec, PBWOrder order) {
  WeylElement x(spec);
  for (const auto& [mono, c] : terms) {
    WeylElement nf = normal_form(canonical_word(mono, spec, order), spec);
    for (const auto& [m2, c2] : nf.terms()) x.add(m2, c * c2);
  }
  return x;
}

WeylElement multiply(const WeylElement& a, const WeylElement& b) {
  if (a.spec() != b.spec()) throw std::invalid_argument("algebra spec mismatch in multiply");
  WeylElement r(a.spec());
  for (const auto& [ma, ca] : a.terms()) {
    std::vector<GenRef> wa = canonical_word(ma, a.spec());
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<GenRef> w = wa;
      std::vector<GenRef> wb = canonical_word(mb, b.spec());
      w.insert(w.end(), wb.begin(), wb.end());
      RatQ c = ca * cb;
      for (auto& [mono, cc] : reduceWord(w, a.spec(), PBWOrder::Default, ReduceStrategy::Leftmost))
        r.add(mono, c * cc);
    }
  }
  return r;
}

WeylElement multiply(const WeylElement& a, const WeylElement& b, const WeylElement& c) {
  return multiply(multiply(a, b), c);
}

WeylElement embed(const WeylElement& x, AlgebraSpec target) {
  const AlgebraSpec& s = x.spec();
  if (s.m > target.m || s.n > target.n || s.variant != target.variant)
    throw std::invalid_argument("embed: invalid target " + target.str() + " for " + s.str());
  int dr = target.m - s.m, dc = target.n - s.n;
  WeylElement r(target);
  for (const auto& [mono, c] : x.terms()) {
    PBWMonomial m2 = PBWMonomial::unit(target.m, target.n);
    for (int i = 1; i <= s.m; ++i)
      for (int j = 1; j <= s.n; ++j) {
        if (auto e = mono.t(i, j, s.n)) m2.addT(i + dr, j + dc, target.n, e);
        if (auto e = mono.d(i, j, s.n)) m2.addD(i + dr, j + dc, target.n, e);
      }
    r.add(m2, c);
  }
  return r;
}

bool corner_supported(const WeylElement& x, int a, int b) {
  const AlgebraSpec& s = x.spec();
  int dr = s.m - a, dc = s.n - b;
  for (const auto& [mono, c] : x.terms())
    for (int i = 1; i <= s.m; ++i)
      for (int j = 1; j <= s.n; ++j)
        if ((mono.t(i, j, s.n) || mono.d(i, j, s.n)) && (i <= dr || j <= dc)) return false;
  return true;
}

WeylElement embed_inverse(const WeylElement& x, AlgebraSpec source) {
  const AlgebraSpec& s = x.spec();
  if (source.m > s.m || source.n > s.n || source.variant != s.variant)
    throw std::invalid_argument("embed_inverse: bad source spec");
  if (!corner_supported(x, source.m, source.n))
    throw std::invalid_argument("embed_inverse: element not supported on the corner image");
  int dr = s.m - source.m, dc = s.n - source.n;
  WeylElement r(source);
  for (const auto& [mono, c] : x.terms()) {
    PBWMonomial m2 = PBWMonomial::unit(source.m, source.n);
    for (int i = 1; i <= source.m; ++i)
      for (int j = 1; j <= source.n; ++j) {
        if (auto e = mono.t(i + dr, j + dc, s.n)) m2.addT(i, j, source.n, e);
        if (auto e = mono.d(i + dr, j + dc, s.n)) m2.addD(i, j, source.n, e);
      }
    r.add(m2, c);
  }
  return r;
}

WeylElement transpose(const WeylElement& x) {
  AlgebraSpec target{x.spec().n, x.spec().m, x.spec().variant};
  WeylElement r(target);
  for (const auto& [mono, c] : x.terms()) {
    std::vector<GenRef> w = canonical_word(mono, x.spec());
    for (GenRef& g : w) std::swap(g.row, g.col);
    WeylElement nf = normal_form(w, target);
    for (const auto& [m2, c2] : nf.terms()) r.add(m2, c * c2);
  }
  return r;
}

bool in_subalgebra_A(const WeylElement& x, int k, int l) {
  const AlgebraSpec& s = x.spec();
  for (const auto& [mono, c] : x.terms())
    for (int i = 1; i <= s.m; ++i)
      for (int j = 1; j <= s.n; ++j) {
        if (mono.t(i, j, s.n) && i <= s.m - k) return false;
        if (mono.d(i, j, s.n) && i <= s.m - l) return false;
      }
  return true;
}

WeylElement graded_component(const WeylElement& x, long r, long s) {
  WeylElement out(x.spec());
  for (const auto& [mono, c] : x.terms())
    if (mono.tDegree() == r && mono.dDegree() == s) out.add(mono, c);
  return out;
}

std::vector<std::vector<uint32_t>> exponent_vectors(int len, long deg) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cur(len, 0);
  // Lexicographically ascending enumeration of compositions of deg.
  auto rec = [&](auto&& self, int pos, long left) -> void {
    if (pos == len - 1) {
      cur[pos] = static_cast<uint32_t>(left);
      out.push_back(cur);
      return;
    }
    for (long e = 0; e <= left; ++e) {
      cur[pos] = static_cast<uint32_t>(e);
      self(self, pos + 1, left - e);
    }
  };
  if (len == 0) {
    if (deg == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, deg);
  return out;
}

std::vector<PBWMonomial> p_basis(const AlgebraSpec& spec, long d) {
  std::vector<PBWMonomial> out;
  for (auto& v : exponent_vectors(spec.m * spec.n, d)) {
    PBWMonomial mono = PBWMonomial::unit(spec.m, spec.n);
    mono.tExp = v;
    out.push_back(std::move(mono));
  }
  return out;
}

namespace {

std::string monoString(const PBWMonomial& mono, const AlgebraSpec& spec) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](char name, int i, int j, uint32_t e) {
    if (!first) os << "*";
    first = false;
    os << name << "[" << i << "," << j << "]";
    if (e >= 2) os << "^" << e;
  };
  for (int i = 1; i <= spec.m; ++i)
    for (int j = 1; j <= spec.n; ++j)
      if (auto e = mono.t(i, j, spec.n)) emit('t', i, j, e);
  for (int i = spec.m; i >= 1; --i)
    for (int j = spec.n; j >= 1; --j)
      if (auto e = mono.d(i, j, spec.n)) emit('d', i, j, e);
  return os.str();
}

}  // namespace

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    std::string piece;
    if (mono.isUnit()) {
      piece = c.str();
    } else {
      std::string ms = monoString(mono, spec_);
      if (c.isOne()) piece = ms;
      else if (c == RatQ(-1)) piece = "-" + ms;
      else if (c.isSingleTerm()) piece = c.str() + "*" + ms;
      else piece = "(" + c.str() + ")*" + ms;
    }
    if (first) {
      os << piece;
      first = false;
    } else if (!piece.empty() && piece[0] == '-') {
      os << " - " << piece.substr(1);
    } else {
      os << " + " << piece;
    }
  }
  return os.str();
}

}  // namespace qweyl
