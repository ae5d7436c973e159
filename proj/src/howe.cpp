#include "qweyl/howe.hpp"

#include <stdexcept>

namespace qweyl {

void TensorElement::add(const PBWMonomial& a, const PBWMonomial& b, const RatQ& c) {
  if (c.isZero()) return;
  auto key = std::make_pair(a, b);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

namespace {

AlgebraSpec legSpec(int n) { return filtered(n, n); }

void checkPure(const WeylElement& u, FactorKind& kind) {
  bool hasT = false, hasD = false;
  for (const auto& [mono, c] : u.terms()) {
    hasT |= mono.tDegree() > 0;
    hasD |= mono.dDegree() > 0;
  }
  if (hasT && hasD) throw std::invalid_argument("expected a pure element of the P or D part");
  kind = hasD ? FactorKind::D : FactorKind::P;
}

void checkSquare(const WeylElement& u) {
  if (u.spec().m != u.spec().n) throw std::invalid_argument("operation needs a square ambient algebra");
}

GenKind toGenKind(FactorKind k) { return k == FactorKind::P ? GenKind::T : GenKind::Del; }

WeylElement legElement(const std::vector<GenRef>& w, int n) { return normal_form(w, legSpec(n)); }

}  // namespace

TensorElement TensorElement::operator*(const TensorElement& o) const {
  if (leftKind_ != o.leftKind_ || rightKind_ != o.rightKind_ || n_ != o.n_)
    throw std::invalid_argument("tensor product kind mismatch");
  TensorElement r(leftKind_, rightKind_, n_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      WeylElement left = multiply(WeylElement::monomial(legSpec(n_), ka.first),
                                  WeylElement::monomial(legSpec(n_), kb.first));
      WeylElement right = multiply(WeylElement::monomial(legSpec(n_), ka.second),
                                   WeylElement::monomial(legSpec(n_), kb.second));
      RatQ c = ca * cb;
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) r.add(ml, mr, c * cl * cr);
    }
  return r;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  if (leftKind_ != o.leftKind_ || rightKind_ != o.rightKind_ || n_ != o.n_)
    throw std::invalid_argument("tensor sum kind mismatch");
  TensorElement r(*this);
  for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
  return r;
}

bool TensorElement::operator==(const TensorElement& o) const {
  return leftKind_ == o.leftKind_ && rightKind_ == o.rightKind_ && n_ == o.n_ && terms_ == o.terms_;
}

TensorElement coproduct(const WeylElement& u) {
  checkSquare(u);
  FactorKind kind;
  checkPure(u, kind);
  const int n = u.spec().n;
  GenKind gk = toGenKind(kind);
  TensorElement out(kind, kind, n);
  for (const auto& [mono, c] : u.terms()) {
    std::vector<GenRef> w = canonical_word(mono, u.spec());
    size_t r = w.size();
    std::vector<int> mid(r, 1);
    while (true) {
      std::vector<GenRef> left, right;
      left.reserve(r);
      right.reserve(r);
      for (size_t p = 0; p < r; ++p) {
        left.push_back({gk, w[p].row, mid[p]});
        right.push_back({gk, mid[p], w[p].col});
      }
      WeylElement ln = legElement(left, n), rn = legElement(right, n);
      for (const auto& [ml, cl] : ln.terms())
        for (const auto& [mr, cr] : rn.terms()) out.add(ml, mr, c * cl * cr);
      size_t p = 0;
      while (p < r && mid[p] == n) mid[p++] = 1;
      if (p == r) break;
      ++mid[p];
    }
  }
  return out;
}

std::map<std::array<PBWMonomial, 3>, RatQ> coproduct3(const WeylElement& u, bool leftFirst) {
  std::map<std::array<PBWMonomial, 3>, RatQ> out;
  TensorElement first = coproduct(u);
  for (const auto& [key, c] : first.terms()) {
    const PBWMonomial& again = leftFirst ? key.first : key.second;
    TensorElement second = coproduct(WeylElement::monomial(legSpec(first.n()), again));
    for (const auto& [key2, c2] : second.terms()) {
      std::array<PBWMonomial, 3> trip = leftFirst
          ? std::array<PBWMonomial, 3>{key2.first, key2.second, key.second}
          : std::array<PBWMonomial, 3>{key.first, key2.first, key2.second};
      auto it = out.find(trip);
      if (it == out.end()) out.emplace(std::move(trip), c * c2);
      else {
        it->second += c * c2;
        if (it->second.isZero()) out.erase(it);
      }
    }
  }
  return out;
}

RatQ counit(const WeylElement& u) {
  FactorKind kind;
  checkPure(u, kind);
  RatQ s;
  for (const auto& [mono, c] : u.terms()) {
    bool diag = true;
    const AlgebraSpec& sp = u.spec();
    for (int i = 1; i <= sp.m && diag; ++i)
      for (int j = 1; j <= sp.n; ++j)
        if (i != j && (mono.t(i, j, sp.n) || mono.d(i, j, sp.n))) { diag = false; break; }
    if (diag) s += c;
  }
  return s;
}

namespace {

WeylElement mapWords(const WeylElement& u, GenKind targetKind, bool reverse, bool transposeIdx) {
  checkSquare(u);
  const int n = u.spec().n;
  WeylElement out(legSpec(n));
  for (const auto& [mono, c] : u.terms()) {
    std::vector<GenRef> w = canonical_word(mono, u.spec());
    std::vector<GenRef> w2;
    w2.reserve(w.size());
    for (const GenRef& g : w) {
      GenRef h{targetKind, transposeIdx ? g.col : g.row, transposeIdx ? g.row : g.col};
      w2.push_back(h);
    }
    if (reverse) std::reverse(w2.begin(), w2.end());
    WeylElement nf = normal_form(w2, legSpec(n));
    for (const auto& [m2, c2] : nf.terms()) out.add(m2, c * c2);
  }
  return out;
}

}  // namespace

WeylElement iota(const WeylElement& u) {
  for (const auto& [mono, c] : u.terms())
    if (mono.dDegree() != 0) throw std::invalid_argument("iota expects an element of the polynomial part");
  return mapWords(u, GenKind::Del, /*reverse=*/true, /*transposeIdx=*/true);
}

WeylElement natural_inv(const WeylElement& u) {
  for (const auto& [mono, c] : u.terms())
    if (mono.tDegree() != 0)
      throw std::invalid_argument("natural_inv expects an element of the constant-coefficient part");
  return mapWords(u, GenKind::Del, /*reverse=*/false, /*transposeIdx=*/true);
}

WeylElement iota_natural(const WeylElement& u) {
  return mapWords(u, GenKind::Del, /*reverse=*/true, /*transposeIdx=*/false);
}

TensorElement gamma_n(const WeylElement& u) {
  checkSquare(u);
  const int n = u.spec().n;
  TensorElement out(FactorKind::P, FactorKind::D, n);
  for (const auto& [mono, c] : u.terms()) {
    if (mono.dDegree() != 0) throw std::invalid_argument("gamma_n expects an element of the polynomial part");
    std::vector<GenRef> w = canonical_word(mono, u.spec());
    size_t r = w.size();
    std::vector<int> mid(r, 1);
    if (r == 0) {
      out.add(mono, mono, c);
      continue;
    }
    while (true) {
      std::vector<GenRef> left, right;
      left.reserve(r);
      right.reserve(r);
      for (size_t p = 0; p < r; ++p) left.push_back(tGen(w[p].row, mid[p]));
      for (size_t p = r; p-- > 0;) right.push_back(dGen(w[p].col, mid[p]));
      WeylElement ln = legElement(left, n), rn = legElement(right, n);
      for (const auto& [ml, cl] : ln.terms())
        for (const auto& [mr, cr] : rn.terms()) out.add(ml, mr, c * cl * cr);
      size_t p = 0;
      while (p < r && mid[p] == n) mid[p++] = 1;
      if (p == r) break;
      ++mid[p];
    }
  }
  return out;
}

WeylElement tensor_to_graded(const TensorElement& x) {
  if (x.leftKind() != FactorKind::P || x.rightKind() != FactorKind::D)
    throw std::invalid_argument("tensor_to_graded expects a P (x) D tensor");
  const int n = x.n();
  WeylElement out(graded(n, n));
  for (const auto& [key, c] : x.terms()) {
    PBWMonomial mono = PBWMonomial::unit(n, n);
    mono.tExp = key.first.tExp;
    mono.dExp = key.second.dExp;
    out.add(mono, c);
  }
  return out;
}

WeylElement gamma_kln(const WeylElement& u, int n) {
  const AlgebraSpec& s = u.spec();
  if (s.m > n || s.n > n) throw std::invalid_argument("gamma_kln: k and l must not exceed n");
  WeylElement eu = embed(u, filtered(n, n));
  return tensor_to_graded(gamma_n(eu));
}

WeylElement p_map(const TensorElement& x) {
  if (x.leftKind() != FactorKind::P || x.rightKind() != FactorKind::D)
    throw std::invalid_argument("p_map expects a P (x) D tensor");
  const int n = x.n();
  WeylElement out(filtered(n, n));
  for (const auto& [key, c] : x.terms()) {
    PBWMonomial mono = PBWMonomial::unit(n, n);
    mono.tExp = key.first.tExp;
    mono.dExp = key.second.dExp;
    out.add(mono, c);
  }
  return out;
}

namespace {

using WordKey = std::vector<int>;

WordKey encode(const std::vector<GenRef>& w) {
  WordKey k;
  k.reserve(w.size());
  for (const GenRef& g : w) k.push_back(g.row * 256 + g.col);
  return k;
}

RatQ counitWord(const std::vector<GenRef>& w) {
  for (const GenRef& g : w)
    if (g.row != g.col) return RatQ();
  return RatQ(1);
}

// Fundamental base values <d_{k,i} (x) d_{l,j}, R>.
RatQ rpairBase(const GenRef& f, const GenRef& g) {
  int k = f.row, i = f.col, l = g.row, j = g.col;
  RatQ v;
  if (k == i && l == j) v += (i == j) ? RatQ::q() : RatQ(1);
  if (k == j && l == i && i > j) v += RatQ::qMinusQinv();
  return v;
}

struct PairCache {
  std::map<std::tuple<int, int, WordKey, WordKey>, RatQ> memo;
};

RatQ rpairRec(const std::vector<GenRef>& f, const std::vector<GenRef>& g, int n, PairOrder order,
              PairCache& cache) {
  if (f.empty()) return counitWord(g);
  if (g.empty()) return counitWord(f);
  if (f.size() == 1 && g.size() == 1) return rpairBase(f[0], g[0]);
  auto key = std::make_tuple(n, static_cast<int>(order), encode(f), encode(g));
  auto it = cache.memo.find(key);
  if (it != cache.memo.end()) return it->second;
  RatQ total;
  bool splitF = order == PairOrder::LeftFirst ? f.size() > 1 : g.size() == 1;
  if (splitF) {
    // <f0 frest (x) g> = sum <f0 (x) g1><frest (x) g2>
    std::vector<GenRef> f0{f[0]}, frest(f.begin() + 1, f.end());
    size_t r = g.size();
    std::vector<int> mid(r, 1);
    while (true) {
      std::vector<GenRef> g1, g2;
      g1.reserve(r);
      g2.reserve(r);
      for (size_t p = 0; p < r; ++p) {
        g1.push_back(dGen(g[p].row, mid[p]));
        g2.push_back(dGen(mid[p], g[p].col));
      }
      RatQ c1 = rpairRec(f0, g1, n, order, cache);
      if (!c1.isZero()) total += c1 * rpairRec(frest, g2, n, order, cache);
      size_t p = 0;
      while (p < r && mid[p] == n) mid[p++] = 1;
      if (p == r) break;
      ++mid[p];
    }
  } else {
    // <f (x) g0 grest> = sum <f1 (x) grest><f2 (x) g0>
    std::vector<GenRef> g0{g[0]}, grest(g.begin() + 1, g.end());
    size_t r = f.size();
    std::vector<int> mid(r, 1);
    while (true) {
      std::vector<GenRef> f1, f2;
      f1.reserve(r);
      f2.reserve(r);
      for (size_t p = 0; p < r; ++p) {
        f1.push_back(dGen(f[p].row, mid[p]));
        f2.push_back(dGen(mid[p], f[p].col));
      }
      RatQ c1 = rpairRec(f1, grest, n, order, cache);
      if (!c1.isZero()) total += c1 * rpairRec(f2, g0, n, order, cache);
      size_t p = 0;
      while (p < r && mid[p] == n) mid[p++] = 1;
      if (p == r) break;
      ++mid[p];
    }
  }
  cache.memo.emplace(std::move(key), total);
  return total;
}

PairCache& pairCache() {
  thread_local PairCache cache;
  return cache;
}

}  // namespace

RatQ rpair_words(const std::vector<GenRef>& f, const std::vector<GenRef>& g, int n, PairOrder order) {
  return rpairRec(f, g, n, order, pairCache());
}

RatQ rpair(const WeylElement& f, const WeylElement& g, PairOrder order) {
  checkSquare(f);
  checkSquare(g);
  if (f.spec().n != g.spec().n) throw std::invalid_argument("rpair: ambient size mismatch");
  const int n = f.spec().n;
  RatQ total;
  for (const auto& [mf, cf] : f.terms()) {
    if (mf.tDegree() != 0) throw std::invalid_argument("rpair expects constant-coefficient elements");
    std::vector<GenRef> wf = canonical_word(mf, f.spec());
    for (const auto& [mg, cg] : g.terms()) {
      if (mg.tDegree() != 0) throw std::invalid_argument("rpair expects constant-coefficient elements");
      std::vector<GenRef> wg = canonical_word(mg, g.spec());
      RatQ p = rpair_words(wf, wg, n, order);
      if (!p.isZero()) total += cf * cg * p;
    }
  }
  return total;
}

namespace {

std::vector<GenRef> tWordOf(const PBWMonomial& mono, const AlgebraSpec& spec) {
  std::vector<GenRef> w = canonical_word(mono, spec);
  for (const GenRef& g : w)
    if (g.kind != GenKind::T) throw std::invalid_argument("star expects elements of the polynomial part");
  return w;
}

std::vector<GenRef> iotaWord(const std::vector<GenRef>& w) {
  std::vector<GenRef> r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(dGen(it->col, it->row));
  return r;
}

std::vector<GenRef> iotaNaturalWord(const std::vector<GenRef>& w) {
  std::vector<GenRef> r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(dGen(it->row, it->col));
  return r;
}

}  // namespace

TensorElement upsilon(const WeylElement& u, const WeylElement& v) {
  checkSquare(u);
  if (v.spec() != u.spec()) throw std::invalid_argument("upsilon: operand spec mismatch");
  const int n = u.spec().n;
  AlgebraSpec amb = u.spec();
  TensorElement result(FactorKind::P, FactorKind::P, n);
  for (const auto& [mu, cu] : u.terms()) {
    std::vector<GenRef> wu = tWordOf(mu, amb);
    size_t ru = wu.size();
    for (const auto& [mv, cv] : v.terms()) {
      std::vector<GenRef> wv = tWordOf(mv, amb);
      size_t rv = wv.size();
      // Triple coproduct legs: u1 = (rows, a), u2 = (a, b), u3 = (b, cols).
      std::vector<int> au(ru, 1), bu(ru, 1), av(rv, 1), bv(rv, 1);
      auto advance = [n](std::vector<int>& v2) {
        size_t p = 0;
        while (p < v2.size() && v2[p] == n) v2[p++] = 1;
        if (p == v2.size()) return false;
        ++v2[p];
        return true;
      };
      bool moreU = true;
      while (moreU) {
        std::vector<GenRef> u1w, u2w, u3w;
        for (size_t p = 0; p < ru; ++p) {
          u1w.push_back(tGen(wu[p].row, au[p]));
          u2w.push_back(tGen(au[p], bu[p]));
          u3w.push_back(tGen(bu[p], wu[p].col));
        }
        std::fill(av.begin(), av.end(), 1);
        std::fill(bv.begin(), bv.end(), 1);
        bool moreV = true;
        while (moreV) {
          std::vector<GenRef> v1w, v2w, v3w;
          for (size_t p = 0; p < rv; ++p) {
            v1w.push_back(tGen(wv[p].row, av[p]));
            v2w.push_back(tGen(av[p], bv[p]));
            v3w.push_back(tGen(bv[p], wv[p].col));
          }
          RatQ c1 = rpair_words(iotaNaturalWord(v1w), iotaNaturalWord(u3w), n);
          if (!c1.isZero()) {
            RatQ c2 = rpair_words(iotaWord(v3w), iotaWord(u2w), n);
            if (!c2.isZero()) {
              WeylElement left = legElement(u1w, n), right = legElement(v2w, n);
              RatQ c = cu * cv * c1 * c2;
              for (const auto& [ml, cl] : left.terms())
                for (const auto& [mr, cr] : right.terms()) result.add(ml, mr, c * cl * cr);
            }
          }
          // Advance the v legs: b vector fastest.
          if (!advance(bv)) moreV = advance(av);
        }
        if (!advance(bu)) moreU = advance(au);
      }
    }
  }
  return result;
}

WeylElement star(const WeylElement& u, const WeylElement& v, int n) {
  const AlgebraSpec src = u.spec();
  if (v.spec() != src) throw std::invalid_argument("star: operand spec mismatch");
  if (src.m > n || src.n > n) throw std::invalid_argument("star: needs k,l <= n");
  AlgebraSpec amb = filtered(n, n);
  TensorElement twisted = upsilon(embed(u, amb), embed(v, amb));
  WeylElement result(amb);
  for (const auto& [key, c] : twisted.terms()) {
    WeylElement prod = multiply(WeylElement::monomial(amb, key.first),
                                WeylElement::monomial(amb, key.second));
    for (const auto& [mono, cc] : prod.terms()) result.add(mono, c * cc);
  }
  if (!corner_supported(result, src.m, src.n))
    throw std::logic_error("star: product left the corner image");
  return embed_inverse(result, src);
}

}  // namespace qweyl
