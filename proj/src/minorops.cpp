#include "qweyl/minorops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qweyl {

int inversion_count(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv;
}

namespace {

void checkTuple(const IndexTuple& t, int bound, const char* what) {
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 1 || t[i] > bound) throw std::invalid_argument(std::string(what) + ": index out of range");
    if (i + 1 < t.size() && t[i] >= t[i + 1])
      throw std::invalid_argument(std::string(what) + ": tuple must be strictly increasing");
  }
}

WeylElement qminorImpl(const IndexTuple& rows, const IndexTuple& cols, AlgebraSpec spec, GenKind kind) {
  if (rows.size() != cols.size() || rows.empty())
    throw std::invalid_argument("quantum minor: tuples must be nonempty of equal length");
  checkTuple(rows, spec.m, "quantum minor rows");
  checkTuple(cols, spec.n, "quantum minor cols");
  int r = static_cast<int>(rows.size());
  RatQ base = kind == GenKind::T ? -RatQ::qpow(1) : -RatQ::qpow(-1);
  WeylElement out(spec);
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<GenRef> w;
    w.reserve(r);
    for (int p = 0; p < r; ++p) w.push_back({kind, rows[perm[p]], cols[p]});
    RatQ c = base.pow(inversion_count(perm));
    WeylElement nf = normal_form(w, spec);
    for (const auto& [mono, cc] : nf.terms()) out.add(mono, c * cc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void increasingTuples(int r, int bound, std::vector<IndexTuple>& out) {
  IndexTuple cur(r);
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == r) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= bound - (r - pos - 1); ++v) {
      cur[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
}

}  // namespace

WeylElement qminor_t(const IndexTuple& rows, const IndexTuple& cols, AlgebraSpec spec) {
  return qminorImpl(rows, cols, spec, GenKind::T);
}

WeylElement qminor_d(const IndexTuple& rows, const IndexTuple& cols, AlgebraSpec spec) {
  return qminorImpl(rows, cols, spec, GenKind::Del);
}

WeylElement D_opr(long r, int a, int b, Variant variant) {
  AlgebraSpec spec{a, b, variant};
  if (r < 0) throw std::invalid_argument("D_opr: r must be >= 0");
  if (r == 0) return WeylElement::one(spec);
  if (r > std::min(a, b)) return WeylElement::zero(spec);
  std::vector<IndexTuple> rowTuples, colTuples;
  increasingTuples(static_cast<int>(r), a, rowTuples);
  increasingTuples(static_cast<int>(r), b, colTuples);
  WeylElement out(spec);
  for (const auto& rows : rowTuples)
    for (const auto& cols : colTuples)
      out = out + multiply(qminor_t(rows, cols, spec), qminor_d(rows, cols, spec));
  return out;
}

WeylElement D_kr(int k, long r, int m, int n, bool primed) {
  AlgebraSpec target = filtered(m, n);
  if (!primed) {
    if (k < 1 || k > n) throw std::invalid_argument("D_kr: need 1 <= k <= n");
    if (r == 0) return WeylElement::one(target);
    if (r > std::min({static_cast<long>(k), static_cast<long>(m), static_cast<long>(n)}))
      return WeylElement::zero(target);
    return embed(D_opr(r, m, k), target);
  }
  if (k < 1 || k > m) throw std::invalid_argument("D_kr: need 1 <= k <= m for the primed family");
  if (r == 0) return WeylElement::one(target);
  if (r > std::min({static_cast<long>(k), static_cast<long>(m), static_cast<long>(n)}))
    return WeylElement::zero(target);
  return embed(D_opr(r, k, n), target);
}

WeylElement D_r(long r, int m, int n) {
  WeylElement viaCols = D_kr(n, r, m, n, false);
  WeylElement viaRows = D_kr(m, r, m, n, true);
  if (viaCols != viaRows) throw std::logic_error("D_r: the two embedding routes disagree");
  return viaCols;
}

WeylElement cartan_image(int a_or_b, Side side, int m, int n) {
  int bound = side == Side::Right ? n : m;
  if (a_or_b < 1 || a_or_b > bound) throw std::invalid_argument("cartan_image: index out of range");
  AlgebraSpec spec = filtered(m, n);
  WeylElement out(spec);
  RatQ q2m1 = RatQ::qpow(2) - RatQ(1);
  for (long r = 0; r <= a_or_b; ++r)
    out = out + D_kr(a_or_b, r, m, n, side != Side::Right).scaled(q2m1.pow(r));
  return out;
}

WeylElement polarization(int i, int j, PolKind kind, AlgebraSpec spec) {
  const int m = spec.m, n = spec.n;
  auto range = [&](int v, int hi, const char* what) {
    if (v < 1 || v > hi) throw std::invalid_argument(std::string("polarization: ") + what + " out of range");
  };
  WeylElement out(spec);
  switch (kind) {
    case PolKind::L:
      range(i, m, "i");
      range(j, m, "j");
      for (int r = 1; r <= n; ++r)
        out = out + multiply(WeylElement::generator(spec, tGen(i, r)), WeylElement::generator(spec, dGen(j, r)));
      return out;
    case PolKind::R:
      range(i, n, "i");
      range(j, n, "j");
      for (int r = 1; r <= m; ++r)
        out = out + multiply(WeylElement::generator(spec, tGen(r, i)), WeylElement::generator(spec, dGen(r, j)));
      return out;
    case PolKind::Ltilde:
    case PolKind::LtildeGr: {
      range(i, m, "i");
      range(j, m, "j");
      AlgebraSpec s = spec;
      s.variant = kind == PolKind::LtildeGr ? Variant::Graded : spec.variant;
      WeylElement acc(s);
      for (int r = 1; r <= n; ++r)
        acc = acc + multiply(WeylElement::generator(s, tGen(m - i + 1, r)),
                             WeylElement::generator(s, dGen(m - j + 1, r)));
      return acc;
    }
  }
  throw std::logic_error("bad PolKind");
}

}  // namespace qweyl
