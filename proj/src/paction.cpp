#include "qweyl/paction.hpp"

#include <stdexcept>

#include "qweyl/parallel.hpp"

namespace qweyl {

WeylElement act(const WeylElement& D, const WeylElement& f) {
  if (D.spec() != f.spec()) throw std::invalid_argument("act: algebra spec mismatch");
  if (D.spec().variant != Variant::Filtered)
    throw std::invalid_argument("act: module action is defined for the filtered algebra");
  for (const auto& [mono, c] : f.terms())
    if (mono.dDegree() != 0) throw std::invalid_argument("act: f must lie in the polynomial part");
  const AlgebraSpec& spec = D.spec();
  WeylElement out(spec);
  // Split each operator monomial t^A d^B: the d part acts first, the
  // projected result is multiplied by the polynomial prefix. Terms sharing a
  // d part reuse one projected reduction.
  std::map<std::vector<uint32_t>, std::vector<std::pair<PBWMonomial, RatQ>>> byDPart;
  for (const auto& [dm, dc] : D.terms()) {
    PBWMonomial tPart = PBWMonomial::unit(spec.m, spec.n);
    tPart.tExp = dm.tExp;
    byDPart[dm.dExp].emplace_back(std::move(tPart), dc);
  }
  for (const auto& [dExp, prefixes] : byDPart) {
    PBWMonomial dPart = PBWMonomial::unit(spec.m, spec.n);
    dPart.dExp = dExp;
    std::vector<GenRef> dWord = canonical_word(dPart, spec);
    for (const auto& [fm, fc] : f.terms()) {
      std::vector<GenRef> w = dWord;
      std::vector<GenRef> fw = canonical_word(fm, spec);
      w.insert(w.end(), fw.begin(), fw.end());
      WeylElement core = normal_form_project_p(w, spec);
      if (core.isZero()) continue;
      for (const auto& [tPart, dc] : prefixes) {
        WeylElement shifted = multiply(WeylElement::monomial(spec, tPart), core);
        RatQ c = dc * fc;
        for (const auto& [mono, cc] : shifted.terms()) out.add(mono, c * cc);
      }
    }
  }
  return out;
}

RatQ c_scalar(long a) {
  if (a < 0) return RatQ();
  RatQ s;
  for (long i = 0; i <= a; ++i) s += RatQ::qpow(2 * i);
  return s;
}

RatQ c2_scalar(long a, long b) {
  if (a < -1 || b < -1) throw std::invalid_argument("c2_scalar: arguments must be >= -1");
  if (b == -1) return RatQ(1);
  if (a < b) return RatQ();
  RatQ p(1);
  for (long i = 0; i <= b; ++i) p *= c_scalar(a - i);
  return p;
}

namespace {

template <class Loop>
QMatrix actionMatrixImpl(const WeylElement& D, long d, Loop&& loop) {
  const AlgebraSpec& spec = D.spec();
  std::vector<PBWMonomial> basis = p_basis(spec, d);
  std::map<PBWMonomial, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
  int N = static_cast<int>(basis.size());
  QMatrix M(N, N);
  std::vector<std::string> errors(basis.size());
  loop(basis.size(), [&](size_t col) {
    WeylElement img = act(D, WeylElement::monomial(spec, basis[col]));
    for (const auto& [mono, c] : img.terms()) {
      auto it = index.find(mono);
      if (it == index.end()) {
        errors[col] = "action_matrix: image leaves the degree-" + std::to_string(d) + " component";
        return;
      }
      M.at(it->second, static_cast<int>(col)) = c;
    }
  });
  for (const auto& e : errors)
    if (!e.empty()) throw std::invalid_argument(e);
  return M;
}

}  // namespace

QMatrix action_matrix(const WeylElement& D, long d) {
  return actionMatrixImpl(D, d, [](size_t count, auto&& f) { parallel_for(count, f); });
}

QMatrix action_matrix_serial(const WeylElement& D, long d) {
  return actionMatrixImpl(D, d, [](size_t count, auto&& f) { serial_for(count, f); });
}

}  // namespace qweyl
