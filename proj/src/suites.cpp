#include "qweyl/suites.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "qweyl/howe.hpp"
#include "qweyl/minorops.hpp"
#include "qweyl/paction.hpp"
#include "qweyl/parallel.hpp"
#include "qweyl/schur.hpp"
#include "qweyl/uqact.hpp"

namespace qweyl {

bool SuiteReport::allPass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Rng::Rng(uint64_t seed) : s_(seed + 0x9e3779b97f4a7c15ULL) {}

uint64_t Rng::next() {
  // splitmix64: fully specified, platform independent.
  uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::below(long bound) { return static_cast<long>(next() % static_cast<uint64_t>(bound)); }

std::vector<GenRef> random_word(Rng& rng, AlgebraSpec spec, int len) {
  std::vector<GenRef> w;
  w.reserve(len);
  for (int i = 0; i < len; ++i) {
    GenKind k = rng.below(2) ? GenKind::T : GenKind::Del;
    w.push_back({k, static_cast<int>(rng.below(spec.m)) + 1, static_cast<int>(rng.below(spec.n)) + 1});
  }
  return w;
}

WeylElement random_element(Rng& rng, AlgebraSpec spec, int maxTerms, int maxDeg) {
  WeylElement x(spec);
  int terms = 1 + static_cast<int>(rng.below(maxTerms));
  static const long coeffs[3] = {1, -1, 2};
  for (int t = 0; t < terms; ++t) {
    int len = static_cast<int>(rng.below(maxDeg + 1));
    RatQ c = RatQ(coeffs[rng.below(3)]) * RatQ::qpow(rng.below(5) - 2);
    x = x + normal_form(random_word(rng, spec, len), spec).scaled(c);
  }
  return x;
}

namespace {

struct Check {
  std::string id;
  std::function<std::string()> fn;  // returns witness; empty string = pass
};

std::vector<CheckResult> run_checks(const std::vector<Check>& checks) {
  std::vector<CheckResult> results(checks.size());
  parallel_for(checks.size(), [&](size_t i) {
    CheckResult r;
    r.id = checks[i].id;
    try {
      r.witness = checks[i].fn();
      r.pass = r.witness.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.witness = std::string("exception: ") + e.what();
    }
    results[i] = std::move(r);
  });
  return results;
}

std::string mismatch(const WeylElement& got, const WeylElement& want, const std::string& what) {
  return what + ": got " + got.str() + ", want " + want.str();
}

uint64_t checkSeed(uint64_t seed, uint64_t salt) { return seed * 1000003ULL + salt; }

// ---------------------------------------------------------------- suites

std::vector<Check> suite_pbw_confluence(const SuiteParams& p) {
  std::vector<Check> checks;
  auto allWordsCheck = [p](Variant variant, int maxLen) {
    return [p, variant, maxLen]() -> std::string {
      AlgebraSpec spec{p.m, p.n, variant};
      std::vector<GenRef> gens;
      for (int i = 1; i <= p.m; ++i)
        for (int j = 1; j <= p.n; ++j) {
          gens.push_back(tGen(i, j));
          gens.push_back(dGen(i, j));
        }
      std::vector<GenRef> word;
      auto rec = [&](auto&& self) -> std::string {
        if (!word.empty()) {
          WeylElement a = normal_form(word, spec, ReduceStrategy::Leftmost);
          WeylElement b = normal_form(word, spec, ReduceStrategy::Rightmost);
          if (a != b) {
            std::string w;
            for (const GenRef& g : word)
              w += std::string(g.kind == GenKind::T ? "t" : "d") + "[" + std::to_string(g.row) + "," +
                   std::to_string(g.col) + "]";
            return "strategies disagree on word " + w;
          }
        }
        if (static_cast<int>(word.size()) == maxLen) return "";
        for (const GenRef& g : gens) {
          word.push_back(g);
          std::string r = self(self);
          word.pop_back();
          if (!r.empty()) return r;
        }
        return "";
      };
      return rec(rec);
    };
  };
  int exhaustiveLen = p.m * p.n <= 4 ? 4 : 3;
  checks.push_back({"confluence-exhaustive-filtered", allWordsCheck(Variant::Filtered, exhaustiveLen)});
  checks.push_back({"confluence-exhaustive-graded", allWordsCheck(Variant::Graded, exhaustiveLen)});
  checks.push_back({"confluence-random-len5", [p]() -> std::string {
                      Rng rng(checkSeed(p.seed, 1));
                      for (int variant = 0; variant < 2; ++variant) {
                        AlgebraSpec spec{p.m, p.n, variant ? Variant::Graded : Variant::Filtered};
                        for (int t = 0; t < 500; ++t) {
                          int len = 1 + static_cast<int>(rng.below(5));
                          std::vector<GenRef> w = random_word(rng, spec, len);
                          if (normal_form(w, spec, ReduceStrategy::Leftmost) !=
                              normal_form(w, spec, ReduceStrategy::Rightmost))
                            return "strategies disagree on a random word, trial " + std::to_string(t);
                        }
                      }
                      return "";
                    }});
  checks.push_back({"ordering-roundtrip", [p]() -> std::string {
                      AlgebraSpec spec = filtered(p.m, p.n);
                      Rng rng(checkSeed(p.seed, 2));
                      for (int t = 0; t < 40; ++t) {
                        WeylElement x = random_element(rng, spec, 3, 3);
                        for (PBWOrder ord : {PBWOrder::Reversed, PBWOrder::Degree}) {
                          WeylElement back = element_from_order(expand_in_order(x, ord), spec, ord);
                          if (back != x) return mismatch(back, x, "ordering round trip");
                        }
                      }
                      return "";
                    }});
  checks.push_back({"associativity", [p]() -> std::string {
                      AlgebraSpec spec = filtered(p.m, p.n);
                      Rng rng(checkSeed(p.seed, 3));
                      int trials = p.m * p.n >= 9 ? 40 : 200;
                      for (int t = 0; t < trials; ++t) {
                        WeylElement a = random_element(rng, spec, 2, 3);
                        WeylElement b = random_element(rng, spec, 2, 3);
                        WeylElement c = random_element(rng, spec, 2, 3);
                        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
                          return "associativity failed on trial " + std::to_string(t);
                      }
                      return "";
                    }});
  return checks;
}

std::vector<Check> suite_pbw_dimension(const SuiteParams& p) {
  std::vector<Check> checks;
  for (int d = 0; d <= p.max_deg; ++d) {
    checks.push_back({"p-basis-count-deg" + std::to_string(d), [p, d]() -> std::string {
                        long got = static_cast<long>(p_basis(filtered(p.m, p.n), d).size());
                        long want = binomial(static_cast<long>(p.m) * p.n + d - 1, d);
                        if (got != want)
                          return "dimension " + std::to_string(got) + " != " + std::to_string(want);
                        return "";
                      }});
  }
  return checks;
}

// Row-one monomial t_{1,kmax}^{a_kmax} ... t_{1,1}^{a_1} as a word.
std::vector<GenRef> rowOneTWord(const std::vector<long>& a) {
  std::vector<GenRef> w;
  for (int j = static_cast<int>(a.size()); j >= 1; --j)
    for (long e = 0; e < a[j - 1]; ++e) w.push_back(tGen(1, j));
  return w;
}

std::vector<GenRef> rowOneDWord(const std::vector<long>& b) {
  std::vector<GenRef> w;
  for (int j = 1; j <= static_cast<int>(b.size()); ++j)
    for (long e = 0; e < b[j - 1]; ++e) w.push_back(dGen(1, j));
  return w;
}

std::vector<Check> suite_action_laws(const SuiteParams& p) {
  std::vector<Check> checks;
  AlgebraSpec spec = filtered(p.m, p.n);

  checks.push_back({"module-axiom", [p, spec]() -> std::string {
                      Rng rng(checkSeed(p.seed, 10));
                      for (int t = 0; t < 60; ++t) {
                        WeylElement D = random_element(rng, spec, 2, 3);
                        WeylElement E = random_element(rng, spec, 2, 3);
                        WeylElement f = normal_form(random_word(rng, spec, 3), spec);
                        WeylElement fp(spec);
                        for (const auto& [mono, c] : f.terms())
                          if (mono.dDegree() == 0) fp.add(mono, c);
                        WeylElement lhs = act(multiply(D, E), fp);
                        WeylElement rhs = act(D, act(E, fp));
                        if (lhs != rhs) return mismatch(lhs, rhs, "module axiom trial " + std::to_string(t));
                      }
                      return "";
                    }});

  checks.push_back({"degree-lowering", [p, spec]() -> std::string {
                      for (long d = 1; d <= p.max_deg; ++d)
                        for (const PBWMonomial& mono : p_basis(spec, d))
                          for (int i = 1; i <= p.m; ++i)
                            for (int j = 1; j <= p.n; ++j) {
                              WeylElement img = act(WeylElement::generator(spec, dGen(i, j)),
                                                    WeylElement::monomial(spec, mono));
                              for (const auto& [m2, c] : img.terms())
                                if (m2.tDegree() != d - 1)
                                  return "derivative did not lower degree by one";
                            }
                      return "";
                    }});

  checks.push_back({"reduction-closed-form", [p, spec]() -> std::string {
                      // Closed form for the action of a row-one d word on a
                      // row-one t word, exponents up to 2 per column.
                      int n = p.n;
                      std::vector<long> a(n, 0), b(n, 0);
                      auto advance = [](std::vector<long>& v) {
                        size_t i = 0;
                        while (i < v.size() && v[i] == 2) v[i++] = 0;
                        if (i == v.size()) return false;
                        ++v[i];
                        return true;
                      };
                      do {
                        std::fill(b.begin(), b.end(), 0);
                        do {
                          WeylElement ta = normal_form(rowOneTWord(a), spec);
                          WeylElement db = normal_form(rowOneDWord(b), spec);
                          WeylElement got = act(db, ta);
                          bool kills = false;
                          for (int i = 0; i < n; ++i) kills |= b[i] > a[i];
                          if (kills) {
                            if (!got.isZero()) return "expected zero action, got " + got.str();
                            continue;
                          }
                          long twist = 0, prefix = 0;
                          RatQ scale(1);
                          for (int i = 0; i < n; ++i) {
                            if (i >= 1) twist += (a[i] - b[i]) * prefix;
                            prefix += b[i];
                            scale *= c2_scalar(a[i] - 1, b[i] - 1);
                          }
                          std::vector<long> diff(n);
                          for (int i = 0; i < n; ++i) diff[i] = a[i] - b[i];
                          WeylElement want =
                              normal_form(rowOneTWord(diff), spec).scaled(RatQ::qpow(twist) * scale);
                          if (got != want) return mismatch(got, want, "reduction closed form");
                        } while (advance(b));
                      } while (advance(a));
                      return "";
                    }});

  checks.push_back({"annihilation-missing-index", [p, spec]() -> std::string {
                      Rng rng(checkSeed(p.seed, 11));
                      for (int t = 0; t < 100; ++t) {
                        int i = static_cast<int>(rng.below(p.m)) + 1;
                        int j = static_cast<int>(rng.below(p.n)) + 1;
                        std::vector<GenRef> w;
                        int len = 1 + static_cast<int>(rng.below(3));
                        for (int s = 0; s < len; ++s) {
                          int r = static_cast<int>(rng.below(p.m)) + 1;
                          int c = static_cast<int>(rng.below(p.n)) + 1;
                          if (r == i) r = r % p.m + 1;  // avoid row i; may still hit col j
                          if (r == i) continue;
                          w.push_back(tGen(r, c));
                        }
                        if (w.empty()) continue;
                        WeylElement f = normal_form(w, spec);
                        WeylElement got = act(WeylElement::generator(spec, dGen(i, j)), f);
                        if (p.m > 1 && !got.isZero()) return "expected annihilation, got " + got.str();
                      }
                      return "";
                    }});

  checks.push_back({"factor-through", [p, spec]() -> std::string {
                      Rng rng(checkSeed(p.seed, 12));
                      int done = 0;
                      while (done < 50) {
                        // Either every d column exceeds every tail column, or
                        // every d row exceeds every tail row.
                        bool byCols = p.n >= 2 && (p.m < 2 || rng.below(2));
                        if (p.n < 2 && p.m < 2) break;
                        int bound = byCols ? p.n : p.m;
                        int split = 1 + static_cast<int>(rng.below(bound - 1));
                        int r = 1 + static_cast<int>(rng.below(2));
                        std::vector<GenRef> dw;
                        for (int s = 0; s < r; ++s) {
                          int high = split + 1 + static_cast<int>(rng.below(bound - split));
                          int other = byCols ? static_cast<int>(rng.below(p.m)) + 1
                                             : static_cast<int>(rng.below(p.n)) + 1;
                          dw.push_back(byCols ? dGen(other, high) : dGen(high, other));
                        }
                        WeylElement f = normal_form(random_word(rng, spec, 2), spec);
                        WeylElement fp(spec);
                        for (const auto& [mono, c] : f.terms())
                          if (mono.dDegree() == 0) fp.add(mono, c);
                        int s = 1 + static_cast<int>(rng.below(2));
                        std::vector<GenRef> tail;
                        int lastRow = 1, lastCol = 1;
                        for (int u = 0; u < s; ++u) {
                          int rowCap = byCols ? p.m : split;
                          int colCap = byCols ? split : p.n;
                          lastRow = lastRow + static_cast<int>(rng.below(rowCap - lastRow + 1));
                          lastCol = lastCol + static_cast<int>(rng.below(colCap - lastCol + 1));
                          tail.push_back(tGen(lastRow, lastCol));
                        }
                        WeylElement tailEl = normal_form(tail, spec);
                        WeylElement dEl = normal_form(dw, spec);
                        WeylElement lhs = act(dEl, multiply(fp, tailEl));
                        WeylElement rhs = multiply(act(dEl, fp), tailEl);
                        if (lhs != rhs) return mismatch(lhs, rhs, "factor-through");
                        ++done;
                      }
                      return "";
                    }});

  checks.push_back({"faithfulness-witness", [p, spec]() -> std::string {
                      Rng rng(checkSeed(p.seed, 13));
                      for (int t = 0; t < 40; ++t) {
                        WeylElement D = random_element(rng, spec, 3, 2);
                        if (D.isZero()) continue;
                        // Re-express in the degree-ordered basis, take the
                        // minimal d block, then the reverse-lexicographically
                        // minimal d exponent tuple in that block.
                        auto deg = expand_in_order(D, PBWOrder::Degree);
                        long dmin = -1;
                        for (const auto& [mono, c] : deg)
                          if (dmin < 0 || mono.dDegree() < dmin) dmin = mono.dDegree();
                        // Coordinates listed in the degree order of positions.
                        std::vector<std::pair<int, int>> posOrder;
                        for (int i = 1; i <= p.m; ++i)
                          for (int j = 1; j <= p.n; ++j) posOrder.push_back({i, j});
                        std::sort(posOrder.begin(), posOrder.end(), [](auto a, auto b) {
                          int sa = a.first + a.second, sb = b.first + b.second;
                          if (sa != sb) return sa < sb;
                          return a.first < b.first;
                        });
                        std::vector<uint32_t> best;
                        const PBWMonomial* bestMono = nullptr;
                        for (const auto& [mono, c] : deg) {
                          if (mono.dDegree() != dmin) continue;
                          std::vector<uint32_t> key;
                          for (auto it = posOrder.rbegin(); it != posOrder.rend(); ++it)
                            key.push_back(mono.d(it->first, it->second, p.n));
                          if (bestMono == nullptr || key < best) {
                            best = key;
                            bestMono = &mono;
                          }
                        }
                        // Witness monomial: t exponents equal to the chosen d tuple.
                        std::vector<GenRef> w;
                        for (auto it = posOrder.rbegin(); it != posOrder.rend(); ++it)
                          for (uint32_t e = 0; e < bestMono->d(it->first, it->second, p.n); ++e)
                            w.push_back(tGen(it->first, it->second));
                        WeylElement f = normal_form(w, spec);
                        if (act(D, f).isZero())
                          return "witness monomial annihilated, trial " + std::to_string(t);
                      }
                      return "";
                    }});

  // Quantum group module structure.
  checks.push_back({"module-algebra-law", [p, spec]() -> std::string {
                      Rng rng(checkSeed(p.seed, 14));
                      std::vector<UGen> gens;
                      for (Side side : {Side::Left, Side::Right}) {
                        int size = side == Side::Left ? p.m : p.n;
                        for (int i = 1; i <= size - 1; ++i) {
                          gens.push_back(uE(side, i));
                          gens.push_back(uF(side, i));
                        }
                        for (int i = 1; i <= size; ++i) gens.push_back(uK(side, i));
                      }
                      for (int t = 0; t < 25; ++t) {
                        WeylElement a = random_element(rng, spec, 2, 2);
                        WeylElement b = random_element(rng, spec, 2, 2);
                        for (const UGen& g : gens) {
                          WeylElement lhs = act_gen(g, multiply(a, b));
                          WeylElement rhs(spec);
                          if (g.kind == UKind::Kplus) {
                            rhs = multiply(act_gen(g, a), act_gen(g, b));
                          } else if (g.kind == UKind::E) {
                            UGenWord kk = {uK(g.side, g.index)};
                            UGenWord kkinv = {uKinv(g.side, g.index + 1)};
                            WeylElement Kb = act_word(kk, act_word(kkinv, b));
                            rhs = multiply(act_gen(g, a), Kb) + multiply(a, act_gen(g, b));
                          } else {
                            UGenWord kinv = {uKinv(g.side, g.index)};
                            UGenWord kplus = {uK(g.side, g.index + 1)};
                            WeylElement Kinva = act_word(kinv, act_word(kplus, a));
                            rhs = multiply(act_gen(g, a), b) + multiply(Kinva, act_gen(g, b));
                          }
                          if (lhs != rhs) return mismatch(lhs, rhs, "module-algebra law");
                        }
                      }
                      return "";
                    }});

  checks.push_back({"kek-relations", [p, spec]() -> std::string {
                      // K_{eps_i} E_j K_{eps_i}^{-1} = q^{[i==j]-[i==j+1]} E_j
                      // and the F counterpart, as operator identities.
                      for (Side side : {Side::Left, Side::Right}) {
                        int size = side == Side::Left ? p.m : p.n;
                        for (int i = 1; i <= size; ++i)
                          for (int j = 1; j <= size - 1; ++j)
                            for (long d = 0; d <= std::min(p.max_deg, 3); ++d)
                              for (const PBWMonomial& mono : p_basis(spec, d)) {
                                WeylElement f = WeylElement::monomial(spec, mono);
                                long w = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
                                WeylElement lhsE =
                                    act_word({uK(side, i), uE(side, j), uKinv(side, i)}, f);
                                if (lhsE != act_gen(uE(side, j), f).scaled(RatQ::qpow(w)))
                                  return "KEK relation fails";
                                WeylElement lhsF =
                                    act_word({uK(side, i), uF(side, j), uKinv(side, i)}, f);
                                if (lhsF != act_gen(uF(side, j), f).scaled(RatQ::qpow(-w)))
                                  return "KFK relation fails";
                              }
                      }
                      return "";
                    }});

  checks.push_back({"ef-relations", [p, spec]() -> std::string {
                      // [E_i, F_j] = [i==j] (K_i - K_i^{-1})/(q - q^{-1}) on
                      // polynomial monomials of degree <= max_deg.
                      RatQ denom = RatQ::qMinusQinv();
                      for (Side side : {Side::Left, Side::Right}) {
                        int size = side == Side::Left ? p.m : p.n;
                        for (int i = 1; i <= size - 1; ++i)
                          for (int j = 1; j <= size - 1; ++j)
                            for (long d = 0; d <= std::min(p.max_deg, 3); ++d)
                              for (const PBWMonomial& mono : p_basis(spec, d)) {
                                WeylElement f = WeylElement::monomial(spec, mono);
                                WeylElement lhs = act_gen(uE(side, i), act_gen(uF(side, j), f)) -
                                                  act_gen(uF(side, j), act_gen(uE(side, i), f));
                                WeylElement rhs(spec);
                                if (i == j) {
                                  WeylElement kf = act_word({uK(side, i), uKinv(side, i + 1)}, f);
                                  WeylElement kif = act_word({uKinv(side, i), uK(side, i + 1)}, f);
                                  rhs = (kf - kif).scaled(RatQ(1) / denom);
                                }
                                if (lhs != rhs) return mismatch(lhs, rhs, "EF relation");
                              }
                      }
                      return "";
                    }});

  checks.push_back({"two-action-equality", [p, spec]() -> std::string {
                      Rng rng(checkSeed(p.seed, 15));
                      for (int t = 0; t < 10; ++t) {
                        WeylElement D = random_element(rng, spec, 2, 2);
                        for (Side side : {Side::Left, Side::Right}) {
                          int size = side == Side::Left ? p.m : p.n;
                          for (long d = 0; d <= std::min(p.max_deg, 3); ++d)
                            for (const PBWMonomial& mono : p_basis(spec, d)) {
                              WeylElement f = WeylElement::monomial(spec, mono);
                              for (int i = 1; i <= size - 1; ++i) {
                                // E . D as an operator: E.(D.(K^{-1}.f)) - (E K^{-1}).f twist
                                UGen e = uE(side, i);
                                WeylElement lhs = act(act_gen(e, D), f);
                                WeylElement kinvf = act_word({uKinv(side, i), uK(side, i + 1)}, f);
                                WeylElement rhs = act_gen(e, act(D, kinvf)) -
                                                  act(D, act_gen(e, kinvf));
                                if (lhs != rhs) return mismatch(lhs, rhs, "two-action equality (E)");
                              }
                              for (int i = 1; i <= size - 1; ++i) {
                                // F . D = F D - K^{-1} D K F as operators.
                                UGen ff = uF(side, i);
                                WeylElement lhs = act(act_gen(ff, D), f);
                                WeylElement kff = act_word({uK(side, i), uKinv(side, i + 1)},
                                                           act_gen(ff, f));
                                WeylElement rhs =
                                    act_gen(ff, act(D, f)) -
                                    act_word({uKinv(side, i), uK(side, i + 1)}, act(D, kff));
                                if (lhs != rhs) return mismatch(lhs, rhs, "two-action equality (F)");
                              }
                              for (int i = 1; i <= size; ++i) {
                                UGen kk = uK(side, i);
                                WeylElement lhs = act(act_gen(kk, D), f);
                                WeylElement rhs =
                                    act_gen(kk, act(D, act_gen(uKinv(side, i), f)));
                                if (lhs != rhs) return mismatch(lhs, rhs, "two-action equality (K)");
                              }
                            }
                        }
                      }
                      return "";
                    }});

  checks.push_back({"klambda-closed-form", [p, spec]() -> std::string {
                      Rng rng(checkSeed(p.seed, 16));
                      for (int t = 0; t < 30; ++t) {
                        WeylElement x = random_element(rng, spec, 2, 3);
                        for (Side side : {Side::Left, Side::Right}) {
                          int size = side == Side::Left ? p.m : p.n;
                          int a = 1 + static_cast<int>(rng.below(size));
                          WeightVector lam = lambda_corner(a, size);
                          UGenWord w;
                          for (int i = a; i <= size; ++i) {
                            w.push_back(uKinv(side, i));
                            w.push_back(uKinv(side, i));
                          }
                          WeylElement lhs = act_Klambda(lam, side, x);
                          WeylElement rhs = act_word(w, x);
                          if (lhs != rhs) return mismatch(lhs, rhs, "K_lambda closed form");
                        }
                      }
                      return "";
                    }});

  checks.push_back({"embed-equivariance", [p, spec]() -> std::string {
                      if (p.m < 2 || p.n < 2) return "";
                      AlgebraSpec small = filtered(p.m - 1, p.n - 1);
                      AlgebraSpec big = spec;
                      for (int i = 1; i <= small.m; ++i)
                        for (int j = 1; j <= small.n; ++j)
                          for (GenKind kind : {GenKind::T, GenKind::Del}) {
                            WeylElement x = WeylElement::generator(small, {kind, i, j});
                            // Right generators shift by n - n' = 1, left by m - m' = 1.
                            for (int s = 1; s <= small.n - 1; ++s) {
                              WeylElement lhs = embed(act_gen(uE(Side::Right, s), x), big);
                              WeylElement rhs = act_gen(uE(Side::Right, s + 1), embed(x, big));
                              if (lhs != rhs) return mismatch(lhs, rhs, "embed equivariance (E right)");
                            }
                            for (int s = 1; s <= small.m - 1; ++s) {
                              WeylElement lhs = embed(act_gen(uF(Side::Left, s), x), big);
                              WeylElement rhs = act_gen(uF(Side::Left, s + 1), embed(x, big));
                              if (lhs != rhs) return mismatch(lhs, rhs, "embed equivariance (F left)");
                            }
                            for (int s = 1; s <= small.n; ++s) {
                              WeylElement lhs = embed(act_gen(uK(Side::Right, s), x), big);
                              WeylElement rhs = act_gen(uK(Side::Right, s + 1), embed(x, big));
                              if (lhs != rhs) return mismatch(lhs, rhs, "embed equivariance (K right)");
                            }
                          }
                      return "";
                    }});

  return checks;
}

std::vector<Check> suite_thmA(const SuiteParams& p) {
  std::vector<Check> checks;
  AlgebraSpec spec = filtered(p.m, p.n);
  for (int i = 1; i <= p.m; ++i)
    for (int j = 1; j <= p.m; ++j)
      for (int k = 1; k <= p.n; ++k)
        for (int l = 1; l <= p.n; ++l) {
          std::ostringstream id;
          id << "commute-L" << i << j << "-R" << k << l;
          checks.push_back({id.str(), [i, j, k, l, spec]() -> std::string {
                              WeylElement L = polarization(i, j, PolKind::L, spec);
                              WeylElement R = polarization(k, l, PolKind::R, spec);
                              WeylElement comm = multiply(L, R) - multiply(R, L);
                              if (!comm.isZero()) return "nonzero commutator: " + comm.str();
                              return "";
                            }});
        }
  return checks;
}

std::vector<Check> suite_polarization_invariance(const SuiteParams& p) {
  std::vector<Check> checks;
  AlgebraSpec gspec = graded(p.m, p.n);
  checks.push_back({"ltilde-eps-invariance", [p, gspec]() -> std::string {
                      for (int i = 1; i <= p.m; ++i)
                        for (int j = 1; j <= p.m; ++j) {
                          WeylElement X = polarization(i, j, PolKind::LtildeGr, gspec);
                          for (int s = 1; s <= p.n - 1; ++s) {
                            if (!act_gen(uE(Side::Right, s), X).isZero())
                              return "E does not annihilate Ltilde(" + std::to_string(i) + "," +
                                     std::to_string(j) + ")";
                            if (!act_gen(uF(Side::Right, s), X).isZero())
                              return "F does not annihilate Ltilde(" + std::to_string(i) + "," +
                                     std::to_string(j) + ")";
                          }
                          for (int s = 1; s <= p.n; ++s)
                            if (act_gen(uK(Side::Right, s), X) != X)
                              return "K does not fix Ltilde(" + std::to_string(i) + "," +
                                     std::to_string(j) + ")";
                        }
                      return "";
                    }});
  checks.push_back({"orbit-relation-E", [p]() -> std::string {
                      AlgebraSpec spec = filtered(p.m, p.n);
                      for (int i = 1; i <= p.n; ++i)
                        for (int j = 1; j <= p.n - 1; ++j) {
                          if (i == j) continue;
                          WeylElement lhs =
                              act_gen(uE(Side::Right, j), polarization(i, j + 1, PolKind::R, spec));
                          WeylElement rhs = polarization(i, j, PolKind::R, spec);
                          if (lhs != rhs) return mismatch(lhs, rhs, "E orbit relation");
                        }
                      return "";
                    }});
  checks.push_back({"orbit-relation-F", [p]() -> std::string {
                      AlgebraSpec spec = filtered(p.m, p.n);
                      for (int i = 1; i <= p.n - 1; ++i)
                        for (int j = 1; j <= p.n; ++j) {
                          if (j == i) continue;
                          WeylElement lhs =
                              act_gen(uF(Side::Right, i), polarization(i + 1, j, PolKind::R, spec));
                          WeylElement rhs = polarization(i, j, PolKind::R, spec).scaled(-RatQ::q());
                          if (lhs != rhs) return mismatch(lhs, rhs, "F orbit relation");
                        }
                      return "";
                    }});
  checks.push_back({"orbit-relation-F-diagonal", [p]() -> std::string {
                      AlgebraSpec spec = filtered(p.m, p.n);
                      for (int i = 1; i <= p.n - 1; ++i) {
                        WeylElement lhs =
                            act_gen(uF(Side::Right, i), polarization(i + 1, i, PolKind::R, spec));
                        WeylElement rhs =
                            polarization(i, i, PolKind::R, spec).scaled(-RatQ::q()) +
                            polarization(i + 1, i + 1, PolKind::R, spec).scaled(RatQ::qpow(-1));
                        if (lhs != rhs) return mismatch(lhs, rhs, "diagonal F orbit relation");
                      }
                      return "";
                    }});
  return checks;
}

std::vector<Check> suite_cartan_formulas(const SuiteParams& p) {
  std::vector<Check> checks;
  AlgebraSpec spec = filtered(p.m, p.n);
  for (int a = 1; a <= p.m; ++a) {
    checks.push_back({"left-cartan-a" + std::to_string(a), [p, spec, a]() -> std::string {
                        WeylElement L = cartan_image(p.m - a + 1, Side::Left, p.m, p.n);
                        WeightVector lam = lambda_corner(a, p.m);
                        for (long d = 0; d <= p.max_deg; ++d)
                          for (const PBWMonomial& mono : p_basis(spec, d)) {
                            WeylElement f = WeylElement::monomial(spec, mono);
                            WeylElement lhs = act(L, f);
                            WeylElement rhs = act_Klambda(lam, Side::Left, f);
                            if (lhs != rhs) return mismatch(lhs, rhs, "left Cartan formula");
                          }
                        return "";
                      }});
  }
  for (int b = 1; b <= p.n; ++b) {
    checks.push_back({"right-cartan-b" + std::to_string(b), [p, spec, b]() -> std::string {
                        WeylElement R = cartan_image(p.n - b + 1, Side::Right, p.m, p.n);
                        WeightVector lam = lambda_corner(b, p.n);
                        for (long d = 0; d <= p.max_deg; ++d)
                          for (const PBWMonomial& mono : p_basis(spec, d)) {
                            WeylElement f = WeylElement::monomial(spec, mono);
                            WeylElement lhs = act(R, f);
                            WeylElement rhs = act_Klambda(lam, Side::Right, f);
                            if (lhs != rhs) return mismatch(lhs, rhs, "right Cartan formula");
                          }
                        return "";
                      }});
  }
  return checks;
}

std::vector<Check> suite_scalar_sum(const SuiteParams& p) {
  std::vector<Check> checks;
  AlgebraSpec spec = filtered(p.m, p.n);
  auto S = std::make_shared<WeylElement>(spec);
  RatQ q2m1 = RatQ::qpow(2) - RatQ(1);
  for (long r = 0; r <= p.m; ++r) *S = *S + D_r(r, p.m, p.n).scaled(q2m1.pow(r));
  for (long d = 0; d <= p.max_deg; ++d) {
    // Chunk the monomial basis so the check runner can balance the work.
    long total = static_cast<long>(p_basis(spec, d).size());
    long chunk = std::max<long>(1, (total + 7) / 8);
    for (long lo = 0; lo < total; lo += chunk) {
      long hi = std::min(total, lo + chunk);
      std::string id = "scalar-sum-deg" + std::to_string(d);
      if (total > chunk) id += "-part" + std::to_string(lo / chunk);
      checks.push_back({id, [spec, d, lo, hi, S]() -> std::string {
                          std::vector<PBWMonomial> basis = p_basis(spec, d);
                          for (long i = lo; i < hi; ++i) {
                            WeylElement f = WeylElement::monomial(spec, basis[i]);
                            WeylElement lhs = act(*S, f);
                            WeylElement rhs = f.scaled(RatQ::qpow(2 * d));
                            if (lhs != rhs) return mismatch(lhs, rhs, "scalar sum");
                          }
                          return "";
                        }});
    }
  }
  return checks;
}

std::vector<Check> suite_capelli(const SuiteParams& p) {
  std::vector<Check> checks;
  for (long r = 1; r <= 2; ++r)
    for (long d = 0; d <= p.max_deg; ++d) {
      std::ostringstream id;
      id << "annihilator-r" << r << "-deg" << d;
      checks.push_back({id.str(), [r, d]() -> std::string {
                          QMatrix M = action_matrix(D_opr(r, 2, 2), d);
                          std::vector<RatQ> roots;
                          for (const Partition& lam : partitions_into(d, 2))
                            roots.push_back(phi_eigen(lam, r, 2));
                          QMatrix res = eval_matrix_poly(M, roots);
                          if (!res.isZero()) return "annihilator polynomial is nonzero";
                          return "";
                        }});
    }
  return checks;
}

std::vector<Check> suite_schur_identity(const SuiteParams& p) {
  std::vector<Check> checks;
  checks.push_back({"summation-identity", [p]() -> std::string {
                      for (long w = 0; w <= 4; ++w)
                        for (const Partition& mu : partitions_into(w, p.n))
                          if (!schur_sum_identity_check(mu, p.n))
                            return "identity fails at mu = " + mu.str();
                      return "";
                    }});
  checks.push_back({"phi-power-sum", [p]() -> std::string {
                      RatQ q2m1 = RatQ::qpow(2) - RatQ(1);
                      for (long w = 0; w <= 4; ++w)
                        for (const Partition& lam : partitions_into(w, p.n)) {
                          RatQ s;
                          for (long r = 0; r <= p.n; ++r) s += q2m1.pow(r) * phi_eigen(lam, r, p.n);
                          if (s != RatQ::qpow(2 * w))
                            return "power sum fails at lambda = " + lam.str() + ": " + s.str();
                        }
                      return "";
                    }});
  checks.push_back({"cauchy-dimensions", [p]() -> std::string {
                      for (int mm = 1; mm <= 4; ++mm)
                        for (int nn = 1; nn <= 4; ++nn)
                          for (long r = 0; r <= 5; ++r) {
                            long sum = 0;
                            for (const Partition& lam : partitions_into(r, std::min(mm, nn)))
                              sum += weyl_dim(lam, mm) * weyl_dim(lam, nn);
                            long want = binomial(static_cast<long>(mm) * nn + r - 1, r);
                            if (sum != want)
                              return "Cauchy dimension mismatch at (" + std::to_string(mm) + "," +
                                     std::to_string(nn) + "," + std::to_string(r) + ")";
                          }
                      return "";
                    }});
  return checks;
}

std::vector<Check> suite_gamma_homomorphism(const SuiteParams& p) {
  std::vector<Check> checks;
  const int k = p.k.value_or(p.m), l = p.l.value_or(p.n), n = p.n;
  AlgebraSpec kl = filtered(k, l);
  checks.push_back({"gamma-left-inverse", [n]() -> std::string {
                      AlgebraSpec nn = filtered(n, n);
                      for (long d = 0; d <= 3; ++d)
                        for (const PBWMonomial& mono : p_basis(nn, d)) {
                          WeylElement u = WeylElement::monomial(nn, mono);
                          TensorElement g = gamma_n(u);
                          WeylElement back(nn);
                          for (const auto& [key, c] : g.terms()) {
                            RatQ eps = counit(WeylElement::monomial(nn, key.second));
                            if (!eps.isZero()) back.add(key.first, c * eps);
                          }
                          if (back != u) return mismatch(back, u, "gamma left inverse");
                        }
                      return "";
                    }});
  checks.push_back({"gamma-of-generators", [k, l, n]() -> std::string {
                      AlgebraSpec kl2 = filtered(k, l);
                      AlgebraSpec gn = graded(n, n);
                      for (int i = 1; i <= k; ++i)
                        for (int j = 1; j <= l; ++j) {
                          WeylElement got = gamma_kln(WeylElement::generator(kl2, tGen(i, j)), n);
                          WeylElement want(gn);
                          for (int r = 1; r <= n; ++r)
                            want = want + multiply(WeylElement::generator(gn, tGen(i + n - k, r)),
                                                   WeylElement::generator(gn, dGen(j + n - l, r)));
                          if (got != want) return mismatch(got, want, "gamma of generator");
                        }
                      return "";
                    }});
  checks.push_back({"gamma-image-invariance", [k, l, n, kl]() -> std::string {
                      for (long d = 0; d <= 2; ++d)
                        for (const PBWMonomial& mono : p_basis(kl, d)) {
                          WeylElement g = gamma_kln(WeylElement::monomial(kl, mono), n);
                          for (int s = 1; s <= n - 1; ++s) {
                            if (!act_gen(uE(Side::Right, s), g).isZero())
                              return "gamma image is not E-invariant";
                            if (!act_gen(uF(Side::Right, s), g).isZero())
                              return "gamma image is not F-invariant";
                          }
                          for (int s = 1; s <= n; ++s)
                            if (act_gen(uK(Side::Right, s), g) != g)
                              return "gamma image is not K-fixed";
                        }
                      return "";
                    }});
  checks.push_back({"star-units", [kl, n]() -> std::string {
                      WeylElement one = WeylElement::one(kl);
                      for (long d = 0; d <= 2; ++d)
                        for (const PBWMonomial& mono : p_basis(kl, d)) {
                          WeylElement v = WeylElement::monomial(kl, mono);
                          if (star(one, v, n) != v) return "1 * v != v";
                          if (star(v, one, n) != v) return "v * 1 != v";
                        }
                      return "";
                    }});
  checks.push_back({"star-degree-additivity", [kl, n]() -> std::string {
                      for (long d1 = 1; d1 <= 2; ++d1)
                        for (long d2 = 1; d2 <= 2; ++d2)
                          for (const PBWMonomial& a : p_basis(kl, d1))
                            for (const PBWMonomial& b : p_basis(kl, d2)) {
                              WeylElement s = star(WeylElement::monomial(kl, a),
                                                   WeylElement::monomial(kl, b), n);
                              for (const auto& [mono, c] : s.terms())
                                if (mono.tDegree() != d1 + d2)
                                  return "star product is not degree additive";
                            }
                      return "";
                    }});
  checks.push_back({"gamma-star-homomorphism", [kl, n]() -> std::string {
                      for (long d1 = 0; d1 <= 2; ++d1)
                        for (long d2 = 0; d2 <= 2; ++d2)
                          for (const PBWMonomial& a : p_basis(kl, d1))
                            for (const PBWMonomial& b : p_basis(kl, d2)) {
                              WeylElement u = WeylElement::monomial(kl, a);
                              WeylElement v = WeylElement::monomial(kl, b);
                              WeylElement lhs = gamma_kln(star(u, v, n), n);
                              WeylElement rhs = multiply(gamma_kln(u, n), gamma_kln(v, n));
                              if (lhs != rhs)
                                return mismatch(lhs, rhs, "gamma is not multiplicative for star");
                            }
                      return "";
                    }});
  checks.push_back({"p-map-filtration-defect", [p]() -> std::string {
                      Rng rng(checkSeed(p.seed, 20));
                      const int n = p.n;
                      AlgebraSpec gr = graded(n, n), fl = filtered(n, n);
                      for (int t = 0; t < 20; ++t) {
                        auto pick = [&](long deg) {
                          auto basis = p_basis(fl, deg);
                          return basis[rng.below(static_cast<long>(basis.size()))];
                        };
                        long r = 1 + rng.below(2), s = 1 + rng.below(2);
                        long r2 = 1 + rng.below(2), s2 = 1 + rng.below(2);
                        PBWMonomial a = pick(r), b = pick(r2);
                        PBWMonomial ad = pick(s), bd = pick(s2);
                        PBWMonomial ga = PBWMonomial::unit(n, n), gb = PBWMonomial::unit(n, n);
                        ga.tExp = a.tExp;
                        ga.dExp = ad.tExp;  // reuse t tables as d tables
                        gb.tExp = b.tExp;
                        gb.dExp = bd.tExp;
                        WeylElement gradedProd = multiply(WeylElement::monomial(gr, ga),
                                                          WeylElement::monomial(gr, gb));
                        WeylElement viaGraded(fl);
                        for (const auto& [mono, c] : gradedProd.terms()) viaGraded.add(mono, c);
                        WeylElement direct = multiply(WeylElement::monomial(fl, ga),
                                                      WeylElement::monomial(fl, gb));
                        WeylElement diff = direct - viaGraded;
                        long u = r + r2, u2 = s + s2;
                        for (const auto& [mono, c] : diff.terms()) {
                          long dt = u - mono.tDegree(), dd = u2 - mono.dDegree();
                          if (dt <= 0 || dt != dd) return "filtration defect has wrong bidegree";
                        }
                      }
                      return "";
                    }});
  return checks;
}

std::vector<Check> suite_rtt_pairing(const SuiteParams& p) {
  std::vector<Check> checks;
  const int n = p.n;
  checks.push_back({"pairing-base-cases", [n]() -> std::string {
                      for (int i = 1; i <= n; ++i)
                        for (int j = 1; j <= n; ++j) {
                          RatQ diag = rpair_words({dGen(i, i)}, {dGen(j, j)}, n);
                          RatQ want = i == j ? RatQ::q() : RatQ(1);
                          if (diag != want) return "diagonal base case fails";
                          if (i < j) {
                            RatQ v = rpair_words({dGen(i, j)}, {dGen(j, i)}, n);
                            if (v != RatQ::qMinusQinv()) return "off-diagonal base case fails";
                          }
                        }
                      return "";
                    }});
  checks.push_back({"recursion-order-independence", [p, n]() -> std::string {
                      Rng rng(checkSeed(p.seed, 30));
                      for (int t = 0; t < 200; ++t) {
                        int lf = 1 + static_cast<int>(rng.below(3));
                        int lg = 1 + static_cast<int>(rng.below(3));
                        std::vector<GenRef> f, g;
                        for (int i = 0; i < lf; ++i)
                          f.push_back(dGen(static_cast<int>(rng.below(n)) + 1,
                                           static_cast<int>(rng.below(n)) + 1));
                        for (int i = 0; i < lg; ++i)
                          g.push_back(dGen(static_cast<int>(rng.below(n)) + 1,
                                           static_cast<int>(rng.below(n)) + 1));
                        RatQ a = rpair_words(f, g, n, PairOrder::LeftFirst);
                        RatQ b = rpair_words(f, g, n, PairOrder::RightFirst);
                        if (a != b) return "recursion orders disagree on trial " + std::to_string(t);
                      }
                      return "";
                    }});
  checks.push_back({"rtt-relation", [n]() -> std::string {
                      AlgebraSpec spec = filtered(n, n);
                      for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b)
                          for (int c = 1; c <= n; ++c)
                            for (int d = 1; d <= n; ++d) {
                              WeylElement lhs(spec), rhs(spec);
                              for (int k = 1; k <= n; ++k)
                                for (int l = 1; l <= n; ++l) {
                                  RatQ w1 = rpair_words({dGen(k, b)}, {dGen(l, d)}, n);
                                  if (!w1.isZero()) {
                                    WeylElement prod =
                                        normal_form({dGen(c, l), dGen(a, k)}, spec);
                                    lhs = lhs + prod.scaled(w1);
                                  }
                                  RatQ w2 = rpair_words({dGen(a, k)}, {dGen(c, l)}, n);
                                  if (!w2.isZero()) {
                                    WeylElement prod =
                                        normal_form({dGen(k, b), dGen(l, d)}, spec);
                                    rhs = rhs + prod.scaled(w2);
                                  }
                                }
                              if (lhs != rhs) return mismatch(lhs, rhs, "RTT relation");
                            }
                      return "";
                    }});
  return checks;
}

std::vector<Check> suite_thmC(const SuiteParams& p) {
  std::vector<Check> checks;
  const int k = p.k.value_or(p.m), l = p.l.value_or(p.n), n = p.n;
  int maxR = std::min(p.max_deg, 2);
  for (long r = 0; r <= maxR; ++r) {
    std::ostringstream id;
    id << "invariant-dimension-r" << r;
    checks.push_back({id.str(), [k, l, n, r]() -> std::string {
                        long got = static_cast<long>(invariant_basis(k, l, n, r).size());
                        long want = 0;
                        int d = std::min({k, l, n});
                        for (const Partition& lam : partitions_into(r, d))
                          want += weyl_dim(lam, k) * weyl_dim(lam, l);
                        if (got != want)
                          return "invariant dimension " + std::to_string(got) + " != " +
                                 std::to_string(want);
                        return "";
                      }});
    std::ostringstream id2;
    id2 << "generation-rank-r" << r;
    checks.push_back({id2.str(), [k, l, n, r]() -> std::string {
                        AlgebraSpec gn = graded(n, n);
                        // Span of degree-r products of the corner polarization
                        // operators, as rows over the component basis.
                        std::vector<WeylElement> products;
                        if (r == 0) {
                          products.push_back(WeylElement::one(gn));
                        } else {
                          std::vector<WeylElement> gens;
                          for (int i = 1; i <= k; ++i)
                            for (int j = 1; j <= l; ++j)
                              gens.push_back(polarization(i, j, PolKind::LtildeGr, gn));
                          std::vector<size_t> idx(r, 0);
                          while (true) {
                            WeylElement prod = gens[idx[0]];
                            for (long t = 1; t < r; ++t) prod = multiply(prod, gens[idx[t]]);
                            products.push_back(graded_component(prod, r, r));
                            size_t pos = 0;
                            while (pos < idx.size() && idx[pos] == gens.size() - 1) idx[pos++] = 0;
                            if (pos == idx.size()) break;
                            ++idx[pos];
                          }
                        }
                        std::map<PBWMonomial, int> cols;
                        for (const WeylElement& x : products)
                          for (const auto& [mono, c] : x.terms())
                            cols.emplace(mono, 0);
                        int ci = 0;
                        for (auto& [mono, pos] : cols) pos = ci++;
                        QMatrix M(static_cast<int>(products.size()), ci);
                        for (size_t i = 0; i < products.size(); ++i)
                          for (const auto& [mono, c] : products[i].terms())
                            M.at(static_cast<int>(i), cols[mono]) = c;
                        long got = ci == 0 ? 0 : rank(M);
                        long want = 0;
                        int d = std::min({k, l, n});
                        for (const Partition& lam : partitions_into(r, d))
                          want += weyl_dim(lam, k) * weyl_dim(lam, l);
                        if (got != want)
                          return "span of products has rank " + std::to_string(got) + " != " +
                                 std::to_string(want);
                        return "";
                      }});
  }
  return checks;
}

std::vector<Check> suite_eta_symmetry(const SuiteParams& p) {
  std::vector<Check> checks;
  AlgebraSpec spec = filtered(p.m, p.n);
  checks.push_back({"eta-involution", [p, spec]() -> std::string {
                      Rng rng(checkSeed(p.seed, 40));
                      for (int t = 0; t < 40; ++t) {
                        WeylElement x = random_element(rng, spec, 3, 3);
                        if (transpose(transpose(x)) != x) return "transpose is not an involution";
                      }
                      return "";
                    }});
  checks.push_back({"eta-multiplicative", [p, spec]() -> std::string {
                      Rng rng(checkSeed(p.seed, 41));
                      for (int t = 0; t < 40; ++t) {
                        WeylElement a = random_element(rng, spec, 2, 3);
                        WeylElement b = random_element(rng, spec, 2, 3);
                        if (transpose(multiply(a, b)) != multiply(transpose(a), transpose(b)))
                          return "transpose is not multiplicative";
                      }
                      return "";
                    }});
  checks.push_back({"eta-intertwines-sides", [p, spec]() -> std::string {
                      Rng rng(checkSeed(p.seed, 42));
                      std::vector<WeylElement> ds;
                      for (int i = 1; i <= p.m; ++i)
                        for (int j = 1; j <= p.n; ++j) {
                          ds.push_back(WeylElement::generator(spec, tGen(i, j)));
                          ds.push_back(WeylElement::generator(spec, dGen(i, j)));
                        }
                      for (int t = 0; t < 10; ++t) ds.push_back(random_element(rng, spec, 2, 2));
                      for (const WeylElement& D : ds) {
                        for (int s = 1; s <= p.m - 1; ++s)
                          for (UKind kind : {UKind::E, UKind::F}) {
                            UGen g{Side::Left, kind, s};
                            UGen g2{Side::Right, kind, s};
                            if (transpose(act_gen(g, D)) != act_gen(g2, transpose(D)))
                              return "eta does not intertwine the left action";
                          }
                        for (int s = 1; s <= p.n - 1; ++s)
                          for (UKind kind : {UKind::E, UKind::F}) {
                            UGen g{Side::Right, kind, s};
                            UGen g2{Side::Left, kind, s};
                            if (transpose(act_gen(g, D)) != act_gen(g2, transpose(D)))
                              return "eta does not intertwine the right action";
                          }
                        for (int s = 1; s <= p.m; ++s)
                          if (transpose(act_gen(uK(Side::Left, s), D)) !=
                              act_gen(uK(Side::Right, s), transpose(D)))
                            return "eta does not intertwine the left Cartan action";
                      }
                      return "";
                    }});
  checks.push_back({"determinantal-route-equality", [p]() -> std::string {
                      for (long r = 0; r <= std::min<long>(3, p.max_deg); ++r) {
                        WeylElement a = D_kr(p.n, r, p.m, p.n, false);
                        WeylElement b = D_kr(p.m, r, p.m, p.n, true);
                        if (a != b) return "column and row routes disagree at r = " + std::to_string(r);
                      }
                      return "";
                    }});
  return checks;
}

struct SuiteDef {
  std::string name;
  std::string description;
  std::function<std::vector<Check>(const SuiteParams&)> build;
  std::function<void(const SuiteParams&)> validate;
};

void needRange(int v, int lo, int hi, const char* what) {
  if (v < lo || v > hi)
    throw UsageError(std::string(what) + " out of range [" + std::to_string(lo) + "," +
                     std::to_string(hi) + "]");
}

void validateCommon(const SuiteParams& p) {
  needRange(p.m, 1, 4, "m");
  needRange(p.n, 1, 4, "n");
  needRange(p.max_deg, 0, 8, "max-deg");
}

void validateKL(const SuiteParams& p) {
  validateCommon(p);
  int k = p.k.value_or(p.m), l = p.l.value_or(p.n);
  needRange(k, 1, p.n, "k");
  needRange(l, 1, p.n, "l");
}

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {"pbw-confluence", "normal forms agree under different reduction strategies and orderings",
       suite_pbw_confluence, validateCommon},
      {"pbw-dimension", "graded dimensions of the polynomial part match binomial counts",
       suite_pbw_dimension, validateCommon},
      {"action-laws", "module action laws, reduction closed forms, faithfulness witness",
       suite_action_laws, validateCommon},
      {"thmA-commutation", "left and right polarization operators commute", suite_thmA,
       validateCommon},
      {"polarization-invariance", "corner polarizations are right-invariant; orbit relations",
       suite_polarization_invariance, validateCommon},
      {"cartan-formulas", "determinantal operator sums realize the Cartan actions",
       suite_cartan_formulas, validateCommon},
      {"scalar-sum", "sum of determinantal operators acts by q^(2 deg)", suite_scalar_sum,
       validateCommon},
      {"capelli-annihilator", "eigenvalue polynomial annihilates the action matrix (2x2)",
       suite_capelli,
       [](const SuiteParams& p) {
         validateCommon(p);
         if (p.m != 2 || p.n != 2) throw UsageError("capelli-annihilator requires m = n = 2");
       }},
      {"schur-identity", "q-factorial Schur summation identity and eigenvalue power sums",
       suite_schur_identity, validateCommon},
      {"gamma-homomorphism", "Gamma map: left inverse, invariance, star multiplicativity",
       suite_gamma_homomorphism, validateKL},
      {"thmC-generation", "invariant dimensions and generation by corner polarizations",
       suite_thmC, validateKL},
      {"eta-symmetry", "index transpose is a multiplicative bijection intertwining the sides",
       suite_eta_symmetry, validateCommon},
      {"rtt-pairing", "R-matrix pairing base cases, recursion independence, RTT relation",
       suite_rtt_pairing, validateCommon},
  };
  return defs;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& d : registry()) names.push_back(d.name);
  return names;
}

std::string suite_description(const std::string& name) {
  for (const auto& d : registry())
    if (d.name == name) return d.description;
  throw UsageError("unknown suite: " + name);
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  for (const auto& d : registry()) {
    if (d.name != name) continue;
    d.validate(params);
    auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = name;
    report.params = params;
    report.checks = run_checks(d.build(params));
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw UsageError("unknown suite: " + name);
}

std::string report_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " (m=" << r.params.m << ", n=" << r.params.n;
  if (r.params.k) os << ", k=" << *r.params.k;
  if (r.params.l) os << ", l=" << *r.params.l;
  os << ", max_deg=" << r.params.max_deg << ", seed=" << r.params.seed << ")\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id;
    if (!c.pass) os << "  -- " << c.witness;
    os << "\n";
  }
  os << (r.allPass() ? "all checks passed" : "some checks FAILED") << " in " << r.elapsed_ms
     << " ms\n";
  return os.str();
}

std::string report_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["params"] = nlohmann::ordered_json::object();
  j["params"]["m"] = r.params.m;
  j["params"]["n"] = r.params.n;
  if (r.params.k) j["params"]["k"] = *r.params.k;
  else j["params"]["k"] = nullptr;
  if (r.params.l) j["params"]["l"] = *r.params.l;
  else j["params"]["l"] = nullptr;
  j["params"]["max_deg"] = r.params.max_deg;
  j["params"]["seed"] = r.params.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["status"] = c.pass ? "pass" : "fail";
    if (c.witness.empty()) jc["witness"] = nullptr;
    else jc["witness"] = c.witness;
    j["checks"].push_back(jc);
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

int exit_code_for(const SuiteReport& r) { return r.allPass() ? 0 : 1; }

}  // namespace qweyl
