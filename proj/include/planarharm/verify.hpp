#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "planarharm/calogero.hpp"
#include "planarharm/format.hpp"
#include "planarharm/pbasis.hpp"
#include "planarharm/special.hpp"

namespace planarharm {

/// Deterministic source of rational test data: mt19937_64, numerator and
/// denominator each uniform on [1, 40]. The reduction is done by hand rather
/// than through std::uniform_int_distribution so streams agree across
/// standard libraries.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : gen_(seed) {}

  int integer(int lo, int hi) { return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational positive() {
    Rational r(integer(1, 40), integer(1, 40));
    r.canonicalize();
    return r;
  }
  Rational signed_value() { return integer(0, 1) ? positive() : Rational(-positive()); }

 private:
  std::mt19937_64 gen_;
};

struct ParamSample {
  Rational k;
  Rational k1;
};

/// `count` random (k, k1) pairs with k, k1 > 0. Positive parameters keep every
/// lower hypergeometric parameter and every Pochhammer denominator off the
/// non-positive integers, so no resampling is needed.
inline std::vector<ParamSample> sample_parameters(std::uint64_t seed, int count) {
  RationalSampler rng(seed);
  std::vector<ParamSample> out;
  for (int i = 0; i < count; ++i) {
    Rational k = rng.positive();
    Rational k1 = rng.positive();
    out.push_back({k, k1});
  }
  return out;
}

struct VerifyConfig {
  std::vector<int> Ns{3, 4};
  int max_n = 11;
  std::vector<ParamSample> samples;
  std::vector<Rational> omegas;
  std::uint64_t seed = 0;
  bool corrupt = false;  // negative control: perturbs one harmonic coefficient
  std::vector<std::string> only;

  int norm_max_n() const { return std::min(max_n, 9); }
  int recurrence_max_n() const { return std::min(max_n, 4); }
  int pbasis_max_n() const { return std::min(max_n, 6); }
  int tpa_max() const { return std::min(max_n, 5); }
  int calogero_max_m() const { return std::min(max_n, 7); }
};

inline VerifyConfig default_config(std::uint64_t seed, int samples) {
  VerifyConfig c;
  c.seed = seed;
  c.samples = sample_parameters(seed, samples);
  RationalSampler rng(seed ^ 0x9e3779b97f4a7c15ULL);
  c.omegas = {rng.positive(), rng.positive()};
  return c;
}

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::optional<nlohmann::ordered_json> counterexample;

  bool passed() const { return failures == 0; }
};

/// Counts checks and keeps the first failure.
class SuiteRecorder {
 public:
  explicit SuiteRecorder(std::string name) { r_.name = std::move(name); }

  bool check(bool ok, const std::function<nlohmann::ordered_json()>& detail) {
    ++r_.checks;
    if (!ok) {
      ++r_.failures;
      if (!r_.counterexample) r_.counterexample = detail();
    }
    return ok;
  }

  /// Runs `body`; an exception counts as one failed check.
  void guarded(const std::function<void()>& body, const std::function<nlohmann::ordered_json()>& where) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, [&] {
        auto j = where();
        j["exception"] = e.what();
        return j;
      });
    }
  }

  SuiteResult result() && { return std::move(r_); }

 private:
  SuiteResult r_;
};

namespace detail {

inline nlohmann::ordered_json where(const Params& p) {
  return {{"N", p.N()}, {"k", to_string(p.k())}, {"k1", to_string(p.k1())}};
}

inline nlohmann::ordered_json where(const Params& p, const std::string& what) {
  auto j = where(p);
  j["check"] = what;
  return j;
}

inline std::vector<Params> parameter_grid(const VerifyConfig& c) {
  std::vector<Params> out;
  for (int N : c.Ns)
    for (const auto& s : c.samples) out.emplace_back(N, s.k, s.k1);
  return out;
}

inline std::vector<HarmonicLabel> labels_up_to(int max_n) {
  std::vector<HarmonicLabel> out;
  for (int n = 0; n <= max_n; ++n)
    for (int e = 0; e <= 1; ++e) out.push_back({n, e});
  return out;
}

/// Random homogeneous polynomial with a few terms.
inline MultiPoly random_homogeneous(RationalSampler& rng, std::size_t nvars, int degree, int terms) {
  MultiPoly f(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars);
    int left = degree;
    for (std::size_t s = 0; s + 1 < nvars; ++s) {
      const int e = rng.integer(0, left);
      m.set(s, e);
      left -= e;
    }
    m.set(nvars - 1, left);
    f.add_term(m, rng.signed_value());
  }
  return f;
}

inline YPoly random_ypoly(RationalSampler& rng, std::size_t nvars, int degree, int terms) {
  return relabel<YVars>(random_homogeneous(rng, nvars, degree, terms));
}

/// Compositions of length n with |alpha| <= max_total.
inline std::vector<Composition> compositions(std::size_t n, int max_total) {
  std::vector<Composition> out;
  Composition cur;
  cur.parts.assign(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t slot, int left) {
    if (slot == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.parts[slot] = v;
      rec(slot + 1, left - v);
    }
    cur.parts[slot] = 0;
  };
  rec(0, max_total);
  return out;
}

inline MultiPoly ordinary_laplacian(const MultiPoly& f) {
  MultiPoly out(f.nvars());
  for (std::size_t i = 1; i <= f.nvars(); ++i) out += f.derivative(i).derivative(i);
  return out;
}

}  // namespace detail

// ---- suites ---------------------------------------------------------------

inline SuiteResult suite_harmonicity(const VerifyConfig& c) {
  SuiteRecorder rec("harmonicity");
  bool corrupted = false;
  for (const Params& p : detail::parameter_grid(c)) {
    HarmonicCache cache(p);
    for (const auto& l : detail::labels_up_to(c.max_n)) {
      rec.guarded(
          [&] {
            MultiPoly h = cache.get(l).poly;
            if (c.corrupt && !corrupted && l.n == 2 && l.eps == 0) {
              h.add_term(Monomial(h.nvars()).with(0, 2), 1);
              corrupted = true;
            }
            auto ce = [&](const std::string& what) {
              auto j = detail::where(p, what);
              j["label"] = to_string(l);
              j["poly"] = to_json(h);
              return j;
            };
            rec.check(laplacian_B(h, p).is_zero(), [&] { return ce("Delta_B h = 0"); });
            for (int i = 3; i <= p.N(); ++i)
              rec.check(dunkl_T(i, h, p).is_zero(), [&] { return ce("T_" + std::to_string(i) + " h = 0"); });
            if (sigma12_sign(l))
              rec.check(apply_reflection(Reflection::transposition(1, 2), h) == h * Rational(*sigma12_sign(l)),
                        [&] { return ce("sigma_12 h = +-h"); });
          },
          [&] {
            auto j = detail::where(p);
            j["label"] = to_string(l);
            return j;
          });
    }
  }
  return std::move(rec).result();
}

inline SuiteResult suite_ladder(const VerifyConfig& c) {
  SuiteRecorder rec("ladder");
  for (const Params& p : detail::parameter_grid(c)) {
    HarmonicCache cache(p);
    for (const auto& l : detail::labels_up_to(c.max_n)) {
      auto ce = [&](const std::string& what) {
        auto j = detail::where(p, what);
        j["label"] = to_string(l);
        return j;
      };
      rec.guarded(
          [&] {
            const HarmonicPoly& h = cache.get(l);
            MultiPoly images[2];
            for (int i = 1; i <= 2; ++i) {
              const LadderStep st = ladder_apply(i, l, p);
              images[i - 1] = dunkl_T(i, h.poly, p);
              const MultiPoly rhs =
                  st.target ? cache.get(*st.target).poly * st.scalar : MultiPoly(static_cast<std::size_t>(p.N()));
              rec.check(images[i - 1] == rhs, [&] { return ce("T_" + std::to_string(i) + " ladder row"); });

              // Coefficient-space route.
              if (!h.expansion) continue;
              const auto which = ladder_case(i, *h.expansion);
              if (!which) continue;
              const BasisExpansion& e = *h.expansion;
              const auto image = coefficient_ladder(*which, e.coeffs, e.order, p);
              const bool lowers = *which == LadderCase::T1PhiToPsi || *which == LadderCase::T2PsiToX1X2Phi;
              BasisExpansion out;
              out.order = lowers ? e.order - 1 : e.order;
              out.kind = e.kind == BasisKind::Phi ? BasisKind::Psi : BasisKind::Phi;
              out.x1x2 = *which == LadderCase::T2PsiToX1X2Phi;
              out.coeffs = image;
              if (out.order >= 0) {
                auto basis = cache.basis(e.order);
                rec.check(out.materialize(*basis) == images[i - 1],
                          [&] { return ce("T_" + std::to_string(i) + " coefficient map"); });
              }
              if (st.target) {
                const HarmonicPoly& t = cache.get(*st.target);
                if (t.expansion && t.expansion->kind == out.kind && t.expansion->x1x2 == out.x1x2 &&
                    t.expansion->order == out.order) {
                  std::vector<Rational> scaled = t.expansion->coeffs;
                  for (auto& v : scaled) v *= st.scalar;
                  rec.check(scaled == out.coeffs,
                            [&] { return ce("T_" + std::to_string(i) + " coefficient map, coordinates"); });
                }
              }
            }
            rec.check(dunkl_T(2, images[1], p) == -dunkl_T(1, images[0], p), [&] { return ce("T_2^2 h = -T_1^2 h"); });

            // Vanishing odd slots when T_1 takes h_{4n+1,0}, h_{4n+3,0} to the phi family.
            if (l.eps == 0 && l.n % 2 == 1) {
              const auto& cf = h.expansion->coeffs;
              const int q = l.quarter();
              auto b = [&](int j) { return cf[2 * j]; };
              auto cc = [&](int j) { return cf[2 * j - 1]; };
              const int top = l.residue() == 3 ? q + 1 : q;
              for (int j = 1; j <= top; ++j) {
                Rational d = 2 * (p.k2() + q + j) * (l.residue() == 3 ? cc(j) : b(j)) - (2 * j - 1) * b(j - 1);
                if (l.residue() == 1) d -= 2 * (p.k2() - p.k() + q) * cc(j);
                rec.check(d == 0, [&] { return ce("d_" + std::to_string(j) + " = 0"); });
              }
            }
          },
          [&] { return ce("exception"); });
    }
  }
  return std::move(rec).result();
}

inline SuiteResult suite_recurrences(const VerifyConfig& c) {
  SuiteRecorder rec("recurrences");
  const int M = c.recurrence_max_n();
  for (const Params& p : detail::parameter_grid(c)) {
    rec.guarded(
        [&] {
          const PlanarBasis basis(p, M);
          const auto N = static_cast<std::size_t>(p.N());
          const MultiPoly x1x2 = MultiPoly::monomial(Monomial(N).with(0, 1).with(1, 1), 1);
          for (int n = 0; n <= M; ++n)
            for (int j = 0; j <= n; ++j) {
              auto ce = [&](const std::string& what) {
                auto w = detail::where(p, what);
                w["n"] = n;
                w["j"] = j;
                return w;
              };
              const MultiPoly& phi = basis.phi(n, j);
              const MultiPoly& psi = basis.psi(n, j);
              rec.check(dunkl_T(1, phi, p) == basis.materialize(T1_on_phi(n, j, p)), [&] { return ce("T1 phi"); });
              rec.check(dunkl_T(1, psi, p) == basis.materialize(T1_on_psi(n, j, p)), [&] { return ce("T1 psi"); });
              rec.check(dunkl_T(2, x1x2 * phi, p) == basis.materialize(T2_on_x1x2_phi(n, j, p)),
                        [&] { return ce("T2 x1x2 phi"); });
              rec.check(dunkl_T(2, psi, p) == basis.materialize(T2_on_psi(n, j, p)), [&] { return ce("T2 psi"); });
              for (int i = 3; i <= p.N(); ++i) {
                rec.check(dunkl_T(i, phi, p).is_zero(), [&] { return ce("T_i phi = 0, i > 2"); });
                rec.check(dunkl_T(i, psi, p).is_zero(), [&] { return ce("T_i psi = 0, i > 2"); });
              }
              bool even = true;
              for (const auto& [m, cf] : phi.terms())
                for (std::size_t s = 0; s < N; ++s) even = even && m[s] % 2 == 0;
              rec.check(even && (phi.is_zero() || phi.degree() == 2 * n), [&] { return ce("phi parity/degree"); });
              bool x1odd = true;
              for (const auto& [m, cf] : psi.terms()) {
                x1odd = x1odd && m[0] % 2 == 1;
                for (std::size_t s = 1; s < N; ++s) x1odd = x1odd && m[s] % 2 == 0;
              }
              rec.check(x1odd && (psi.is_zero() || psi.degree() == 2 * n + 1), [&] { return ce("psi parity/degree"); });
            }
        },
        [&] { return detail::where(p, "exception"); });
  }
  return std::move(rec).result();
}

inline SuiteResult suite_pbasis(const VerifyConfig& c) {
  SuiteRecorder rec("pbasis");
  const int M = c.pbasis_max_n();
  const int A = c.tpa_max();
  for (const Params& p : detail::parameter_grid(c)) {
    const auto N = static_cast<std::size_t>(p.N());
    PBasis basis(p);
    rec.guarded(
        [&] {
          for (int n = 0; n <= M; ++n)
            for (std::size_t i = 1; i <= N; ++i)
              for (std::size_t j = 1; j <= N; ++j) {
                if (j == i) continue;
                rec.check(dunkl_hatT(j, basis.p(n, i), p).is_zero(), [&] {
                  auto w = detail::where(p, "hatT_j p_n(y_i) = 0");
                  w["n"] = n;
                  w["i"] = i;
                  w["j"] = j;
                  return w;
                });
              }

          for (const auto& alpha : detail::compositions(N, A)) {
            const YPoly pa = basis.p_alpha(alpha);
            Monomial pm(N);
            for (std::size_t s = 0; s < N; ++s) pm.set(s, alpha.parts[s]);
            const PPoly formal = PPoly::monomial(pm, 1);
            auto ce = [&](const std::string& what) {
              auto w = detail::where(p, what);
              w["alpha"] = alpha.parts;
              return w;
            };
            for (std::size_t i = 1; i <= N; ++i) {
              const PExpansion tpa = hatT_on_p_alpha(i, alpha, p);
              rec.check(basis.expand(tpa) == dunkl_hatT(i, pa, p), [&] { return ce("TPA expansion"); });
              PCoordinates merged;
              for (const auto& t : tpa) merged[t.alpha] += t.coef;
              rec.check(psi_forward(merged, N) == hatT_formal(i, formal, p), [&] { return ce("Psi conjugation"); });
            }
            for (std::size_t i = 1; i < N; ++i) {
              Composition swapped = alpha;
              std::swap(swapped.parts[i - 1], swapped.parts[i]);
              rec.check(apply_reflection(Reflection::transposition(i, i + 1), pa) == basis.p_alpha(swapped),
                        [&] { return ce("Psi commutes with S_N"); });
            }
          }

          // Generating function of p_(m,n,0,...) computed by direct series expansion.
          {
            const int T = std::min(M, 4);
            auto univariate = [&](std::size_t own) {
              std::vector<YPoly> s(T + 1, YPoly(N));
              s[0] = YPoly::constant(N, 1);
              auto times = [&](std::size_t var, const std::function<Rational(int)>& coef) {
                std::vector<YPoly> next(T + 1, YPoly(N));
                for (int a = 0; a <= T; ++a)
                  for (int l = 0; a + l <= T; ++l)
                    next[a + l] += s[a] * YPoly::monomial(Monomial(N).with(var, l), coef(l));
                s = std::move(next);
              };
              times(own, [](int) { return Rational(1); });
              for (std::size_t v = 0; v < N; ++v) times(v, [&](int l) -> Rational { return pochhammer(p.k(), l) / factorial(l); });
              return s;
            };
            const auto u1 = univariate(0), u2 = univariate(1);
            for (int m = 0; m <= T; ++m)
              for (int n = 0; m + n <= T; ++n) {
                Composition alpha;
                alpha.parts.assign(N, 0);
                alpha.parts[0] = m;
                alpha.parts[1] = n;
                rec.check(u1[m] * u2[n] == basis.p_alpha(alpha), [&] {
                  auto w = detail::where(p, "p-basis generating function");
                  w["m"] = m;
                  w["n"] = n;
                  return w;
                });
              }
          }

          // delta_12 relations and Psi images of the generating functions.
          const int G = std::min(M, 5);
          const auto [f0, f1] = formal_generating_functions(N, G);
          using Coef = std::function<PPoly(int, int)>;
          auto entry = [](const Series2<PVars>& s) -> Coef { return [&s](int n, int j) { return s.at(n, j); }; };
          auto t_times = [](Coef f) -> Coef { return [f](int n, int j) { return f(n - 1, j); }; };
          auto s_times = [](Coef f) -> Coef { return [f](int n, int j) { return f(n, j - 1); }; };
          auto times = [](PPoly q, Coef f) -> Coef { return [q, f](int n, int j) { return q * f(n, j); }; };
          auto delta = [](Coef f) -> Coef { return [f](int n, int j) { return delta12(f(n, j)); }; };
          const Coef F0 = entry(f0), F1 = entry(f1);
          const Coef G0 = [&](int n, int j) { return f0.at(n, j) + f1.at(n, j - 1); };
          const Coef G1 = [&](int n, int j) { return f1.at(n, j) * Rational(-1); };
          const Coef Z = [N](int, int) { return PPoly(N); };
          const PPoly p1 = PPoly::variable(N, 1), p2 = PPoly::variable(N, 2);
          auto rel = [&](const Coef& lhs, const Coef& rhs, const char* what) {
            bool ok = true;
            for (int n = 0; n <= G; ++n)
              for (int j = 0; j <= G; ++j) ok = ok && lhs(n, j) == rhs(n, j);
            rec.check(ok, [&] { return detail::where(p, what); });
          };
          rel(delta(F0), t_times(F1), "delta12 f0 = t f1");
          rel(delta(F1), Z, "delta12 f1 = 0");
          rel(delta(times(p2, F0)), s_times(F1), "delta12 (p2 f0) = s f1");
          rel(delta(times(p2, F1)), F1, "delta12 (p2 f1) = f1");
          rel(delta(G0), t_times(F1), "delta12 g0 = t f1");
          rel(delta(G1), Z, "delta12 g1 = 0");
          rel(delta(times(p1, G0)), Z, "delta12 (p1 g0) = 0");
          rel(delta(times(p1, G1)), F1, "delta12 (p1 g1) = f1");

          const PlanarBasis planar(p, G);
          const MultiPoly x1 = MultiPoly::variable(N, 1);
          for (int n = 0; n <= G; ++n)
            for (int j = 0; j <= n; ++j) {
              auto ce = [&](const std::string& what) {
                auto w = detail::where(p, what);
                w["n"] = n;
                w["j"] = j;
                return w;
              };
              const YPoly phi_y = psi_inverse_expand(f0.at(n, j) + f1.at(n, j), basis);
              rec.check(squares_to_x(phi_y) == planar.phi(n, j), [&] { return ce("Psi^-1 (f0 + f1) = phi"); });
              const YPoly psi_y = psi_inverse_expand(G0(n, j) + G1(n, j), basis);
              rec.check(x1 * squares_to_x(psi_y) == planar.psi(n, j), [&] { return ce("x1 Psi^-1 (g0 + g1) = psi"); });
            }
        },
        [&] { return detail::where(p, "exception"); });
  }
  return std::move(rec).result();
}

inline SuiteResult suite_dunkl(const VerifyConfig& c) {
  SuiteRecorder rec("dunkl");
  RationalSampler rng(c.seed + 17);
  for (const Params& p : detail::parameter_grid(c)) {
    const auto N = static_cast<std::size_t>(p.N());
    rec.guarded(
        [&] {
          for (int deg = 1; deg <= 8; ++deg) {
            const MultiPoly f = detail::random_homogeneous(rng, N, deg, 3);
            auto ce = [&](const std::string& what) {
              auto w = detail::where(p, what);
              w["poly"] = to_json(f);
              return w;
            };
            std::vector<MultiPoly> Tf;
            for (std::size_t i = 1; i <= N; ++i) {
              Tf.push_back(dunkl_T(i, f, p));
              rec.check(Tf.back().is_zero() || Tf.back().degree() == deg - 1, [&] { return ce("homogeneity"); });
            }
            for (std::size_t i = 1; i <= N; ++i)
              for (std::size_t j = i + 1; j <= N; ++j)
                rec.check(dunkl_T(i, Tf[j - 1], p) == dunkl_T(j, Tf[i - 1], p), [&] { return ce("T_i T_j = T_j T_i"); });
            const auto s12 = Reflection::transposition(1, 2);
            rec.check(apply_reflection(s12, dunkl_T(1, apply_reflection(s12, f), p)) == Tf[1],
                      [&] { return ce("sigma_12 T_1 sigma_12 = T_2"); });
          }
          for (int deg = 0; deg <= 4; ++deg) {
            const YPoly g = detail::random_ypoly(rng, N, deg, 3);
            for (int e1 = 0; e1 <= 1; ++e1)
              for (int e2 = 0; e2 <= 1; ++e2) {
                std::vector<int> eps(N, 0);
                eps[0] = e1;
                eps[1] = e2;
                Monomial xe(N);
                xe.set(0, e1);
                xe.set(1, e2);
                const MultiPoly f = MultiPoly::monomial(xe, 1) * squares_to_x(g);
                for (std::size_t i = 1; i <= N; ++i)
                  rec.check(dunkl_T(i, f, p) == lift_check(eps, g, i, p), [&] {
                    auto w = detail::where(p, "lifting to squared variables");
                    w["i"] = i;
                    w["eps"] = eps;
                    w["g"] = to_json(g);
                    return w;
                  });
              }
          }
        },
        [&] { return detail::where(p, "exception"); });
  }
  return std::move(rec).result();
}

inline SuiteResult suite_closed_forms(const VerifyConfig& c) {
  SuiteRecorder rec("closed_forms");
  for (const Params& p : detail::parameter_grid(c)) {
    HarmonicCache cache(p);
    const auto N = static_cast<std::size_t>(p.N());
    const std::vector<Rational> ones(N, Rational(1));
    for (const auto& l : detail::labels_up_to(c.max_n)) {
      auto ce = [&](const std::string& what) {
        auto w = detail::where(p, what);
        w["label"] = to_string(l);
        return w;
      };
      rec.guarded(
          [&] {
            const MultiPoly& h = cache.get(l).poly;
            rec.check(poly_eval(h, ones) == value_at_ones(l, p), [&] { return ce("value at 1^N"); });
            for (auto sel : {CofSelector::Leading, CofSelector::Companion}) {
              const Rational expect = leading_coefficient(l, sel, p);
              rec.check(h.coefficient(cof_monomial(l, sel, N)) == expect && (sel != CofSelector::Leading || expect != 0),
                        [&] { return ce(sel == CofSelector::Leading ? "leading coefficient" : "companion coefficient"); });
            }
            const X0ClosedForm x0 = value_at_x0(l, p);
            rec.check(even_part_at_y0(h) == x0.value && x0.series.balanced(), [&] { return ce("value at x0"); });
            if (const auto tp = t_power_scalar(l, p)) {
              const std::vector<int> exps{tp->t1, tp->t2};
              rec.check(dunkl_power(exps, h, p) == MultiPoly::constant(N, tp->scalar), [&] { return ce("T-power scalar"); });
            }
          },
          [&] { return ce("exception"); });
    }
    rec.guarded(
        [&] {
          auto basis = cache.basis(std::max(1, c.max_n / 2));
          for (int n = 0; n <= basis->max_n(); ++n)
            for (int j = 0; j <= n; ++j)
              rec.check(even_part_at_y0(basis->phi(n, j)) == phi_at_x0(n, j, p.k()), [&] {
                auto w = detail::where(p, "phi at x0");
                w["n"] = n;
                w["j"] = j;
                return w;
              });
        },
        [&] { return detail::where(p, "exception"); });
  }
  return std::move(rec).result();
}

inline SuiteResult suite_norms(const VerifyConfig& c) {
  SuiteRecorder rec("norms");
  for (const Params& p : detail::parameter_grid(c)) {
    HarmonicCache cache(p);
    for (const auto& l : detail::labels_up_to(c.norm_max_n())) {
      auto ce = [&](const std::string& what) {
        auto w = detail::where(p, what);
        w["label"] = to_string(l);
        return w;
      };
      rec.guarded(
          [&] {
            const NormCertificate cert = norm_squared(l, cache);
            rec.check(cert.oracle == cert.closed, [&] { return ce("dual-route norm"); });
            if (p.k() > 0 && p.k1() > 0) rec.check(cert.value > 0, [&] { return ce("norm positive"); });
          },
          [&] { return ce("dual-route norm"); });
    }
  }
  return std::move(rec).result();
}

inline SuiteResult suite_hypergeometric(const VerifyConfig& c) {
  SuiteRecorder rec("hypergeometric");
  RationalSampler rng(c.seed + 29);
  auto series_json = [](const HypSeries& s) {
    nlohmann::ordered_json u = nlohmann::ordered_json::array(), l = nlohmann::ordered_json::array();
    for (const auto& v : s.upper) u.push_back(to_string(v));
    for (const auto& v : s.lower) l.push_back(to_string(v));
    return nlohmann::ordered_json{{"upper", u}, {"lower", l}};
  };
  auto attempt = [&](int count, const char* name, const std::function<std::optional<std::pair<bool, HypSeries>>()>& f) {
    int done = 0, tries = 0;
    while (done < count && tries < 100 * count) {
      ++tries;
      std::optional<std::pair<bool, HypSeries>> r;
      try {
        r = f();
      } catch (const std::domain_error&) {
        continue;  // degenerate draw: resample
      }
      if (!r) continue;
      ++done;
      rec.check(r->first, [&] { return nlohmann::ordered_json{{"check", name}, {"series", series_json(r->second)}}; });
    }
    rec.check(done == count, [&] { return nlohmann::ordered_json{{"check", name}, {"error", "too many degenerate draws"}}; });
  };
  attempt(50, "Chu-Vandermonde", [&]() -> std::optional<std::pair<bool, HypSeries>> {
    const int n = rng.integer(0, 6);
    const Rational b = rng.signed_value(), cc = rng.signed_value();
    const Rational den = pochhammer(cc, n);
    if (den == 0) return std::nullopt;
    HypSeries s{{Rational(-n), b}, {cc}};
    return std::pair{hyp_sum(s) == pochhammer(cc - b, n) / den, s};
  });
  attempt(50, "Saalschutz", [&]() -> std::optional<std::pair<bool, HypSeries>> {
    const int n = rng.integer(0, 6);
    const Rational a = rng.signed_value(), b = rng.signed_value(), cc = rng.signed_value();
    const Rational den = pochhammer(cc, n) * pochhammer(cc - a - b, n);
    if (den == 0) return std::nullopt;
    HypSeries s{{Rational(-n), a, b}, {cc, 1 + a + b - cc - n}};
    return std::pair{hyp_sum(s) == pochhammer(cc - a, n) * pochhammer(cc - b, n) / den && s.balanced(), s};
  });
  attempt(25, "Whipple", [&]() -> std::optional<std::pair<bool, HypSeries>> {
    const int n = rng.integer(0, 5);
    const Rational a = rng.signed_value(), b = rng.signed_value(), cc = rng.signed_value();
    const Rational d = rng.signed_value(), e = rng.signed_value();
    const Rational f = -n + a + b + cc + 1 - d - e;
    HypSeries s{{Rational(-n), a, b, cc}, {d, e, f}};
    const WhippleResult w = whipple_transform(s);
    // The terminating transformation needs every lower parameter off {0, -1, ..., 1-n}.
    auto blocked = [n](const HypSeries& h) {
      for (const Rational& v : h.lower)
        if (is_integer(v) && v <= 0 && v > -n) return true;
      return false;
    };
    if (blocked(s) || blocked(w.transformed)) return std::nullopt;
    return std::pair{hyp_sum(s) == w.prefactor * hyp_sum(w.transformed), s};
  });
  return std::move(rec).result();
}

inline SuiteResult suite_calogero(const VerifyConfig& c) {
  SuiteRecorder rec("calogero");
  for (const Params& p : detail::parameter_grid(c)) {
    HarmonicCache cache(p);
    for (const Rational& omega : c.omegas) {
      const CalogeroParams cp(p, omega);
      for (int m = 0; m <= c.calogero_max_m(); ++m)
        for (int e = 0; e <= 1 && e <= m; ++e) {
          const HarmonicLabel hl{m - e, e};
          for (int n = 0; n <= 2; ++n) {
            auto ce = [&](const std::string& what) {
              auto w = detail::where(p, what);
              w["omega"] = to_string(omega);
              w["harmonic"] = to_string(hl);
              w["m"] = m;
              w["n"] = n;
              return w;
            };
            rec.guarded(
                [&] {
                  const EigenLabel el = EigenLabel::standard(m, n, p);
                  const MultiPoly f = eigenfunction(el, cache.get(hl).poly, cp);
                  rec.check(conjugated_hamiltonian(f, cp) == f * el.eigenvalue(cp), [&] { return ce("eigen-relation"); });
                  if (n > 0) {
                    EigenLabel bad = el;
                    bad.c += Rational(1, 2);
                    const MultiPoly g = eigenfunction(bad, cache.get(hl).poly, cp);
                    rec.check(!(conjugated_hamiltonian(g, cp) == g * el.eigenvalue(cp)),
                              [&] { return ce("perturbed Laguerre index must fail"); });
                  }
                },
                [&] { return ce("exception"); });
          }
        }
    }
    rec.guarded(
        [&] {
          for (int n = 0; n <= std::min(c.max_n, 8); n += 2) {
            const MultiPoly inv = invariantize({n, 0}, p);
            rec.check(laplacian_B(inv, p).is_zero(), [&] { return detail::where(p, "invariantized h harmonic"); });
            if (n % 4 == 0)
              rec.check(is_group_invariant(inv), [&] { return detail::where(p, "invariantized h is W_N-invariant"); });
          }
        },
        [&] { return detail::where(p, "exception"); });
  }
  return std::move(rec).result();
}

/// k = k1 = 0: T_i = d/dx_i and h_{n,eps} is an ordinary planar harmonic.
inline SuiteResult suite_degeneration(const VerifyConfig& c) {
  SuiteRecorder rec("degeneration");
  RationalSampler rng(c.seed + 43);
  for (int N : c.Ns) {
    const Params p(N, 0, 0);
    const auto n = static_cast<std::size_t>(N);
    rec.guarded(
        [&] {
          for (int deg = 0; deg <= 6; ++deg) {
            const MultiPoly f = detail::random_homogeneous(rng, n, deg, 3);
            for (std::size_t i = 1; i <= n; ++i)
              rec.check(dunkl_T(i, f, p) == f.derivative(i), [&] {
                auto w = detail::where(p, "T_i = d/dx_i");
                w["poly"] = to_json(f);
                return w;
              });
          }
          HarmonicCache cache(p);
          for (const auto& l : detail::labels_up_to(c.max_n)) {
            const MultiPoly& h = cache.get(l).poly;
            auto ce = [&](const std::string& what) {
              auto w = detail::where(p, what);
              w["label"] = to_string(l);
              return w;
            };
            rec.check(detail::ordinary_laplacian(h).is_zero(), [&] { return ce("ordinary Laplacian h = 0"); });
            for (std::size_t i = 3; i <= n; ++i)
              rec.check(h.derivative(i).is_zero(), [&] { return ce("h depends on x1, x2 only"); });
          }
        },
        [&] { return detail::where(p, "exception"); });
  }
  return std::move(rec).result();
}

struct SuiteEntry {
  const char* name;
  SuiteResult (*run)(const VerifyConfig&);
};

inline const std::vector<SuiteEntry>& all_suites() {
  static const std::vector<SuiteEntry> suites{
      {"calogero", suite_calogero},       {"closed_forms", suite_closed_forms}, {"degeneration", suite_degeneration},
      {"dunkl", suite_dunkl},             {"harmonicity", suite_harmonicity},   {"hypergeometric", suite_hypergeometric},
      {"ladder", suite_ladder},           {"norms", suite_norms},               {"pbasis", suite_pbasis},
      {"recurrences", suite_recurrences},
  };
  return suites;
}

/// Runs the selected suites concurrently; results come back in name order.
inline std::vector<SuiteResult> run_suites(const VerifyConfig& c) {
  std::vector<std::future<SuiteResult>> jobs;
  for (const auto& s : all_suites()) {
    if (!c.only.empty() && std::find(c.only.begin(), c.only.end(), s.name) == c.only.end()) continue;
    jobs.push_back(std::async(std::launch::async, s.run, std::cref(c)));
  }
  std::vector<SuiteResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace planarharm
