#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "planarharm/dunkl.hpp"
#include "planarharm/hypergeometric.hpp"
#include "planarharm/params.hpp"
#include "planarharm/poly.hpp"

namespace planarharm {

/// Composition alpha in Z_+^N.
struct Composition {
  std::vector<int> parts;

  int size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  auto operator<=>(const Composition&) const = default;
};

/// Formal linear combination of p-basis elements. Repeated compositions are
/// allowed and are only merged on expansion.
struct PTerm {
  Rational coef;
  Composition alpha;
};
using PExpansion = std::vector<PTerm>;

/// Coordinates in the p-basis.
using PCoordinates = std::map<Composition, Rational>;

/// Type-A p-basis in the squared variables y. p_n(y_i; y) is the r^n
/// coefficient of (1 - r y_i)^{-1} prod_j (1 - r y_j)^{-k}. Results are memoised.
class PBasis {
 public:
  explicit PBasis(Params params) : params_(std::move(params)) {}

  const Params& params() const { return params_; }

  /// p_n(y_i; y), 1-based i.
  const YPoly& p(int n, std::size_t i) {
    if (n < 0) throw std::invalid_argument("p_n: negative degree");
    const auto N = static_cast<std::size_t>(params_.N());
    if (i < 1 || i > N) throw std::out_of_range("p_n: index out of range");
    auto key = std::pair{n, i};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    extend(n);
    YPoly out(N);
    for (int m = 0; m <= n; ++m)
      out += YPoly::monomial(Monomial(N).with(i - 1, n - m)) * elementary_[m];
    return cache_.emplace(key, std::move(out)).first->second;
  }

  YPoly p_alpha(const Composition& alpha) {
    const auto N = static_cast<std::size_t>(params_.N());
    if (alpha.parts.size() != N) throw std::invalid_argument("p_alpha: composition length must equal N");
    YPoly out = YPoly::constant(N, Rational(1));
    for (std::size_t i = 0; i < N; ++i)
      if (alpha.parts[i] != 0) out = out * p(alpha.parts[i], i + 1);
    return out;
  }

  YPoly expand(const PExpansion& e) {
    YPoly out(static_cast<std::size_t>(params_.N()));
    for (const auto& t : e) out += p_alpha(t.alpha) * t.coef;
    return out;
  }

  YPoly expand(const PCoordinates& c) {
    YPoly out(static_cast<std::size_t>(params_.N()));
    for (const auto& [alpha, coef] : c) out += p_alpha(alpha) * coef;
    return out;
  }

 private:
  // elementary_[m] = r^m coefficient of prod_j sum_l (k)_l/l! (r y_j)^l.
  void extend(int degree) {
    if (static_cast<int>(elementary_.size()) > degree) return;
    const auto N = static_cast<std::size_t>(params_.N());
    const int top = std::max(degree, 2 * static_cast<int>(elementary_.size()));
    std::vector<YPoly> series(top + 1, YPoly(N));
    series[0] = YPoly::constant(N, Rational(1));
    std::vector<Rational> binom(top + 1);
    for (int l = 0; l <= top; ++l) binom[l] = pochhammer(params_.k(), l) / factorial(l);
    for (std::size_t j = 0; j < N; ++j) {
      std::vector<YPoly> next(top + 1, YPoly(N));
      for (int m = 0; m <= top; ++m) {
        if (series[m].is_zero()) continue;
        for (int l = 0; m + l <= top; ++l) {
          if (binom[l] == 0) continue;
          next[m + l] += series[m] * YPoly::monomial(Monomial(N).with(j, l), binom[l]);
        }
      }
      series = std::move(next);
    }
    elementary_ = std::move(series);
  }

  Params params_;
  std::vector<YPoly> elementary_;
  std::map<std::pair<int, std::size_t>, YPoly> cache_;
};

inline YPoly p_n(int n, std::size_t i, const Params& params) { return PBasis(params).p(n, i); }

inline YPoly p_alpha(const Composition& alpha, const Params& params) { return PBasis(params).p_alpha(alpha); }

/// hatT_i p_alpha as a formal combination of p-basis elements (1-based i):
///   (Nk + alpha_i) p_{alpha - e_i}
///   + k sum_{j != i} sum_{m=0}^{alpha_j - 1} [p_{.., alpha_i+alpha_j-1-m @i, m @j, ..}
///                                             - p_{.., m @i, alpha_i+alpha_j-1-m @j, ..}]
/// when alpha_i > 0, and 0 otherwise.
inline PExpansion hatT_on_p_alpha(std::size_t i, const Composition& alpha, const Params& params) {
  const std::size_t N = alpha.parts.size();
  if (i < 1 || i > N) throw std::out_of_range("hatT_on_p_alpha: index out of range");
  const std::size_t a = i - 1;
  PExpansion out;
  if (alpha.parts[a] == 0) return out;
  Composition lowered = alpha;
  --lowered.parts[a];
  out.push_back({params.N() * params.k() + alpha.parts[a], lowered});
  if (params.k() == 0) return out;
  for (std::size_t b = 0; b < N; ++b) {
    if (b == a) continue;
    const int total = alpha.parts[a] + alpha.parts[b] - 1;
    for (int m = 0; m < alpha.parts[b]; ++m) {
      Composition plus = alpha, minus = alpha;
      plus.parts[a] = total - m;
      plus.parts[b] = m;
      minus.parts[a] = m;
      minus.parts[b] = total - m;
      out.push_back({params.k(), plus});
      out.push_back({-params.k(), minus});
    }
  }
  return out;
}

/// Psi: p_alpha -> p_1^{alpha_1} ... p_N^{alpha_N}, extended linearly.
inline PPoly psi_forward(const PCoordinates& coords, std::size_t nvars) {
  PPoly out(nvars);
  for (const auto& [alpha, c] : coords) {
    if (alpha.parts.size() != nvars) throw std::invalid_argument("psi_forward: composition length mismatch");
    Monomial m(nvars);
    for (std::size_t s = 0; s < nvars; ++s) m.set(s, alpha.parts[s]);
    out.add_term(m, c);
  }
  return out;
}

/// Psi^{-1} in p-basis coordinates (monomials map back to compositions).
inline PCoordinates psi_inverse(const PPoly& f) {
  PCoordinates out;
  for (const auto& [m, c] : f.terms()) {
    Composition alpha;
    for (std::size_t s = 0; s < f.nvars(); ++s) alpha.parts.push_back(static_cast<int>(m[s]));
    out.emplace(std::move(alpha), c);
  }
  return out;
}

/// Psi^{-1} multiplied out to a polynomial in y.
inline YPoly psi_inverse_expand(const PPoly& f, PBasis& basis) { return basis.expand(psi_inverse(f)); }

/// xi_{i,j}: replaces p_j by p_i (1-based).
inline PPoly xi(std::size_t i, std::size_t j, const PPoly& f) {
  return f.map_monomials([a = i - 1, b = j - 1](const Monomial& m) {
    return std::pair{m.with(b, 0).with(a, static_cast<int>(m[a] + m[b])), 1};
  });
}

/// eta_i: sets p_i = 0.
inline PPoly eta(std::size_t i, const PPoly& f) {
  PPoly out(f.nvars());
  for (const auto& [m, c] : f.terms())
    if (m[i - 1] == 0) out.add_term(m, c);
  return out;
}

/// hatT_i conjugated through Psi, acting on the formal p-variables:
///   d/dp_i + Nk (1 - eta_i)/p_i + k sum_{j != i} (xi_{i,j} + xi_{j,i} - 1 - (i,j))/(p_i - p_j).
inline PPoly hatT_formal(std::size_t i, const PPoly& f, const Params& params) {
  const std::size_t N = f.nvars();
  if (i < 1 || i > N) throw std::out_of_range("hatT_formal: index out of range");
  PPoly out = f.derivative(i);
  if (f.is_zero() || params.k() == 0) return out;
  PPoly acc = exact_divide(f - eta(i, f), LinearDivisor{i, 0, 1, 1}) * Rational(params.N());
  for (std::size_t j = 1; j <= N; ++j) {
    if (j == i) continue;
    PPoly num = xi(i, j, f) + xi(j, i, f) - f - apply_reflection(Reflection::transposition(i, j), f);
    if (!num.is_zero()) acc += exact_divide(num, LinearDivisor{i, j, -1, 1});
  }
  out += acc * params.k();
  return out;
}

/// delta_{1,2} f = (f(p1,p1) + f(p2,p2) - f(p1,p2) - f(p2,p1)) / (p1 - p2)
/// for f in p_1, p_2 only.
inline PPoly delta12(const PPoly& f) {
  if (f.nvars() < 2) throw std::invalid_argument("delta12: needs at least two variables");
  for (const auto& [m, c] : f.terms())
    for (std::size_t s = 2; s < f.nvars(); ++s)
      if (m[s] != 0) throw std::invalid_argument("delta12: polynomial must involve only p1, p2");
  PPoly num = xi(1, 2, f) + xi(2, 1, f) - f - apply_reflection(Reflection::transposition(1, 2), f);
  if (num.is_zero()) return PPoly(f.nvars());
  return exact_divide(num, LinearDivisor{1, 2, -1, 1});
}

}  // namespace planarharm
