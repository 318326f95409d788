#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "planarharm/dunkl.hpp"
#include "planarharm/harmonic.hpp"
#include "planarharm/hypergeometric.hpp"

namespace planarharm {

namespace detail {

inline Rational sign_pow(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

inline Rational two_pow(int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= 2;
  return r;
}

}  // namespace detail

/// h_{label}(1, 1, ..., 1) in closed form.
inline Rational value_at_ones(const HarmonicLabel& l, const Params& p) {
  if (!l.valid()) throw std::invalid_argument("invalid harmonic label");
  // h_{n,1} with n even is sigma_12 h_{n+1,0}, and 1^N is sigma_12-fixed.
  if (l.eps == 1 && l.n % 2 == 0) return value_at_ones(sigma12_source(l), p);
  const int q = l.quarter();
  const Rational a = pochhammer(p.N() * p.k() + 1, q) * pochhammer((p.N() - 1) * p.k() + 1, q) / factorial(q);
  switch (l.residue()) {
    case 0: return a / pochhammer(p.k2() + q, q);
    case 1: return a / pochhammer(p.k2() + q + 1, q);  // h_{4n+1,0} and h_{4n+1,1}
    case 2: return 0;
    default:
      if (l.eps == 1) return 0;
      return a * (p.N() * p.k() + q + 1) / pochhammer(p.k2() + q + 1, q + 1);
  }
}

enum class CofSelector {
  Leading,    // x1^n x2^eps
  Companion,  // the mirror term: x2^n, x1 x2^n, x1 x2^{n-1} or x2^{n+1}
};

inline Monomial cof_monomial(const HarmonicLabel& l, CofSelector which, std::size_t nvars) {
  Monomial m(nvars);
  if (which == CofSelector::Leading) return m.with(0, l.n).with(1, l.eps);
  const bool even = l.n % 2 == 0;
  if (l.eps == 0 && even) return m.with(1, l.n);
  if (l.eps == 1 && !even) return m.with(0, 1).with(1, l.n);
  if (l.eps == 0) return m.with(0, 1).with(1, l.n - 1);
  return m.with(1, l.n + 1);
}

/// Closed-form coefficient of cof_monomial(l, which) in h_{label}.
inline Rational leading_coefficient(const HarmonicLabel& l, CofSelector which, const Params& p) {
  if (!l.valid()) throw std::invalid_argument("invalid harmonic label");
  if (l.eps == 1 && l.n % 2 == 0) {
    // sigma_12 swaps the two selected monomials of h_{n+1,0}.
    const auto other = which == CofSelector::Leading ? CofSelector::Companion : CofSelector::Leading;
    return leading_coefficient(sigma12_source(l), other, p);
  }
  const int q = l.quarter();
  const Params& s = l.eps == 1 ? p.shift_k1(1) : p;  // eps = 1: k1 -> k1 + 1
  const Params shifted = s;
  const Rational& k = shifted.k();
  const Rational& k2 = shifted.k2();
  const Rational Nk = shifted.N() * k;
  const Rational common = pochhammer(k + 1, q) * pochhammer((shifted.N() - 1) * k + 1, q) / factorial(q);
  const bool lead = which == CofSelector::Leading;
  if (l.n % 2 == 0 || l.eps == 1) {
    // (4n,0), (4n+2,0) and, through the k1 shift, (4n+1,1), (4n+3,1).
    const bool low = l.residue() <= 1;
    const Rational v = detail::sign_pow(q) * common * pochhammer(k2 - k, q) /
                       (low ? pochhammer(k2 + q, q) * pochhammer(Nk + q + 1, q)
                            : pochhammer(k2 + q + 1, q) * pochhammer(Nk + q + 2, q));
    return lead || low ? v : Rational(-v);
  }
  if (l.residue() == 1) {
    const Rational v = detail::sign_pow(q) * common * pochhammer(k2 - k, q) /
                       (pochhammer(k2 + q + 1, q) * pochhammer(Nk + q + 1, q));
    return lead ? v : Rational(v * (k2 - k + 2 * q) / (k2 - k));
  }
  const Rational v = detail::sign_pow(q + 1) * common * pochhammer(k2 - k, q + 1) /
                     (pochhammer(k2 + q + 1, q + 1) * pochhammer(Nk + q + 2, q));
  return lead ? v : Rational(-v * (k2 + k + 2 * q + 1) / (k2 - k));
}

/// Lambda(m, n) = (Nk+1)_a ((N-1)k+1)_b (k2)_{m-a} (k2-k)_{n-b}, a = floor(m/2), b = floor(n/2).
inline Rational lambda_value(int m, int n, const Params& p) {
  if (n < 0 || m < n) throw std::invalid_argument("lambda_value: need m >= n >= 0");
  const int a = m / 2, b = n / 2;
  return pochhammer(p.N() * p.k() + 1, a) * pochhammer((p.N() - 1) * p.k() + 1, b) * pochhammer(p.k2(), m - a) *
         pochhammer(p.k2() - p.k(), n - b);
}

/// T_1^{t1} T_2^{t2} h_{label} = scalar (a constant), for the six families
/// written as x1^{e1} x2^{e2} f0(y).
struct TPowerScalar {
  int t1;
  int t2;
  Rational scalar;
};

inline std::optional<TPowerScalar> t_power_scalar(const HarmonicLabel& l, const Params& p) {
  const int q = l.quarter();
  using detail::sign_pow;
  using detail::two_pow;
  if (l.eps == 0) switch (l.residue()) {
      case 0: return TPowerScalar{4 * q, 0, two_pow(4 * q) * sign_pow(q) * lambda_value(2 * q, 2 * q, p)};
      case 1: return TPowerScalar{4 * q + 1, 0, two_pow(4 * q + 1) * sign_pow(q) * lambda_value(2 * q + 1, 2 * q, p)};
      case 2: return TPowerScalar{4 * q + 2, 0, two_pow(4 * q + 2) * sign_pow(q) * lambda_value(2 * q + 2, 2 * q, p)};
      default:
        return TPowerScalar{4 * q + 3, 0, two_pow(4 * q + 3) * sign_pow(q + 1) * lambda_value(2 * q + 2, 2 * q + 1, p)};
    }
  if (l.residue() == 1)
    return TPowerScalar{4 * q + 1, 1, two_pow(4 * q + 2) * sign_pow(q) * lambda_value(2 * q + 1, 2 * q + 1, p)};
  if (l.residue() == 3)
    return TPowerScalar{4 * q + 3, 1, two_pow(4 * q + 4) * sign_pow(q) * lambda_value(2 * q + 3, 2 * q + 1, p)};
  return std::nullopt;
}

/// phi_{order,index} at x0 = (1, sqrt(-1), 0, ..., 0), i.e. in the squared
/// variables at y = (1, -1, 0, ..., 0).
inline Rational phi_at_x0(int order, int index, const Rational& k) {
  if (index < 0 || index > order) throw std::out_of_range("phi_at_x0: need 0 <= index <= order");
  if (index % 2 == 1) return 0;
  const int a = order / 2, b = index / 2;
  const Rational base = detail::sign_pow(a) * pochhammer(Rational(-a), b) /
                        (factorial(a) * factorial(b) * pochhammer(k + Rational(3, 2), b));
  if (order % 2 == 0) return base * pochhammer(2 * k + 1, a + b) * (2 * k + 2 * a + 1) / (2 * k + 1);
  return 2 * base * pochhammer(2 * k + 2, a + b);
}

/// Closed form of the even part at y0: value = prefactor * hyp_sum(series).
struct X0ClosedForm {
  Rational prefactor;
  HypSeries series;
  Rational value;
};

inline X0ClosedForm value_at_x0(const HarmonicLabel& l, const Params& p) {
  if (!l.valid()) throw std::invalid_argument("invalid harmonic label");
  if (l.eps == 1 && l.n % 2 == 0) {
    // Even part of sigma_12 h_{n+1,0} is f0(y2, y1, ...); at (1,-1) this is
    // (-1)^{deg f0} f0(1,-1), with deg f0 = n/2.
    X0ClosedForm f = value_at_x0(sigma12_source(l), p);
    if ((l.n / 2) % 2 == 1) {
      f.prefactor = -f.prefactor;
      f.value = -f.value;
    }
    return f;
  }
  const int q = l.quarter();
  const Params s = l.eps == 1 ? p.shift_k1(1) : p;
  const Rational& k = s.k();
  const Rational& k2 = s.k2();
  const Rational Nk = s.N() * k;
  const Rational Nm1k1 = (s.N() - 1) * k + 1;
  const Rational A = (s.N() - 1) * k + k2;
  const Rational half(1, 2);
  X0ClosedForm out;
  const int r = l.residue();
  if (r == 0 || (r == 1 && l.eps == 1)) {
    out.prefactor = detail::sign_pow(q) * pochhammer(2 * k + 1, q) * (2 * k + 2 * q + 1) * pochhammer(Nm1k1, q) *
                    pochhammer(k2 - k, q) / (factorial(q) * (2 * k + 1) * pochhammer(k2 + q, q) * pochhammer(Nk + q + 1, q));
    out.series = {{Rational(-q), A + 2 * q, k + 1, -q - k + half}, {k + 3 * half, k2 - k, Nm1k1}};
  } else if (r == 2 || (r == 3 && l.eps == 1)) {
    out.prefactor = detail::sign_pow(q) * 2 * pochhammer(2 * k + 2, q) * pochhammer(Nm1k1, q) * pochhammer(k2 - k, q) /
                    (factorial(q) * pochhammer(k2 + q + 1, q) * pochhammer(Nk + q + 2, q));
    out.series = {{Rational(-q), A + 2 * q + 1, k + 1, -q - k - half}, {k + 3 * half, k2 - k, Nm1k1}};
  } else if (r == 1) {
    out.prefactor = detail::sign_pow(q) * pochhammer(2 * k + 1, q) * (2 * k + 2 * q + 1) * pochhammer(Nm1k1, q) *
                    pochhammer(k2 - k + 1, q) /
                    (factorial(q) * (2 * k + 1) * pochhammer(k2 + q + 1, q) * pochhammer(Nk + q + 1, q));
    out.series = {{Rational(-q), A + 2 * q + 1, k + 1, -q - k + half}, {k + 3 * half, k2 - k + 1, Nm1k1}};
  } else {
    out.prefactor = detail::sign_pow(q + 1) * (2 * k2 + 2 * q + 1) * pochhammer(2 * k + 2, q) * pochhammer(Nm1k1, q) *
                    pochhammer(k2 - k + 1, q) /
                    (factorial(q) * pochhammer(k2 + q + 1, q + 1) * pochhammer(Nk + q + 2, q));
    out.series = {{Rational(-q), A + 2 * q + 2, k + 1, -q - k - half}, {k + 3 * half, k2 - k + 1, Nm1k1}};
  }
  out.value = out.prefactor * hyp_sum(out.series);
  return out;
}

/// Direct route: writes f = x1^{e1} x2^{e2} f0(y) and returns f0(1, -1, 0, ..., 0).
inline Rational even_part_at_y0(const MultiPoly& f) {
  if (f.is_zero()) return 0;
  const Monomial& first = f.terms().begin()->first;
  const unsigned e1 = first[0] % 2, e2 = first[1] % 2;
  Rational sum(0);
  for (const auto& [m, c] : f.terms()) {
    if (m[0] % 2 != e1 || m[1] % 2 != e2) throw std::domain_error("even_part_at_y0: mixed x1/x2 parities");
    bool survives = true;
    for (std::size_t s = 2; s < f.nvars(); ++s) {
      if (m[s] % 2 != 0) throw std::domain_error("even_part_at_y0: odd exponent beyond x2");
      if (m[s] != 0) survives = false;
    }
    if (survives) sum += ((m[1] - e2) / 2) % 2 == 0 ? c : Rational(-c);
  }
  return sum;
}

/// f(T_1, ..., T_N) g evaluated at x = 0. Operator monomials T^a g are
/// memoised on a, with higher-numbered operators applied first.
inline Rational dunkl_pairing(const MultiPoly& f, const MultiPoly& g, const Params& p) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("dunkl_pairing: mismatched ambient dimension");
  const std::size_t n = g.nvars();
  std::map<Monomial, MultiPoly, GrlexGreater> memo;
  memo.emplace(Monomial(n), g);
  auto apply = [&](auto&& self, const Monomial& a) -> const MultiPoly& {
    if (auto it = memo.find(a); it != memo.end()) return it->second;
    std::size_t v = 0;
    while (a[v] == 0) ++v;
    const MultiPoly& inner = self(self, a.with(v, static_cast<int>(a[v]) - 1));
    MultiPoly out = inner.is_zero() ? MultiPoly(n) : dunkl_T(v + 1, inner, p);
    return memo.emplace(a, std::move(out)).first->second;
  };
  Rational sum(0);
  const int gdeg = g.degree();
  for (const auto& [a, c] : f.terms()) {
    if (static_cast<int>(a.degree()) != gdeg) continue;  // T^a g has positive degree or vanishes
    sum += c * apply(apply, a).coefficient(Monomial(n));
  }
  return sum;
}

/// The pairing h(T) h |_{x=0} by two routes.
struct NormCertificate {
  Rational value;      // agreed value
  Rational oracle;     // operator pairing on the expanded polynomial
  Rational closed;     // x0 value times the T-power scalar
  Rational x0_value;   // closed-form even part at y0
  Rational t_scalar;   // T_1^{..} T_2^{..} h
  HypSeries series;    // 4F3 certificate for the x0 value
};

inline NormCertificate norm_squared(const HarmonicLabel& l, HarmonicCache& cache) {
  const Params& p = cache.params();
  const MultiPoly& h = cache.get(l).poly;
  NormCertificate cert;
  cert.oracle = dunkl_pairing(h, h, p);
  // The pairing is W_N-invariant, so h_{n,1} (n even) shares the norm of h_{n+1,0}.
  const HarmonicLabel base = l.eps == 1 && l.n % 2 == 0 ? sigma12_source(l) : l;
  const X0ClosedForm x0 = value_at_x0(base, p);
  const auto tp = t_power_scalar(base, p);
  cert.x0_value = x0.value;
  cert.series = x0.series;
  cert.t_scalar = tp->scalar;
  cert.closed = x0.value * tp->scalar;
  if (cert.closed != cert.oracle)
    throw std::logic_error("norm_squared: routes disagree for " + to_string(l) + ": oracle " + to_string(cert.oracle) +
                           ", closed " + to_string(cert.closed));
  cert.value = cert.oracle;
  return cert;
}

inline NormCertificate norm_squared(const HarmonicLabel& l, const Params& p) {
  HarmonicCache cache(p);
  return norm_squared(l, cache);
}

}  // namespace planarharm
