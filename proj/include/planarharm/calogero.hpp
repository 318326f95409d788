#pragma once

#include <stdexcept>
#include <vector>

#include "planarharm/dunkl.hpp"
#include "planarharm/harmonic.hpp"
#include "planarharm/hypergeometric.hpp"

namespace planarharm {

class CalogeroParams {
 public:
  CalogeroParams(Params params, Rational omega) : params_(std::move(params)), omega_(std::move(omega)) {
    if (omega_ <= 0) throw std::invalid_argument("omega must be positive");
  }
  const Params& params() const { return params_; }
  const Rational& omega() const { return omega_; }

 private:
  Params params_;
  Rational omega_;
};

struct EigenLabel {
  int m;
  int n;
  Rational c;  // Laguerre index

  static EigenLabel standard(int m, int n, const Params& p) { return {m, n, m + p.N() * p.k2() - 1}; }
  Rational eigenvalue(const CalogeroParams& cp) const {
    return 2 * cp.omega() * (m + 2 * n + cp.params().N() * cp.params().k2());
  }
};

/// Coefficients (constant term first) of L_n^{(c)}(t).
inline std::vector<Rational> laguerre(int n, const Rational& c) {
  if (n < 0) throw std::invalid_argument("laguerre: negative degree");
  const Rational lead = pochhammer(c + 1, n) / factorial(n);
  std::vector<Rational> out;
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i)
    out.push_back(lead * pochhammer(Rational(-n), i) / (pochhammer(c + 1, i) * factorial(i)));
  return out;
}

inline MultiPoly norm_squared_poly(std::size_t nvars) {
  MultiPoly r(nvars);
  for (std::size_t i = 0; i < nvars; ++i) r.add_term(Monomial(nvars).with(i, 2), 1);
  return r;
}

/// 2 omega (sum x_i d/dx_i + N k2) f - Delta_B f.
inline MultiPoly conjugated_hamiltonian(const MultiPoly& f, const CalogeroParams& cp) {
  const Params& p = cp.params();
  MultiPoly euler(f.nvars());
  for (const auto& [m, c] : f.terms()) euler.add_term(m, c * (static_cast<int>(m.degree()) + p.N() * p.k2()));
  euler *= 2 * cp.omega();
  return euler - laplacian_B(f, p);
}

/// Polynomial part L_n^{(c)}(omega |x|^2) h of the eigenfunction.
inline MultiPoly eigenfunction(const EigenLabel& e, const MultiPoly& harmonic, const CalogeroParams& cp) {
  if (harmonic.degree() != e.m && !(harmonic.is_zero() && e.m == 0))
    throw std::invalid_argument("eigenfunction: harmonic degree does not match m");
  const std::vector<Rational> coeffs = laguerre(e.n, e.c);
  const MultiPoly t = norm_squared_poly(harmonic.nvars()) * cp.omega();
  MultiPoly acc(harmonic.nvars());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + MultiPoly::constant(harmonic.nvars(), *it);
  return acc * harmonic;
}

inline MultiPoly eigenfunction(const EigenLabel& e, const HarmonicLabel& h, const CalogeroParams& cp) {
  if (h.degree() != e.m) throw std::invalid_argument("eigenfunction: harmonic degree does not match m");
  return eigenfunction(e, build_harmonic(h, cp.params()).poly, cp);
}

enum class CosetSum {
  Full,     // one representative per 2-subset {a, b} of {1..N}
  Partial,  // 1 + sum sigma_2j + sum_{i<j} sigma_1i sigma_2j, no sigma_1j terms
};

/// Sum of h over coset representatives of S_N / (S_2 x S_{N-2}). With
/// CosetSum::Full the result is S_N-symmetric whenever h is fixed by
/// sigma_12 and by permutations of x3..xN.
inline MultiPoly invariantize(const MultiPoly& h, CosetSum kind = CosetSum::Full) {
  const std::size_t N = h.nvars();
  if (N < 3) throw std::invalid_argument("invariantize: need N >= 3");
  auto swap = [](std::size_t i, std::size_t j, const MultiPoly& f) {
    return apply_reflection(Reflection::transposition(i, j), f);
  };
  MultiPoly out = h;
  for (std::size_t j = 3; j <= N; ++j) {
    out += swap(2, j, h);
    if (kind == CosetSum::Full) out += swap(1, j, h);
  }
  for (std::size_t i = 3; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j) out += swap(1, i, swap(2, j, h));
  return out;
}

inline MultiPoly invariantize(const HarmonicLabel& l, const Params& p, CosetSum kind = CosetSum::Full) {
  if (l.eps != 0 || l.n % 2 != 0) throw std::invalid_argument("invariantize: needs h_{n,0} with n even");
  return invariantize(build_harmonic(l, p).poly, kind);
}

/// True if f is fixed by every sign change and every transposition.
inline bool is_group_invariant(const MultiPoly& f) {
  const std::size_t N = f.nvars();
  for (std::size_t i = 1; i <= N; ++i) {
    if (!(apply_reflection(Reflection::sign_change(i), f) == f)) return false;
    for (std::size_t j = i + 1; j <= N; ++j)
      if (!(apply_reflection(Reflection::transposition(i, j), f) == f)) return false;
  }
  return true;
}

}  // namespace planarharm
