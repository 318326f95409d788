#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "planarharm/params.hpp"
#include "planarharm/poly.hpp"

namespace planarharm {

/// A reflection of the hyperoctahedral group W_N. Indices are 1-based.
struct Reflection {
  enum class Kind { SignChange, Transposition, SignedTransposition };
  Kind kind;
  std::size_t i;
  std::size_t j = 0;

  static Reflection sign_change(std::size_t i) { return {Kind::SignChange, i, 0}; }
  static Reflection transposition(std::size_t i, std::size_t j) { return {Kind::Transposition, i, j}; }
  static Reflection signed_transposition(std::size_t i, std::size_t j) {
    return {Kind::SignedTransposition, i, j};
  }
};

/// f(x r): composes f with the coordinate map of the reflection.
template <typename W>
BasicPoly<W> apply_reflection(const Reflection& r, const BasicPoly<W>& f) {
  const std::size_t n = f.nvars();
  if (r.i < 1 || r.i > n) throw std::out_of_range("reflection index out of range");
  const std::size_t a = r.i - 1;
  if (r.kind == Reflection::Kind::SignChange)
    return f.map_monomials([a](const Monomial& m) { return std::pair{m, m[a] % 2 ? -1 : 1}; });
  if (r.j < 1 || r.j > n || r.j == r.i) throw std::out_of_range("reflection index out of range");
  const std::size_t b = r.j - 1;
  if (r.kind == Reflection::Kind::Transposition)
    return f.map_monomials([a, b](const Monomial& m) { return std::pair{m.swapped(a, b), 1}; });
  return f.map_monomials(
      [a, b](const Monomial& m) { return std::pair{m.swapped(a, b), (m[a] + m[b]) % 2 ? -1 : 1}; });
}

namespace detail {

inline void check_index(std::size_t i, std::size_t n) {
  if (i < 1 || i > n) throw std::out_of_range("operator index " + std::to_string(i) + " out of range");
}

template <typename W>
BasicPoly<W> divided_difference(const BasicPoly<W>& f, const BasicPoly<W>& reflected, const LinearDivisor& d) {
  BasicPoly<W> num = f - reflected;
  if (num.is_zero()) return BasicPoly<W>(f.nvars());
  return exact_divide(num, d);
}

}  // namespace detail

/// Type-B Dunkl operator T_i (1-based i):
///   d/dx_i + k1 (1 - sigma_i)/x_i
///          + k sum_{j != i} [(1 - sigma_ij)/(x_i - x_j) + (1 - tau_ij)/(x_i + x_j)].
inline MultiPoly dunkl_T(std::size_t i, const MultiPoly& f, const Params& params) {
  const std::size_t n = f.nvars();
  detail::check_index(i, n);
  MultiPoly out = f.derivative(i);
  if (f.is_zero()) return out;
  if (params.k1() != 0) {
    MultiPoly t = detail::divided_difference(f, apply_reflection(Reflection::sign_change(i), f), {i, 0, 1, 1});
    out += t * params.k1();
  }
  if (params.k() != 0) {
    MultiPoly acc(n);
    for (std::size_t j = 1; j <= n; ++j) {
      if (j == i) continue;
      acc += detail::divided_difference(f, apply_reflection(Reflection::transposition(i, j), f), {i, j, -1, 1});
      acc += detail::divided_difference(f, apply_reflection(Reflection::signed_transposition(i, j), f),
                                        {i, j, +1, 1});
    }
    out += acc * params.k();
  }
  return out;
}

/// Type-A Dunkl operator on polynomials in y: d/dy_i + k sum_{j != i} (1 - (ij))/(y_i - y_j).
inline YPoly dunkl_hatT(std::size_t i, const YPoly& g, const Params& params) {
  const std::size_t n = g.nvars();
  detail::check_index(i, n);
  YPoly out = g.derivative(i);
  if (g.is_zero() || params.k() == 0) return out;
  YPoly acc(n);
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == i) continue;
    acc += detail::divided_difference(g, apply_reflection(Reflection::transposition(i, j), g), {i, j, -1, 1});
  }
  out += acc * params.k();
  return out;
}

/// Delta_B f = sum_i T_i(T_i f).
inline MultiPoly laplacian_B(const MultiPoly& f, const Params& params) {
  MultiPoly out(f.nvars());
  for (std::size_t i = 1; i <= f.nvars(); ++i) out += dunkl_T(i, dunkl_T(i, f, params), params);
  return out;
}

/// Product of Dunkl operators T_1^{a_1} ... T_N^{a_N} applied to f.
inline MultiPoly dunkl_power(std::span<const int> exps, MultiPoly f, const Params& params) {
  for (std::size_t v = exps.size(); v-- > 0;)
    for (int r = 0; r < exps[v] && !f.is_zero(); ++r) f = dunkl_T(v + 1, f, params);
  return f;
}

/// Right-hand side of the lifting formula for T_i on f = x^eps g(y), with
/// each eps_j in {0,1}:
///   eps_i = 0:  2 x_i x^eps (hatT_i g)
///   eps_i = 1:  2 (x^eps / x_i) ((k1 - 1/2) g + hatT_i(y_i g) - k sum_{j != i, eps_j = 1} (ij) g)
/// Serves as an independent route to dunkl_T.
inline MultiPoly lift_check(std::span<const int> eps, const YPoly& g, std::size_t i, const Params& params) {
  const std::size_t n = g.nvars();
  detail::check_index(i, n);
  if (eps.size() != n) throw std::invalid_argument("lift_check: eps has wrong length");
  Monomial xe(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (eps[s] != 0 && eps[s] != 1) throw std::invalid_argument("lift_check: eps entries must be 0 or 1");
    xe.set(s, eps[s]);
  }
  if (eps[i - 1] == 0) {
    const MultiPoly inner = squares_to_x(dunkl_hatT(i, g, params));
    return MultiPoly::monomial(xe.with(i - 1, 1), Rational(2)) * inner;
  }
  YPoly inner = g * (params.k1() - Rational(1, 2));
  inner += dunkl_hatT(i, YPoly::variable(n, i) * g, params);
  for (std::size_t j = 1; j <= n; ++j)
    if (j != i && eps[j - 1] == 1) inner -= apply_reflection(Reflection::transposition(i, j), g) * params.k();
  return MultiPoly::monomial(xe.with(i - 1, 0), Rational(2)) * squares_to_x(inner);
}

}  // namespace planarharm
