#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "planarharm/poly.hpp"

namespace planarharm {

/// Double power series sum_{n,j} c_{n,j} s^j t^n truncated at t^max_n, with
/// polynomial coefficients. Entries outside 0 <= j <= max_n are zero.
template <typename World>
class Series2 {
 public:
  using Poly = BasicPoly<World>;

  Series2(std::size_t nvars, int max_n)
      : nvars_(nvars), max_n_(max_n), zero_(nvars), c_(max_n + 1, std::vector<Poly>(max_n + 1, Poly(nvars))) {
    if (max_n < 0) throw std::invalid_argument("Series2: negative truncation order");
  }

  static Series2 one(std::size_t nvars, int max_n) {
    Series2 s(nvars, max_n);
    s.c_[0][0] = Poly::constant(nvars, Rational(1));
    return s;
  }

  std::size_t nvars() const { return nvars_; }
  int max_n() const { return max_n_; }

  const Poly& at(int n, int j) const {
    if (n < 0 || j < 0 || n > max_n_ || j > max_n_) return zero_;
    return c_[n][j];
  }

  void add(int n, int j, const Poly& p) {
    if (n > max_n_) return;
    if (n < 0 || j < 0 || j > max_n_) throw std::out_of_range("Series2: s-degree out of range");
    c_[n][j] += p;
  }

  Series2& operator+=(const Series2& o) {
    check(o);
    for (int n = 0; n <= max_n_; ++n)
      for (int j = 0; j <= max_n_; ++j) c_[n][j] += o.c_[n][j];
    return *this;
  }
  Series2& operator-=(const Series2& o) {
    check(o);
    for (int n = 0; n <= max_n_; ++n)
      for (int j = 0; j <= max_n_; ++j) c_[n][j] -= o.c_[n][j];
    return *this;
  }
  friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
  friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }

  friend Series2 operator*(const Series2& a, const Series2& b) {
    a.check(b);
    Series2 r(a.nvars_, a.max_n_);
    for (int n1 = 0; n1 <= a.max_n_; ++n1)
      for (int j1 = 0; j1 <= a.max_n_; ++j1) {
        const Poly& x = a.c_[n1][j1];
        if (x.is_zero()) continue;
        for (int n2 = 0; n1 + n2 <= a.max_n_; ++n2)
          for (int j2 = 0; j1 + j2 <= a.max_n_; ++j2) {
            const Poly& y = b.c_[n2][j2];
            if (!y.is_zero()) r.c_[n1 + n2][j1 + j2] += x * y;
          }
      }
    return r;
  }

  /// Every coefficient multiplied by the same polynomial.
  friend Series2 operator*(const Poly& p, const Series2& a) {
    Series2 r(a.nvars_, a.max_n_);
    for (int n = 0; n <= a.max_n_; ++n)
      for (int j = 0; j <= a.max_n_; ++j)
        if (!a.c_[n][j].is_zero()) r.c_[n][j] = p * a.c_[n][j];
    return r;
  }

  friend Series2 operator*(const Rational& s, Series2 a) {
    for (auto& row : a.c_)
      for (auto& p : row) p *= s;
    return a;
  }

  /// Multiplication by t^dt s^ds, truncated.
  Series2 shifted(int dt, int ds) const {
    Series2 r(nvars_, max_n_);
    for (int n = 0; n + dt <= max_n_; ++n)
      for (int j = 0; j <= max_n_; ++j) {
        if (c_[n][j].is_zero()) continue;
        if (j + ds > max_n_ || j + ds < 0) throw std::out_of_range("Series2: s-shift leaves storage");
        r.c_[n + dt][j + ds] = c_[n][j];
      }
    return r;
  }

  /// Applies `f` to every coefficient.
  template <typename F>
  Series2 map(F&& f) const {
    Series2 r(nvars_, max_n_);
    for (int n = 0; n <= max_n_; ++n)
      for (int j = 0; j <= max_n_; ++j)
        if (!c_[n][j].is_zero()) r.c_[n][j] = f(c_[n][j]);
    return r;
  }

  friend bool operator==(const Series2& a, const Series2& b) {
    return a.nvars_ == b.nvars_ && a.max_n_ == b.max_n_ && a.c_ == b.c_;
  }

 private:
  void check(const Series2& o) const {
    if (o.nvars_ != nvars_ || o.max_n_ != max_n_) throw std::invalid_argument("Series2: shape mismatch");
  }

  std::size_t nvars_;
  int max_n_;
  Poly zero_;
  std::vector<std::vector<Poly>> c_;
};

/// Coefficients of the Gegenbauer polynomials C_m^{(c)}(s), m = 0..max_m,
/// as coefficient lists in s, from
///   (m+1) C_{m+1} = 2(c+m) s C_m - (2c+m-1) C_{m-1}.
inline std::vector<std::vector<Rational>> gegenbauer_coefficients(const Rational& c, int max_m) {
  std::vector<std::vector<Rational>> C;
  C.push_back({Rational(1)});
  if (max_m >= 1) C.push_back({Rational(0), 2 * c});
  for (int m = 1; m < max_m; ++m) {
    std::vector<Rational> next(m + 2, Rational(0));
    for (int j = 0; j <= m; ++j) next[j + 1] += 2 * (c + m) * C[m][j];
    for (int j = 0; j < m; ++j) next[j] -= (2 * c + m - 1) * C[m - 1][j];
    for (auto& v : next) v /= m + 1;
    C.push_back(std::move(next));
  }
  return C;
}

/// (1 - 2 s t u + t^2 u^2)^{-c} with u = v^power for the 1-based variable v.
template <typename World>
Series2<World> gegenbauer_factor(std::size_t nvars, std::size_t var, int power, const Rational& c, int max_n) {
  Series2<World> out(nvars, max_n);
  const auto C = gegenbauer_coefficients(c, max_n);
  for (int m = 0; m <= max_n; ++m) {
    const Monomial u = Monomial(nvars).with(var - 1, power * m);
    for (int j = 0; j <= m; ++j)
      if (C[m][j] != 0) out.add(m, j, BasicPoly<World>::monomial(u, C[m][j]));
  }
  return out;
}

}  // namespace planarharm
