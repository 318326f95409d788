#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "planarharm/monomial.hpp"
#include "planarharm/rational.hpp"

namespace planarharm {

// Variable-world tags. A polynomial in y_i = x_i^2 and one in the formal
// p-variables share the representation but must not be mixed by accident.
struct XVars {};
struct YVars {};
struct PVars {};

/// Sparse multivariate polynomial over Rational. Terms are kept in graded
/// lexicographic order (leading term first) with no stored zeros.
template <typename World>
class BasicPoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  BasicPoly() = default;
  explicit BasicPoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
  }

  static BasicPoly constant(std::size_t nvars, const Rational& c) {
    BasicPoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }

  /// The variable with 1-based number `var`.
  static BasicPoly variable(std::size_t nvars, std::size_t var) {
    BasicPoly p(nvars);
    p.add_term(Monomial(nvars).with(check_var(nvars, var) - 1, 1), Rational(1));
    return p;
  }

  static BasicPoly monomial(const Monomial& m, const Rational& c = Rational(1)) {
    BasicPoly p(m.nvars());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree()); }

  bool is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial length does not match polynomial");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BasicPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(BasicPoly a) { return a *= Rational(-1); }
  friend BasicPoly operator*(BasicPoly a, const Rational& s) { return a *= s; }
  friend BasicPoly operator*(const Rational& s, BasicPoly a) { return a *= s; }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    a.check_same(b);
    BasicPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Rewrites every monomial through `f`, which returns the image monomial
  /// and a sign (+1 or -1).
  template <typename F>
  BasicPoly map_monomials(F&& f) const {
    BasicPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      auto [image, sign] = f(m);
      r.add_term(image, sign < 0 ? Rational(-c) : c);
    }
    return r;
  }

  /// Partial derivative with respect to the 1-based variable `var`.
  BasicPoly derivative(std::size_t var) const {
    const std::size_t slot = check_var(nvars_, var) - 1;
    BasicPoly r(nvars_);
    for (const auto& [m, c] : terms_)
      if (m[slot] > 0) r.add_term(m.with(slot, static_cast<int>(m[slot]) - 1), c * m[slot]);
    return r;
  }

  /// Homogeneous component of the given degree.
  BasicPoly homogeneous_part(unsigned deg) const {
    BasicPoly r(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == deg) r.terms_.emplace(m, c);
    return r;
  }

 private:
  static std::size_t check_var(std::size_t nvars, std::size_t var) {
    if (var < 1 || var > nvars) throw std::out_of_range("variable index " + std::to_string(var) + " out of range");
    return var;
  }
  void check_same(const BasicPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("mismatched ambient dimension");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

using MultiPoly = BasicPoly<XVars>;
using YPoly = BasicPoly<YVars>;
using PPoly = BasicPoly<PVars>;

template <typename W>
BasicPoly<W> poly_add(const BasicPoly<W>& a, const BasicPoly<W>& b) {
  return a + b;
}

template <typename W>
BasicPoly<W> poly_mul(const BasicPoly<W>& a, const BasicPoly<W>& b) {
  return a * b;
}

/// Exact value at `point`.
template <typename W>
Rational poly_eval(const BasicPoly<W>& p, std::span<const Rational> point) {
  if (point.size() != p.nvars()) throw std::invalid_argument("evaluation point has wrong length");
  std::vector<std::vector<Rational>> powers(p.nvars());
  auto power = [&](std::size_t slot, unsigned e) -> const Rational& {
    auto& cache = powers[slot];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * point[slot]);
    return cache[e];
  };
  Rational sum(0);
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t s = 0; s < p.nvars() && t != 0; ++s)
      if (m[s] != 0) t *= power(s, m[s]);
    sum += t;
  }
  return sum;
}

/// One of the three structured divisors c*x_i, c*(x_i - x_j), c*(x_i + x_j)
/// (1-based variable numbers; j == 0 means the single-variable form).
struct LinearDivisor {
  std::size_t i = 0;
  std::size_t j = 0;
  int sign = 1;  // x_i + sign * x_j
  Rational scale = 1;
};

/// Recognises `d` as a structured divisor, or returns nullopt.
template <typename W>
std::optional<LinearDivisor> as_linear_divisor(const BasicPoly<W>& d) {
  if (d.size() == 0 || d.size() > 2 || d.degree() != 1 || !d.is_homogeneous()) return std::nullopt;
  std::vector<std::pair<std::size_t, Rational>> parts;
  for (const auto& [m, c] : d.terms())
    for (std::size_t s = 0; s < d.nvars(); ++s)
      if (m[s] == 1) parts.emplace_back(s + 1, c);
  if (parts.size() == 1) return LinearDivisor{parts[0].first, 0, 1, parts[0].second};
  if (abs(parts[0].second) != abs(parts[1].second)) return std::nullopt;
  const int sign = sgn(parts[0].second) == sgn(parts[1].second) ? 1 : -1;
  return LinearDivisor{parts[0].first, parts[1].first, sign, parts[0].second};
}

/// Exact quotient p / d for a structured divisor. A nonzero remainder means
/// an upstream invariant is broken and raises std::domain_error.
template <typename W>
BasicPoly<W> exact_divide(const BasicPoly<W>& p, const LinearDivisor& d) {
  const std::size_t n = p.nvars();
  if (d.i < 1 || d.i > n || d.j > n || d.i == d.j || d.scale == 0)
    throw std::invalid_argument("invalid structured divisor");
  const std::size_t si = d.i - 1;
  const Rational inv = 1 / d.scale;
  BasicPoly<W> q(n);
  if (d.j == 0) {
    for (const auto& [m, c] : p.terms()) {
      if (m[si] == 0) throw std::domain_error("exact_divide: nonzero remainder (x_i divisor)");
      q.add_term(m.with(si, static_cast<int>(m[si]) - 1), c * inv);
    }
    return q;
  }
  // Synthetic division in x_i: strip the highest x_i-power and push the
  // x_j correction down one level.
  const std::size_t sj = d.j - 1;
  std::vector<std::map<Monomial, Rational, GrlexGreater>> buckets;
  for (const auto& [m, c] : p.terms()) {
    if (buckets.size() <= m[si]) buckets.resize(m[si] + 1);
    buckets[m[si]].emplace(m, c);
  }
  for (std::size_t a = buckets.size(); a-- > 1;) {
    for (const auto& [m, c] : buckets[a]) {
      if (c == 0) continue;
      const Monomial qm = m.with(si, static_cast<int>(a) - 1);
      q.add_term(qm, c * inv);
      const Monomial down = qm.with(sj, static_cast<int>(qm[sj]) + 1);
      auto [it, inserted] = buckets[a - 1].try_emplace(down, 0);
      if (d.sign > 0)
        it->second -= c;
      else
        it->second += c;
    }
  }
  if (!buckets.empty())
    for (const auto& [m, c] : buckets[0])
      if (c != 0) throw std::domain_error("exact_divide: nonzero remainder (x_i +/- x_j divisor)");
  return q;
}

template <typename W>
BasicPoly<W> exact_divide(const BasicPoly<W>& p, const BasicPoly<W>& d) {
  if (p.nvars() != d.nvars()) throw std::invalid_argument("mismatched ambient dimension");
  const auto ld = as_linear_divisor(d);
  if (!ld) throw std::invalid_argument("exact_divide supports only x_i and x_i +/- x_j divisors");
  return exact_divide(p, *ld);
}

/// Same coefficients, reinterpreted in another variable world.
template <typename To, typename From>
BasicPoly<To> relabel(const BasicPoly<From>& p) {
  BasicPoly<To> r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(m, c);
  return r;
}

/// Substitutes y_i = x_i^2.
inline MultiPoly squares_to_x(const YPoly& g) {
  MultiPoly r(g.nvars());
  for (const auto& [m, c] : g.terms()) {
    Monomial x(m.nvars());
    for (std::size_t s = 0; s < m.nvars(); ++s) x.set(s, 2 * static_cast<int>(m[s]));
    r.add_term(x, c);
  }
  return r;
}

/// Inverse of squares_to_x; throws if some exponent is odd.
inline YPoly x_to_squares(const MultiPoly& f) {
  YPoly r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    Monomial y(m.nvars());
    for (std::size_t s = 0; s < m.nvars(); ++s) {
      if (m[s] % 2 != 0) throw std::domain_error("polynomial is not even in every variable");
      y.set(s, static_cast<int>(m[s]) / 2);
    }
    r.add_term(y, c);
  }
  return r;
}

/// Embeds into a larger ambient dimension (new slots get exponent 0).
template <typename W>
BasicPoly<W> widen(const BasicPoly<W>& p, std::size_t nvars) {
  if (nvars < p.nvars()) throw std::invalid_argument("widen: cannot shrink");
  BasicPoly<W> r(nvars);
  for (const auto& [m, c] : p.terms()) {
    Monomial w(nvars);
    for (std::size_t s = 0; s < m.nvars(); ++s) w.set(s, m[s]);
    r.add_term(w, c);
  }
  return r;
}

}  // namespace planarharm
