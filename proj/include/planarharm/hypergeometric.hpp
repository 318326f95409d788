#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "planarharm/rational.hpp"

namespace planarharm {

/// Rising factorial (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
inline Rational pochhammer(const Rational& a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational r(1);
  for (int i = 0; i < n; ++i) r *= a + i;
  return r;
}

inline Rational factorial(int n) { return pochhammer(Rational(1), n); }

/// Terminating pFq series at argument 1.
struct HypSeries {
  std::vector<Rational> upper;
  std::vector<Rational> lower;

  /// Smallest n with some upper parameter equal to -n, if any.
  std::optional<int> termination_index() const {
    std::optional<int> best;
    for (const auto& u : upper)
      if (u <= 0 && is_integer(u)) {
        const int n = static_cast<int>(-u.get_num().get_si());
        if (!best || n < *best) best = n;
      }
    return best;
  }

  /// Saalschutzian: sum(upper) + 1 == sum(lower).
  bool balanced() const {
    Rational su(1), sl(0);
    for (const auto& u : upper) su += u;
    for (const auto& l : lower) sl += l;
    return su == sl;
  }
};

/// Exact value of a terminating series, summed with running Pochhammer
/// updates. Throws if a lower parameter vanishes before termination.
inline Rational hyp_sum(const HypSeries& s) {
  const auto n = s.termination_index();
  if (!n) throw std::domain_error("hyp_sum: series does not terminate");
  Rational term(1), sum(1);
  for (int i = 0; i < *n; ++i) {
    Rational num(1), den(i + 1);
    for (const auto& u : s.upper) num *= u + i;
    for (const auto& l : s.lower) den *= l + i;
    if (den == 0) throw std::domain_error("hyp_sum: lower parameter hits zero before termination");
    term *= num / den;
    sum += term;
  }
  return sum;
}

/// Result of the Whipple transformation
///   4F3(-n,a,b,c; d,e,f) = prefactor * 4F3(-n, a, d-b, d-c; d, 1+a-e-n, 1+a-f-n).
struct WhippleResult {
  Rational prefactor;
  HypSeries transformed;
};

/// Applies the Whipple transformation to a balanced terminating 4F3 whose
/// upper list is (-n, a, b, c) in that order and lower list is (d, e, f).
inline WhippleResult whipple_transform(const HypSeries& s) {
  if (s.upper.size() != 4 || s.lower.size() != 3) throw std::invalid_argument("whipple_transform: expects a 4F3");
  const Rational& lead = s.upper[0];
  if (!(lead <= 0 && is_integer(lead)))
    throw std::invalid_argument("whipple_transform: first upper parameter must be -n");
  if (!s.balanced()) throw std::invalid_argument("whipple_transform: series is not balanced");
  const int n = static_cast<int>(-lead.get_num().get_si());
  const Rational &a = s.upper[1], &b = s.upper[2], &c = s.upper[3];
  const Rational &d = s.lower[0], &e = s.lower[1], &f = s.lower[2];
  const Rational e2 = 1 + a - e - n;
  const Rational f2 = 1 + a - f - n;
  const Rational den = pochhammer(e, n) * pochhammer(f, n);
  if (den == 0) throw std::domain_error("whipple_transform: (e)_n (f)_n vanishes");
  WhippleResult r;
  r.prefactor = pochhammer(e2, n) * pochhammer(f2, n) / den;
  r.transformed = HypSeries{{lead, a, d - b, d - c}, {d, e2, f2}};
  return r;
}

}  // namespace planarharm
