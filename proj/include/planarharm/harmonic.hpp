#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planarharm/dunkl.hpp"
#include "planarharm/hypergeometric.hpp"
#include "planarharm/planar.hpp"

namespace planarharm {

/// h_{n,eps}: x1^n x2^eps is its term with the highest power of x1, so the
/// total degree is n + eps.
struct HarmonicLabel {
  int n = 0;
  int eps = 0;

  int degree() const { return n + eps; }
  int residue() const { return n % 4; }
  int quarter() const { return n / 4; }
  bool valid() const { return n >= 0 && (eps == 0 || eps == 1); }

  auto operator<=>(const HarmonicLabel&) const = default;
};

inline std::string to_string(const HarmonicLabel& l) {
  return "h_{" + std::to_string(l.n) + "," + std::to_string(l.eps) + "}";
}

/// Coordinates of h in one basis family: sum_i coeffs[i] * (x1x2)? B_{order,i}.
struct BasisExpansion {
  BasisKind kind;
  bool x1x2 = false;
  int order = 0;
  std::vector<Rational> coeffs;  // index i = 0..order

  MultiPoly materialize(const PlanarBasis& basis) const {
    MultiPoly out(static_cast<std::size_t>(basis.params().N()));
    for (int i = 0; i <= order; ++i)
      if (coeffs[i] != 0) out += basis.get({kind, order, i, x1x2}) * coeffs[i];
    return out;
  }
};

struct HarmonicPoly {
  HarmonicLabel label;
  /// Present for the six families given directly in the basis; absent for
  /// h_{4n,1} and h_{4n+2,1}, which are sigma_12 images.
  std::optional<BasisExpansion> expansion;
  MultiPoly poly;
};

/// Basis order needed to build h_{label}.
inline int required_order(const HarmonicLabel& l) {
  const int q = l.quarter();
  switch (l.residue()) {
    case 0: return 2 * q;
    case 1: return 2 * q;
    case 2: return 2 * q + 1;
    default: return 2 * q + 1;
  }
}

/// Pochhammer-ratio coefficients of h in the phi/psi basis. Returns nullopt
/// for the sigma_12-defined families (eps = 1, n even).
inline std::optional<BasisExpansion> harmonic_coefficients(const HarmonicLabel& l, const Params& p) {
  if (!l.valid()) throw std::invalid_argument("invalid harmonic label");
  const int q = l.quarter();
  const Rational Nk = p.N() * p.k();
  const Rational A = (p.N() - 1) * p.k() + p.k2();  // 2(N-1)k + k1 + 1/2
  const Rational& k2 = p.k2();
  const Rational half(1, 2);

  // sum_j (top)_j (1/2)_j / ((mid)_j (bot)_j) at the even slots 2j.
  auto even_sum = [&](BasisExpansion& e, const Rational& top, const Rational& mid, const Rational& bot) {
    for (int j = 0; j <= q; ++j)
      e.coeffs[2 * j] = pochhammer(top, j) * pochhammer(half, j) / (pochhammer(mid, j) * pochhammer(bot, j));
  };

  const int r = l.residue();
  if (l.eps == 1 && (r == 0 || r == 2)) return std::nullopt;
  BasisExpansion e;
  e.order = required_order(l);
  e.coeffs.assign(e.order + 1, Rational(0));
  if (l.eps == 0 && r == 0) {
    e.kind = BasisKind::Phi;
    even_sum(e, A + 2 * q, k2 + q, Nk + q + 1);
  } else if (l.eps == 0 && r == 2) {
    e.kind = BasisKind::Phi;
    even_sum(e, A + 1 + 2 * q, k2 + 1 + q, Nk + q + 2);
  } else if (l.eps == 1 && r == 1) {
    e.kind = BasisKind::Phi;
    e.x1x2 = true;
    even_sum(e, A + 1 + 2 * q, k2 + 1 + q, Nk + q + 1);
  } else if (l.eps == 1 && r == 3) {
    e.kind = BasisKind::Phi;
    e.x1x2 = true;
    even_sum(e, A + 2 + 2 * q, k2 + 2 + q, Nk + q + 2);
  } else if (l.eps == 0 && r == 1) {
    e.kind = BasisKind::Psi;
    const Rational top = A + 1 + 2 * q, mid = k2 + 1 + q, bot = Nk + q + 1;
    even_sum(e, top, mid, bot);
    for (int j = 1; j <= q; ++j)
      e.coeffs[2 * j - 1] =
          pochhammer(top, j - 1) * pochhammer(half, j) / (pochhammer(mid, j - 1) * pochhammer(bot, j));
  } else {  // eps == 0, r == 3
    e.kind = BasisKind::Psi;
    const Rational top = A + 2 + 2 * q, mid = k2 + 1 + q, bot = Nk + q + 2;
    even_sum(e, top, mid, bot);
    for (int j = 1; j <= q + 1; ++j)
      e.coeffs[2 * j - 1] =
          pochhammer(top, j - 1) * pochhammer(half, j) / (pochhammer(mid, j) * pochhammer(bot, j - 1));
  }
  return e;
}

/// The sigma_12 partner defining h_{4n,1} and h_{4n+2,1}.
inline HarmonicLabel sigma12_source(const HarmonicLabel& l) { return {l.n + 1, 0}; }

/// Builds h_{label} over an existing basis (which must reach the required order).
inline HarmonicPoly build_harmonic(const HarmonicLabel& l, const PlanarBasis& basis) {
  const Params& p = basis.params();
  if (auto e = harmonic_coefficients(l, p)) {
    MultiPoly poly = e->materialize(basis);
    return {l, std::move(e), std::move(poly)};
  }
  const HarmonicPoly src = build_harmonic(sigma12_source(l), basis);
  return {l, std::nullopt, apply_reflection(Reflection::transposition(1, 2), src.poly)};
}

inline HarmonicPoly build_harmonic(const HarmonicLabel& l, const Params& p) {
  const int order = required_order(l.eps == 1 && l.n % 2 == 0 ? sigma12_source(l) : l);
  return build_harmonic(l, PlanarBasis(p, order));
}

/// Memo table of materialised harmonics for one parameter set. Thread-safe;
/// inserts are idempotent.
class HarmonicCache {
 public:
  explicit HarmonicCache(Params params) : params_(std::move(params)) {}

  const Params& params() const { return params_; }

  const HarmonicPoly& get(const HarmonicLabel& l) {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(l); it != memo_.end()) return it->second;
    const int order = required_order(l.eps == 1 && l.n % 2 == 0 ? sigma12_source(l) : l);
    if (!basis_ || basis_->max_n() < order)
      basis_ = std::make_shared<const PlanarBasis>(params_, std::max(order, basis_ ? basis_->max_n() + 2 : order));
    return memo_.emplace(l, build_harmonic(l, *basis_)).first->second;
  }

  std::shared_ptr<const PlanarBasis> basis(int order) {
    std::lock_guard lock(mutex_);
    if (!basis_ || basis_->max_n() < order) basis_ = std::make_shared<const PlanarBasis>(params_, order);
    return basis_;
  }

 private:
  Params params_;
  std::mutex mutex_;
  std::shared_ptr<const PlanarBasis> basis_;
  std::map<HarmonicLabel, HarmonicPoly> memo_;
};

/// T_i h_{label} = scalar * h_{target}; target is empty when its degree
/// would be negative (then T_i h = 0).
struct LadderStep {
  Rational scalar;
  std::optional<HarmonicLabel> target;
};

/// The T_1 / T_2 ladder on the harmonic family, including the rows for
/// h_{n,1} with n even obtained by conjugating with sigma_12.
inline LadderStep ladder_apply(int i, const HarmonicLabel& l, const Params& p) {
  if (i != 1 && i != 2) throw std::invalid_argument("ladder_apply: only T_1 and T_2 act within the family");
  if (!l.valid()) throw std::invalid_argument("invalid harmonic label");
  const int q = l.quarter();
  const Rational Nm1k = (p.N() - 1) * p.k();
  const Rational Nk = p.N() * p.k();
  const Rational& k2 = p.k2();
  const Rational k2mk = k2 - p.k();  // (N-2)k + k1 + 1/2
  auto step = [](Rational s, int n, int eps) {
    LadderStep out{std::move(s), std::nullopt};
    if (n >= 0) out.target = HarmonicLabel{n, eps};
    return out;
  };
  const int base = 4 * q;
  if (i == 1) {
    if (l.eps == 0) {
      switch (l.residue()) {
        case 0: return step(2 * (Nm1k + q), base - 1, 0);
        case 1: return step(2 * (k2 + q), base, 0);
        case 2: return step(2 * (Nk + q + 1), base + 1, 0);
        default: return step(-2 * (k2mk + q), base + 2, 0);
      }
    }
    switch (l.residue()) {
      case 0: return step(-2 * (Nm1k + q), base - 1, 1);
      case 1: return step(2 * (k2mk + q), base, 1);
      case 2: return step(2 * (Nk + q + 1), base + 1, 1);
      default: return step(2 * (k2 + q + 1), base + 2, 1);
    }
  }
  if (l.eps == 0) {
    switch (l.residue()) {
      case 0: return step(2 * (Nm1k + q), base - 2, 1);
      case 1: return step(2 * (Nm1k + q), base - 1, 1);
      case 2: return step(-2 * (Nk + q + 1), base, 1);
      default: return step(2 * (Nk + q + 1), base + 1, 1);
    }
  }
  switch (l.residue()) {
    case 0: return step(2 * (k2 + q), base, 0);
    case 1: return step(2 * (k2mk + q), base + 1, 0);
    case 2: return step(2 * (k2mk + q), base + 2, 0);
    default: return step(-2 * (k2 + q + 1), base + 3, 0);
  }
}

/// The four coefficient maps T* acting on basis coordinates.
enum class LadderCase {
  T1PhiToPsi,      // T_1 sum c_i phi_{m,i} = sum (T*c)_i psi_{m-1,i}
  T1PsiToPhi,      // T_1 sum c_i psi_{m,i} = sum (T*c)_i phi_{m,i}
  T2PsiToX1X2Phi,  // T_2 sum c_i psi_{m,i} = sum (T*c)_i x1 x2 phi_{m-1,i}
  T2X1X2PhiToPsi,  // T_2 sum c_i x1 x2 phi_{m,i} = sum (T*c)_i psi_{m,i}
};

inline std::vector<Rational> coefficient_ladder(LadderCase which, const std::vector<Rational>& c, int m,
                                                const Params& p) {
  if (static_cast<int>(c.size()) != m + 1) throw std::invalid_argument("coefficient_ladder: need m+1 coefficients");
  auto at = [&](int i) { return i < 0 || i > m ? Rational(0) : c[i]; };
  const Rational Nk = p.N() * p.k();
  const Rational Nm1k = (p.N() - 1) * p.k();
  const Rational& k2 = p.k2();
  const bool lowers = which == LadderCase::T1PhiToPsi || which == LadderCase::T2PsiToX1X2Phi;
  const int len = lowers ? m : m + 1;
  std::vector<Rational> out(std::max(len, 0), Rational(0));
  for (int i = 0; i < len; ++i) {
    const bool even = (m + i) % 2 == 0;
    switch (which) {
      case LadderCase::T1PhiToPsi:
        out[i] = even ? Rational((2 * Nm1k + m) * at(i) + i * at(i - 1))
                      : Rational((2 * Nk + m + i + 1) * (at(i + 1) + at(i)) - i * at(i - 1));
        break;
      case LadderCase::T1PsiToPhi:
        out[i] = even ? Rational((2 * k2 + m + i) * at(i) - i * at(i - 1))
                      : Rational((2 * k2 + m + i + 1) * at(i + 1) - (2 * k2 - 2 * p.k() + m) * at(i) - i * at(i - 1));
        break;
      case LadderCase::T2PsiToX1X2Phi:
        out[i] = even ? Rational((2 * Nm1k + m + 1) * at(i) - (2 * Nk + m + i + 2) * at(i + 1) + i * at(i - 1))
                      : Rational((2 * Nk + m + i + 1) * at(i) - i * at(i - 1));
        break;
      case LadderCase::T2X1X2PhiToPsi:
        out[i] = even ? Rational((2 * k2 - 2 * p.k() + m) * at(i) - i * at(i - 1))
                      : Rational((2 * k2 + m + i + 1) * (at(i + 1) - at(i)) - i * at(i - 1));
        break;
    }
  }
  return out;
}

/// Which coefficient map carries T_i on the basis family of `e`, if any.
inline std::optional<LadderCase> ladder_case(int i, const BasisExpansion& e) {
  if (i == 1 && e.kind == BasisKind::Phi && !e.x1x2) return LadderCase::T1PhiToPsi;
  if (i == 1 && e.kind == BasisKind::Psi) return LadderCase::T1PsiToPhi;
  if (i == 2 && e.kind == BasisKind::Psi) return LadderCase::T2PsiToX1X2Phi;
  if (i == 2 && e.kind == BasisKind::Phi && e.x1x2) return LadderCase::T2X1X2PhiToPsi;
  return std::nullopt;
}

/// sigma_12 h = sign * h for the four families with a definite sign.
struct SymmetryReport {
  int expected_sign;
  bool holds;
};

inline std::optional<int> sigma12_sign(const HarmonicLabel& l) {
  if (l.eps == 0 && l.residue() == 0) return 1;
  if (l.eps == 1 && l.residue() == 1) return 1;
  if (l.eps == 0 && l.residue() == 2) return -1;
  if (l.eps == 1 && l.residue() == 3) return -1;
  return std::nullopt;
}

inline SymmetryReport symmetry_check(const HarmonicPoly& h) {
  const auto sign = sigma12_sign(h.label);
  if (!sign) throw std::invalid_argument("symmetry_check: " + to_string(h.label) + " has no definite sigma_12 sign");
  const MultiPoly image = apply_reflection(Reflection::transposition(1, 2), h.poly);
  return {*sign, image == h.poly * Rational(*sign)};
}

inline SymmetryReport symmetry_check(const HarmonicLabel& l, const Params& p) {
  return symmetry_check(build_harmonic(l, p));
}

}  // namespace planarharm
