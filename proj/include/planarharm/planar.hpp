#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "planarharm/params.hpp"
#include "planarharm/poly.hpp"
#include "planarharm/series.hpp"

namespace planarharm {

enum class BasisKind { Phi, Psi };

/// Which term of the generating function sources an entry.
enum class ParitySource {
  F0Term,  // phi, n+j even
  F1Term,  // phi, n+j odd
  X1G0,    // psi, n+j even: x1 (F0 + s F1)
  X1G1,    // psi, n+j odd: -x1 F1
};

inline ParitySource parity_split(BasisKind kind, int n, int j) {
  if (j < 0 || j > n) throw std::out_of_range("parity_split: need 0 <= j <= n");
  const bool even = (n + j) % 2 == 0;
  if (kind == BasisKind::Phi) return even ? ParitySource::F0Term : ParitySource::F1Term;
  return even ? ParitySource::X1G0 : ParitySource::X1G1;
}

/// The pair (F0, F1) as truncated series. The same construction gives the
/// x-world functions (factors in x_i^2 with exponents k+1, k+1, k, ..., k)
/// and the formal p-world functions f0, f1 (factors in p_1, p_2, exponent 1).
template <typename World>
std::pair<Series2<World>, Series2<World>> planar_generating_pair(std::size_t nvars, int power,
                                                                 const std::vector<Rational>& exponents,
                                                                 int max_n) {
  using Poly = BasicPoly<World>;
  if (nvars < 2 || exponents.size() != nvars) throw std::invalid_argument("planar_generating_pair: bad shape");
  auto product = Series2<World>::one(nvars, max_n);
  for (std::size_t v = 1; v <= nvars; ++v)
    if (exponents[v - 1] != 0) product = product * gegenbauer_factor<World>(nvars, v, power, exponents[v - 1], max_n);
  const Poly u1 = Poly::monomial(Monomial(nvars).with(0, power));
  const Poly u2 = Poly::monomial(Monomial(nvars).with(1, power));
  Series2<World> num0(nvars, max_n), num1(nvars, max_n);
  num0.add(0, 0, Poly::constant(nvars, Rational(1)));
  if (max_n >= 1) {
    num0.add(1, 1, -(u1 + u2));
    num1.add(1, 0, u1 - u2);
  }
  if (max_n >= 2) num0.add(2, 0, u1 * u2);
  return {num0 * product, num1 * product};
}

/// x-world F0, F1 for the given parameters.
inline std::pair<Series2<XVars>, Series2<XVars>> generating_functions(const Params& params, int max_n) {
  const auto N = static_cast<std::size_t>(params.N());
  std::vector<Rational> exps(N, params.k());
  exps[0] += 1;
  exps[1] += 1;
  return planar_generating_pair<XVars>(N, 2, exps, max_n);
}

/// Formal f0, f1 in p_1, p_2 (ambient nvars >= 2).
inline std::pair<Series2<PVars>, Series2<PVars>> formal_generating_functions(std::size_t nvars, int max_n) {
  std::vector<Rational> exps(nvars, Rational(0));
  exps[0] = exps[1] = 1;
  return planar_generating_pair<PVars>(nvars, 1, exps, max_n);
}

/// Coefficients (n, j), 0 <= j <= n <= max_n, of one of the two basis families.
struct SeriesTable {
  BasisKind kind;
  int max_n;
  std::vector<std::vector<MultiPoly>> entries;  // entries[n][j]
};

/// Expands phi_{n,j} (coefficients of F0 + F1) or psi_{n,j} (coefficients of
/// x1 (F0 + s F1) - x1 F1) up to t^max_n, and checks degree and parity.
inline SeriesTable expand_basis(BasisKind kind, int max_n, const Params& params) {
  const auto N = static_cast<std::size_t>(params.N());
  auto [F0, F1] = generating_functions(params, max_n);
  SeriesTable table{kind, max_n, {}};
  const MultiPoly x1 = MultiPoly::variable(N, 1);
  for (int n = 0; n <= max_n; ++n) {
    std::vector<MultiPoly> row;
    for (int j = 0; j <= n; ++j) {
      const bool even = (n + j) % 2 == 0;
      MultiPoly e(N);
      if (kind == BasisKind::Phi) {
        e = F0.at(n, j) + F1.at(n, j);
        if (!(even ? F1.at(n, j) : F0.at(n, j)).is_zero())
          throw std::logic_error("expand_basis: generating term has the wrong parity");
      } else {
        const MultiPoly g0 = F0.at(n, j) + F1.at(n, j - 1);
        const MultiPoly g1 = -F1.at(n, j);
        if (!(even ? g1 : g0).is_zero()) throw std::logic_error("expand_basis: generating term has the wrong parity");
        e = x1 * (g0 + g1);
      }
      const int deg = kind == BasisKind::Phi ? 2 * n : 2 * n + 1;
      if (!e.is_zero() && (!e.is_homogeneous() || e.degree() != deg))
        throw std::logic_error("expand_basis: entry has the wrong degree");
      row.push_back(std::move(e));
    }
    for (int j = n + 1; j <= max_n; ++j)
      if (!F0.at(n, j).is_zero() || !F1.at(n, j).is_zero())
        throw std::logic_error("expand_basis: s-degree exceeds t-degree");
    table.entries.push_back(std::move(row));
  }
  return table;
}

/// Names phi_{n,j}, psi_{n,j} or x1 x2 phi_{n,j}. Labels with j < 0, j > n
/// or n < 0 denote the zero polynomial.
struct BasisLabel {
  BasisKind kind;
  int n;
  int j;
  bool x1x2 = false;

  bool in_range() const { return n >= 0 && j >= 0 && j <= n; }
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

struct BasisTerm {
  Rational coef;
  BasisLabel label;
};
using FormalCombination = std::vector<BasisTerm>;

namespace detail {

inline void push(FormalCombination& out, Rational coef, BasisLabel label) {
  if (coef != 0 && label.in_range()) out.push_back({std::move(coef), label});
}

}  // namespace detail

// The eight recurrences for T_1, T_2 on the phi/psi basis, split by the
// parity of n + j. Out-of-range labels are dropped.

/// T_1 phi_{n,j} as a combination of psi_{n-1,.}.
inline FormalCombination T1_on_phi(int n, int j, const Params& p) {
  const Rational Nk = p.N() * p.k();
  const Rational Nm1k = (p.N() - 1) * p.k();
  FormalCombination out;
  if ((n + j) % 2 == 0) {
    detail::push(out, 2 * Nk + n + j, {BasisKind::Psi, n - 1, j - 1});
    detail::push(out, 2 * Nm1k + n, {BasisKind::Psi, n - 1, j});
    detail::push(out, Rational(-(j + 1)), {BasisKind::Psi, n - 1, j + 1});
  } else {
    detail::push(out, 2 * Nk + n + j + 1, {BasisKind::Psi, n - 1, j});
    detail::push(out, Rational(j + 1), {BasisKind::Psi, n - 1, j + 1});
  }
  return out;
}

/// T_1 psi_{n,j} as a combination of phi_{n,.}.
inline FormalCombination T1_on_psi(int n, int j, const Params& p) {
  const Rational Nm1k = (p.N() - 1) * p.k();
  const Rational Nm2k = (p.N() - 2) * p.k();
  FormalCombination out;
  if ((n + j) % 2 == 0) {
    const Rational c = 2 * Nm1k + 2 * p.k1() + n + j + 1;
    detail::push(out, c, {BasisKind::Phi, n, j});
    detail::push(out, c, {BasisKind::Phi, n, j - 1});
    detail::push(out, Rational(-(j + 1)), {BasisKind::Phi, n, j + 1});
  } else {
    detail::push(out, -(2 * Nm2k + 2 * p.k1() + n + 1), {BasisKind::Phi, n, j});
    detail::push(out, Rational(-(j + 1)), {BasisKind::Phi, n, j + 1});
  }
  return out;
}

/// T_2 (x1 x2 phi_{n,j}) as a combination of psi_{n,.}.
inline FormalCombination T2_on_x1x2_phi(int n, int j, const Params& p) {
  const Rational Nm1k = (p.N() - 1) * p.k();
  const Rational Nm2k = (p.N() - 2) * p.k();
  FormalCombination out;
  if ((n + j) % 2 == 0) {
    detail::push(out, 2 * Nm2k + 2 * p.k1() + n + 1, {BasisKind::Psi, n, j});
    detail::push(out, 2 * Nm1k + 2 * p.k1() + n + j + 1, {BasisKind::Psi, n, j - 1});
    detail::push(out, Rational(-(j + 1)), {BasisKind::Psi, n, j + 1});
  } else {
    detail::push(out, -(2 * Nm1k + 2 * p.k1() + n + j + 2), {BasisKind::Psi, n, j});
    detail::push(out, Rational(-(j + 1)), {BasisKind::Psi, n, j + 1});
  }
  return out;
}

/// T_2 psi_{n,j} as a combination of x1 x2 phi_{n-1,.}.
inline FormalCombination T2_on_psi(int n, int j, const Params& p) {
  const Rational Nk = p.N() * p.k();
  const Rational Nm1k = (p.N() - 1) * p.k();
  FormalCombination out;
  if ((n + j) % 2 == 0) {
    detail::push(out, 2 * Nm1k + n + 1, {BasisKind::Phi, n - 1, j, true});
    detail::push(out, Rational(-(j + 1)), {BasisKind::Phi, n - 1, j + 1, true});
  } else {
    const Rational c = 2 * Nk + n + j + 1;
    detail::push(out, c, {BasisKind::Phi, n - 1, j, true});
    // Order n-1, not n: the degree count and the coefficient maps of the
    // T_2 ladder both require phi_{n-1,j-1}.
    detail::push(out, -c, {BasisKind::Phi, n - 1, j - 1, true});
    detail::push(out, Rational(j + 1), {BasisKind::Phi, n - 1, j + 1, true});
  }
  return out;
}

/// Materialised phi/psi tables for one parameter set.
class PlanarBasis {
 public:
  PlanarBasis(const Params& params, int max_n)
      : params_(params),
        phi_(expand_basis(BasisKind::Phi, max_n, params)),
        psi_(expand_basis(BasisKind::Psi, max_n, params)),
        zero_(static_cast<std::size_t>(params.N())),
        x1x2_(MultiPoly::variable(params.N(), 1) * MultiPoly::variable(params.N(), 2)) {}

  const Params& params() const { return params_; }
  int max_n() const { return phi_.max_n; }
  const SeriesTable& table(BasisKind kind) const { return kind == BasisKind::Phi ? phi_ : psi_; }

  const MultiPoly& phi(int n, int j) const { return entry(phi_, n, j); }
  const MultiPoly& psi(int n, int j) const { return entry(psi_, n, j); }

  MultiPoly get(const BasisLabel& label) const {
    const MultiPoly& e = label.kind == BasisKind::Phi ? phi(label.n, label.j) : psi(label.n, label.j);
    return label.x1x2 ? x1x2_ * e : e;
  }

  MultiPoly materialize(const FormalCombination& comb) const {
    MultiPoly out(zero_.nvars());
    for (const auto& t : comb) out += get(t.label) * t.coef;
    return out;
  }

 private:
  const MultiPoly& entry(const SeriesTable& t, int n, int j) const {
    if (n < 0 || j < 0 || j > n) return zero_;
    if (n > t.max_n) throw std::out_of_range("PlanarBasis: order " + std::to_string(n) + " beyond table");
    return t.entries[n][j];
  }

  Params params_;
  SeriesTable phi_;
  SeriesTable psi_;
  MultiPoly zero_;
  MultiPoly x1x2_;
};

}  // namespace planarharm
