#include <gtest/gtest.h>

#include "planarharm/planarharm.hpp"

using namespace planarharm;

namespace {

const Params kP(3, Rational(1, 3), Rational(2, 5));

MultiPoly x(std::size_t i) { return MultiPoly::variable(3, i); }
MultiPoly sq(std::size_t i) { return x(i) * x(i); }
MultiPoly norm2() { return sq(1) + sq(2) + sq(3); }

/// Coefficient of u^m s^j in (1 - 2 s u + u^2)^{-c} = sum_l (c)_l / l! (2 s u - u^2)^l.
Rational gegenbauer_brute(const Rational& c, int m, int j) {
  Rational total(0);
  for (int l = 0; l <= m; ++l) {
    // (2su - u^2)^l: choose a factors 2su and l-a factors -u^2: u^{a + 2(l-a)}, s^a.
    const int a = j;
    if (a > l || a + 2 * (l - a) != m) continue;
    Rational binom = factorial(l) / (factorial(a) * factorial(l - a));
    Rational term = binom;
    for (int i = 0; i < a; ++i) term *= 2;
    if ((l - a) % 2) term = -term;
    total += pochhammer(c, l) / factorial(l) * term;
  }
  return total;
}

}  // namespace

TEST(Gegenbauer, MatchesBinomialExpansion) {
  for (const Rational c : {Rational(1, 3), Rational(4, 3), Rational(-5, 2)}) {
    const auto C = gegenbauer_coefficients(c, 8);
    for (int m = 0; m <= 8; ++m)
      for (int j = 0; j <= m; ++j) EXPECT_EQ(C[m].size() > static_cast<std::size_t>(j) ? C[m][j] : Rational(0), gegenbauer_brute(c, m, j)) << m << ' ' << j;
  }
}

TEST(ExpandBasis, PhiExamples) {
  const PlanarBasis b(kP, 3);
  EXPECT_EQ(b.phi(0, 0), MultiPoly::constant(3, 1));
  EXPECT_EQ(b.phi(1, 0), sq(1) - sq(2));
  EXPECT_EQ(b.phi(1, 1), sq(1) + sq(2) + norm2() * (2 * kP.k()));
  EXPECT_EQ(b.phi(1, 0) + b.phi(1, 1), sq(1) * Rational(2) + norm2() * (2 * kP.k()));
}

TEST(ExpandBasis, PsiExamples) {
  const PlanarBasis b(kP, 3);
  EXPECT_EQ(b.psi(0, 0), x(1));
  EXPECT_EQ(b.psi(1, 0), x(1) * (sq(1) - sq(2)) * Rational(-1));
  EXPECT_EQ(b.psi(1, 1), x(1) * (sq(1) * Rational(2) + norm2() * (2 * kP.k())));
}

TEST(ExpandBasis, OutOfRangeIsZeroBeyondTableThrows) {
  const PlanarBasis b(kP, 2);
  EXPECT_TRUE(b.phi(2, 3).is_zero());
  EXPECT_TRUE(b.phi(-1, 0).is_zero());
  EXPECT_THROW(b.phi(3, 0), std::out_of_range);
}

TEST(ExpandBasis, DegreeAndParity) {
  const PlanarBasis b(kP, 5);
  for (int n = 0; n <= 5; ++n)
    for (int j = 0; j <= n; ++j) {
      const MultiPoly& phi = b.phi(n, j);
      EXPECT_TRUE(phi.is_homogeneous());
      EXPECT_TRUE(phi.is_zero() || phi.degree() == 2 * n);
      EXPECT_NO_THROW(x_to_squares(phi));
      const MultiPoly& psi = b.psi(n, j);
      EXPECT_TRUE(psi.is_zero() || psi.degree() == 2 * n + 1);
    }
}

TEST(ExpandBasis, PsiPhiRelations) {
  const PlanarBasis b(kP, 6);
  for (int n = 0; n <= 3; ++n)
    for (int j = 0; j <= n; ++j) {
      EXPECT_EQ(b.psi(2 * n, 2 * j), x(1) * (b.phi(2 * n, 2 * j) + b.phi(2 * n, 2 * j - 1)));
      if (j >= 1) EXPECT_EQ(b.psi(2 * n, 2 * j - 1), x(1) * b.phi(2 * n, 2 * j - 1) * Rational(-1));
    }
}

TEST(ParitySplit, Examples) {
  EXPECT_EQ(parity_split(BasisKind::Phi, 2, 0), ParitySource::F0Term);
  EXPECT_EQ(parity_split(BasisKind::Phi, 1, 0), ParitySource::F1Term);
  EXPECT_EQ(parity_split(BasisKind::Psi, 1, 1), ParitySource::X1G0);
  EXPECT_THROW(parity_split(BasisKind::Phi, 1, 2), std::out_of_range);
}

TEST(Recurrences, Examples) {
  const PlanarBasis b(kP, 2);
  EXPECT_EQ(b.materialize(T1_on_phi(1, 0, kP)), x(1) * (2 * 3 * kP.k() + 2));
  EXPECT_EQ(dunkl_T(1, b.phi(1, 0), kP), x(1) * (2 * 3 * kP.k() + 2));
  EXPECT_TRUE(b.materialize(T2_on_psi(0, 0, kP)).is_zero());
  EXPECT_TRUE(dunkl_T(2, x(1), kP).is_zero());
  EXPECT_EQ(b.materialize(T1_on_psi(0, 0, kP)), MultiPoly::constant(3, 2 * kP.k2()));
  EXPECT_EQ(b.materialize(T2_on_x1x2_phi(0, 0, kP)), x(1) * (2 * (kP.k() + kP.k1() + Rational(1, 2))));
}

class RecurrenceSweep : public ::testing::TestWithParam<int> {};

TEST_P(RecurrenceSweep, AllEightAgainstDirect) {
  RationalSampler rng(700 + GetParam());
  const Params p(3 + GetParam() % 2, rng.positive(), rng.positive());
  const PlanarBasis b(p, 4);
  const auto N = static_cast<std::size_t>(p.N());
  const MultiPoly x1x2 = MultiPoly::monomial(Monomial(N).with(0, 1).with(1, 1), 1);
  for (int n = 0; n <= 4; ++n)
    for (int j = 0; j <= n; ++j) {
      EXPECT_EQ(dunkl_T(1, b.phi(n, j), p), b.materialize(T1_on_phi(n, j, p)));
      EXPECT_EQ(dunkl_T(1, b.psi(n, j), p), b.materialize(T1_on_psi(n, j, p)));
      EXPECT_EQ(dunkl_T(2, x1x2 * b.phi(n, j), p), b.materialize(T2_on_x1x2_phi(n, j, p)));
      EXPECT_EQ(dunkl_T(2, b.psi(n, j), p), b.materialize(T2_on_psi(n, j, p)));
      for (std::size_t i = 3; i <= N; ++i) {
        EXPECT_TRUE(dunkl_T(i, b.phi(n, j), p).is_zero());
        EXPECT_TRUE(dunkl_T(i, b.psi(n, j), p).is_zero());
      }
    }
}

INSTANTIATE_TEST_SUITE_P(Samples, RecurrenceSweep, ::testing::Range(0, 6));

TEST(PsiImage, GeneratingFunctionsMapToBasis) {
  const int M = 4;
  const auto [f0, f1] = formal_generating_functions(3, M);
  const PlanarBasis b(kP, M);
  PBasis pb(kP);
  for (int n = 0; n <= M; ++n)
    for (int j = 0; j <= n; ++j) {
      EXPECT_EQ(squares_to_x(psi_inverse_expand(f0.at(n, j) + f1.at(n, j), pb)), b.phi(n, j));
      const PPoly g = f0.at(n, j) + f1.at(n, j - 1) - f1.at(n, j);
      EXPECT_EQ(x(1) * squares_to_x(psi_inverse_expand(g, pb)), b.psi(n, j));
    }
}
