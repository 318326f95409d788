#include <gtest/gtest.h>

#include "planarharm/planarharm.hpp"

using namespace planarharm;

namespace {

const Params kP(3, Rational(2, 7), Rational(1, 3));

Composition comp(std::initializer_list<int> parts) { return Composition{std::vector<int>(parts)}; }
PPoly pvar(std::size_t n, std::size_t i) { return PPoly::variable(n, i); }

}  // namespace

TEST(PBasis, PnExamples) {
  PBasis b(kP);
  EXPECT_EQ(b.p(0, 1), YPoly::constant(3, 1));
  YPoly sum(3);
  for (std::size_t j = 1; j <= 3; ++j) sum += YPoly::variable(3, j);
  EXPECT_EQ(b.p(1, 1), YPoly::variable(3, 1) + sum * kP.k());
}

TEST(PBasis, PAlphaExamples) {
  PBasis b(kP);
  EXPECT_EQ(b.p_alpha(comp({0, 0, 0})), YPoly::constant(3, 1));
  EXPECT_EQ(b.p_alpha(comp({1, 0, 0})), b.p(1, 1));
  EXPECT_EQ(b.p_alpha(comp({1, 1, 0})), b.p(1, 1) * b.p(1, 2));
  EXPECT_THROW(b.p_alpha(comp({1, 1})), std::invalid_argument);
}

TEST(PBasis, Annihilation) {
  for (const Params& p : {kP, Params(4, Rational(5, 3), Rational(1, 9))}) {
    PBasis b(p);
    const auto N = static_cast<std::size_t>(p.N());
    for (int n = 0; n <= 6; ++n)
      for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= N; ++j)
          if (j != i) EXPECT_TRUE(dunkl_hatT(j, b.p(n, i), p).is_zero()) << n << ' ' << i << ' ' << j;
  }
}

TEST(HatTOnPAlpha, Examples) {
  EXPECT_TRUE(hatT_on_p_alpha(2, comp({3, 0, 1}), kP).empty());
  PBasis b(kP);
  EXPECT_EQ(b.expand(hatT_on_p_alpha(1, comp({1, 0, 0}), kP)), YPoly::constant(3, 3 * kP.k() + 1));
}

TEST(HatTOnPAlpha, MatchesBruteForce) {
  for (const Params& p : {kP, Params(4, Rational(3, 2), Rational(1, 5))}) {
    PBasis b(p);
    const auto N = static_cast<std::size_t>(p.N());
    for (const auto& alpha : detail::compositions(N, 5))
      for (std::size_t i = 1; i <= N; ++i)
        EXPECT_EQ(b.expand(hatT_on_p_alpha(i, alpha, p)), dunkl_hatT(i, b.p_alpha(alpha), p));
  }
}

TEST(Psi, ForwardExamples) {
  PCoordinates c;
  c[comp({0, 0, 0})] = 1;
  EXPECT_EQ(psi_forward(c, 3), PPoly::constant(3, 1));
  PCoordinates d;
  d[comp({2, 1, 0})] = 1;
  EXPECT_EQ(psi_forward(d, 3), pvar(3, 1) * pvar(3, 1) * pvar(3, 2));
  EXPECT_EQ(psi_inverse(psi_forward(d, 3)), d);
}

TEST(Psi, GeneratingFunctionCoefficients) {
  // p_(m,n,0) is the u1^m u2^n coefficient of the y2p product; since that
  // product factors, it is p_m(y1; y) p_n(y2; y).
  PBasis b(kP);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      PCoordinates c;
      c[comp({m, n, 0})] = 1;
      EXPECT_EQ(psi_inverse_expand(psi_forward(c, 3), b), b.p(m, 1) * b.p(n, 2));
    }
}

TEST(Psi, CommutesWithTranspositions) {
  PBasis b(kP);
  for (const auto& alpha : detail::compositions(3, 4)) {
    Composition s = alpha;
    std::swap(s.parts[0], s.parts[2]);
    EXPECT_EQ(apply_reflection(Reflection::transposition(1, 3), b.p_alpha(alpha)), b.p_alpha(s));
  }
}

TEST(HatTFormal, Examples) {
  EXPECT_EQ(hatT_formal(1, pvar(3, 1), kP), PPoly::constant(3, 1 + 3 * kP.k()));
  // xi_{1,2} p2 = p1, so the j = 2 numerator is p1 + p2 - p2 - p1 = 0; this
  // matches hatT_1 p_(0,1,0) = 0 from the alpha_1 = 0 rule.
  EXPECT_TRUE(hatT_formal(1, pvar(3, 2), kP).is_zero());
  EXPECT_TRUE(hatT_on_p_alpha(1, comp({0, 1, 0}), kP).empty());
}

TEST(HatTFormal, ConjugationIdentity) {
  for (const Params& p : {kP, Params(4, Rational(4, 3), Rational(2, 3))}) {
    const auto N = static_cast<std::size_t>(p.N());
    for (const auto& alpha : detail::compositions(N, 5)) {
      PCoordinates one;
      one[alpha] = 1;
      for (std::size_t i = 1; i <= N; ++i) {
        PCoordinates merged;
        for (const auto& t : hatT_on_p_alpha(i, alpha, p)) merged[t.alpha] += t.coef;
        EXPECT_EQ(psi_forward(merged, N), hatT_formal(i, psi_forward(one, N), p));
      }
    }
  }
}

TEST(XiEta, Substitutions) {
  const PPoly f = pvar(3, 1) * pvar(3, 2) * pvar(3, 2) + pvar(3, 3);
  EXPECT_EQ(xi(1, 2, f), pvar(3, 1) * pvar(3, 1) * pvar(3, 1) + pvar(3, 3));
  EXPECT_EQ(eta(1, f), pvar(3, 3));
}

TEST(Delta12, Examples) {
  EXPECT_TRUE(delta12(PPoly::constant(3, 1)).is_zero());
  EXPECT_TRUE(delta12(pvar(3, 1)).is_zero());
  EXPECT_TRUE(delta12(pvar(3, 1) * pvar(3, 1)).is_zero());
  EXPECT_EQ(delta12(pvar(3, 1) * pvar(3, 2)), pvar(3, 1) - pvar(3, 2));
  EXPECT_THROW(delta12(pvar(3, 3)), std::invalid_argument);
}

TEST(Delta12, GeneratingFunctionRelations) {
  const int M = 5;
  const auto [f0, f1] = formal_generating_functions(3, M);
  const PPoly p1 = pvar(3, 1), p2 = pvar(3, 2);
  for (int n = 0; n <= M; ++n)
    for (int j = 0; j <= M; ++j) {
      const PPoly g0 = f0.at(n, j) + f1.at(n, j - 1);
      const PPoly g1 = f1.at(n, j) * Rational(-1);
      EXPECT_EQ(delta12(f0.at(n, j)), f1.at(n - 1, j));
      EXPECT_TRUE(delta12(f1.at(n, j)).is_zero());
      EXPECT_EQ(delta12(p2 * f0.at(n, j)), f1.at(n, j - 1));
      EXPECT_EQ(delta12(p2 * f1.at(n, j)), f1.at(n, j));
      EXPECT_EQ(delta12(g0), f1.at(n - 1, j));
      EXPECT_TRUE(delta12(g1).is_zero());
      EXPECT_TRUE(delta12(p1 * g0).is_zero());
      EXPECT_EQ(delta12(p1 * g1), f1.at(n, j));
    }
}
