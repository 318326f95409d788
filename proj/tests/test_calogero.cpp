#include <gtest/gtest.h>

#include "planarharm/planarharm.hpp"

using namespace planarharm;

namespace {

const Params kP(3, Rational(1, 3), Rational(2, 5));
const CalogeroParams kC(kP, Rational(3, 2));

}  // namespace

TEST(Laguerre, Examples) {
  const Rational c(7, 3);
  EXPECT_EQ(laguerre(0, c), std::vector<Rational>{1});
  EXPECT_EQ(laguerre(1, c), (std::vector<Rational>{c + 1, -1}));
  EXPECT_EQ(laguerre(2, c), (std::vector<Rational>{(c + 1) * (c + 2) / 2, -(c + 2), Rational(1, 2)}));
  EXPECT_THROW(laguerre(-1, c), std::invalid_argument);
}

TEST(CalogeroParams, OmegaPositive) {
  EXPECT_THROW(CalogeroParams(kP, 0), std::invalid_argument);
  EXPECT_THROW(CalogeroParams(kP, -1), std::invalid_argument);
}

TEST(ConjugatedHamiltonian, Examples) {
  const Rational w = kC.omega(), Nk2 = 3 * kP.k2();
  EXPECT_EQ(conjugated_hamiltonian(MultiPoly::constant(3, 1), kC), MultiPoly::constant(3, 2 * w * Nk2));
  const MultiPoly x1 = MultiPoly::variable(3, 1);
  EXPECT_EQ(conjugated_hamiltonian(x1, kC), x1 * (2 * w * (1 + Nk2)));
  const MultiPoly r2 = norm_squared_poly(3);
  const MultiPoly lap = laplacian_B(r2, kP);
  ASSERT_EQ(lap.degree(), 0);
  EXPECT_EQ(conjugated_hamiltonian(r2, kC), r2 * (2 * w * (2 + Nk2)) - lap);
}

TEST(Eigenfunction, Examples) {
  const Rational w = kC.omega(), Nk2 = 3 * kP.k2();
  const EigenLabel e00 = EigenLabel::standard(0, 0, kP);
  EXPECT_EQ(e00.eigenvalue(kC), 2 * w * Nk2);
  EXPECT_EQ(e00.c, Nk2 - 1);
  const MultiPoly f0 = eigenfunction(e00, HarmonicLabel{0, 0}, kC);
  EXPECT_EQ(conjugated_hamiltonian(f0, kC), f0 * e00.eigenvalue(kC));

  const EigenLabel e10 = EigenLabel::standard(1, 0, kP);
  const MultiPoly f1 = eigenfunction(e10, HarmonicLabel{1, 0}, kC);
  EXPECT_EQ(e10.eigenvalue(kC), 2 * w * (1 + Nk2));
  EXPECT_EQ(conjugated_hamiltonian(f1, kC), f1 * e10.eigenvalue(kC));

  const EigenLabel e21 = EigenLabel::standard(2, 1, kP);
  const MultiPoly f2 = eigenfunction(e21, HarmonicLabel{2, 0}, kC);
  EXPECT_EQ(e21.eigenvalue(kC), 2 * w * (4 + Nk2));
  EXPECT_EQ(conjugated_hamiltonian(f2, kC), f2 * e21.eigenvalue(kC));
}

TEST(Eigenfunction, DegreeMismatch) {
  EXPECT_THROW(eigenfunction(EigenLabel::standard(2, 0, kP), HarmonicLabel{1, 0}, kC), std::invalid_argument);
  EXPECT_THROW(eigenfunction(EigenLabel::standard(3, 0, kP), build_harmonic({1, 1}, kP).poly, kC), std::invalid_argument);
}

class CalogeroSweep : public ::testing::TestWithParam<int> {};

TEST_P(CalogeroSweep, EigenRelationAndPerturbedIndex) {
  RationalSampler rng(4000 + GetParam());
  const Params p(3 + GetParam() % 2, rng.positive(), rng.positive());
  const CalogeroParams cp(p, rng.positive());
  HarmonicCache cache(p);
  for (int m = 0; m <= 7; ++m)
    for (int e = 0; e <= std::min(1, m); ++e)
      for (int n = 0; n <= 2; ++n) {
        const EigenLabel el = EigenLabel::standard(m, n, p);
        const MultiPoly& h = cache.get({m - e, e}).poly;
        const MultiPoly f = eigenfunction(el, h, cp);
        EXPECT_EQ(conjugated_hamiltonian(f, cp), f * el.eigenvalue(cp)) << m << ' ' << e << ' ' << n;
        if (n == 0) continue;
        EigenLabel bad = el;
        bad.c += 1;
        const MultiPoly g = eigenfunction(bad, h, cp);
        EXPECT_NE(conjugated_hamiltonian(g, cp), g * el.eigenvalue(cp));
      }
}

INSTANTIATE_TEST_SUITE_P(Samples, CalogeroSweep, ::testing::Range(0, 4));

TEST(Invariantize, ConstantCounts) {
  // One term per 2-subset of {1..N}; the shorter sum omits the sigma_1j terms.
  EXPECT_EQ(invariantize({0, 0}, kP), MultiPoly::constant(3, 3));
  EXPECT_EQ(invariantize({0, 0}, kP, CosetSum::Partial), MultiPoly::constant(3, 2));
  EXPECT_EQ(invariantize({0, 0}, Params(4, 1, 1)), MultiPoly::constant(4, 6));
}

TEST(Invariantize, FullSumIsInvariantAndHarmonic) {
  for (int N : {3, 4, 5}) {
    const Params p(N, Rational(2, 3), Rational(1, 4));
    for (int n : {0, 4, 8}) {
      const MultiPoly f = invariantize({n, 0}, p);
      EXPECT_TRUE(is_group_invariant(f)) << N << ' ' << n;
      EXPECT_TRUE(laplacian_B(f, p).is_zero());
    }
    EXPECT_TRUE(laplacian_B(invariantize({2, 0}, p), p).is_zero());
  }
}

TEST(Invariantize, ShortSumIsNotInvariant) {
  EXPECT_FALSE(is_group_invariant(invariantize({4, 0}, kP, CosetSum::Partial)));
}

TEST(Invariantize, Preconditions) {
  EXPECT_THROW(invariantize({1, 0}, kP), std::invalid_argument);
  EXPECT_THROW(invariantize({2, 1}, kP), std::invalid_argument);
  EXPECT_THROW(invariantize({2, 0}, Params(2, 1, 1)), std::invalid_argument);
}
