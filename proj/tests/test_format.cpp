#include <gtest/gtest.h>

#include "planarharm/planarharm.hpp"

using namespace planarharm;

namespace {

const Params kP(3, Rational(1, 3), Rational(2, 5));

}  // namespace

TEST(Json, CanonicalForm) {
  const MultiPoly x1 = MultiPoly::variable(3, 1);
  EXPECT_EQ(serialize(x1), R"({"nvars":3,"terms":[{"exps":[1,0,0],"coef":"1"}]})");
  const MultiPoly d = x1 * x1 - MultiPoly::variable(3, 2) * MultiPoly::variable(3, 2) * Rational(3, 2);
  EXPECT_EQ(serialize(d), R"({"nvars":3,"terms":[{"exps":[2,0,0],"coef":"1"},{"exps":[0,2,0],"coef":"-3/2"}]})");
  EXPECT_EQ(serialize(MultiPoly(2)), R"({"nvars":2,"terms":[]})");
}

TEST(Json, RoundTrip) {
  HarmonicCache cache(kP);
  for (int n = 0; n <= 9; ++n)
    for (int e = 0; e <= 1; ++e) {
      const MultiPoly& h = cache.get({n, e}).poly;
      EXPECT_EQ(parse_poly(serialize(h)), h);
    }
}

TEST(Json, ParseErrors) {
  EXPECT_THROW(parse_poly(R"({"nvars":2,"terms":[{"exps":[1],"coef":"1"}]})"), std::invalid_argument);
  EXPECT_THROW(parse_poly(R"({"nvars":2,"terms":[{"exps":[1,0],"coef":"1/0"}]})"), std::invalid_argument);
  EXPECT_THROW(parse_poly(R"({"nvars":0,"terms":[]})"), std::invalid_argument);
  EXPECT_ANY_THROW(parse_poly("not json"));
}

TEST(Latex, Examples) {
  EXPECT_EQ(to_latex(build_harmonic({2, 0}, kP).poly), "x_{1}^{2}-x_{2}^{2}");
  EXPECT_EQ(to_latex(MultiPoly(3)), "0");
  EXPECT_EQ(to_latex(MultiPoly::constant(3, Rational(-1, 2))), "-\\frac{1}{2}");
  EXPECT_EQ(to_latex(MultiPoly::variable(3, 1) * Rational(3, 4) + MultiPoly::constant(3, 1)), "\\frac{3}{4}x_{1}+1");
  EXPECT_EQ(to_latex(YPoly::variable(2, 2), 'y'), "y_{2}");
}

TEST(Csv, Examples) {
  EXPECT_EQ(to_csv(build_harmonic({2, 0}, kP).poly), "coef,x1,x2,x3\n1,2,0,0\n-1,0,2,0\n");
}
