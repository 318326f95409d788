#include <gtest/gtest.h>

#include <random>

#include "planarharm/planarharm.hpp"

using namespace planarharm;

namespace {

MultiPoly x(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational r = parse_rational("-6/4");
  EXPECT_EQ(r, Rational(-3, 2));
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_GT(r.get_den(), 0);
  EXPECT_THROW(parse_rational("6/-4"), std::invalid_argument);
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_EQ(parse_rational("12"), Rational(12));
}

TEST(Rational, RejectsMalformed) {
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Monomial, GrlexOrder) {
  GrlexGreater gt;
  EXPECT_TRUE(gt(Monomial{2, 0, 0}, Monomial{0, 1, 0}));  // higher degree first
  EXPECT_TRUE(gt(Monomial{2, 0, 0}, Monomial{1, 1, 0}));
  EXPECT_TRUE(gt(Monomial{1, 1, 0}, Monomial{0, 2, 0}));
  EXPECT_FALSE(gt(Monomial{0, 2, 0}, Monomial{0, 2, 0}));
}

TEST(Monomial, Arithmetic) {
  const Monomial a{2, 1, 0}, b{1, 0, 3};
  EXPECT_EQ(a * b, (Monomial{3, 1, 3}));
  EXPECT_EQ((a * b).degree(), 7u);
  EXPECT_TRUE((a * b).divisible_by(b));
  EXPECT_FALSE(a.divisible_by(b));
  EXPECT_EQ(a.swapped(0, 1), (Monomial{1, 2, 0}));
}

TEST(MultiPoly, AddExamples) {
  EXPECT_TRUE((x(3, 1) + x(3, 1) * Rational(-1)).is_zero());
  const MultiPoly s = x(3, 1) * x(3, 1) + x(3, 2) * x(3, 2);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.coefficient(Monomial{2, 0, 0}), 1);
}

TEST(MultiPoly, MulExamples) {
  EXPECT_EQ(x(3, 1) * x(3, 2), MultiPoly::monomial(Monomial{1, 1, 0}, 1));
  EXPECT_EQ((x(3, 1) - x(3, 2)) * (x(3, 1) + x(3, 2)), x(3, 1) * x(3, 1) - x(3, 2) * x(3, 2));
  const MultiPoly p = x(3, 1) * Rational(3, 4) + x(3, 3);
  EXPECT_EQ(MultiPoly::constant(3, 1) * p, p);
}

TEST(MultiPoly, MismatchedAmbientThrows) {
  EXPECT_THROW(x(3, 1) + x(4, 1), std::invalid_argument);
  EXPECT_THROW(x(3, 1) * x(4, 1), std::invalid_argument);
}

TEST(MultiPoly, EvalExamples) {
  const MultiPoly d = x(3, 1) * x(3, 1) - x(3, 2) * x(3, 2);
  EXPECT_EQ(poly_eval(d, std::vector<Rational>(3, Rational(1))), 0);
  EXPECT_EQ(poly_eval(d, std::vector<Rational>{1, 0, 0}), 1);
  EXPECT_THROW(poly_eval(d, std::vector<Rational>{1, 0}), std::invalid_argument);
}

TEST(MultiPoly, NoStoredZeros) {
  MultiPoly p = x(2, 1);
  p.add_term(Monomial{1, 0}, -1);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), -1);
}

TEST(ExactDivide, Examples) {
  const std::size_t n = 3;
  const MultiPoly d = x(n, 1) * x(n, 1) - x(n, 2) * x(n, 2);
  EXPECT_EQ(exact_divide(d, x(n, 1) - x(n, 2)), x(n, 1) + x(n, 2));
  const MultiPoly c = MultiPoly::monomial(Monomial{3, 0, 0}, 2);
  EXPECT_EQ(exact_divide(c, x(n, 1)), MultiPoly::monomial(Monomial{2, 0, 0}, 2));
  const MultiPoly cube = x(n, 1) * x(n, 1) * x(n, 1);
  const MultiPoly num = cube - apply_reflection(Reflection::sign_change(1), cube);
  EXPECT_EQ(exact_divide(num, x(n, 1)), MultiPoly::monomial(Monomial{2, 0, 0}, 2));
}

TEST(ExactDivide, RemainderThrows) {
  EXPECT_THROW(exact_divide(x(3, 1) + MultiPoly::constant(3, 1), x(3, 1)), std::domain_error);
  EXPECT_THROW(exact_divide(x(3, 1), x(3, 1) + x(3, 2)), std::domain_error);
}

class RingAxioms : public ::testing::TestWithParam<int> {};

TEST_P(RingAxioms, RandomTriples) {
  RationalSampler rng(1000 + GetParam());
  const std::size_t n = 4;
  auto rnd = [&] {
    MultiPoly p(n);
    for (int d = 0; d <= 3; ++d) p += detail::random_homogeneous(rng, n, d, 2);
    return p;
  };
  const MultiPoly a = rnd(), b = rnd(), c = rnd();
  EXPECT_EQ((a + b) + c, a + (b + c));
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ(a + b, b + a);
  EXPECT_EQ(a * (b + c), a * b + a * c);
  std::vector<Rational> pt{rng.signed_value(), rng.signed_value(), rng.signed_value(), rng.signed_value()};
  EXPECT_EQ(poly_eval(a * b, pt), poly_eval(a, pt) * poly_eval(b, pt));
  EXPECT_EQ(poly_eval(a + b, pt), poly_eval(a, pt) + poly_eval(b, pt));
  const MultiPoly ab = a * b;
  for (const auto& [m, coef] : ab.terms()) {
    EXPECT_EQ(mpz_class(gcd(coef.get_num(), coef.get_den())), 1);
    EXPECT_NE(coef, 0);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    EXPECT_EQ(exact_divide(a * x(n, i), x(n, i)), a);
    for (std::size_t j = i + 1; j <= n; ++j) {
      EXPECT_EQ(exact_divide(a * (x(n, i) - x(n, j)), x(n, i) - x(n, j)), a);
      EXPECT_EQ(exact_divide(a * (x(n, i) + x(n, j)), x(n, i) + x(n, j)), a);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Samples, RingAxioms, ::testing::Range(0, 8));

TEST(Params, DerivedK2) {
  const Params p(4, Rational(1, 3), Rational(2, 5));
  EXPECT_EQ(p.k2(), 3 * Rational(1, 3) + Rational(2, 5) + Rational(1, 2));
  EXPECT_EQ(p.shift_k1(1).k2(), p.k2() + 1);
  EXPECT_THROW(Params(1, 0, 0), std::invalid_argument);
}

TEST(SquaredVariables, RoundTrip) {
  const YPoly g = YPoly::variable(3, 1) * YPoly::variable(3, 2) + YPoly::constant(3, 2);
  const MultiPoly f = squares_to_x(g);
  EXPECT_EQ(f.coefficient(Monomial{2, 2, 0}), 1);
  EXPECT_EQ(x_to_squares(f), g);
  EXPECT_THROW(x_to_squares(x(3, 1)), std::domain_error);
}
