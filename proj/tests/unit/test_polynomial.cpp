#include <gtest/gtest.h>

#include <random>

#include "faulhaber/errors.hpp"
#include "faulhaber/laurent.hpp"
#include "faulhaber/poly.hpp"
#include "faulhaber/series.hpp"

using namespace faulhaber;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-9, 9), den(1, 6);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& a : c) a = Rational(BigInt(num(rng)), BigInt(den(rng)));
  return Poly(std::move(c));
}

Poly nonzero_random_poly(std::mt19937& rng, int max_degree) {
  Poly p;
  while (p.is_zero()) p = random_poly(rng, max_degree);
  return p;
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

// binom(x, 2) as a polynomial.
Poly choose2() { return Poly{Rational(0), R("-1/2"), R("1/2")}; }

const Poly X = Poly::identity();

}  // namespace

TEST(Poly, TrimmingAndDegree) {
  EXPECT_EQ(Poly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(Poly({0, 0}).degree(), -1);
  EXPECT_TRUE(Poly({0}).is_zero());
  EXPECT_EQ(Poly().leading(), Rational(0));
}

TEST(Poly, RingOps) {
  EXPECT_EQ(Poly({1, 1}) * Poly({-1, 1}), Poly({-1, 0, 1}));
  const Poly p{3, 0, R("1/2")};
  EXPECT_EQ(Poly() + p, p);
  EXPECT_EQ(p - p, Poly());
  EXPECT_EQ(Rational(2) * p, Poly({6, 0, 1}));
  EXPECT_EQ(pow(Poly({1, 1}), 3), Poly({1, 3, 3, 1}));
}

TEST(Poly, DerivativeAndAntiderivative) {
  EXPECT_EQ(derivative(Poly::monomial(1, 3)), Poly::monomial(3, 2));
  EXPECT_EQ(antiderivative(Poly::monomial(3, 2)), Poly::monomial(1, 3));
  EXPECT_EQ(antiderivative(Poly()), Poly());
  // B_3(x) = x^3 - (3/2)x^2 + (1/2)x integrates to (1/4)(x^4 - 2x^3 + x^2).
  const Poly b3{Rational(0), R("1/2"), R("-3/2"), Rational(1)};
  EXPECT_EQ(antiderivative(b3), Poly({0, 0, 1, -2, 1}) * R("1/4"));
  EXPECT_EQ(derivative(Poly::monomial(1, 5), 3), Poly::monomial(60, 2));
}

TEST(Poly, Evaluate) {
  EXPECT_EQ(evaluate(Poly({-1, 0, 1}), Rational(3)), Rational(8));
  const Poly s3 = pow(choose2(), 2);  // S_3(x)
  EXPECT_EQ(evaluate(s3, Rational(4)), Rational(36));
  EXPECT_EQ(evaluate(Poly(), Rational(5)), Rational(0));
}

TEST(Poly, Compose) {
  const Poly y2 = Poly::monomial(1, 2);
  EXPECT_EQ(compose(y2, choose2()), Poly({Rational(0), Rational(0), R("1/4"), R("-1/2"), R("1/4")}));
  EXPECT_EQ(compose(Poly::constant(R("2/7")), X * X), Poly::constant(R("2/7")));
}

TEST(Poly, ForwardDifference) {
  EXPECT_EQ(forward_difference(choose2()), X);
  EXPECT_EQ(forward_difference(pow(choose2(), 2)), Poly::monomial(1, 3));
  EXPECT_EQ(forward_difference(pow(choose2(), 4)), (Poly::monomial(1, 5) + Poly::monomial(1, 7)) * R("1/2"));
}

TEST(Poly, SummationOperator) {
  const Poly tri = X * Poly({1, 1}) * R("1/2");
  EXPECT_EQ(summation_operator(X), tri);
  EXPECT_EQ(summation_operator(Poly::monomial(1, 3)), pow(tri, 2));
  EXPECT_EQ(summation_operator(Poly::constant(1)), X);
}

TEST(Poly, SummationOperatorAgainstLiteralSums) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly p = random_poly(rng, 8);
    const Poly P = summation_operator(p);
    Rational acc;
    for (long m = 0; m <= 12; ++m) {
      if (m > 0) acc += evaluate(p, Rational(m));
      EXPECT_EQ(evaluate(P, Rational(m)), acc);
    }
  }
}

TEST(Poly, Theta) {
  const Poly y = X;
  EXPECT_EQ(theta(y * y, R("1/2")), Rational(2) * y * y);
  EXPECT_EQ(theta(Poly::constant(R("5/3")), R("7/2")), Poly::constant(R("5/3")));
  EXPECT_EQ(theta(y, Rational(1)), Rational(2) * y);
}

TEST(Poly, ExactDivide) {
  EXPECT_EQ(exact_divide(Poly({-1, 0, 1}), Poly({-1, 1})), Poly({1, 1}));
  try {
    exact_divide(Poly({1, 0, 1}), X);
    FAIL() << "expected NonzeroRemainder";
  } catch (const IdentityError& e) {
    EXPECT_EQ(e.kind(), Violation::NonzeroRemainder);
  }
  EXPECT_THROW(divide(X, Poly()), std::domain_error);
}

TEST(Poly, RebaseQuadratic) {
  EXPECT_EQ(rebase_quadratic(Poly({0, -1, 1}), SubstitutionBasis::of(BasisTag::U)), Poly({0, 1}));
  try {
    rebase_quadratic(X, SubstitutionBasis::of(BasisTag::Y));
    FAIL() << "expected NotInBasis";
  } catch (const IdentityError& e) {
    EXPECT_EQ(e.kind(), Violation::NotInBasis);
  }
  // Even degree but not a polynomial in x^2 - x.
  EXPECT_THROW(rebase_quadratic(Poly::monomial(1, 2), SubstitutionBasis::of(BasisTag::U)), IdentityError);
  EXPECT_THROW(rebase_quadratic(X, X), std::invalid_argument);
}

TEST(Poly, BasisQuadratics) {
  for (auto tag : {BasisTag::Y, BasisTag::U, BasisTag::Xi, BasisTag::Omega})
    EXPECT_EQ(SubstitutionBasis::of(tag).quadratic.degree(), 2);
  // omega = 8y + 1 and xi = -u = -2y.
  const Poly y = SubstitutionBasis::of(BasisTag::Y).quadratic;
  EXPECT_EQ(SubstitutionBasis::of(BasisTag::Omega).quadratic, Rational(8) * y + Poly::constant(1));
  EXPECT_EQ(SubstitutionBasis::of(BasisTag::Xi).quadratic, Rational(-2) * y);
}

TEST(Poly, PalindromeClass) {
  EXPECT_EQ(palindrome_class(Poly({1, 2, 1}), 2), PalindromeClass::Palindromic);
  EXPECT_EQ(palindrome_class(Poly({0, 1, 0, -1}), 4), PalindromeClass::AntiPalindromic);
  EXPECT_EQ(palindrome_class(Poly({1, 2, 3, 2, -1}), 4), PalindromeClass::QuasiPalindromic);
  EXPECT_EQ(palindrome_class(Poly({1, 2, 3}), 2), PalindromeClass::None);
  // The class depends on the stated length, not the degree.
  EXPECT_EQ(palindrome_class(Poly({0, 1, 1}), 3), PalindromeClass::Palindromic);
  EXPECT_EQ(palindrome_class(Poly({0, 1, 1}), 4), PalindromeClass::None);
  EXPECT_THROW(palindrome_class(Poly({1, 2, 3}), 1), std::domain_error);
}

TEST(PolyProperty, ExactDivideInvertsMultiplication) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const Poly a = random_poly(rng, 12);
    const Poly b = nonzero_random_poly(rng, 12);
    EXPECT_EQ(exact_divide(a * b, b), a);
    const DivResult r = divide(a, b);
    EXPECT_EQ(r.quotient * b + r.remainder, a);
    EXPECT_LT(r.remainder.degree(), b.degree() == 0 ? 0 : b.degree());
  }
}

TEST(PolyProperty, RebaseReconstructs) {
  std::mt19937 rng(99);
  for (auto tag : {BasisTag::Y, BasisTag::U, BasisTag::Xi, BasisTag::Omega}) {
    const Poly q = SubstitutionBasis::of(tag).quadratic;
    for (int i = 0; i < 15; ++i) {
      const Poly c = random_poly(rng, 7);
      const Poly p = compose(c, q);
      const Poly back = rebase_quadratic(p, q);
      EXPECT_EQ(back, c);
      EXPECT_EQ(compose(back, q), p);
    }
  }
}

TEST(PolyProperty, SummationInvertsBackwardDifference) {
  std::mt19937 rng(5);
  for (int i = 0; i < 40; ++i) {
    const Poly p = random_poly(rng, 10);
    const Poly P = summation_operator(p);
    EXPECT_EQ(P - shift(P, Rational(-1)), p);
    EXPECT_EQ(evaluate(P, Rational(0)), Rational(0));
  }
}

TEST(PolyProperty, ThetaLinearAndCommuting) {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    const Poly p = random_poly(rng, 8), q = random_poly(rng, 8);
    const Rational a = random_rational(rng), b = random_rational(rng);
    const Rational al = random_rational(rng), be = random_rational(rng);
    EXPECT_EQ(theta(a * p + b * q, al), a * theta(p, al) + b * theta(q, al));
    EXPECT_EQ(theta(theta(p, al), be), theta(theta(p, be), al));
    EXPECT_EQ(theta(p, al), p + al * X * derivative(p));
  }
}

TEST(PolyProperty, DerivativeOfAntiderivative) {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Poly p = random_poly(rng, 15);
    EXPECT_EQ(derivative(antiderivative(p)), p);
  }
}

TEST(PolyProperty, EvaluateIsRingHomomorphism) {
  std::mt19937 rng(17);
  for (int i = 0; i < 50; ++i) {
    const Poly p = random_poly(rng, 10), q = random_poly(rng, 10);
    const Rational x0 = random_rational(rng);
    EXPECT_EQ(evaluate(p * q, x0), evaluate(p, x0) * evaluate(q, x0));
    EXPECT_EQ(evaluate(compose(p, q), x0), evaluate(p, evaluate(q, x0)));
    EXPECT_EQ(evaluate(shift(p, x0), Rational(2)), evaluate(p, x0 + Rational(2)));
    EXPECT_EQ(evaluate(scale_argument(p, x0), Rational(3)), evaluate(p, x0 * Rational(3)));
  }
}

TEST(Laurent, Basics) {
  const LaurentPoly inv = LaurentPoly::monomial(1, -2);
  EXPECT_EQ(derivative(inv), LaurentPoly::monomial(-2, -3));
  EXPECT_EQ(evaluate(LaurentPoly::monomial(1, -1), R("1/2")), Rational(2));
  EXPECT_THROW(evaluate(inv, Rational(0)), std::domain_error);
  EXPECT_EQ(evaluate(LaurentPoly::from_poly(Poly({3, 1})), Rational(0)), Rational(3));
  const LaurentPoly trimmed(-3, {0, 0, 1, 0});
  EXPECT_EQ(trimmed.min_exp(), -1);
  EXPECT_EQ(trimmed.max_exp(), -1);
  EXPECT_EQ(LaurentPoly(-3, {0, 0}), LaurentPoly());
  EXPECT_FALSE(inv.to_poly().has_value());
  EXPECT_EQ(*LaurentPoly(2, {1}).to_poly(), Poly::monomial(1, 2));
}

TEST(Laurent, ProductAndReflection) {
  const LaurentPoly a(-1, {1, 2});   // x^-1 + 2
  const LaurentPoly b(0, {1, -1});   // 1 - x
  EXPECT_EQ(a * b, LaurentPoly(-1, {1, 1, -2}));
  EXPECT_EQ(reflect_argument(a), LaurentPoly(-1, {-1, 2}));
  EXPECT_EQ(a - a, LaurentPoly());
}

TEST(LaurentProperty, MatchesPolyArithmeticAfterScaling) {
  std::mt19937 rng(23);
  for (int i = 0; i < 30; ++i) {
    const Poly p = random_poly(rng, 6), q = random_poly(rng, 6);
    const LaurentPoly lp = LaurentPoly(-3, p.coeffs()), lq = LaurentPoly(-2, q.coeffs());
    const Rational x0 = random_rational(rng) + Rational(10);
    EXPECT_EQ(evaluate(lp * lq, x0), evaluate(lp, x0) * evaluate(lq, x0));
    EXPECT_EQ(evaluate(lp + lq, x0), evaluate(lp, x0) + evaluate(lq, x0));
    // d/dx (x^-3 p(x)) = -3 x^-4 p + x^-3 p'
    const LaurentPoly d = derivative(lp);
    const LaurentPoly expect =
        LaurentPoly(-4, p.coeffs()) * Rational(-3) + LaurentPoly(-3, derivative(p).coeffs());
    EXPECT_EQ(d, expect);
  }
}

TEST(Series, ProductTruncates) {
  const TruncatedSeries a = TruncatedSeries::from_poly(Poly({1, 1}), 2);
  const TruncatedSeries b = TruncatedSeries::from_poly(Poly({1, -1}), 2);
  const TruncatedSeries c = a * b;
  EXPECT_EQ(c.order(), 2u);
  EXPECT_EQ(c.coeffs(), (std::vector<Rational>{1, 0, -1}));
  const TruncatedSeries shorter = TruncatedSeries::from_poly(Poly({1, 1}), 1);
  EXPECT_EQ((a * shorter).order(), 1u);
  EXPECT_EQ((a + shorter).order(), 1u);
}

TEST(Series, BinomialSeries) {
  // (1+x)^-1 = 1 - x + x^2 - ...
  const TruncatedSeries inv = TruncatedSeries::binomial_series(Rational(-1), 5);
  for (std::size_t i = 0; i <= 5; ++i) EXPECT_EQ(inv.coeff(i), i % 2 ? Rational(-1) : Rational(1));
  // (1+x)^3 terminates.
  const TruncatedSeries cube = TruncatedSeries::binomial_series(Rational(3), 5);
  EXPECT_EQ(cube.coeffs(), (std::vector<Rational>{1, 3, 3, 1, 0, 0}));
  // (1+x)^(1/2) squared is 1 + x.
  const TruncatedSeries root = TruncatedSeries::binomial_series(R("1/2"), 6);
  EXPECT_EQ((root * root).coeffs(), (std::vector<Rational>{1, 1, 0, 0, 0, 0, 0}));
  // (1+x)^a (1+x)^b = (1+x)^(a+b)
  EXPECT_EQ(TruncatedSeries::binomial_series(Rational(-3), 8) * TruncatedSeries::binomial_series(Rational(5), 8),
            TruncatedSeries::binomial_series(Rational(2), 8));
}

TEST(Series, KeepsExplicitZeros) {
  const TruncatedSeries s(4, {1});
  EXPECT_EQ(s.coeffs().size(), 5u);
  EXPECT_EQ(s.truncate(2).coeffs().size(), 3u);
  EXPECT_THROW(s.truncate(5), std::invalid_argument);
}
