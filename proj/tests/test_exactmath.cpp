#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "evenchi/combinatorics.hpp"
#include "evenchi/polynomial.hpp"
#include "evenchi/rational.hpp"
#include "evenchi/series.hpp"
#include "oracles.hpp"

using namespace evenchi;

namespace {

Rational frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }

Polynomial random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> cs(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& c : cs) c = oracle::random_rational(rng);
  return Polynomial(std::move(cs));
}

}  // namespace

// Rational

TEST(Rational, StoresReducedWithPositiveDenominator) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).denominator(), 1);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST(Rational, ArithmeticAndOrdering) {
  EXPECT_EQ(frac(1, 2) + frac(1, 3), frac(5, 6));
  EXPECT_EQ(frac(1, 2) - frac(1, 3), frac(1, 6));
  EXPECT_EQ(frac(2, 3) * frac(9, 4), frac(3, 2));
  EXPECT_EQ(frac(2, 3) / frac(4, 9), frac(3, 2));
  EXPECT_THROW(frac(1, 2) / Rational(0), std::domain_error);
  EXPECT_LT(frac(-1, 2), frac(1, 3));
  EXPECT_GT(frac(7, 3), Rational(2));
}

TEST(Rational, StringFormAndParse) {
  EXPECT_EQ(frac(-17, 4).str(), "-17/4");
  EXPECT_EQ(Rational(5).str(), "5");
  EXPECT_EQ(Rational::parse("-691/2730"), frac(-691, 2730));
  EXPECT_EQ(Rational::parse("12"), Rational(12));
  EXPECT_EQ(Rational::parse("4/8"), frac(1, 2));
  EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
  EXPECT_THROW(frac(1, 2).to_integer(), std::domain_error);
}

TEST(Rational, ParseInvertsStr) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational r = oracle::random_rational(rng, 1000);
    EXPECT_EQ(Rational::parse(r.str()), r);
  }
}

// binomial

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(7, 0), 1);
  EXPECT_EQ(binomial(6, 7), 0);
  EXPECT_EQ(binomial(6, -1), 0);
  EXPECT_THROW(binomial(-1, 0), std::invalid_argument);
}

TEST(Binomial, MatchesPascalTriangle) {
  for (int n = 0; n <= 40; ++n)
    for (int k = -1; k <= n + 1; ++k) EXPECT_EQ(binomial(n, k), oracle::choose(n, k)) << n << "," << k;
}

// bernoulli

TEST(Bernoulli, Examples) {
  EXPECT_EQ(bernoulli(0), Rational(1));
  EXPECT_EQ(bernoulli(1), frac(-1, 2));
  EXPECT_EQ(bernoulli(12), frac(-691, 2730));
  EXPECT_THROW(bernoulli(-1), std::invalid_argument);
}

TEST(Bernoulli, AgreesWithRecurrenceOracle) {
  const auto expected = oracle::bernoulli_recurrence(40);
  for (int n = 0; n <= 40; ++n) EXPECT_EQ(bernoulli(n), expected[static_cast<std::size_t>(n)]) << "n=" << n;
}

TEST(Bernoulli, OddIndicesAboveOneVanish) {
  for (int n = 3; n <= 25; n += 2) EXPECT_TRUE(bernoulli(n).is_zero()) << "n=" << n;
}

TEST(Bernoulli, DefiningIdentity) {
  for (int n = 1; n <= 20; ++n) {
    Rational acc;
    for (int k = 0; k <= n; ++k) acc += Rational(binomial(n + 1, k)) * bernoulli(k);
    EXPECT_TRUE(acc.is_zero()) << "n=" << n;
  }
}

TEST(Bernoulli, ConcurrentCallersSeeSameValues) {
  const auto expected = oracle::bernoulli_recurrence(60);
  std::vector<std::thread> threads;
  std::vector<int> mismatches(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([t, &expected, &mismatches] {
      for (int n = 60 - t; n >= 0; --n)
        if (bernoulli(n) != expected[static_cast<std::size_t>(n)]) ++mismatches[static_cast<std::size_t>(t)];
    });
  }
  for (auto& th : threads) th.join();
  for (int m : mismatches) EXPECT_EQ(m, 0);
}

// Polynomial

TEST(Polynomial, ZeroPolynomialHasDegreeMinusOne) {
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_EQ(Polynomial({Rational(0), Rational(0)}).degree(), -1);
  EXPECT_TRUE(Polynomial({Rational(0)}).coeffs().empty());
  EXPECT_EQ(Polynomial({Rational(1), Rational(0)}).degree(), 0);
}

TEST(Polynomial, Arithmetic) {
  const Polynomial p({Rational(1), Rational(1)});  // 1 + z
  EXPECT_EQ(p * p, Polynomial({Rational(1), Rational(2), Rational(1)}));
  EXPECT_EQ(p.pow(3), Polynomial({Rational(1), Rational(3), Rational(3), Rational(1)}));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p(Rational(2)), Rational(3));
  EXPECT_EQ(Polynomial({Rational(1), Rational(-2), Rational(0), Rational(3)}).str(), "3z^3 - 2z + 1");
}

TEST(AffineSubstitute, Examples) {
  const Polynomial z2 = Polynomial::monomial(Rational(1), 2);
  EXPECT_EQ(poly_affine_substitute(z2, Rational(-1), Rational(-1)),
            Polynomial({Rational(1), Rational(2), Rational(1)}));

  const Polynomial f({Rational(4), Rational(6), Rational(4), Rational(1)});  // x^3 + 4x^2 + 6x + 4
  EXPECT_EQ(poly_affine_substitute(f, Rational(1), Rational(-1)),
            Polynomial({Rational(1), Rational(1), Rational(1), Rational(1)}));

  EXPECT_TRUE(poly_affine_substitute(Polynomial(), Rational(3), Rational(7)).is_zero());
}

TEST(AffineSubstitute, MatchesBinomialExpansion) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = random_poly(rng, 10);
    Rational a = oracle::random_rational(rng), b = oracle::random_rational(rng);
    EXPECT_EQ(poly_affine_substitute(p, a, b).coeffs(), oracle::expand_affine(p.coeffs(), a, b));
    if (!a.is_zero()) {
      EXPECT_EQ(poly_affine_substitute(p, a, b).degree(), p.degree());
    }
  }
}

TEST(AffineSubstitute, IsRingHomomorphism) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = random_poly(rng, 10), q = random_poly(rng, 10);
    Rational a = oracle::random_rational(rng), b = oracle::random_rational(rng);
    auto sub = [&](const Polynomial& x) { return poly_affine_substitute(x, a, b); };
    EXPECT_EQ(sub(p * q), sub(p) * sub(q));
    EXPECT_EQ(sub(p + q), sub(p) + sub(q));
  }
}

TEST(ReversedWithLeading, Examples) {
  const Polynomial f({Rational(4), Rational(6), Rational(4), Rational(1)});
  EXPECT_EQ(reversed_with_leading(f, 2), Polynomial({Rational(1), Rational(4), Rational(6), Rational(4)}));
  EXPECT_EQ(reversed_with_leading(Polynomial::constant(1), 0), Polynomial::monomial(Rational(1), 1));
  const Polynomial g({Rational(0), Rational(2), Rational(1)});  // x^2 + 2x
  EXPECT_EQ(reversed_with_leading(g, 2), Polynomial({Rational(0), Rational(1), Rational(2)}));
  EXPECT_THROW(reversed_with_leading(Polynomial::monomial(Rational(1), 4), 2), std::invalid_argument);
}

// Series

TEST(NegZOverCosh, Examples) {
  EXPECT_EQ(neg_z_over_cosh_series(1)[1], Rational(-1));
  EXPECT_EQ(neg_z_over_cosh_series(3)[3], frac(1, 2));
  EXPECT_TRUE(neg_z_over_cosh_series(4)[4].is_zero());
  EXPECT_EQ(neg_z_over_cosh_series(0).order(), 0);
  EXPECT_THROW(neg_z_over_cosh_series(-1), std::invalid_argument);
}

TEST(NegZOverCosh, TimesCoshIsNegZ) {
  const int N = 20;
  const TruncatedSeries product = neg_z_over_cosh_series(N) * cosh_series(N);
  for (int k = 0; k <= N; ++k) EXPECT_EQ(product[k], k == 1 ? Rational(-1) : Rational(0)) << "k=" << k;
}

TEST(NegZOverCosh, EvenCoefficientsVanish) {
  const TruncatedSeries s = neg_z_over_cosh_series(30);
  for (int k = 0; k <= 30; k += 2) EXPECT_TRUE(s[k].is_zero()) << "k=" << k;
}

TEST(NegZOverCosh, OddCoefficientsAreEulerNumbers) {
  // -z sech z = -sum E_{2k} z^{2k+1} / (2k)!, with E = 1, -1, 5, -61, 1385.
  const TruncatedSeries s = neg_z_over_cosh_series(9);
  EXPECT_EQ(s[1], Rational(-1));
  EXPECT_EQ(s[3], frac(1, 2));
  EXPECT_EQ(s[5], frac(-5, 24));
  EXPECT_EQ(s[7], frac(61, 720));
  EXPECT_EQ(s[9], frac(-1385, 40320));
}

TEST(Series, DivisionByZeroConstantTermThrows) {
  TruncatedSeries num(3), den(3);
  EXPECT_THROW(num / den, std::domain_error);
}
