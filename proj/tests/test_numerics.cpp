#include <gtest/gtest.h>

#include <random>

#include "coxdesc/errors.hpp"
#include "coxdesc/linalg.hpp"
#include "coxdesc/polynomial.hpp"
#include "coxdesc/rational.hpp"

using namespace coxdesc;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  RationalMatrix m(rows, std::vector<Rational>(cols));
  for (auto& row : m) {
    for (auto& x : row) x = make_rational(num(rng), den(rng));
  }
  return m;
}

QPolynomial random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = make_rational(num(rng), 3);
  return QPolynomial(c);
}

}  // namespace

TEST(Rational, TextRoundTrip) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_EQ(parse_rational("-14/5"), make_rational(-14, 5));
  EXPECT_EQ(parse_rational("4/2"), Rational(2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rational("abc"), InvalidArgument);
  EXPECT_THROW(parse_rational(""), InvalidArgument);
  EXPECT_THROW(make_rational(1, 0), InvalidArgument);
  EXPECT_TRUE(is_integer(make_rational(4, 2)));
  EXPECT_FALSE(is_integer(make_rational(1, 2)));
}

TEST(Rational, Combinatorics) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(6, 7), 0);
  EXPECT_EQ(binomial(6, -1), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(power_of_two(40), BigInt("1099511627776"));
  for (long n = 1; n < 20; ++n) {
    for (long k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST(QPolynomial, Basics) {
  const QPolynomial p = QPolynomial::from_roots({0, 2, 4, 12});
  EXPECT_EQ(p.to_string(), "x^4 - 18x^3 + 80x^2 - 96x");
  EXPECT_EQ(p.degree(), 4);
  EXPECT_TRUE(p.is_monic());
  EXPECT_EQ(p.evaluate(4), 0);
  EXPECT_EQ(p.evaluate(1), -33);
  EXPECT_EQ(QPolynomial().degree(), -1);
  EXPECT_EQ(QPolynomial().to_string(), "0");
  EXPECT_EQ(QPolynomial({Rational(0), Rational(0)}).degree(), -1);
  EXPECT_EQ(QPolynomial::constant(make_rational(1, 2)).to_string(), "1/2");
  EXPECT_EQ((QPolynomial::x() - QPolynomial::constant(1)).to_string(), "x - 1");
  EXPECT_THROW(p.divmod(QPolynomial()), InvalidArgument);
}

TEST(QPolynomial, DivisionProperty) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const QPolynomial a = random_poly(rng, static_cast<int>(rng() % 7));
    QPolynomial b = random_poly(rng, static_cast<int>(rng() % 4));
    if (b.is_zero()) continue;
    const auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    const Rational at = make_rational(static_cast<long>(rng() % 11) - 5, 2);
    EXPECT_EQ((a * b).evaluate(at), a.evaluate(at) * b.evaluate(at));
  }
}

TEST(FallingPoly, Conversions) {
  // x^(3) = x^3 - 3x^2 + 2x
  EXPECT_EQ(FallingPoly::falling_power(3).to_monomial(), QPolynomial({0, 2, -3, 1}));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const QPolynomial p = random_poly(rng, static_cast<int>(rng() % 8));
    EXPECT_EQ(FallingPoly::from_monomial(p).to_monomial(), p);
  }
}

TEST(FallingPoly, ProductMatchesMonomialProduct) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const QPolynomial p = random_poly(rng, static_cast<int>(rng() % 6));
    const QPolynomial q = random_poly(rng, static_cast<int>(rng() % 6));
    const FallingPoly fp = FallingPoly::from_monomial(p);
    const FallingPoly fq = FallingPoly::from_monomial(q);
    EXPECT_EQ((fp * fq).to_monomial(), p * q);
    const Rational c = make_rational(static_cast<long>(rng() % 7), 1);
    EXPECT_EQ(fp.times_x_minus(c).to_monomial(), (QPolynomial::x() - QPolynomial::constant(c)) * p);
  }
}

TEST(FallingPoly, Reduce) {
  // x^(4) - x^(3) = x^(3) (x - 4): divisibility is preserved by the reduction.
  const FallingPoly modulus = FallingPoly::falling_power(4) - FallingPoly::falling_power(3);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const FallingPoly p = FallingPoly::from_monomial(random_poly(rng, static_cast<int>(rng() % 9)));
    const FallingPoly r = p.reduce(modulus);
    EXPECT_LT(r.degree(), 4);
    const auto [q, rem] = (p - r).to_monomial().divmod(modulus.to_monomial());
    EXPECT_TRUE(rem.is_zero());
  }
}

TEST(LinearAlgebra, RankAndRref) {
  const RationalMatrix m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(m), 2);
  std::vector<int> pivots;
  const auto r = rref(m, &pivots);
  EXPECT_EQ(pivots, (std::vector<int>{0, 1}));
  EXPECT_EQ(r[0], (std::vector<Rational>{1, 0, 1}));
  EXPECT_EQ(r[1], (std::vector<Rational>{0, 1, 1}));
  EXPECT_EQ(rank(RationalMatrix{}), 0);
  EXPECT_EQ(rank(RationalMatrix{{0, 0}}), 0);
  EXPECT_EQ(rank(RationalMatrix{{make_rational(1, 3), make_rational(1, 2)}, {2, 3}}), 1);
}

TEST(LinearAlgebra, SolveAndInverseProperties) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const RationalMatrix a = random_matrix(rng, n, n);
    const auto x = random_matrix(rng, n, 1);
    std::vector<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b[i] += a[i][j] * x[j][0];
    }
    const auto sol = solve(a, b);
    ASSERT_TRUE(sol.has_value());
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a[i][j] * (*sol)[j];
      EXPECT_EQ(s, b[i]);
    }
    if (rank(a) == static_cast<int>(n)) {
      EXPECT_EQ(multiply(a, inverse(a)), identity_matrix(n));
      EXPECT_EQ(multiply(inverse(a), a), identity_matrix(n));
    } else {
      EXPECT_THROW(inverse(a), InvalidArgument);
    }
  }
  EXPECT_FALSE(solve(RationalMatrix{{1, 1}, {1, 1}}, {1, 2}).has_value());
}
