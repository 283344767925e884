#pragma once

#include <string>
#include <vector>

#include "coxdesc/rational.hpp"

namespace coxdesc {

/// Dense univariate polynomial with rational coefficients, ascending degree.
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coefficients);
  static QPolynomial constant(const Rational& c);
  static QPolynomial x();
  /// prod (x - a) over the given roots.
  static QPolynomial from_roots(const std::vector<Rational>& roots);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(int k) const;
  Rational evaluate(const Rational& at) const;
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  QPolynomial& operator*=(const Rational& c);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend QPolynomial operator*(const Rational& c, QPolynomial a) { return a *= c; }

  /// Quotient and remainder; throws on division by zero.
  std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& divisor) const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Polynomial in the falling-power basis x^(0), x^(1), ... where
/// x^(k) = x (x-1) ... (x-k+1).
class FallingPoly {
 public:
  FallingPoly() = default;
  explicit FallingPoly(std::vector<Rational> coefficients);
  /// The single falling power x^(k).
  static FallingPoly falling_power(int k, const Rational& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(int k) const;

  /// Monomial coordinates via signed Stirling numbers of the first kind.
  QPolynomial to_monomial() const;
  /// Falling coordinates via Stirling numbers of the second kind.
  static FallingPoly from_monomial(const QPolynomial& p);

  /// Product, using x^(a) x^(b) = sum_k C(a,k) C(b,k) k! x^(a+b-k).
  FallingPoly operator*(const FallingPoly& o) const;
  FallingPoly& operator+=(const FallingPoly& o);
  FallingPoly& operator-=(const FallingPoly& o);
  FallingPoly& operator*=(const Rational& c);
  friend FallingPoly operator+(FallingPoly a, const FallingPoly& b) { return a += b; }
  friend FallingPoly operator-(FallingPoly a, const FallingPoly& b) { return a -= b; }
  /// (x - c) times this polynomial; x x^(j) = x^(j+1) + j x^(j).
  FallingPoly times_x_minus(const Rational& c) const;
  /// Remainder modulo a polynomial that is monic in the falling basis.
  FallingPoly reduce(const FallingPoly& monic_modulus) const;

  friend bool operator==(const FallingPoly&, const FallingPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace coxdesc
