#pragma once

#include <compare>
#include <string>

#include "coxdesc/rational.hpp"

namespace coxdesc {

/// Exact element a + b√5 of the field Q(√5).
class QSqrt5 {
 public:
  QSqrt5() = default;
  QSqrt5(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT(google-explicit-constructor)

  /// The golden ratio (1 + √5) / 2.
  static QSqrt5 golden();

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  /// -1, 0 or 1.
  int sign() const;

  QSqrt5& operator+=(const QSqrt5& o);
  QSqrt5& operator-=(const QSqrt5& o);
  QSqrt5& operator*=(const QSqrt5& o);
  friend QSqrt5 operator+(QSqrt5 a, const QSqrt5& b) { return a += b; }
  friend QSqrt5 operator-(QSqrt5 a, const QSqrt5& b) { return a -= b; }
  friend QSqrt5 operator*(QSqrt5 a, const QSqrt5& b) { return a *= b; }
  QSqrt5 operator-() const { return QSqrt5(-a_, -b_); }

  friend bool operator==(const QSqrt5& x, const QSqrt5& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const QSqrt5& x, const QSqrt5& y);

  std::string to_string() const;

 private:
  Rational a_ = 0;
  Rational b_ = 0;
};

}  // namespace coxdesc
