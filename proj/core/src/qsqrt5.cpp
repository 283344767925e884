#include "coxdesc/qsqrt5.hpp"

namespace coxdesc {

QSqrt5 QSqrt5::golden() { return QSqrt5(Rational(1, 2), Rational(1, 2)); }

int QSqrt5::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // opposite signs: compare a^2 with 5 b^2
  const Rational lhs = a_ * a_;
  const Rational rhs = 5 * b_ * b_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

QSqrt5& QSqrt5::operator+=(const QSqrt5& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt5& QSqrt5::operator-=(const QSqrt5& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt5& QSqrt5::operator*=(const QSqrt5& o) {
  Rational a = a_ * o.a_ + 5 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::strong_ordering operator<=>(const QSqrt5& x, const QSqrt5& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QSqrt5::to_string() const {
  if (b_ == 0) return coxdesc::to_string(a_);
  return coxdesc::to_string(a_) + "+" + coxdesc::to_string(b_) + "r5";
}

}  // namespace coxdesc
