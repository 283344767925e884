#include "coxdesc/polynomial.hpp"

#include <algorithm>

#include "coxdesc/errors.hpp"

namespace coxdesc {

// ---------------------------------------------------------------------------
// QPolynomial

QPolynomial::QPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPolynomial QPolynomial::constant(const Rational& c) { return QPolynomial({c}); }

QPolynomial QPolynomial::x() { return QPolynomial({Rational(0), Rational(1)}); }

QPolynomial QPolynomial::from_roots(const std::vector<Rational>& roots) {
  QPolynomial p = constant(1);
  for (const auto& a : roots) p *= QPolynomial({-a, Rational(1)});
  return p;
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational QPolynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  const Rational lead = divisor.coeffs_.back();
  std::vector<Rational> quo(static_cast<std::size_t>(std::max(0, degree() - dd + 1)));
  for (int k = degree(); k >= dd; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lead;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(k - dd)] = c;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= c * divisor.coeffs_[static_cast<std::size_t>(i)];
  }
  return {QPolynomial(std::move(quo)), QPolynomial(std::move(rem))};
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += coxdesc::to_string(mag);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FallingPoly

FallingPoly::FallingPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

FallingPoly FallingPoly::falling_power(int k, const Rational& c) {
  if (k < 0) throw InvalidArgument("negative falling power");
  std::vector<Rational> v(static_cast<std::size_t>(k + 1));
  v.back() = c;
  return FallingPoly(std::move(v));
}

void FallingPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational FallingPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

QPolynomial FallingPoly::to_monomial() const {
  QPolynomial out;
  QPolynomial power = QPolynomial::constant(1);  // x^(k)
  for (int k = 0; k <= degree(); ++k) {
    if (k > 0) power *= QPolynomial({Rational(1 - k), Rational(1)});
    out += coeffs_[static_cast<std::size_t>(k)] * power;
  }
  return out;
}

FallingPoly FallingPoly::from_monomial(const QPolynomial& p) {
  // Newton's forward differences: the x^(k) coefficient is Δ^k p(0) / k!.
  const int d = p.degree();
  if (d < 0) return {};
  std::vector<Rational> values;
  for (int i = 0; i <= d; ++i) values.push_back(p.evaluate(i));
  std::vector<Rational> out;
  for (int k = 0; k <= d; ++k) {
    out.push_back(values[0] / Rational(factorial(static_cast<unsigned>(k))));
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
  }
  return FallingPoly(std::move(out));
}

FallingPoly FallingPoly::operator*(const FallingPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(degree() + o.degree() + 1));
  for (int a = 0; a <= degree(); ++a) {
    const Rational& ca = coeffs_[static_cast<std::size_t>(a)];
    if (ca == 0) continue;
    for (int b = 0; b <= o.degree(); ++b) {
      const Rational& cb = o.coeffs_[static_cast<std::size_t>(b)];
      if (cb == 0) continue;
      for (int k = 0; k <= std::min(a, b); ++k) {
        const BigInt m = binomial(a, k) * binomial(b, k) * factorial(static_cast<unsigned>(k));
        out[static_cast<std::size_t>(a + b - k)] += ca * cb * Rational(m);
      }
    }
  }
  return FallingPoly(std::move(out));
}

FallingPoly& FallingPoly::operator+=(const FallingPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

FallingPoly& FallingPoly::operator-=(const FallingPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

FallingPoly& FallingPoly::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

FallingPoly FallingPoly::times_x_minus(const Rational& c) const {
  if (is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    out[j + 1] += coeffs_[j];
    out[j] += (Rational(static_cast<long>(j)) - c) * coeffs_[j];
  }
  return FallingPoly(std::move(out));
}

FallingPoly FallingPoly::reduce(const FallingPoly& monic_modulus) const {
  const int d = monic_modulus.degree();
  if (d < 0 || monic_modulus.coeffs_.back() != 1) throw InvalidArgument("modulus must be monic in the falling basis");
  FallingPoly r = *this;
  while (r.degree() >= d) {
    // M (x-d)(x-d-1)...(x-k+1) has leading term x^(k).
    const int k = r.degree();
    FallingPoly g = monic_modulus;
    for (int c = d; c < k; ++c) g = g.times_x_minus(c);
    g *= r.coeffs_.back();
    r -= g;
  }
  return r;
}

}  // namespace coxdesc
