#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coxdesc/coxeter_system.hpp"
#include "coxdesc/enumeration.hpp"
#include "coxdesc/rational.hpp"
#include "coxdesc/subset.hpp"

namespace coxdesc {

/// A sparse rational combination of the basis elements x_J of Σ(W).
/// Zero coefficients are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<SubsetMask, Rational>;

  AlgebraElement() = default;
  static AlgebraElement basis(SubsetMask J, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  Rational coeff(SubsetMask J) const;
  std::vector<SubsetMask> support() const;
  bool is_zero() const { return terms_.empty(); }

  void add(SubsetMask J, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  /// "2 x[1,2] + x[-]"; "0" for the zero element.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Solomon's descent algebra Σ(W) in the basis {x_J}.
///
/// Structure constants a_JKL = #{d ∈ X_JK : J^d ∩ K = L} come from one pass
/// over W: every element d is summarised by its left and right descent sets
/// and by which simple reflections d s_t d^-1 hit, and elements with the same
/// summary are counted together. Products are memoised per (J, K).
class DescentAlgebra {
 public:
  explicit DescentAlgebra(CoxeterSystem sys, EnumerationLimits limits = {});
  ~DescentAlgebra();
  DescentAlgebra(DescentAlgebra&&) noexcept;
  DescentAlgebra& operator=(DescentAlgebra&&) noexcept;

  const CoxeterSystem& system() const { return sys_; }
  int rank() const { return sys_.rank(); }

  AlgebraElement one() const { return AlgebraElement::basis(SubsetMask::full(rank())); }
  AlgebraElement x(SubsetMask J) const;

  /// x_J x_K, by Solomon's rule. The first call enumerates W.
  const AlgebraElement& solomon_product(SubsetMask J, SubsetMask K) const;
  /// Bilinear extension of solomon_product.
  AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b) const;
  /// a^k, with a^0 = x_S.
  AlgebraElement power(const AlgebraElement& a, int k) const;

  /// |X_J| = |W| / |W_J|, the number of summands of x_J.
  BigInt transversal_size(SubsetMask J) const;

 private:
  struct Table;
  void check(SubsetMask J) const;
  const Table& table() const;

  CoxeterSystem sys_;
  EnumerationLimits limits_;
  std::unique_ptr<Table> table_;
};

/// The group algebra Q[W] in dense coordinates over an enumeration of W.
/// Used as an independent oracle for Solomon's rule.
class GroupAlgebra {
 public:
  using Vector = std::vector<Rational>;

  explicit GroupAlgebra(const CoxeterSystem& sys, const EnumerationLimits& limits = {});

  const Enumeration& elements() const { return elements_; }
  /// x_J = sum of the elements of X_J.
  Vector x_of(SubsetMask J) const;
  /// Sum of the elements of an explicit list.
  Vector sum_of(const std::vector<GroupElement>& elements) const;
  /// Convolution product.
  Vector multiply(const Vector& a, const Vector& b) const;
  /// Expands Σ c_L x_L into group-algebra coordinates.
  Vector embed(const AlgebraElement& a) const;

 private:
  CoxeterSystem sys_;
  Enumeration elements_;
};

/// Result of checking X_J = X_K · X_J^(K) (with unique factorisations) and
/// x_J = x_K x_J^(K) in the group algebra.
struct FactorizationCheck {
  bool ok = false;
  std::string first_violation;
};

FactorizationCheck verify_transversal_factorization(const CoxeterSystem& sys, SubsetMask J, SubsetMask K,
                                                    const EnumerationLimits& limits = {});

}  // namespace coxdesc
