#include "coxdesc/classical.hpp"
#include "coxdesc/errors.hpp"
#include "coxdesc/subalgebra.hpp"

namespace coxdesc {

namespace {

int depth_limit(Family family, int n) { return family == Family::D ? n - 1 : n; }

std::string pair_anchor(const std::string& what, const std::string& label, int j, int k) {
  return label + " " + what + " x_" + std::to_string(j) + " x_" + std::to_string(k);
}

}  // namespace

std::vector<CheckResult> verify_closed_forms(const DescentAlgebra& alg) {
  const CoxeterType& type = alg.system().type();
  const Family f = type.family;
  const int n = type.rank;
  std::vector<CheckResult> out;
  for (int j = chain_min_index(f); j <= n; ++j) {
    for (int k = chain_min_index(f); k <= n; ++k) {
      const AlgebraElement closed = chain_to_algebra(f, n, closed_form_product(f, n, j, k));
      const AlgebraElement& solomon = alg.solomon_product(chain_subset(f, n, j), chain_subset(f, n, k));
      out.push_back({pair_anchor("closed form", type.label(), j, k), closed == solomon, closed.to_string(),
                     solomon.to_string()});
    }
  }
  return out;
}

std::vector<CheckResult> verify_recurrences(const DescentAlgebra& alg) {
  const CoxeterType& type = alg.system().type();
  const Family f = type.family;
  const int n = type.rank;
  std::vector<CheckResult> out;
  for (int k = 0; k <= depth_limit(f, n); ++k) {
    const ChainRecurrence r = chain_recurrence(f, n, k);
    const AlgebraElement expected = chain_to_algebra(f, n, r.rhs);
    const AlgebraElement& actual = alg.solomon_product(chain_subset(f, n, n - 1), chain_subset(f, n, n - k));
    out.push_back({pair_anchor("recurrence", type.label(), n - 1, n - k), expected == actual, expected.to_string(),
                   actual.to_string()});
  }
  return out;
}

std::vector<CheckResult> verify_chain_polynomials(const DescentAlgebra& alg) {
  const CoxeterType& type = alg.system().type();
  const Family f = type.family;
  const int n = type.rank;
  const int top = depth_limit(f, n);
  const auto powers = powers_in_x_basis(alg, chain_subset(f, n, n - 1), top);
  std::vector<CheckResult> out;
  for (int k = 0; k <= top; ++k) {
    const QPolynomial p = chain_as_polynomial(f, n, k);
    AlgebraElement value;
    for (int i = 0; i <= p.degree(); ++i) value += p.coeff(i) * powers[static_cast<std::size_t>(i)];
    const AlgebraElement expected = alg.x(chain_subset(f, n, n - k));
    out.push_back({type.label() + " x_" + std::to_string(n - k) + " = " + p.to_string() + " at x_" +
                       std::to_string(n - 1),
                   value == expected, expected.to_string(), value.to_string()});
  }
  return out;
}

CheckResult verify_base_change_inverse(Family family, int n) {
  const RationalMatrix a = base_change(family, n, BaseChangeDirection::ChainInPowers);
  const RationalMatrix b = base_change(family, n, BaseChangeDirection::PowersInChain);
  const bool ok = multiply(a, b) == identity_matrix(a.size()) && multiply(b, a) == identity_matrix(a.size());
  return {CoxeterType::make(family, n).label() + " base change matrices are mutually inverse", ok, "identity",
          ok ? "identity" : "not the identity"};
}

std::vector<CheckResult> verify_phi_multiplicative(int n) {
  std::vector<CheckResult> out;
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const ChainElement lhs = phi_D_to_A(n, closed_form_product(Family::D, n, j, k));
      const ChainElement rhs =
          chain_product(Family::A, n - 1, phi_D_to_A(n, {{j, Rational(1)}}), phi_D_to_A(n, {{k, Rational(1)}}));
      out.push_back({pair_anchor("D to A isomorphism", "D" + std::to_string(n), j, k), lhs == rhs, to_string(rhs),
                     to_string(lhs)});
    }
  }
  return out;
}

}  // namespace coxdesc
