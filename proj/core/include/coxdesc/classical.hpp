#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxdesc/check.hpp"
#include "coxdesc/coxeter_type.hpp"
#include "coxdesc/descent_algebra.hpp"
#include "coxdesc/linalg.hpp"
#include "coxdesc/polynomial.hpp"

namespace coxdesc {

/// Unsigned Stirling numbers [k, m] (cycles) and {k, m} (set partitions).
/// Memoised; safe to call concurrently.
BigInt stirling_first(int k, int m);
BigInt stirling_second(int k, int m);

/// x^(a) x^(b) in the falling basis.
FallingPoly falling_product(int a, int b);

/// Sparse combination of chain elements x_j of type A_n, B_n or D_n.
///
/// x_j stands for x_{s_1..s_j}. In type D the chain starts at j = 1, which
/// denotes x_∅, and the formal symbol x_0 means 2 x_1.
using ChainElement = std::map<int, Rational>;

/// Smallest valid chain index: 0 for A and B, 1 for D.
int chain_min_index(Family family);

/// The subset behind x_j. In type D, j = 1 gives ∅ and j = 0 is rejected.
SubsetMask chain_subset(Family family, int n, int j);

/// Applies the boundary conventions: type A reads x_{-1} as x_0, type B
/// reads x_{-1} as 0, type D reads x_0 as 2 x_1. Zero terms are dropped.
ChainElement fold_chain(Family family, const ChainElement& raw);

/// x_{n-1} x_{n-k} = coefficient x_{n-k} + x_{successor} before folding,
/// with coefficient k (A) or 2k (B, D). Valid for 0 <= k <= n (D: k <= n-1).
struct ChainRecurrence {
  Rational coefficient;
  int index = 0;
  int successor = 0;
  /// The right-hand side after fold_chain.
  ChainElement rhs;
};
ChainRecurrence chain_recurrence(Family family, int n, int k);

/// The integer polynomial p with p(x_{n-1}) = x_{n-k}: prod_{i<k} (x - i) for A,
/// prod_{i<k} (x - 2i) for B and D. Valid for 0 <= k <= n (D: k <= n-1).
QPolynomial chain_as_polynomial(Family family, int n, int k);

enum class BaseChangeDirection {
  /// Row k: coordinates of x_{n-k} in the powers x_{n-1}^m.
  ChainInPowers,
  /// Row k: coordinates of x_{n-1}^k in the chain elements x_{n-m}.
  PowersInChain,
};
/// Square lower triangular integer matrix, indices 0..n (D: 0..n-1).
RationalMatrix base_change(Family family, int n, BaseChangeDirection direction);

/// x_j x_k from the closed form
///   sum_l C(n-j, k-l) C(n-k, j-l) (n-j-k+l)! [2^(n-j-k+l) for B, D] x_l,
/// with l starting at -1 (A) or 0 (B, D) and folded by fold_chain.
ChainElement closed_form_product(Family family, int n, int j, int k);

/// Product of chain elements by the closed form, extended bilinearly.
ChainElement chain_product(Family family, int n, const ChainElement& a, const ChainElement& b);

/// The isomorphism from the chain algebra of D_n onto that of A_{n-1}:
/// x_j ↦ 2^(n-j) x_{j-1}.
ChainElement phi_D_to_A(int n, const ChainElement& element);

/// Embeds a chain element into the descent algebra of the same type.
AlgebraElement chain_to_algebra(Family family, int n, const ChainElement& element);
/// Reads an algebra element supported on chain subsets back as a chain element;
/// throws InvalidArgument if it has any other support.
ChainElement algebra_to_chain(Family family, int n, const AlgebraElement& element);

/// Generator of the ideal of the falling-basis quotient model:
/// x^(n+1) - x^(n) (A), x^(n+1) (B), x^(n) - x^(n-1) (D).
FallingPoly quotient_modulus(Family family, int n);
/// Image of x_{n-k} in the quotient model: x^(k) (A), 2^k x^(k) (B, D).
FallingPoly quotient_image(Family family, int n, int j);
/// Checks that the images multiply with the closed-form structure constants.
std::vector<CheckResult> verify_quotient_model(Family family, int n);

/// Structure constants as CSV: header "j\k,<k...>", one row per j, each cell
/// "l:coeff;l:coeff" in ascending l.
std::string chain_table_csv(Family family, int n);

std::string to_string(const ChainElement& element);

// Checks against the descent algebra of a classical system (type taken from `alg`).

/// closed_form_product equals the Solomon product for every chain pair.
std::vector<CheckResult> verify_closed_forms(const DescentAlgebra& alg);
/// chain_recurrence holds in the descent algebra for every k.
std::vector<CheckResult> verify_recurrences(const DescentAlgebra& alg);
/// chain_as_polynomial evaluated at x_{n-1} gives x_{n-k} for every k.
std::vector<CheckResult> verify_chain_polynomials(const DescentAlgebra& alg);

/// The two base_change matrices multiply to the identity.
CheckResult verify_base_change_inverse(Family family, int n);
/// phi_D_to_A respects products of all chain pairs, via the closed forms.
std::vector<CheckResult> verify_phi_multiplicative(int n);

}  // namespace coxdesc
