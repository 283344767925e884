#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxdesc/check.hpp"
#include "coxdesc/descent_algebra.hpp"
#include "coxdesc/linalg.hpp"
#include "coxdesc/polynomial.hpp"

namespace coxdesc {

/// x_J^0 = x_S, x_J^1, ..., x_J^up_to in the x-basis.
std::vector<AlgebraElement> powers_in_x_basis(const DescentAlgebra& alg, SubsetMask J, int up_to);

/// Monic generator of the ideal { p : p(x_J) = 0 }, found by exact
/// elimination on power coordinates.
QPolynomial minimal_polynomial(const DescentAlgebra& alg, SubsetMask J);

/// The distinct values of the permutation character of W on W/W_J, ascending.
/// Computed from the action on the coset list; needs W to be enumerable.
std::vector<BigInt> permutation_character_values(const CoxeterSystem& sys, SubsetMask J,
                                                 const EnumerationLimits& limits = {});

/// Structure of the subalgebra Q[x_J] with respect to the x-basis.
struct SubalgebraReport {
  std::string type;
  SubsetMask J;
  int dim = 0;
  QPolynomial minimal_poly;
  bool has_native_basis = false;
  /// Every L with x_L ∈ Q[x_J], ascending; a basis exactly when has_native_basis.
  std::vector<SubsetMask> native_basis;
  /// Row i holds the coordinates of x_{native_basis[i]} in x_J^0, ..., x_J^{dim-1}.
  RationalMatrix change_of_basis;
  bool all_integer = false;
};

SubalgebraReport detect_native_basis(const DescentAlgebra& alg, SubsetMask J);

/// Elements witnessing x_J x_K != x_K x_J for J = S \ {s} and K = J^s ∩ J:
/// y ∈ X_JK and t ∈ J \ K with t^y = y^-1 t y ∈ K.
struct CommutationWitness {
  int s = 0;
  SubsetMask J;
  SubsetMask K;
  int t = 0;
  GroupElement y;
  int t_conjugate = 0;
};

/// Searches t ascending, then y over X_K in (length, payload) order, keeping
/// y with y^-1 ∈ X_J. Never enumerates W.
std::optional<CommutationWitness> commutation_witness(const CoxeterSystem& sys, int s,
                                                      const EnumerationLimits& limits = {});

/// One published no-native-basis witness. `y` is a product of longest coset
/// representatives d_A^B = w_A w_B, listed left to right as (A, B) pairs.
struct WitnessRow {
  std::string type;
  int s = 0;
  std::vector<int> K;
  int t = 0;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> y_factors;
  int t_conjugate = 0;
};

const std::vector<WitnessRow>& no_native_witness_rows();
/// Rebuilds y for every row and checks y ∈ X_JK, t ∈ J \ K and t^y ∈ K from
/// descent sets and reflection conjugation only.
std::vector<CheckResult> verify_witness_rows(const EnumerationLimits& limits = {});

/// The two maximal cases settled by a direct computation rather than by a
/// witness row: H3 with s = s_2 and F4 with s = s_1.
std::vector<CheckResult> verify_direct_noncommuting_cases(const EnumerationLimits& limits = {});

enum class Verdict { NativeIntegral, NativeNonIntegral, NoNative };
std::string to_string(Verdict v);

/// Classification of Q[x_J], J = S \ {s}, for irreducible W: an integral native
/// basis iff J is the initial chain {s_1, ..., s_{n-1}} for some labelling of
/// the diagram as A_n, B_n or D_n; a non-integral native basis iff W has rank 2
/// (and is not covered above) or W = B_3 with s = s_2; no native basis otherwise.
Verdict expected_verdict(const CoxeterType& type, int s);

/// Whether J = S \ {s} is the chain {s_1, ..., s_{n-1}} of some classical
/// labelling of the Coxeter diagram of `type`.
bool is_left_connected_up_to_relabelling(const CoxeterType& type, int s);

struct MaximalClassification {
  int s = 0;
  SubalgebraReport report;
  Verdict observed = Verdict::NoNative;
  Verdict expected = Verdict::NoNative;
  bool matches = false;
  std::string reason;
};

/// Runs detect_native_basis for every maximal J and compares with expected_verdict.
std::vector<MaximalClassification> classify_all_maximal(const DescentAlgebra& alg);

}  // namespace coxdesc
