#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxdesc/rational.hpp"

namespace coxdesc {

enum class Family { A, B, D, I2, H3, H4, F4, E6, E7, E8 };

/// Square symmetric matrix of Coxeter exponents m_ij, indexed from 0.
using CoxeterMatrix = std::vector<std::vector<int>>;

/// The label of an irreducible finite Coxeter group.
///
/// Generators follow the standard diagram labelling: B_n has the 4-edge
/// between s_1 and s_2, D_n has s_1 and s_2 both attached to s_3, and the
/// exceptional types use the Bourbaki numbering (E_n: s_2 attached to s_4).
struct CoxeterType {
  Family family = Family::A;
  int rank = 1;
  int dihedral_m = 0;  ///< only meaningful for I2

  /// Validates the rank constraints of the family; throws InvalidArgument.
  static CoxeterType make(Family family, int rank, int dihedral_m = 0);

  /// Grammar: family letter + rank ("A5", "D4", "E7") or "I2:m".
  static CoxeterType parse(std::string_view text);

  std::string label() const;
  CoxeterMatrix coxeter_matrix() const;
  BigInt order() const;
  bool is_classical() const;

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

/// Matrix of the classical type X_n, or empty when X_n is not a valid label.
CoxeterMatrix classical_coxeter_matrix(Family family, int rank);

}  // namespace coxdesc
