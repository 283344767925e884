#pragma once

#include <vector>

#include "coxdesc/coxeter_type.hpp"
#include "coxdesc/qsqrt5.hpp"

namespace coxdesc::detail {

/// Coordinates of a root in the basis of simple roots.
using RootVector = std::vector<QSqrt5>;

/// The full root system of a finite Coxeter group, computed exactly.
///
/// Roots 0..N-1 are positive with the simple roots first; root N+r is the
/// negative of root r.
struct RootSystem {
  int rank = 0;
  int positive_count = 0;
  std::vector<RootVector> roots;
  /// reflection_images[i][r] = index of s_i(root r).
  std::vector<std::vector<int>> reflection_images;
};

/// Cartan entries <alpha_j, alpha_i^vee> for the type. m = 5 edges use the
/// golden ratio; m = 4 and m = 6 edges scale the shorter root.
std::vector<std::vector<QSqrt5>> cartan_matrix(const CoxeterType& type);

RootSystem build_root_system(const CoxeterType& type);

}  // namespace coxdesc::detail
