#pragma once

#include <optional>
#include <vector>

#include "coxdesc/rational.hpp"

namespace coxdesc {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank over Q. Rows are cleared of denominators and reduced fraction-free
/// (Bareiss), so intermediate entries stay integral.
int rank(const RationalMatrix& rows);

/// Reduced row echelon form over Q; `pivots` receives the pivot columns.
RationalMatrix rref(RationalMatrix m, std::vector<int>* pivots = nullptr);

/// A solution x of A x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Inverse of a square matrix; throws InvalidArgument when singular.
RationalMatrix inverse(const RationalMatrix& m);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix identity_matrix(std::size_t n);

}  // namespace coxdesc
