#pragma once

// Brute-force reference computations used only by the tests. They rely on
// nothing but group multiplication and element equality, so they are
// independent of the descent, conjugation and enumeration machinery under test.

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "coxdesc/coxeter_system.hpp"
#include "coxdesc/rational.hpp"
#include "coxdesc/subset.hpp"

namespace oracle {

using coxdesc::CoxeterSystem;
using coxdesc::GroupElement;
using coxdesc::Rational;
using coxdesc::SubsetMask;

/// W with lengths from a breadth-first search of the Cayley graph.
class Group {
 public:
  explicit Group(const CoxeterSystem& sys);

  const CoxeterSystem& system() const { return sys_; }
  std::size_t size() const { return elements_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t index(const GroupElement& w) const { return index_.at(w); }
  int length(std::size_t i) const { return length_[i]; }
  std::size_t generator_index(int s) const { return gens_[static_cast<std::size_t>(s - 1)]; }
  std::size_t identity() const { return 0; }

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inverse_[a]; }

  /// l(w s) < l(w) from Cayley distances.
  bool right_descent(std::size_t w, int s) const { return length_[mul(w, generator_index(s))] < length_[w]; }
  bool left_descent(std::size_t w, int s) const { return length_[mul(generator_index(s), w)] < length_[w]; }

  /// Indices of X_J = { w : l(ws) > l(w) for s in J }.
  std::vector<std::size_t> min_coset_reps(SubsetMask J) const;
  /// Indices of the subgroup generated by J, by closure.
  std::vector<std::size_t> parabolic(SubsetMask J) const;

  /// Solomon coefficients read off literally: d ∈ X_J^-1 ∩ X_K and
  /// J^d ∩ K = { t ∈ K : d t d^-1 ∈ J } via element comparisons.
  std::map<std::uint32_t, std::uint64_t> solomon(SubsetMask J, SubsetMask K) const;

  /// Dense group-algebra vectors.
  using Vector = std::vector<Rational>;
  Vector x_of(SubsetMask J) const;
  Vector convolve(const Vector& a, const Vector& b) const;

  /// Distinct values #{cosets x W_J fixed by w}, via x^-1 w x ∈ W_J.
  std::vector<std::uint64_t> permutation_character_values(SubsetMask J) const;

 private:
  CoxeterSystem sys_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, coxdesc::GroupElementHash> index_;
  std::vector<int> length_;
  std::vector<std::size_t> gens_;
  std::vector<std::size_t> inverse_;
};

/// Number of permutations of k points with m cycles, by listing them.
std::uint64_t count_permutations_with_cycles(int k, int m);
/// Number of partitions of a k-set into m blocks, by restricted growth strings.
std::uint64_t count_set_partitions(int k, int m);

}  // namespace oracle
