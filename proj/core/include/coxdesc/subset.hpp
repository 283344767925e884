#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace coxdesc {

/// A subset J of the simple reflections, stored as a bitmask.
///
/// Bit i (0-based) stands for the generator s_{i+1}; every public method that
/// takes a generator index uses the 1-based labelling.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  static SubsetMask full(int rank);
  static SubsetMask single(int generator);
  /// {s_1, ..., s_j}
  static SubsetMask chain(int j);
  static SubsetMask of(std::initializer_list<int> generators);
  static SubsetMask of(const std::vector<int>& generators);

  /// Parses "1,3" or "-" (empty set). Indices must lie in 1..rank.
  static SubsetMask parse(std::string_view text, int rank);

  constexpr std::uint32_t bits() const { return bits_; }
  bool contains(int generator) const;
  bool empty() const { return bits_ == 0; }
  int size() const;
  bool is_subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  bool fits(int rank) const;

  SubsetMask with(int generator) const;
  SubsetMask without(int generator) const;

  /// Generators in ascending order, 1-based.
  std::vector<int> indices() const;

  std::string to_string() const;

  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
  /// Set difference a \ b.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & ~b.bits_); }

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// All subsets of a rank-n generating set in ascending bitmask order.
std::vector<SubsetMask> all_subsets(int rank);

}  // namespace coxdesc
