#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxdesc/coxeter_type.hpp"
#include "coxdesc/subset.hpp"

namespace coxdesc {

/// How group elements are stored.
///
///  - Symmetric: images of 1..n+1 under a permutation (type A).
///  - Hyperoctahedral: images of 1..n as signed integers (type B).
///  - EvenSigned: as Hyperoctahedral, with an even number of sign changes (type D).
///  - Dihedral: the pair (k, f) standing for (s_1 s_2)^k s_1^f (type I2).
///  - Roots: the permutation induced on the full root system, positive roots
///    first (indices 0..N-1, simple roots at 0..rank-1), then their negatives.
enum class ModelKind { Symmetric, Hyperoctahedral, EvenSigned, Dihedral, Roots };

std::string to_string(ModelKind kind);

class CoxeterSystem;

/// An element of a finite Coxeter group in the representation chosen by its system.
class GroupElement {
 public:
  using Payload = std::vector<std::int16_t>;

  GroupElement() = default;

  std::span<const std::int16_t> payload() const { return payload_; }
  std::uint64_t system_id() const { return system_id_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  /// Orders by system, then payload lexicographically.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  friend class CoxeterSystem;
  GroupElement(std::uint64_t system_id, Payload payload)
      : system_id_(system_id), payload_(std::move(payload)) {}

  std::uint64_t system_id_ = 0;
  Payload payload_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& w) const noexcept;
};

namespace detail {
class ElementModel;
}

/// A finite irreducible Coxeter system together with a faithful element model.
///
/// Systems are immutable and cheap to copy; copies share the same identity,
/// so elements built by one copy can be used with another.
class CoxeterSystem {
 public:
  /// Builds the system with the default model of its family.
  static CoxeterSystem build(const CoxeterType& type);
  /// Builds the system with an explicit model. Roots is available for every
  /// type except I2(m) with m > 6; the permutation models only for their family.
  static CoxeterSystem build(const CoxeterType& type, ModelKind model);

  const CoxeterType& type() const;
  int rank() const;
  const CoxeterMatrix& coxeter_matrix() const;
  BigInt order() const;
  ModelKind model() const;
  std::uint64_t id() const;
  /// Number of positive roots, i.e. the length of the longest element.
  int positive_root_count() const;

  GroupElement identity() const;
  /// The simple reflection s_i, 1 <= i <= rank.
  GroupElement generator(int i) const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  int length(const GroupElement& w) const;

  /// True iff l(w s_i) > l(w).
  bool has_right_ascent(const GroupElement& w, int i) const;
  /// True iff l(s_i w) > l(w).
  bool has_left_ascent(const GroupElement& w, int i) const;
  SubsetMask right_descents(const GroupElement& w) const;
  SubsetMask left_descents(const GroupElement& w) const;

  /// The index j with w = s_j, if w is a simple reflection.
  std::optional<int> simple_reflection_index(const GroupElement& w) const;
  /// The index j with d s_t d^-1 = s_j, if that conjugate is simple.
  std::optional<int> conjugate_simple(const GroupElement& d, int t) const;

  /// y^-1 s_t y as a simple index, if simple (the conjugate t^y).
  std::optional<int> conjugate_by(int t, const GroupElement& y) const;
  /// { t in J : y s_t y^-1 in K }, that is J ∩ K^y with K^y = y^-1 K y.
  SubsetMask conjugate_intersection(SubsetMask K, const GroupElement& y, SubsetMask J) const;

  /// Product of generators, left to right. Indices are 1-based.
  GroupElement from_word(std::span<const int> word) const;
  /// Parses "2 1 3 2"; empty text is the identity.
  GroupElement parse_word(std::string_view text) const;
  /// The reduced word whose first letter is always the smallest left descent.
  std::vector<int> reduced_word(const GroupElement& w) const;
  std::string format_word(const GroupElement& w) const;

  /// w_K, found by greedy ascent inside W_K.
  GroupElement longest_element(SubsetMask K) const;
  /// d_J^K = w_J w_K; requires J ⊆ K.
  GroupElement coset_rep_d(SubsetMask J, SubsetMask K) const;

  /// Raw payload rendering for diagnostics ("[2, -1, 3]").
  std::string format_payload(const GroupElement& w) const;

  /// Rejects elements from other systems.
  void check_owned(const GroupElement& w) const;

  friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) { return a.id() == b.id(); }

 private:
  struct Impl;
  explicit CoxeterSystem(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  GroupElement wrap(GroupElement::Payload p) const;
  void check_generator(int i) const;

  std::shared_ptr<const Impl> impl_;
};

}  // namespace coxdesc
