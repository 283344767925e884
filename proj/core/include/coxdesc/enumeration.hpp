#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxdesc/coxeter_system.hpp"
#include "coxdesc/subset.hpp"

namespace coxdesc {

/// Upper bound on the number of elements any single enumeration may produce.
struct EnumerationLimits {
  std::uint64_t cap = 10'000'000;
};

/// A list of group elements in (length, payload) order with the BFS tree that
/// produced it: elements[i] = s_{generator[i]} * elements[parent[i]].
class Enumeration {
 public:
  Enumeration() = default;
  Enumeration(std::vector<GroupElement> elements, std::vector<std::int64_t> parent, std::vector<int> generator,
              std::vector<int> lengths);

  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
  std::int64_t parent(std::size_t i) const { return parent_[i]; }
  /// 1-based generator; 0 for the identity.
  int generator(std::size_t i) const { return generator_[i]; }
  int length(std::size_t i) const { return lengths_[i]; }

  /// Reduced word read off the BFS tree (leftmost letter first).
  std::vector<int> word(std::size_t i) const;
  std::optional<std::size_t> index_of(const GroupElement& w) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

 private:
  std::vector<GroupElement> elements_;
  std::vector<std::int64_t> parent_;
  std::vector<int> generator_;
  std::vector<int> lengths_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
};

/// Every element of W, in (length, payload) order. Refuses when |W| > cap.
Enumeration enumerate_group(const CoxeterSystem& sys, const EnumerationLimits& limits = {});

/// X_K = { w : l(ws) > l(w) for all s in K }, grown by left multiplication
/// without enumerating W. Refuses once more than cap elements are produced.
Enumeration enumerate_min_coset_reps(const CoxeterSystem& sys, SubsetMask K, const EnumerationLimits& limits = {});

/// The first element of X_K in (length, payload) order that satisfies `accept`,
/// growing X_K only as far as needed. Refuses once more than cap elements are produced.
std::optional<GroupElement> find_min_coset_rep(const CoxeterSystem& sys, SubsetMask K,
                                               const std::function<bool(const GroupElement&)>& accept,
                                               const EnumerationLimits& limits = {});

/// The elements of the standard parabolic subgroup W_K.
Enumeration enumerate_parabolic(const CoxeterSystem& sys, SubsetMask K, const EnumerationLimits& limits = {});

enum class TransversalKind { Left, Relative, Double };

/// A distinguished transversal and the subsets it was built from.
struct Transversal {
  TransversalKind kind = TransversalKind::Left;
  SubsetMask J;
  SubsetMask K;
  std::vector<GroupElement> elements;
};

/// X_J, minimal length representatives of the cosets w W_J.
Transversal min_coset_reps(const CoxeterSystem& sys, SubsetMask J, const EnumerationLimits& limits = {});
/// X_JK = X_J^-1 ∩ X_K, minimal representatives of the double cosets W_J d W_K.
Transversal min_double_coset_reps(const CoxeterSystem& sys, SubsetMask J, SubsetMask K,
                                  const EnumerationLimits& limits = {});
/// X_J^(K) = X_J ∩ W_K; requires J ⊆ K.
Transversal relative_coset_reps(const CoxeterSystem& sys, SubsetMask J, SubsetMask K,
                                const EnumerationLimits& limits = {});

/// d ∈ X_JK, decided by descent sets only.
bool in_double_transversal(const CoxeterSystem& sys, const GroupElement& d, SubsetMask J, SubsetMask K);

}  // namespace coxdesc
