#include "coxdesc/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "coxdesc/errors.hpp"

namespace coxdesc {

Enumeration::Enumeration(std::vector<GroupElement> elements, std::vector<std::int64_t> parent,
                         std::vector<int> generator, std::vector<int> lengths)
    : elements_(std::move(elements)),
      parent_(std::move(parent)),
      generator_(std::move(generator)),
      lengths_(std::move(lengths)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::vector<int> Enumeration::word(std::size_t i) const {
  std::vector<int> w;
  auto k = static_cast<std::int64_t>(i);
  while (parent_[static_cast<std::size_t>(k)] >= 0) {
    w.push_back(generator_[static_cast<std::size_t>(k)]);
    k = parent_[static_cast<std::size_t>(k)];
  }
  return w;
}

std::optional<std::size_t> Enumeration::index_of(const GroupElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

int lowest_generator(SubsetMask s) { return std::countr_zero(s.bits()) + 1; }

// Breadth-first growth by left multiplication. A candidate w = s v is kept iff
// it passes `admit` and s is the smallest left descent of w within `letters`,
// which makes every element appear exactly once. Growth stops early once
// `stop` accepts an element of a completed layer; that element is returned.
template <class Admit, class Stop>
Enumeration grow(const CoxeterSystem& sys, SubsetMask letters, const EnumerationLimits& limits, Admit admit,
                 const std::string& what, Stop stop, std::optional<GroupElement>* found) {
  if (found && stop(sys.identity())) {
    *found = sys.identity();
    return {};
  }
  std::vector<GroupElement> elements{sys.identity()};
  std::vector<std::int64_t> parent{-1};
  std::vector<int> generator{0};
  std::vector<int> lengths{0};

  const auto gens = letters.indices();
  std::size_t layer_begin = 0;
  int length = 0;
  while (layer_begin < elements.size()) {
    const std::size_t layer_end = elements.size();
    struct Candidate {
      GroupElement element;
      std::int64_t parent;
      int generator;
    };
    std::vector<Candidate> next;
    for (std::size_t v = layer_begin; v < layer_end; ++v) {
      const SubsetMask left = sys.left_descents(elements[v]);
      for (int s : gens) {
        if (left.contains(s)) continue;
        GroupElement w = sys.multiply(sys.generator(s), elements[v]);
        const SubsetMask w_left = sys.left_descents(w) & letters;
        if (lowest_generator(w_left) != s) continue;
        if (!admit(w)) continue;
        next.push_back({std::move(w), static_cast<std::int64_t>(v), s});
      }
    }
    if (elements.size() + next.size() > limits.cap) {
      throw EnumerationRefused("enumerating " + what + " exceeds the cap of " + std::to_string(limits.cap) +
                               " elements");
    }
    std::sort(next.begin(), next.end(), [](const Candidate& a, const Candidate& b) { return a.element < b.element; });
    ++length;
    for (auto& c : next) {
      elements.push_back(std::move(c.element));
      parent.push_back(c.parent);
      generator.push_back(c.generator);
      lengths.push_back(length);
    }
    if (found) {
      for (std::size_t i = layer_end; i < elements.size(); ++i) {
        if (stop(elements[i])) {
          *found = elements[i];
          return {};
        }
      }
    }
    layer_begin = layer_end;
  }
  return Enumeration(std::move(elements), std::move(parent), std::move(generator), std::move(lengths));
}

template <class Admit>
Enumeration grow(const CoxeterSystem& sys, SubsetMask letters, const EnumerationLimits& limits, Admit admit,
                 const std::string& what) {
  return grow(sys, letters, limits, admit, what, [](const GroupElement&) { return false; }, nullptr);
}

void check_subset(const CoxeterSystem& sys, SubsetMask s) {
  if (!s.fits(sys.rank())) {
    throw InvalidArgument("subset " + s.to_string() + " exceeds rank " + std::to_string(sys.rank()));
  }
}

}  // namespace

Enumeration enumerate_group(const CoxeterSystem& sys, const EnumerationLimits& limits) {
  if (sys.order() > BigInt(std::to_string(limits.cap))) {
    throw EnumerationRefused("group " + sys.type().label() + " has order " + sys.order().get_str() +
                             ", above the enumeration cap of " + std::to_string(limits.cap));
  }
  return grow(
      sys, SubsetMask::full(sys.rank()), limits, [](const GroupElement&) { return true; }, sys.type().label());
}

Enumeration enumerate_min_coset_reps(const CoxeterSystem& sys, SubsetMask K, const EnumerationLimits& limits) {
  check_subset(sys, K);
  // X_K is closed under deleting letters on the left, so the BFS tree stays inside X_K.
  return grow(
      sys, SubsetMask::full(sys.rank()), limits,
      [&](const GroupElement& w) { return (sys.right_descents(w) & K).empty(); },
      "X_" + K.to_string() + " in " + sys.type().label());
}

std::optional<GroupElement> find_min_coset_rep(const CoxeterSystem& sys, SubsetMask K,
                                               const std::function<bool(const GroupElement&)>& accept,
                                               const EnumerationLimits& limits) {
  check_subset(sys, K);
  std::optional<GroupElement> found;
  grow(
      sys, SubsetMask::full(sys.rank()), limits,
      [&](const GroupElement& w) { return (sys.right_descents(w) & K).empty(); },
      "X_" + K.to_string() + " in " + sys.type().label(), accept, &found);
  return found;
}

Enumeration enumerate_parabolic(const CoxeterSystem& sys, SubsetMask K, const EnumerationLimits& limits) {
  check_subset(sys, K);
  return grow(
      sys, K, limits, [](const GroupElement&) { return true; },
      "W_" + K.to_string() + " in " + sys.type().label());
}

bool in_double_transversal(const CoxeterSystem& sys, const GroupElement& d, SubsetMask J, SubsetMask K) {
  return (sys.left_descents(d) & J).empty() && (sys.right_descents(d) & K).empty();
}

Transversal min_coset_reps(const CoxeterSystem& sys, SubsetMask J, const EnumerationLimits& limits) {
  Transversal t{TransversalKind::Left, J, J, {}};
  t.elements = enumerate_min_coset_reps(sys, J, limits).elements();
  return t;
}

Transversal min_double_coset_reps(const CoxeterSystem& sys, SubsetMask J, SubsetMask K,
                                  const EnumerationLimits& limits) {
  check_subset(sys, J);
  Transversal t{TransversalKind::Double, J, K, {}};
  for (const auto& d : enumerate_min_coset_reps(sys, K, limits)) {
    if ((sys.left_descents(d) & J).empty()) t.elements.push_back(d);
  }
  return t;
}

Transversal relative_coset_reps(const CoxeterSystem& sys, SubsetMask J, SubsetMask K,
                                const EnumerationLimits& limits) {
  if (!J.is_subset_of(K)) {
    throw InvalidArgument("X_J^(K) needs J ⊆ K, got J = " + J.to_string() + ", K = " + K.to_string());
  }
  Transversal t{TransversalKind::Relative, J, K, {}};
  for (const auto& w : enumerate_parabolic(sys, K, limits)) {
    if ((sys.right_descents(w) & J).empty()) t.elements.push_back(w);
  }
  return t;
}

}  // namespace coxdesc
