#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace oracle {

Group::Group(const CoxeterSystem& sys) : sys_(sys) {
  elements_.push_back(sys.identity());
  index_.emplace(sys.identity(), 0);
  length_.push_back(0);
  std::vector<std::pair<std::size_t, int>> parent{{0, 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (int s = 1; s <= sys.rank(); ++s) {
      GroupElement w = sys.multiply(elements_[v], sys.generator(s));
      if (index_.contains(w)) continue;
      index_.emplace(w, elements_.size());
      elements_.push_back(std::move(w));
      length_.push_back(length_[v] + 1);
      parent.emplace_back(v, s);
      queue.push_back(elements_.size() - 1);
    }
  }
  for (int s = 1; s <= sys.rank(); ++s) gens_.push_back(index_.at(sys.generator(s)));
  // w = v s gives w^-1 = s v^-1; parents precede children.
  inverse_.resize(elements_.size());
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    const auto [v, s] = parent[i];
    inverse_[i] = mul(generator_index(s), inverse_[v]);
  }
}

std::size_t Group::mul(std::size_t a, std::size_t b) const {
  return index_.at(sys_.multiply(elements_[a], elements_[b]));
}

std::vector<std::size_t> Group::min_coset_reps(SubsetMask J) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < size(); ++w) {
    bool ok = true;
    for (int s : J.indices()) ok = ok && !right_descent(w, s);
    if (ok) out.push_back(w);
  }
  return out;
}

std::vector<std::size_t> Group::parabolic(SubsetMask J) const {
  std::set<std::size_t> seen{0};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (int s : J.indices()) {
      const std::size_t w = mul(v, generator_index(s));
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

std::map<std::uint32_t, std::uint64_t> Group::solomon(SubsetMask J, SubsetMask K) const {
  std::map<std::uint32_t, std::uint64_t> out;
  std::set<std::size_t> j_gens;
  for (int s : J.indices()) j_gens.insert(generator_index(s));
  for (std::size_t d = 0; d < size(); ++d) {
    bool ok = true;
    for (int s : J.indices()) ok = ok && !left_descent(d, s);
    for (int s : K.indices()) ok = ok && !right_descent(d, s);
    if (!ok) continue;
    std::uint32_t L = 0;
    for (int t : K.indices()) {
      const std::size_t c = mul(mul(d, generator_index(t)), inv(d));
      if (j_gens.contains(c)) L |= 1u << (t - 1);
    }
    ++out[L];
  }
  return out;
}

Group::Vector Group::x_of(SubsetMask J) const {
  Vector v(size());
  for (std::size_t w : min_coset_reps(J)) v[w] = 1;
  return v;
}

Group::Vector Group::convolve(const Vector& a, const Vector& b) const {
  Vector c(size());
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] != 0) nz.push_back(j);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j : nz) c[mul(i, j)] += a[i] * b[j];
  }
  return c;
}

std::vector<std::uint64_t> Group::permutation_character_values(SubsetMask J) const {
  const auto reps = min_coset_reps(J);
  const auto sub = parabolic(J);
  const std::set<std::size_t> in_sub(sub.begin(), sub.end());
  std::set<std::uint64_t> values;
  for (std::size_t w = 0; w < size(); ++w) {
    std::uint64_t fixed = 0;
    for (std::size_t x : reps) {
      if (in_sub.contains(mul(mul(inv(x), w), x))) ++fixed;
    }
    values.insert(fixed);
  }
  return {values.begin(), values.end()};
}

std::uint64_t count_permutations_with_cycles(int k, int m) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    std::vector<bool> seen(p.size());
    int cycles = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = true;
    }
    if (cycles == m) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::uint64_t count_set_partitions(int k, int m) {
  // Restricted growth strings a_0 = 0, a_i <= 1 + max(a_0..a_{i-1}).
  std::uint64_t count = 0;
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == k) {
      if (blocks == m) ++count;
      return;
    }
    for (int b = 0; b <= blocks && b < m; ++b) rec(i + 1, std::max(blocks, b + 1));
  };
  if (k == 0) return m == 0 ? 1 : 0;
  rec(0, 0);
  return count;
}

}  // namespace oracle
