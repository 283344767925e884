#include "coxdesc/descent_algebra.hpp"

#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "coxdesc/errors.hpp"

namespace coxdesc {

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement AlgebraElement::basis(SubsetMask J, const Rational& c) {
  AlgebraElement a;
  a.add(J, c);
  return a;
}

Rational AlgebraElement::coeff(SubsetMask J) const {
  auto it = terms_.find(J);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<SubsetMask> AlgebraElement::support() const {
  std::vector<SubsetMask> out;
  out.reserve(terms_.size());
  for (const auto& [J, c] : terms_) out.push_back(J);
  return out;
}

void AlgebraElement::add(SubsetMask J, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(J, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [J, c] : o.terms_) add(J, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [J, c] : o.terms_) add(J, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [J, v] : terms_) v *= c;
  return *this;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [J, c] = *it;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += coxdesc::to_string(mag) + " ";
    out += "x[" + J.to_string() + "]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// DescentAlgebra

namespace {

// Summary of one group element d for Solomon's rule.
struct ClassKey {
  std::uint32_t left = 0;   // left descents: d^-1 ∈ X_J iff left ∩ J = ∅
  std::uint32_t right = 0;  // right descents: d ∈ X_K iff right ∩ K = ∅
  // conj[t] = j when d s_t d^-1 = s_j (0-based), otherwise -1
  std::vector<std::int8_t> conj;

  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

}  // namespace

struct DescentAlgebra::Table {
  std::mutex mutex;
  bool built = false;
  std::vector<std::pair<ClassKey, std::uint64_t>> classes;
  std::unordered_map<std::uint64_t, std::unique_ptr<AlgebraElement>> products;
};

DescentAlgebra::DescentAlgebra(CoxeterSystem sys, EnumerationLimits limits)
    : sys_(std::move(sys)), limits_(limits), table_(std::make_unique<Table>()) {}

DescentAlgebra::~DescentAlgebra() = default;
DescentAlgebra::DescentAlgebra(DescentAlgebra&&) noexcept = default;
DescentAlgebra& DescentAlgebra::operator=(DescentAlgebra&&) noexcept = default;

void DescentAlgebra::check(SubsetMask J) const {
  if (!J.fits(rank())) throw InvalidArgument("subset " + J.to_string() + " exceeds rank " + std::to_string(rank()));
}

AlgebraElement DescentAlgebra::x(SubsetMask J) const {
  check(J);
  return AlgebraElement::basis(J);
}

const DescentAlgebra::Table& DescentAlgebra::table() const {
  std::lock_guard lock(table_->mutex);
  if (table_->built) return *table_;
  const Enumeration group = enumerate_group(sys_, limits_);
  std::map<ClassKey, std::uint64_t> counts;
  const int n = rank();
  for (const auto& d : group) {
    ClassKey key;
    key.left = sys_.left_descents(d).bits();
    key.right = sys_.right_descents(d).bits();
    key.conj.resize(static_cast<std::size_t>(n));
    for (int t = 1; t <= n; ++t) {
      auto j = sys_.conjugate_simple(d, t);
      key.conj[static_cast<std::size_t>(t - 1)] = static_cast<std::int8_t>(j ? *j - 1 : -1);
    }
    ++counts[std::move(key)];
  }
  table_->classes.assign(counts.begin(), counts.end());
  table_->built = true;
  return *table_;
}

const AlgebraElement& DescentAlgebra::solomon_product(SubsetMask J, SubsetMask K) const {
  check(J);
  check(K);
  const Table& t = table();
  const std::uint64_t slot = (std::uint64_t{J.bits()} << 32) | K.bits();
  {
    std::lock_guard lock(table_->mutex);
    if (auto it = table_->products.find(slot); it != table_->products.end()) return *it->second;
  }
  std::map<std::uint32_t, std::uint64_t> coefficients;
  const auto k_gens = K.indices();
  for (const auto& [key, count] : t.classes) {
    if ((key.left & J.bits()) != 0 || (key.right & K.bits()) != 0) continue;
    // L = J^d ∩ K = { t ∈ K : d s_t d^-1 ∈ J }
    std::uint32_t L = 0;
    for (int g : k_gens) {
      const int j = key.conj[static_cast<std::size_t>(g - 1)];
      if (j >= 0 && ((J.bits() >> j) & 1u)) L |= 1u << (g - 1);
    }
    coefficients[L] += count;
  }
  auto result = std::make_unique<AlgebraElement>();
  for (const auto& [L, c] : coefficients) result->add(SubsetMask(L), Rational(static_cast<unsigned long>(c)));
  std::lock_guard lock(table_->mutex);
  auto [it, inserted] = table_->products.try_emplace(slot, std::move(result));
  return *it->second;
}

AlgebraElement DescentAlgebra::product(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [J, cj] : a.terms()) {
    for (const auto& [K, ck] : b.terms()) {
      const Rational scale = cj * ck;
      for (const auto& [L, c] : solomon_product(J, K).terms()) out.add(L, scale * c);
    }
  }
  return out;
}

AlgebraElement DescentAlgebra::power(const AlgebraElement& a, int k) const {
  if (k < 0) throw InvalidArgument("negative power");
  AlgebraElement out = one();
  for (int i = 0; i < k; ++i) out = product(out, a);
  return out;
}

BigInt DescentAlgebra::transversal_size(SubsetMask J) const {
  check(J);
  std::uint64_t total = 0;
  for (const auto& [key, count] : table().classes) {
    if ((key.right & J.bits()) == 0) total += count;
  }
  return BigInt(static_cast<unsigned long>(total));
}

// ---------------------------------------------------------------------------
// GroupAlgebra

GroupAlgebra::GroupAlgebra(const CoxeterSystem& sys, const EnumerationLimits& limits)
    : sys_(sys), elements_(enumerate_group(sys, limits)) {}

GroupAlgebra::Vector GroupAlgebra::sum_of(const std::vector<GroupElement>& elements) const {
  Vector v(elements_.size());
  for (const auto& w : elements) {
    auto i = elements_.index_of(w);
    if (!i) throw SystemMismatch("element is not part of the enumerated group");
    v[*i] += 1;
  }
  return v;
}

GroupAlgebra::Vector GroupAlgebra::x_of(SubsetMask J) const {
  std::vector<GroupElement> reps;
  for (const auto& w : elements_) {
    if ((sys_.right_descents(w) & J).empty()) reps.push_back(w);
  }
  return sum_of(reps);
}

GroupAlgebra::Vector GroupAlgebra::multiply(const Vector& a, const Vector& b) const {
  Vector c(elements_.size());
  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] != 0) nz_b.push_back(j);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j : nz_b) {
      const auto k = *elements_.index_of(sys_.multiply(elements_[i], elements_[j]));
      c[k] += a[i] * b[j];
    }
  }
  return c;
}

GroupAlgebra::Vector GroupAlgebra::embed(const AlgebraElement& a) const {
  Vector v(elements_.size());
  for (const auto& [L, c] : a.terms()) {
    const Vector x = x_of(L);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (x[i] != 0) v[i] += c * x[i];
    }
  }
  return v;
}

// ---------------------------------------------------------------------------

FactorizationCheck verify_transversal_factorization(const CoxeterSystem& sys, SubsetMask J, SubsetMask K,
                                                    const EnumerationLimits& limits) {
  const auto xj = min_coset_reps(sys, J, limits).elements;
  const auto xk = min_coset_reps(sys, K, limits).elements;
  const auto rel = relative_coset_reps(sys, J, K, limits).elements;

  std::set<GroupElement> target(xj.begin(), xj.end());
  std::set<GroupElement> produced;
  for (const auto& v : xk) {
    for (const auto& w : rel) {
      GroupElement vw = sys.multiply(v, w);
      if (!target.contains(vw)) {
        return {false, "product " + sys.format_word(v) + " · " + sys.format_word(w) + " = [" + sys.format_word(vw) +
                           "] is not in X_" + J.to_string()};
      }
      if (!produced.insert(vw).second) {
        return {false, "element [" + sys.format_word(vw) + "] factors twice"};
      }
    }
  }
  if (produced.size() != target.size()) {
    for (const auto& w : target) {
      if (!produced.contains(w)) return {false, "element [" + sys.format_word(w) + "] of X_J is never produced"};
    }
  }

  const GroupAlgebra qw(sys, limits);
  if (qw.multiply(qw.sum_of(xk), qw.sum_of(rel)) != qw.x_of(J)) {
    return {false, "x_K x_J^(K) differs from x_J in the group algebra"};
  }
  return {true, {}};
}

}  // namespace coxdesc
