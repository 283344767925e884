#include "models.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace coxdesc::detail {

std::uint32_t ElementModel::right_descent_bits(const Payload& w) const {
  std::uint32_t bits = 0;
  for (int i = 0; i < rank(); ++i) {
    if (right_descent(w, i)) bits |= 1u << i;
  }
  return bits;
}

std::uint32_t ElementModel::left_descent_bits(const Payload& w) const {
  return right_descent_bits(inverse(w));
}

std::optional<int> ElementModel::match_generator(const Payload& w) const {
  for (int j = 0; j < rank(); ++j) {
    if (w == generator(j)) return j;
  }
  return std::nullopt;
}

std::optional<int> ElementModel::conjugate_simple(const Payload& d, int t) const {
  const Payload c = multiply(multiply(d, generator(t)), inverse(d));
  return match_generator(c);
}

namespace {

// Shared helpers for the permutation-style payloads. Payload entry k holds the
// image of k+1 (possibly negated); composition is (ab)(x) = a(b(x)).

int signed_image(const Payload& p, int x) {
  const int v = p[static_cast<std::size_t>(std::abs(x) - 1)];
  return x < 0 ? -v : v;
}

Payload compose_signed(const Payload& a, const Payload& b) {
  Payload c(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    c[k] = static_cast<std::int16_t>(signed_image(a, b[k]));
  }
  return c;
}

Payload invert_signed(const Payload& a) {
  Payload inv(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const int v = a[k];
    const int x = static_cast<int>(k) + 1;
    inv[static_cast<std::size_t>(std::abs(v) - 1)] = static_cast<std::int16_t>(v < 0 ? -x : x);
  }
  return inv;
}

int inversions(const Payload& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++count;
    }
  }
  return count;
}

// #{i < j : p(i) + p(j) < 0}
int negative_sum_pairs(const Payload& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] + p[j] < 0) ++count;
    }
  }
  return count;
}

class SymmetricModel final : public ElementModel {
 public:
  explicit SymmetricModel(int rank) : rank_(rank) {}

  ModelKind kind() const override { return ModelKind::Symmetric; }
  int rank() const override { return rank_; }

  Payload identity() const override {
    Payload p(static_cast<std::size_t>(rank_ + 1));
    std::iota(p.begin(), p.end(), std::int16_t{1});
    return p;
  }

  Payload generator(int i) const override {
    Payload p = identity();
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
    return p;
  }

  Payload multiply(const Payload& a, const Payload& b) const override { return compose_signed(a, b); }
  Payload inverse(const Payload& a) const override { return invert_signed(a); }
  int length(const Payload& w) const override { return inversions(w); }

  // l(w s_i) < l(w) iff w(i) > w(i+1)
  bool right_descent(const Payload& w, int i) const override {
    return w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)];
  }

  std::uint32_t left_descent_bits(const Payload& w) const override {
    // position of each value
    std::vector<int> pos(w.size() + 1);
    for (std::size_t k = 0; k < w.size(); ++k) pos[static_cast<std::size_t>(w[k])] = static_cast<int>(k);
    std::uint32_t bits = 0;
    for (int i = 0; i < rank_; ++i) {
      if (pos[static_cast<std::size_t>(i + 1)] > pos[static_cast<std::size_t>(i + 2)]) bits |= 1u << i;
    }
    return bits;
  }

  int positive_root_count() const override { return rank_ * (rank_ + 1) / 2; }
  std::string describe() const override {
    return "permutations of {1.." + std::to_string(rank_ + 1) + "}";
  }

 private:
  int rank_;
};

// Common base for types B and D: signed permutations of {±1..±n}.
class SignedModel : public ElementModel {
 public:
  explicit SignedModel(int rank) : rank_(rank) {}

  int rank() const override { return rank_; }

  Payload identity() const override {
    Payload p(static_cast<std::size_t>(rank_));
    std::iota(p.begin(), p.end(), std::int16_t{1});
    return p;
  }

  Payload multiply(const Payload& a, const Payload& b) const override { return compose_signed(a, b); }
  Payload inverse(const Payload& a) const override { return invert_signed(a); }

 protected:
  // s_i for i >= 2 (0-based i >= 1) swaps i-1 and i.
  Payload adjacent_swap(int i) const {
    Payload p = identity();
    std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
    return p;
  }

  int rank_;
};

class HyperoctahedralModel final : public SignedModel {
 public:
  using SignedModel::SignedModel;

  ModelKind kind() const override { return ModelKind::Hyperoctahedral; }

  Payload generator(int i) const override {
    if (i == 0) {
      Payload p = identity();
      p[0] = -1;
      return p;
    }
    return adjacent_swap(i);
  }

  int length(const Payload& w) const override {
    int negatives = 0;
    for (auto v : w) negatives += v < 0 ? 1 : 0;
    return inversions(w) + negatives + negative_sum_pairs(w);
  }

  // Ascent at s_i iff w(i-1) < w(i), with w(0) = 0.
  bool right_descent(const Payload& w, int i) const override {
    const int before = i == 0 ? 0 : w[static_cast<std::size_t>(i - 1)];
    return before > w[static_cast<std::size_t>(i)];
  }

  int positive_root_count() const override { return rank_ * rank_; }
  std::string describe() const override {
    return "signed permutations of {±1..±" + std::to_string(rank_) + "}";
  }
};

class EvenSignedModel final : public SignedModel {
 public:
  using SignedModel::SignedModel;

  ModelKind kind() const override { return ModelKind::EvenSigned; }

  Payload generator(int i) const override {
    if (i == 0) {
      Payload p = identity();
      p[0] = -2;
      p[1] = -1;
      return p;
    }
    return adjacent_swap(i);
  }

  int length(const Payload& w) const override { return inversions(w) + negative_sum_pairs(w); }

  // s_1 is a descent iff w(1) + w(2) < 0; s_i (i >= 2) iff w(i-1) > w(i).
  bool right_descent(const Payload& w, int i) const override {
    if (i == 0) return w[0] + w[1] < 0;
    return w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)];
  }

  int positive_root_count() const override { return rank_ * (rank_ - 1); }
  std::string describe() const override {
    return "even signed permutations of {±1..±" + std::to_string(rank_) + "}";
  }
};

// (k, f) = (s_1 s_2)^k s_1^f with k taken mod m.
class DihedralModel final : public ElementModel {
 public:
  explicit DihedralModel(int m) : m_(m) {}

  ModelKind kind() const override { return ModelKind::Dihedral; }
  int rank() const override { return 2; }
  Payload identity() const override { return {0, 0}; }

  Payload generator(int i) const override {
    if (i == 0) return {0, 1};
    return {static_cast<std::int16_t>(m_ - 1), 1};  // s_2 = s_1 (s_1 s_2) = rho^-1 s_1
  }

  Payload multiply(const Payload& a, const Payload& b) const override {
    const int k = a[1] == 0 ? a[0] + b[0] : a[0] - b[0];
    return {static_cast<std::int16_t>(((k % m_) + m_) % m_), static_cast<std::int16_t>(a[1] ^ b[1])};
  }

  Payload inverse(const Payload& a) const override {
    if (a[1] == 1) return a;
    return {static_cast<std::int16_t>((m_ - a[0]) % m_), 0};
  }

  int length(const Payload& w) const override {
    const int k = w[0];
    if (w[1] == 0) return 2 * std::min(k, m_ - k);
    return std::min(2 * k + 1, 2 * (m_ - k) - 1);
  }

  bool right_descent(const Payload& w, int i) const override {
    return length(multiply(w, generator(i))) < length(w);
  }

  int positive_root_count() const override { return m_; }
  std::string describe() const override { return "dihedral pairs (k, f) modulo " + std::to_string(m_); }

 private:
  int m_;
};

}  // namespace

std::unique_ptr<ElementModel> make_symmetric_model(int rank) { return std::make_unique<SymmetricModel>(rank); }
std::unique_ptr<ElementModel> make_hyperoctahedral_model(int rank) {
  return std::make_unique<HyperoctahedralModel>(rank);
}
std::unique_ptr<ElementModel> make_even_signed_model(int rank) { return std::make_unique<EvenSignedModel>(rank); }
std::unique_ptr<ElementModel> make_dihedral_model(int m) { return std::make_unique<DihedralModel>(m); }

}  // namespace coxdesc::detail
