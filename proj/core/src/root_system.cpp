#include "root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "coxdesc/errors.hpp"
#include "models.hpp"

namespace coxdesc::detail {
namespace {

// Generators that carry the shorter root on a 4- or 6-edge.
std::set<int> short_generators(const CoxeterType& type) {
  switch (type.family) {
    case Family::B:
      return {0};
    case Family::F4:
      return {2, 3};
    case Family::I2:
      return {0};
    default:
      return {};
  }
}

QSqrt5 cartan_entry(int m, bool i_short) {
  switch (m) {
    case 2:
      return QSqrt5(0);
    case 3:
      return QSqrt5(-1);
    case 4:
      return QSqrt5(i_short ? -2 : -1);
    case 5:
      return -QSqrt5::golden();
    case 6:
      return QSqrt5(i_short ? -3 : -1);
    default:
      throw InvalidArgument("no exact root model for Coxeter exponent " + std::to_string(m));
  }
}

bool is_positive(const RootVector& v) {
  for (const auto& c : v) {
    if (c.sign() < 0) return false;
  }
  return true;
}

QSqrt5 height(const RootVector& v) {
  QSqrt5 h;
  for (const auto& c : v) h += c;
  return h;
}

RootVector reflect(const RootVector& v, int i, const std::vector<std::vector<QSqrt5>>& cartan) {
  // s_i(v) = v - <v, alpha_i^vee> alpha_i
  QSqrt5 pairing;
  for (std::size_t k = 0; k < v.size(); ++k) pairing += v[k] * cartan[static_cast<std::size_t>(i)][k];
  RootVector out = v;
  out[static_cast<std::size_t>(i)] -= pairing;
  return out;
}

}  // namespace

std::vector<std::vector<QSqrt5>> cartan_matrix(const CoxeterType& type) {
  const auto m = type.coxeter_matrix();
  const auto shorts = short_generators(type);
  const auto n = static_cast<std::size_t>(type.rank);
  std::vector<std::vector<QSqrt5>> a(n, std::vector<QSqrt5>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = i == j ? QSqrt5(2) : cartan_entry(m[i][j], shorts.contains(static_cast<int>(i)));
    }
  }
  return a;
}

RootSystem build_root_system(const CoxeterType& type) {
  const auto cartan = cartan_matrix(type);
  const int n = type.rank;

  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < n; ++i) {
    RootVector e(static_cast<std::size_t>(n));
    e[static_cast<std::size_t>(i)] = QSqrt5(1);
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVector v = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      RootVector w = reflect(v, i, cartan);
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }

  std::vector<RootVector> positives;
  for (const auto& v : seen) {
    if (is_positive(v)) positives.push_back(v);
  }
  if (positives.size() * 2 != seen.size()) throw Error("root system of " + type.label() + " is not symmetric");

  // Simple roots first, then by height, then by coordinates.
  auto is_simple = [](const RootVector& v) {
    int nonzero = 0;
    for (const auto& c : v) nonzero += c.sign() != 0 ? 1 : 0;
    return nonzero == 1 && height(v) == QSqrt5(1);
  };
  std::sort(positives.begin(), positives.end(), [&](const RootVector& a, const RootVector& b) {
    const bool sa = is_simple(a);
    const bool sb = is_simple(b);
    if (sa != sb) return sa;
    if (sa) return a > b;  // e_1 > e_2 > ... lexicographically
    const auto ha = height(a);
    const auto hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  RootSystem rs;
  rs.rank = n;
  rs.positive_count = static_cast<int>(positives.size());
  rs.roots = positives;
  for (const auto& v : positives) {
    RootVector neg = v;
    for (auto& c : neg) c = -c;
    rs.roots.push_back(std::move(neg));
  }

  std::map<RootVector, int> index;
  for (std::size_t r = 0; r < rs.roots.size(); ++r) index.emplace(rs.roots[r], static_cast<int>(r));
  rs.reflection_images.assign(static_cast<std::size_t>(n), std::vector<int>(rs.roots.size()));
  for (int i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < rs.roots.size(); ++r) {
      rs.reflection_images[static_cast<std::size_t>(i)][r] = index.at(reflect(rs.roots[r], i, cartan));
    }
  }
  return rs;
}

namespace {

class RootModel final : public ElementModel {
 public:
  explicit RootModel(RootSystem rs) : rs_(std::move(rs)) {
    const auto total = rs_.roots.size();
    for (int i = 0; i < rs_.rank; ++i) {
      Payload p(total);
      for (std::size_t r = 0; r < total; ++r) {
        p[r] = static_cast<std::int16_t>(rs_.reflection_images[static_cast<std::size_t>(i)][r]);
      }
      generators_.push_back(std::move(p));
    }
  }

  ModelKind kind() const override { return ModelKind::Roots; }
  int rank() const override { return rs_.rank; }

  Payload identity() const override {
    Payload p(rs_.roots.size());
    for (std::size_t r = 0; r < p.size(); ++r) p[r] = static_cast<std::int16_t>(r);
    return p;
  }

  Payload generator(int i) const override { return generators_[static_cast<std::size_t>(i)]; }

  Payload multiply(const Payload& a, const Payload& b) const override {
    Payload c(b.size());
    for (std::size_t r = 0; r < b.size(); ++r) c[r] = a[static_cast<std::size_t>(b[r])];
    return c;
  }

  Payload inverse(const Payload& a) const override {
    Payload inv(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) inv[static_cast<std::size_t>(a[r])] = static_cast<std::int16_t>(r);
    return inv;
  }

  // number of positive roots sent to negative roots
  int length(const Payload& w) const override {
    int count = 0;
    for (int r = 0; r < rs_.positive_count; ++r) count += w[static_cast<std::size_t>(r)] >= rs_.positive_count ? 1 : 0;
    return count;
  }

  // l(w s_i) < l(w) iff w(alpha_i) < 0
  bool right_descent(const Payload& w, int i) const override {
    return w[static_cast<std::size_t>(i)] >= rs_.positive_count;
  }

  std::uint32_t left_descent_bits(const Payload& w) const override {
    std::uint32_t bits = 0;
    for (std::size_t r = 0; r < w.size(); ++r) {
      // w(r) = alpha_i with r negative means w^-1(alpha_i) < 0
      const int image = w[r];
      if (image < rs_.rank && static_cast<int>(r) >= rs_.positive_count) bits |= 1u << image;
    }
    return bits;
  }

  // d s_t d^-1 is the reflection along d(alpha_t); simple iff that root is ±simple.
  std::optional<int> conjugate_simple(const Payload& d, int t) const override {
    const int image = d[static_cast<std::size_t>(t)] % rs_.positive_count;
    if (image < rs_.rank) return image;
    return std::nullopt;
  }

  int positive_root_count() const override { return rs_.positive_count; }
  std::string describe() const override {
    return "permutations of " + std::to_string(rs_.roots.size()) + " roots";
  }

 private:
  RootSystem rs_;
  std::vector<Payload> generators_;
};

}  // namespace

std::unique_ptr<ElementModel> make_root_model(const CoxeterType& type) {
  return std::make_unique<RootModel>(build_root_system(type));
}

}  // namespace coxdesc::detail
