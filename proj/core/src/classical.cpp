#include "coxdesc/classical.hpp"

#include <mutex>
#include <sstream>

#include "coxdesc/errors.hpp"

namespace coxdesc {

namespace {

void check_classical(Family family, int n) {
  if (family != Family::A && family != Family::B && family != Family::D) {
    throw InvalidArgument("chain formulas exist for types A, B and D only");
  }
  CoxeterType::make(family, n);
}

bool doubled(Family family) { return family != Family::A; }

// Largest k for which x_{n-k} is a genuine chain element.
int max_depth(Family family, int n) { return family == Family::D ? n - 1 : n; }

void check_depth(Family family, int n, int k) {
  if (k < 0 || k > max_depth(family, n)) {
    throw InvalidArgument("depth k=" + std::to_string(k) + " out of range for " + CoxeterType::make(family, n).label());
  }
}

void check_index(Family family, int n, int j) {
  if (j < chain_min_index(family) || j > n) {
    throw InvalidArgument("chain index " + std::to_string(j) + " out of range for " +
                          CoxeterType::make(family, n).label());
  }
}

// Rows grow on demand; a row, once published, is never modified.
class StirlingTable {
 public:
  explicit StirlingTable(bool first) : first_(first) {}

  BigInt get(int k, int m) {
    if (k < 0 || m < 0) throw InvalidArgument("Stirling numbers need nonnegative arguments");
    if (m > k) return 0;
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= k) extend();
    return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
  }

 private:
  void extend() {
    const auto k = rows_.size();
    std::vector<BigInt> row(k + 1);
    if (k == 0) {
      row[0] = 1;
    } else {
      const auto& prev = rows_.back();
      for (std::size_t m = 1; m <= k; ++m) {
        const BigInt carry = m < k ? prev[m] : BigInt(0);
        // [k,m] = [k-1,m-1] + (k-1)[k-1,m];  {k,m} = {k-1,m-1} + m{k-1,m}
        const BigInt factor = first_ ? BigInt(static_cast<unsigned long>(k - 1)) : BigInt(static_cast<unsigned long>(m));
        row[m] = prev[m - 1] + factor * carry;
      }
    }
    rows_.push_back(std::move(row));
  }

  bool first_;
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

}  // namespace

BigInt stirling_first(int k, int m) {
  static StirlingTable table(true);
  return table.get(k, m);
}

BigInt stirling_second(int k, int m) {
  static StirlingTable table(false);
  return table.get(k, m);
}

FallingPoly falling_product(int a, int b) {
  if (a < 0 || b < 0) throw InvalidArgument("falling powers need nonnegative exponents");
  return FallingPoly::falling_power(a) * FallingPoly::falling_power(b);
}

int chain_min_index(Family family) { return family == Family::D ? 1 : 0; }

SubsetMask chain_subset(Family family, int n, int j) {
  check_classical(family, n);
  check_index(family, n, j);
  if (family == Family::D && j == 1) return SubsetMask();
  return SubsetMask::chain(j);
}

ChainElement fold_chain(Family family, const ChainElement& raw) {
  ChainElement out;
  auto add = [&](int j, const Rational& c) {
    if (c == 0) return;
    Rational& slot = out[j];
    slot += c;
    if (slot == 0) out.erase(j);
  };
  for (const auto& [j, c] : raw) {
    if (family == Family::A && j == -1) {
      add(0, c);
    } else if (family == Family::B && j == -1) {
      continue;
    } else if (family == Family::D && j == 0) {
      add(1, 2 * c);
    } else {
      add(j, c);
    }
  }
  return out;
}

ChainRecurrence chain_recurrence(Family family, int n, int k) {
  check_classical(family, n);
  check_depth(family, n, k);
  ChainRecurrence r;
  r.coefficient = doubled(family) ? 2 * k : k;
  r.index = n - k;
  r.successor = n - k - 1;
  r.rhs = fold_chain(family, {{r.index, r.coefficient}, {r.successor, Rational(1)}});
  return r;
}

QPolynomial chain_as_polynomial(Family family, int n, int k) {
  check_classical(family, n);
  check_depth(family, n, k);
  const int step = doubled(family) ? 2 : 1;
  std::vector<Rational> roots;
  for (int i = 0; i < k; ++i) roots.emplace_back(step * i);
  return QPolynomial::from_roots(roots);
}

RationalMatrix base_change(Family family, int n, BaseChangeDirection direction) {
  check_classical(family, n);
  const int top = max_depth(family, n);
  const auto size = static_cast<std::size_t>(top + 1);
  RationalMatrix m(size, std::vector<Rational>(size));
  for (int k = 0; k <= top; ++k) {
    for (int j = 0; j <= k; ++j) {
      Rational v;
      if (direction == BaseChangeDirection::ChainInPowers) {
        // (-1)^(k-j) [k,j], with base -2 instead of -1 for B and D
        v = Rational(stirling_first(k, j));
        const int base = doubled(family) ? 2 : 1;
        for (int e = 0; e < k - j; ++e) v *= -base;
      } else {
        v = Rational(stirling_second(k, j));
        if (doubled(family)) v *= Rational(power_of_two(static_cast<unsigned>(k - j)));
      }
      m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = v;
    }
  }
  return m;
}

ChainElement closed_form_product(Family family, int n, int j, int k) {
  check_classical(family, n);
  check_index(family, n, j);
  check_index(family, n, k);
  ChainElement raw;
  const int lowest = family == Family::A ? -1 : 0;
  for (int l = lowest; l <= std::min(j, k); ++l) {
    const int e = n - j - k + l;
    if (e < 0) continue;
    BigInt c = binomial(n - j, k - l) * binomial(n - k, j - l) * factorial(static_cast<unsigned>(e));
    if (doubled(family)) c *= power_of_two(static_cast<unsigned>(e));
    if (c != 0) raw[l] += Rational(c);
  }
  return fold_chain(family, raw);
}

ChainElement chain_product(Family family, int n, const ChainElement& a, const ChainElement& b) {
  ChainElement raw;
  for (const auto& [j, cj] : a) {
    for (const auto& [k, ck] : b) {
      for (const auto& [l, c] : closed_form_product(family, n, j, k)) raw[l] += cj * ck * c;
    }
  }
  return fold_chain(family, raw);
}

ChainElement phi_D_to_A(int n, const ChainElement& element) {
  check_classical(Family::D, n);
  ChainElement out;
  for (const auto& [j, c] : element) {
    check_index(Family::D, n, j);
    out[j - 1] += c * Rational(power_of_two(static_cast<unsigned>(n - j)));
  }
  return fold_chain(Family::A, out);
}

AlgebraElement chain_to_algebra(Family family, int n, const ChainElement& element) {
  AlgebraElement out;
  for (const auto& [j, c] : element) out.add(chain_subset(family, n, j), c);
  return out;
}

ChainElement algebra_to_chain(Family family, int n, const AlgebraElement& element) {
  std::map<SubsetMask, int> index;
  for (int j = chain_min_index(family); j <= n; ++j) index[chain_subset(family, n, j)] = j;
  ChainElement out;
  for (const auto& [L, c] : element.terms()) {
    auto it = index.find(L);
    if (it == index.end()) throw InvalidArgument("x_" + L.to_string() + " is not a chain element");
    out[it->second] = c;
  }
  return out;
}

FallingPoly quotient_modulus(Family family, int n) {
  check_classical(family, n);
  switch (family) {
    case Family::A:
      return FallingPoly::falling_power(n + 1) - FallingPoly::falling_power(n);
    case Family::B:
      return FallingPoly::falling_power(n + 1);
    default:
      return FallingPoly::falling_power(n) - FallingPoly::falling_power(n - 1);
  }
}

FallingPoly quotient_image(Family family, int n, int j) {
  check_classical(family, n);
  check_index(family, n, j);
  const int k = n - j;
  return FallingPoly::falling_power(k, doubled(family) ? Rational(power_of_two(static_cast<unsigned>(k))) : Rational(1));
}

std::vector<CheckResult> verify_quotient_model(Family family, int n) {
  const FallingPoly modulus = quotient_modulus(family, n);
  const std::string label = CoxeterType::make(family, n).label();
  std::vector<CheckResult> out;
  for (int j = chain_min_index(family); j <= n; ++j) {
    for (int k = chain_min_index(family); k <= n; ++k) {
      const FallingPoly lhs = (quotient_image(family, n, j) * quotient_image(family, n, k)).reduce(modulus);
      FallingPoly rhs;
      for (const auto& [l, c] : closed_form_product(family, n, j, k)) {
        FallingPoly term = quotient_image(family, n, l);
        term *= c;
        rhs += term;
      }
      rhs = rhs.reduce(modulus);
      CheckResult r;
      r.anchor = label + " quotient model x_" + std::to_string(j) + " x_" + std::to_string(k);
      r.ok = lhs == rhs;
      r.expected = to_string(closed_form_product(family, n, j, k));
      if (!r.ok) r.actual = "image product differs after reduction";
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::string to_string(const ChainElement& element) {
  if (element.empty()) return "0";
  std::string out;
  for (auto it = element.rbegin(); it != element.rend(); ++it) {
    const auto& [j, c] = *it;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += coxdesc::to_string(mag) + " ";
    out += "x_" + std::to_string(j);
  }
  return out;
}

std::string chain_table_csv(Family family, int n) {
  check_classical(family, n);
  const int lo = chain_min_index(family);
  std::ostringstream csv;
  csv << "j\\k";
  for (int k = lo; k <= n; ++k) csv << ',' << k;
  csv << '\n';
  for (int j = lo; j <= n; ++j) {
    csv << j;
    for (int k = lo; k <= n; ++k) {
      csv << ',';
      bool first = true;
      for (const auto& [l, c] : closed_form_product(family, n, j, k)) {
        if (!first) csv << ';';
        csv << l << ':' << coxdesc::to_string(c);
        first = false;
      }
    }
    csv << '\n';
  }
  return csv.str();
}

}  // namespace coxdesc
