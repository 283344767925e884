#include "coxdesc/subalgebra.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "coxdesc/errors.hpp"

namespace coxdesc {

namespace {

std::vector<Rational> coordinates(const AlgebraElement& a, int rank) {
  std::vector<Rational> v(std::size_t{1} << rank);
  for (const auto& [L, c] : a.terms()) v[L.bits()] = c;
  return v;
}

// Matrix whose columns are the given coordinate vectors.
RationalMatrix as_columns(const std::vector<std::vector<Rational>>& vectors, std::size_t height) {
  RationalMatrix m(height, std::vector<Rational>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    for (std::size_t i = 0; i < height; ++i) m[i][j] = vectors[j][i];
  }
  return m;
}

void check_subset(const DescentAlgebra& alg, SubsetMask J) {
  if (!J.fits(alg.rank())) {
    throw InvalidArgument("subset " + J.to_string() + " exceeds rank " + std::to_string(alg.rank()));
  }
}

}  // namespace

std::vector<AlgebraElement> powers_in_x_basis(const DescentAlgebra& alg, SubsetMask J, int up_to) {
  check_subset(alg, J);
  if (up_to < 0) throw InvalidArgument("negative power");
  std::vector<AlgebraElement> out{alg.one()};
  const AlgebraElement xj = alg.x(J);
  for (int i = 1; i <= up_to; ++i) out.push_back(alg.product(out.back(), xj));
  return out;
}

QPolynomial minimal_polynomial(const DescentAlgebra& alg, SubsetMask J) {
  check_subset(alg, J);
  const int n = alg.rank();
  const std::size_t height = std::size_t{1} << n;
  const AlgebraElement xj = alg.x(J);
  std::vector<std::vector<Rational>> powers;
  AlgebraElement current = alg.one();
  // The powers live in a space of dimension 2^rank, so a relation appears by then.
  for (std::size_t d = 0; d <= height; ++d) {
    std::vector<Rational> v = coordinates(current, n);
    if (!powers.empty()) {
      if (auto c = solve(as_columns(powers, height), v)) {
        std::vector<Rational> coeffs(d + 1);
        for (std::size_t i = 0; i < d; ++i) coeffs[i] = -(*c)[i];
        coeffs[d] = 1;
        return QPolynomial(std::move(coeffs));
      }
    }
    powers.push_back(std::move(v));
    current = alg.product(current, xj);
  }
  throw Error("minimal polynomial search exceeded the dimension bound");
}

std::vector<BigInt> permutation_character_values(const CoxeterSystem& sys, SubsetMask J,
                                                 const EnumerationLimits& limits) {
  const Enumeration cosets = enumerate_min_coset_reps(sys, J, limits);
  const int n = sys.rank();
  const std::size_t m = cosets.size();

  // gen_action[g][i]: index of the coset s_{g+1} x_i W_J.
  std::vector<std::vector<std::uint32_t>> gen_action(static_cast<std::size_t>(n), std::vector<std::uint32_t>(m));
  for (int g = 1; g <= n; ++g) {
    const GroupElement s = sys.generator(g);
    for (std::size_t i = 0; i < m; ++i) {
      GroupElement y = sys.multiply(s, cosets[i]);
      for (SubsetMask d = sys.right_descents(y) & J; !d.empty(); d = sys.right_descents(y) & J) {
        y = sys.multiply(y, sys.generator(d.indices().front()));
      }
      gen_action[static_cast<std::size_t>(g - 1)][i] = static_cast<std::uint32_t>(*cosets.index_of(y));
    }
  }

  const Enumeration group = enumerate_group(sys, limits);
  std::set<std::uint64_t> values;
  // Actions of the previous and current length layers; the BFS parent of an
  // element always lies in the previous layer.
  std::vector<std::vector<std::uint32_t>> prev_layer;
  std::vector<std::vector<std::uint32_t>> layer;
  std::size_t prev_begin = 0;
  std::size_t layer_begin = 0;
  std::vector<std::uint32_t> id(m);
  std::iota(id.begin(), id.end(), 0u);
  layer.push_back(id);
  values.insert(m);
  for (std::size_t k = 1; k < group.size(); ++k) {
    if (group.length(k) != group.length(k - 1)) {
      prev_layer = std::move(layer);
      layer.clear();
      prev_begin = layer_begin;
      layer_begin = k;
    }
    const auto& parent = prev_layer[static_cast<std::size_t>(group.parent(k)) - prev_begin];
    const auto& act = gen_action[static_cast<std::size_t>(group.generator(k) - 1)];
    std::vector<std::uint32_t> p(m);
    std::uint64_t fixed = 0;
    for (std::size_t i = 0; i < m; ++i) {
      p[i] = act[parent[i]];
      if (p[i] == i) ++fixed;
    }
    values.insert(fixed);
    layer.push_back(std::move(p));
  }
  std::vector<BigInt> out;
  for (auto v : values) out.emplace_back(static_cast<unsigned long>(v));
  return out;
}

SubalgebraReport detect_native_basis(const DescentAlgebra& alg, SubsetMask J) {
  check_subset(alg, J);
  const int n = alg.rank();
  const std::size_t height = std::size_t{1} << n;

  SubalgebraReport r;
  r.type = alg.system().type().label();
  r.J = J;
  r.minimal_poly = minimal_polynomial(alg, J);
  r.dim = r.minimal_poly.degree();

  std::vector<std::vector<Rational>> powers;
  for (const auto& p : powers_in_x_basis(alg, J, r.dim - 1)) powers.push_back(coordinates(p, n));

  // x_L ∈ V iff appending its coordinate vector keeps the rank at dim.
  for (const auto& L : all_subsets(n)) {
    RationalMatrix rows = powers;
    std::vector<Rational> e(height);
    e[L.bits()] = 1;
    rows.push_back(std::move(e));
    if (rank(rows) == r.dim) r.native_basis.push_back(L);
  }
  r.has_native_basis = static_cast<int>(r.native_basis.size()) == r.dim;

  const RationalMatrix columns = as_columns(powers, height);
  r.all_integer = true;
  for (const auto& L : r.native_basis) {
    std::vector<Rational> e(height);
    e[L.bits()] = 1;
    auto c = solve(columns, e);
    if (!c) throw Error("native candidate x_" + L.to_string() + " is not in the span of the powers");
    for (const auto& v : *c) {
      if (!is_integer(v)) r.all_integer = false;
    }
    r.change_of_basis.push_back(std::move(*c));
  }
  if (!r.has_native_basis) r.all_integer = false;
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NativeIntegral:
      return "native-integral";
    case Verdict::NativeNonIntegral:
      return "native-nonintegral";
    case Verdict::NoNative:
      return "no-native";
  }
  return "?";
}

namespace {

// The classical type under which J = S \ {s} is the initial chain, if any.
std::optional<CoxeterType> chain_relabelling(const CoxeterType& type, int s) {
  const int n = type.rank;
  if (s < 1 || s > n) throw InvalidArgument("generator " + std::to_string(s) + " out of range");
  const CoxeterMatrix target = type.coxeter_matrix();
  for (Family f : {Family::A, Family::B, Family::D}) {
    const CoxeterMatrix model = classical_coxeter_matrix(f, n);
    if (model.empty()) continue;
    // pi maps model generator i to target generator pi[i]; the last one must be s.
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 0);
    do {
      if (pi.back() != s - 1) continue;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        for (int j = i + 1; j < n && ok; ++j) {
          ok = model[i][j] == target[pi[i]][pi[j]];
        }
      }
      if (ok) return CoxeterType::make(f, n);
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
  return std::nullopt;
}

}  // namespace

bool is_left_connected_up_to_relabelling(const CoxeterType& type, int s) {
  return chain_relabelling(type, s).has_value();
}

Verdict expected_verdict(const CoxeterType& type, int s) {
  if (is_left_connected_up_to_relabelling(type, s)) return Verdict::NativeIntegral;
  if (type.rank == 2) return Verdict::NativeNonIntegral;
  if (type.family == Family::B && type.rank == 3 && s == 2) return Verdict::NativeNonIntegral;
  return Verdict::NoNative;
}

std::vector<MaximalClassification> classify_all_maximal(const DescentAlgebra& alg) {
  const CoxeterSystem& sys = alg.system();
  const int n = alg.rank();
  std::vector<MaximalClassification> out;
  for (int s = 1; s <= n; ++s) {
    MaximalClassification c;
    c.s = s;
    const SubsetMask J = SubsetMask::full(n).without(s);
    c.report = detect_native_basis(alg, J);
    c.observed = !c.report.has_native_basis ? Verdict::NoNative
                 : c.report.all_integer     ? Verdict::NativeIntegral
                                            : Verdict::NativeNonIntegral;
    c.expected = expected_verdict(sys.type(), s);
    c.matches = c.observed == c.expected;
    if (c.observed == Verdict::NoNative) {
      const SubsetMask K = sys.conjugate_intersection(J, sys.generator(s), J);
      const bool commute = alg.solomon_product(J, K) == alg.solomon_product(K, J);
      c.reason = commute ? "no subset of the x-basis spans Q[x_J]"
                         : "x_J x_K != x_K x_J for K = " + K.to_string();
    } else {
      c.reason = "native basis of size " + std::to_string(c.report.dim) +
                 (c.report.all_integer ? ", integral" : ", not integral");
      const auto as = chain_relabelling(sys.type(), s);
      if (as && as->label() != sys.type().label()) {
        c.reason += "; J is the initial chain of " + sys.type().label() + " read as " + as->label();
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace coxdesc
