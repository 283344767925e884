#include "coxdesc/reproduce.hpp"

#include <functional>
#include <map>

#include "coxdesc/classical.hpp"
#include "coxdesc/errors.hpp"
#include "coxdesc/subalgebra.hpp"

namespace coxdesc {

std::size_t SuiteReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.ok ? 1 : 0;
  return n;
}

namespace {

void append(std::vector<CheckResult>& to, std::vector<CheckResult> from) {
  for (auto& c : from) to.push_back(std::move(c));
}

std::string matrix_row(const std::vector<Rational>& row) {
  std::string out;
  for (const auto& v : row) out += (out.empty() ? "" : ", ") + to_string(v);
  return "[" + out + "]";
}

std::string power_name(int i) { return i == 0 ? "x_S" : i == 1 ? "x_J" : "x_J^" + std::to_string(i); }

// x_L written in powers of x_J, e.g. "-14/5 x_J + 8/5 x_J^2 - 1/10 x_J^3".
std::string as_power_sum(const std::vector<Rational>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const Rational& c = row[i];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + " ";
    out += power_name(static_cast<int>(i));
  }
  return out.empty() ? "0" : out;
}

SuiteReport witness_table(const EnumerationLimits& limits) {
  SuiteReport r;
  r.checks = verify_witness_rows(limits);
  for (const auto& row : no_native_witness_rows()) {
    const CoxeterSystem sys = CoxeterSystem::build(CoxeterType::parse(row.type));
    const auto w = commutation_witness(sys, row.s, limits);
    CheckResult c;
    c.anchor = "witness search " + row.type + ", s=" + std::to_string(row.s);
    c.ok = w.has_value();
    c.expected = "a witness";
    if (w) {
      c.actual = "K=" + w->K.to_string() + " t=" + std::to_string(w->t) + " y=[" + sys.format_word(w->y) +
                 "] t^y=" + std::to_string(w->t_conjugate);
    } else {
      c.actual = "none";
    }
    r.details.push_back(c.anchor + ": " + c.actual);
    r.checks.push_back(std::move(c));
  }
  return r;
}

SuiteReport rank_two(const EnumerationLimits& limits) {
  SuiteReport r;
  for (int m = 3; m <= 12; ++m) {
    const int k = (m - 1) / 2;
    const int l = m - 2 * k;
    const CoxeterSystem sys = CoxeterSystem::build(CoxeterType::make(Family::I2, 2, m));
    const DescentAlgebra alg(sys, limits);
    const SubsetMask J = SubsetMask::single(2);
    const std::string label = sys.type().label() + " (k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")";

    AlgebraElement expected = AlgebraElement::basis(J, l);
    expected.add(SubsetMask(), k);
    const AlgebraElement& square = alg.solomon_product(J, J);
    r.checks.push_back({"rank-2 example " + label + ": x_J^2 = l x_J + k x_∅", square == expected,
                        expected.to_string(), square.to_string()});

    const SubalgebraReport rep = detect_native_basis(alg, J);
    const std::vector<Rational> empty_row{0, make_rational(-l, k), make_rational(1, k)};
    std::vector<Rational> actual_row;
    for (std::size_t i = 0; i < rep.native_basis.size(); ++i) {
      if (rep.native_basis[i].empty()) actual_row = rep.change_of_basis[i];
    }
    r.checks.push_back({"rank-2 example " + label + ": x_∅ = -l/k x_J + 1/k x_J^2",
                        rep.has_native_basis && actual_row == empty_row, matrix_row(empty_row), matrix_row(actual_row)});
    r.checks.push_back({"rank-2 example " + label + ": integral exactly when k = 1",
                        rep.has_native_basis && rep.all_integer == (k == 1), k == 1 ? "integral" : "not integral",
                        rep.all_integer ? "integral" : "not integral"});
    r.details.push_back(label + ": x_J^2 = " + square.to_string() + "; x_∅ = " + as_power_sum(actual_row));
  }
  return r;
}

SuiteReport b3_example(const EnumerationLimits& limits) {
  SuiteReport r;
  const CoxeterSystem sys = CoxeterSystem::build(CoxeterType::make(Family::B, 3));
  const DescentAlgebra alg(sys, limits);
  const SubsetMask J = SubsetMask::of({1, 3});
  const SubsetMask K = SubsetMask::of({1});
  const SubsetMask E;
  const auto powers = powers_in_x_basis(alg, J, 3);

  AlgebraElement sq = AlgebraElement::basis(J, 2);
  sq.add(K, 1);
  sq.add(E, 2);
  AlgebraElement cube = AlgebraElement::basis(J, 4);
  cube.add(K, 6);
  cube.add(E, 32);
  r.checks.push_back({"B3 example: x_J^2 = 2 x_J + x_K + 2 x_∅", powers[2] == sq, sq.to_string(), powers[2].to_string()});
  r.checks.push_back({"B3 example: x_J^3 = 4 x_J + 6 x_K + 32 x_∅", powers[3] == cube, cube.to_string(),
                      powers[3].to_string()});

  const SubalgebraReport rep = detect_native_basis(alg, J);
  r.checks.push_back({"B3 example: Q[x_J] has the native basis {x_S, x_J, x_K, x_∅}",
                      rep.has_native_basis && rep.native_basis == std::vector<SubsetMask>{E, K, J, SubsetMask::full(3)},
                      "[-, 1, 1,3, 1,2,3]", [&] {
                        std::string s;
                        for (const auto& L : rep.native_basis) s += (s.empty() ? "" : ", ") + L.to_string();
                        return "[" + s + "]" + (rep.has_native_basis ? "" : " (not a basis)");
                      }()});
  const std::map<SubsetMask, std::vector<Rational>> expected_rows = {
      {K, {0, make_rational(-14, 5), make_rational(8, 5), make_rational(-1, 10)}},
      {E, {0, make_rational(2, 5), make_rational(-3, 10), make_rational(1, 20)}},
  };
  for (const auto& [L, row] : expected_rows) {
    std::vector<Rational> actual;
    for (std::size_t i = 0; i < rep.native_basis.size(); ++i) {
      if (rep.native_basis[i] == L) actual = rep.change_of_basis[i];
    }
    r.checks.push_back({"B3 example: x_" + L.to_string() + " = " + as_power_sum(row), actual == row, matrix_row(row),
                        matrix_row(actual)});
  }
  r.checks.push_back({"B3 example: the native basis is not integral", !rep.all_integer, "not integral",
                      rep.all_integer ? "integral" : "not integral"});
  for (int i = 2; i <= 3; ++i) r.details.push_back(power_name(i) + " = " + powers[static_cast<std::size_t>(i)].to_string());
  for (std::size_t i = 0; i < rep.native_basis.size(); ++i) {
    r.details.push_back("x_" + rep.native_basis[i].to_string() + " = " + as_power_sum(rep.change_of_basis[i]));
  }
  return r;
}

SuiteReport classical_products(const EnumerationLimits& limits) {
  SuiteReport r;
  const std::vector<std::pair<Family, std::pair<int, int>>> ranges = {
      {Family::A, {1, 6}}, {Family::B, {2, 5}}, {Family::D, {3, 5}}};
  for (const auto& [f, span] : ranges) {
    for (int n = span.first; n <= span.second; ++n) {
      const DescentAlgebra alg(CoxeterSystem::build(CoxeterType::make(f, n)), limits);
      append(r.checks, verify_closed_forms(alg));
      append(r.checks, verify_recurrences(alg));
      append(r.checks, verify_chain_polynomials(alg));
    }
  }
  r.details.push_back("chain products of A4:\n" + chain_table_csv(Family::A, 4));
  return r;
}

SuiteReport base_changes(const EnumerationLimits&) {
  SuiteReport r;
  for (int n = 1; n <= 12; ++n) r.checks.push_back(verify_base_change_inverse(Family::A, n));
  for (int n = 2; n <= 12; ++n) r.checks.push_back(verify_base_change_inverse(Family::B, n));
  for (int n = 3; n <= 12; ++n) r.checks.push_back(verify_base_change_inverse(Family::D, n));

  const auto a2 = base_change(Family::A, 2, BaseChangeDirection::ChainInPowers);
  const std::vector<Rational> a2_row{0, -1, 1};
  r.checks.push_back({"A2 base change: x_0 = x_1^2 - x_1", a2[2] == a2_row, matrix_row(a2_row), matrix_row(a2[2])});
  const auto b2 = base_change(Family::B, 2, BaseChangeDirection::ChainInPowers);
  const std::vector<Rational> b2_row{0, -2, 1};
  r.checks.push_back({"B2 base change: x_0 = x_1^2 - 2 x_1", b2[2] == b2_row, matrix_row(b2_row), matrix_row(b2[2])});

  for (Family f : {Family::A, Family::B, Family::D}) {
    for (int n = f == Family::D ? 3 : (f == Family::B ? 2 : 1); n <= 8; ++n) append(r.checks, verify_quotient_model(f, n));
  }
  for (int n = 3; n <= 8; ++n) append(r.checks, verify_phi_multiplicative(n));
  return r;
}

SuiteReport prop42(const EnumerationLimits& limits) {
  SuiteReport r;
  r.checks = verify_direct_noncommuting_cases(limits);
  for (const auto& c : r.checks) r.details.push_back(c.anchor + ": " + c.actual);
  return r;
}

SuiteReport main_theorem(const EnumerationLimits& limits) {
  SuiteReport r;
  std::vector<CoxeterType> types;
  for (int n = 1; n <= 5; ++n) types.push_back(CoxeterType::make(Family::A, n));
  for (int n = 2; n <= 4; ++n) types.push_back(CoxeterType::make(Family::B, n));
  for (int n = 3; n <= 5; ++n) types.push_back(CoxeterType::make(Family::D, n));
  for (int m = 3; m <= 10; ++m) types.push_back(CoxeterType::make(Family::I2, 2, m));
  for (Family f : {Family::H3, Family::H4, Family::F4, Family::E6}) {
    types.push_back(CoxeterType::make(f, f == Family::H3 ? 3 : f == Family::E6 ? 6 : 4));
  }
  for (const auto& type : types) {
    const DescentAlgebra alg(CoxeterSystem::build(type), limits);
    for (const auto& c : classify_all_maximal(alg)) {
      const std::string anchor = "classification " + type.label() + ", s=" + std::to_string(c.s);
      r.checks.push_back({anchor, c.matches, to_string(c.expected), to_string(c.observed)});
      r.details.push_back(anchor + ": " + to_string(c.observed) + " (" + c.reason + ")");
    }
  }
  return r;
}

using Suite = std::function<SuiteReport(const EnumerationLimits&)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all = {
      {"table1", witness_table},
      {"example_rank2", rank_two},
      {"example_b3", b3_example},
      {"classical_products", classical_products},
      {"base_changes", base_changes},
      {"prop42", prop42},
      {"main_theorem", main_theorem},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, suite] : suites()) v.push_back(name);
    return v;
  }();
  return names;
}

SuiteReport reproduce(std::string_view target, const EnumerationLimits& limits) {
  for (const auto& [name, suite] : suites()) {
    if (name == target) {
      SuiteReport r = suite(limits);
      r.target = name;
      return r;
    }
  }
  throw InvalidArgument("unknown reproduction target '" + std::string(target) + "'");
}

}  // namespace coxdesc
