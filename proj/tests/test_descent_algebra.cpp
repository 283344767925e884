#include <gtest/gtest.h>

#include <random>

#include "coxdesc/descent_algebra.hpp"
#include "coxdesc/errors.hpp"
#include "oracles.hpp"

using namespace coxdesc;

namespace {

DescentAlgebra algebra_of(std::string_view label) {
  return DescentAlgebra(CoxeterSystem::build(CoxeterType::parse(label)));
}

AlgebraElement from_counts(const std::map<std::uint32_t, std::uint64_t>& counts) {
  AlgebraElement out;
  for (const auto& [bits, c] : counts) out.add(SubsetMask(bits), Rational(static_cast<unsigned long>(c)));
  return out;
}

}  // namespace

TEST(AlgebraElement, Arithmetic) {
  AlgebraElement a = AlgebraElement::basis(SubsetMask::of({1, 2}), 2) + AlgebraElement::basis(SubsetMask());
  EXPECT_EQ(a.to_string(), "2 x[1,2] + x[-]");
  a -= AlgebraElement::basis(SubsetMask());
  EXPECT_EQ(a.support(), (std::vector<SubsetMask>{SubsetMask::of({1, 2})}));
  a *= 0;
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ(a.to_string(), "0");
  AlgebraElement b;
  b.add(SubsetMask::of({1}), make_rational(-1, 2));
  EXPECT_EQ(b.coeff(SubsetMask::of({1})), make_rational(-1, 2));
  EXPECT_EQ(b.coeff(SubsetMask::of({2})), 0);
  EXPECT_EQ(b.to_string(), "-1/2 x[1]");
}

TEST(DescentAlgebra, SmallProducts) {
  const auto a2 = algebra_of("A2");
  const SubsetMask s1 = SubsetMask::of({1});
  // X_{s1} ∩ X_{s1}^-1 = {e, s2}; e gives L = {s1} and s2 gives ∅.
  EXPECT_EQ(a2.solomon_product(s1, s1), AlgebraElement::basis(s1) + AlgebraElement::basis(SubsetMask()));
  EXPECT_EQ(a2.power(a2.x(s1), 3), AlgebraElement::basis(s1) + AlgebraElement::basis(SubsetMask(), 4));
  EXPECT_EQ(a2.power(a2.x(s1), 0), a2.one());
  EXPECT_EQ(a2.transversal_size(s1), 3);
  EXPECT_EQ(a2.transversal_size(SubsetMask()), 6);
  EXPECT_THROW(a2.x(SubsetMask::of({3})), InvalidArgument);
}

TEST(DescentAlgebra, MatchesLiteralCoefficients) {
  for (const auto& label : std::vector<std::string>{"A3", "B3", "D4", "I2:7", "H3", "F4"}) {
    const auto alg = algebra_of(label);
    const oracle::Group g(alg.system());
    for (SubsetMask J : all_subsets(alg.rank())) {
      for (SubsetMask K : all_subsets(alg.rank())) {
        ASSERT_EQ(alg.solomon_product(J, K), from_counts(g.solomon(J, K)))
            << label << " " << J.to_string() << " " << K.to_string();
      }
    }
  }
}

TEST(DescentAlgebra, StructuralIdentities) {
  for (const auto& label : std::vector<std::string>{"A4", "B4", "D5", "H3", "I2:10"}) {
    const auto alg = algebra_of(label);
    const int n = alg.rank();
    const BigInt order = alg.system().order();
    const SubsetMask S = SubsetMask::full(n);
    for (SubsetMask J : all_subsets(n)) {
      EXPECT_EQ(alg.solomon_product(S, J), alg.x(J));
      EXPECT_EQ(alg.solomon_product(J, S), alg.x(J));
      EXPECT_EQ(alg.solomon_product(SubsetMask(), J), AlgebraElement::basis(SubsetMask(), Rational(alg.transversal_size(J))));
      for (SubsetMask K : all_subsets(n)) {
        // Sizes: sum_L a_JKL |X_L| = |X_J| |X_K|.
        Rational lhs = 0;
        for (const auto& [L, c] : alg.solomon_product(J, K).terms()) lhs += c * Rational(alg.transversal_size(L));
        ASSERT_EQ(lhs, Rational(alg.transversal_size(J) * alg.transversal_size(K)));
        // Every L is contained in K.
        for (SubsetMask L : alg.solomon_product(J, K).support()) ASSERT_TRUE(L.is_subset_of(K));
      }
    }
    EXPECT_EQ(alg.transversal_size(SubsetMask()), order);
  }
}

TEST(DescentAlgebra, AssociativityOnRandomTriples) {
  std::mt19937_64 rng(23);
  for (const auto& label : std::vector<std::string>{"A5", "B4", "D4", "F4", "H4", "E6"}) {
    const auto alg = algebra_of(label);
    const std::uint32_t mask = SubsetMask::full(alg.rank()).bits();
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = alg.x(SubsetMask(static_cast<std::uint32_t>(rng()) & mask));
      const auto b = alg.x(SubsetMask(static_cast<std::uint32_t>(rng()) & mask)) +
                     make_rational(1, 3) * alg.x(SubsetMask(static_cast<std::uint32_t>(rng()) & mask));
      const auto c = alg.x(SubsetMask(static_cast<std::uint32_t>(rng()) & mask));
      ASSERT_EQ(alg.product(alg.product(a, b), c), alg.product(a, alg.product(b, c))) << label;
    }
  }
}

TEST(DescentAlgebra, ProductsAgreeWithGroupAlgebra) {
  for (const auto& label : std::vector<std::string>{"A3", "B3", "I2:5"}) {
    const auto alg = algebra_of(label);
    const GroupAlgebra ga(alg.system());
    for (SubsetMask J : all_subsets(alg.rank())) {
      for (SubsetMask K : all_subsets(alg.rank())) {
        ASSERT_EQ(ga.multiply(ga.x_of(J), ga.x_of(K)), ga.embed(alg.solomon_product(J, K))) << label;
      }
    }
  }
}

TEST(DescentAlgebra, TransversalFactorization) {
  for (const auto& label : std::vector<std::string>{"A4", "B3", "D4", "H3"}) {
    const auto sys = CoxeterSystem::build(CoxeterType::parse(label));
    for (SubsetMask K : all_subsets(sys.rank())) {
      for (SubsetMask J : all_subsets(sys.rank())) {
        if (!J.is_subset_of(K)) continue;
        const auto check = verify_transversal_factorization(sys, J, K);
        EXPECT_TRUE(check.ok) << label << " " << check.first_violation;
      }
    }
  }
}

TEST(DescentAlgebra, RefusesHugeGroups) {
  const auto e8 = algebra_of("E8");
  EXPECT_THROW(e8.solomon_product(SubsetMask::of({1}), SubsetMask::of({1})), EnumerationRefused);
  EXPECT_THROW(e8.transversal_size(SubsetMask::of({1})), EnumerationRefused);
  const DescentAlgebra a5(CoxeterSystem::build(CoxeterType::parse("A5")), EnumerationLimits{100});
  EXPECT_THROW(a5.solomon_product(SubsetMask::of({1}), SubsetMask::of({1})), EnumerationRefused);
}
