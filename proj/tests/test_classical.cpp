#include <gtest/gtest.h>

#include "coxdesc/classical.hpp"
#include "coxdesc/errors.hpp"
#include "oracles.hpp"

using namespace coxdesc;

namespace {

DescentAlgebra algebra_of(Family family, int n) { return DescentAlgebra(CoxeterSystem::build(CoxeterType::make(family, n))); }

void expect_all_ok(const std::vector<CheckResult>& checks) {
  EXPECT_FALSE(checks.empty());
  for (const auto& c : checks) EXPECT_TRUE(c.ok) << c.anchor << ": expected " << c.expected << ", got " << c.actual;
}

}  // namespace

TEST(Stirling, MatchesCounting) {
  EXPECT_EQ(stirling_first(4, 2), 11);
  EXPECT_EQ(stirling_second(4, 2), 7);
  EXPECT_EQ(stirling_first(0, 0), 1);
  EXPECT_EQ(stirling_second(5, 0), 0);
  EXPECT_EQ(stirling_first(3, 5), 0);
  for (int k = 0; k <= 7; ++k) {
    for (int m = 0; m <= k; ++m) {
      EXPECT_EQ(stirling_first(k, m), static_cast<unsigned long>(oracle::count_permutations_with_cycles(k, m)));
      EXPECT_EQ(stirling_second(k, m), static_cast<unsigned long>(oracle::count_set_partitions(k, m)));
    }
  }
  EXPECT_THROW(stirling_first(-1, 0), InvalidArgument);
}

TEST(FallingProduct, Examples) {
  // x^(2) x^(1) = x^(3) + 2 x^(2)
  EXPECT_EQ(falling_product(2, 1), FallingPoly::falling_power(3) + FallingPoly::falling_power(2, 2));
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      EXPECT_EQ(falling_product(a, b).to_monomial(),
                FallingPoly::falling_power(a).to_monomial() * FallingPoly::falling_power(b).to_monomial());
    }
  }
}

TEST(Chain, Conventions) {
  EXPECT_EQ(chain_min_index(Family::A), 0);
  EXPECT_EQ(chain_min_index(Family::D), 1);
  EXPECT_EQ(chain_subset(Family::D, 4, 1), SubsetMask());
  EXPECT_EQ(chain_subset(Family::D, 4, 3), SubsetMask::chain(3));
  EXPECT_EQ(chain_subset(Family::B, 4, 0), SubsetMask());
  EXPECT_THROW(chain_subset(Family::D, 4, 0), InvalidArgument);
  EXPECT_THROW(chain_subset(Family::A, 4, 5), InvalidArgument);
  EXPECT_EQ(fold_chain(Family::A, {{-1, 2}, {0, 1}}), (ChainElement{{0, 3}}));
  EXPECT_EQ(fold_chain(Family::B, {{-1, 2}, {0, 1}}), (ChainElement{{0, 1}}));
  EXPECT_EQ(fold_chain(Family::D, {{0, 1}, {1, 1}}), (ChainElement{{1, 3}}));
  EXPECT_EQ(fold_chain(Family::A, {{1, 0}}), ChainElement{});
  EXPECT_THROW(chain_recurrence(Family::F4, 4, 1), InvalidArgument);
}

TEST(Chain, ClosedFormExamples) {
  EXPECT_EQ(closed_form_product(Family::A, 2, 1, 1), (ChainElement{{0, 1}, {1, 1}}));
  EXPECT_EQ(closed_form_product(Family::A, 2, 0, 0), (ChainElement{{0, 6}}));
  EXPECT_EQ(closed_form_product(Family::B, 2, 1, 1), (ChainElement{{0, 1}, {1, 2}}));
  EXPECT_EQ(closed_form_product(Family::B, 3, 0, 0), (ChainElement{{0, 48}}));
  // x_j x_1 = (n!/j!) 2^(n-j) x_1 in D_n.
  for (int n = 3; n <= 7; ++n) {
    for (int j = 1; j <= n; ++j) {
      const Rational c = Rational(factorial(static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(j)) *
                                  power_of_two(static_cast<unsigned>(n - j)));
      EXPECT_EQ(closed_form_product(Family::D, n, j, 1), (ChainElement{{1, c}}));
    }
  }
}

TEST(Chain, RecurrenceBoundaries) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(chain_recurrence(Family::A, n, n).rhs, (ChainElement{{0, n + 1}}));
    EXPECT_EQ(chain_recurrence(Family::B, n, n).rhs, (ChainElement{{0, 2 * n}}));
  }
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(chain_recurrence(Family::D, n, n - 1).rhs, (ChainElement{{1, 2 * n}}));
  EXPECT_EQ(chain_recurrence(Family::A, 4, 0).rhs, (ChainElement{{3, 1}}));
  EXPECT_THROW(chain_recurrence(Family::D, 4, 4), InvalidArgument);
}

TEST(Chain, PolynomialsAndBaseChange) {
  EXPECT_EQ(chain_as_polynomial(Family::A, 5, 3), QPolynomial::from_roots({0, 1, 2}));
  EXPECT_EQ(chain_as_polynomial(Family::B, 5, 3), QPolynomial::from_roots({0, 2, 4}));
  EXPECT_EQ(chain_as_polynomial(Family::D, 5, 0), QPolynomial::constant(1));
  const auto a2 = base_change(Family::A, 2, BaseChangeDirection::ChainInPowers);
  EXPECT_EQ(a2, (RationalMatrix{{1, 0, 0}, {0, 1, 0}, {0, -1, 1}}));
  const auto a2inv = base_change(Family::A, 2, BaseChangeDirection::PowersInChain);
  EXPECT_EQ(a2inv, (RationalMatrix{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}));
  for (Family f : {Family::A, Family::B}) {
    for (int n = 1 + (f == Family::B); n <= 12; ++n) EXPECT_TRUE(verify_base_change_inverse(f, n).ok);
  }
  for (int n = 3; n <= 12; ++n) EXPECT_TRUE(verify_base_change_inverse(Family::D, n).ok);
}

TEST(Chain, AgreesWithDescentAlgebra) {
  for (int n = 1; n <= 5; ++n) {
    const auto alg = algebra_of(Family::A, n);
    expect_all_ok(verify_closed_forms(alg));
    expect_all_ok(verify_recurrences(alg));
    expect_all_ok(verify_chain_polynomials(alg));
  }
  for (int n = 2; n <= 4; ++n) {
    const auto alg = algebra_of(Family::B, n);
    expect_all_ok(verify_closed_forms(alg));
    expect_all_ok(verify_recurrences(alg));
    expect_all_ok(verify_chain_polynomials(alg));
  }
  for (int n = 3; n <= 5; ++n) {
    const auto alg = algebra_of(Family::D, n);
    expect_all_ok(verify_closed_forms(alg));
    expect_all_ok(verify_recurrences(alg));
    expect_all_ok(verify_chain_polynomials(alg));
  }
}

TEST(Chain, TypeACountingIdentity) {
  // a_jkl counts d ∈ X_JK with J^d ∩ K = L; compare with literal counts.
  for (int n = 1; n <= 5; ++n) {
    const auto sys = CoxeterSystem::build(CoxeterType::make(Family::A, n));
    const oracle::Group g(sys);
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k <= n; ++k) {
        ChainElement literal;
        for (const auto& [bits, c] : g.solomon(SubsetMask::chain(j), SubsetMask::chain(k))) {
          const SubsetMask L(bits);
          ASSERT_EQ(L, SubsetMask::chain(L.size())) << "non-chain term";
          literal[L.size()] += Rational(static_cast<unsigned long>(c));
        }
        EXPECT_EQ(closed_form_product(Family::A, n, j, k), literal) << n << " " << j << " " << k;
      }
    }
  }
}

TEST(Chain, AlgebraRoundTrip) {
  const ChainElement e{{1, 2}, {3, make_rational(1, 2)}};
  const auto a = chain_to_algebra(Family::D, 4, e);
  EXPECT_EQ(a.coeff(SubsetMask()), 2);
  EXPECT_EQ(algebra_to_chain(Family::D, 4, a), e);
  EXPECT_THROW(algebra_to_chain(Family::A, 3, AlgebraElement::basis(SubsetMask::of({2}))), InvalidArgument);
}

TEST(Chain, QuotientModelsAndIsomorphism) {
  for (int n = 1; n <= 8; ++n) expect_all_ok(verify_quotient_model(Family::A, n));
  for (int n = 2; n <= 8; ++n) expect_all_ok(verify_quotient_model(Family::B, n));
  for (int n = 3; n <= 8; ++n) expect_all_ok(verify_quotient_model(Family::D, n));
  for (int n = 3; n <= 8; ++n) expect_all_ok(verify_phi_multiplicative(n));
  EXPECT_EQ(phi_D_to_A(4, {{4, 1}, {2, 3}}), (ChainElement{{3, 1}, {1, 12}}));
  EXPECT_EQ(quotient_image(Family::B, 3, 1), FallingPoly::falling_power(2, 4));
  EXPECT_EQ(quotient_image(Family::A, 3, 3), FallingPoly::falling_power(0));
}

TEST(Chain, CsvTable) {
  EXPECT_EQ(chain_table_csv(Family::A, 2),
            "j\\k,0,1,2\n"
            "0,0:6,0:3,0:1\n"
            "1,0:3,0:1;1:1,1:1\n"
            "2,0:1,1:1,2:1\n");
  EXPECT_EQ(to_string(ChainElement{{0, 2}, {3, make_rational(-1, 2)}}), "-1/2 x_3 + 2 x_0");
}
