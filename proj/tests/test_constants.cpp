#include <gtest/gtest.h>

#include "fqcalc/constants.hpp"
#include "fqcalc/text.hpp"
#include "oracles.hpp"

using namespace fqcalc;

namespace {
ConstantsPtr C(unsigned q) { return Constants::make(FqContext::make(q)); }
Poly P(unsigned q, const std::string& s) { return parse_poly(FqContext::make(q), s); }
}  // namespace

TEST(Constants, Brackets) {
  EXPECT_EQ(C(2)->bracket(1).to_string(), "x^2 + x");
  EXPECT_EQ(C(3)->bracket(1).to_string(), "x^3 + 2*x");
  EXPECT_EQ(C(2)->bracket(2).to_string(), "x^4 + x");
  EXPECT_THROW(C(2)->bracket(0), DomainError);
}

TEST(Constants, FactorialsAgainstProducts) {
  const auto c2 = C(2);
  EXPECT_EQ(c2->D(0).to_string(), "1");
  EXPECT_EQ(c2->L(0).to_string(), "1");
  EXPECT_EQ(c2->L(2), P(2, "x^4 + x") * P(2, "x^2 + x"));
  EXPECT_EQ(c2->D(2), P(2, "x^4 + x") * P(2, "x^2 + x").pow(2));
  EXPECT_EQ(c2->D(2).valuation(), 3);
  EXPECT_EQ(c2->L(2).valuation(), 2);
  // D_i is the product of the monic polynomials of degree i.
  for (int p : {2, 3, 5}) {
    const auto c = C(static_cast<unsigned>(p));
    for (int i = 0; i <= (p == 5 ? 2 : 3); ++i) {
      EXPECT_EQ(oracle::from_poly(c->D(i)), oracle::D(i, p)) << "q=" << p << " i=" << i;
      EXPECT_EQ(oracle::from_poly(c->L(i)), oracle::L(i, p));
      EXPECT_EQ(c->val_D(i), c->D(i).valuation());
    }
  }
}

TEST(Constants, GammaAndDigits) {
  const auto c2 = C(2);
  EXPECT_EQ(c2->gamma(0).to_string(), "1");
  EXPECT_EQ(c2->gamma(3).to_string(), "x^2 + x");
  EXPECT_TRUE(c2->digits(0).empty());
  EXPECT_EQ(c2->digits(5), (std::vector<unsigned>{1, 0, 1}));
  EXPECT_EQ(C(3)->digits(7), (std::vector<unsigned>{1, 2}));
}

TEST(Constants, GammaTimesLEqualsD) {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto c = C(q);
    const int top = std::min<int>(6, static_cast<int>(c->max_index()));
    for (int m = 1; m <= top; ++m) {
      EXPECT_EQ(c->gamma(c->q_pow(static_cast<unsigned>(m)) - 1) * c->L(m), c->D(m)) << "q=" << q << " m=" << m;
    }
  }
}

TEST(Constants, CarlitzBinomials) {
  const auto c2 = C(2);
  for (int i = 0; i <= 4; ++i) {
    EXPECT_EQ(c2->binomial(i, i).to_string(), "1");
    EXPECT_EQ(c2->binomial(i, 0) * c2->L(i), c2->D(i));
  }
  EXPECT_EQ(c2->binomial(2, 1).to_string(), "x^2 + x + 1");
  // Against the defining quotient for q = 3.
  const auto c3 = C(3);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= i; ++j) {
      const oracle::NP den = oracle::mul(oracle::D(j, 3), oracle::from_poly(c3->L(i - j).frobenius(static_cast<unsigned>(j))), 3);
      oracle::NP rem;
      EXPECT_EQ(oracle::from_poly(c3->binomial(i, j)), oracle::divide(oracle::D(i, 3), den, 3, &rem));
      EXPECT_TRUE(rem.empty());
    }
  EXPECT_THROW(c2->binomial(2, 3), DomainError);
}

TEST(Constants, InversesAndMultipliers) {
  const auto c3 = C(3);
  for (int i = 0; i <= 3; ++i) {
    const Laurent prod = c3->inv_D(i, 20) * Laurent::from_poly(c3->D(i));
    EXPECT_TRUE(prod.agrees_to(Laurent::constant(c3->field(), 1), 20 - c3->val_D(i)));
    EXPECT_EQ(c3->linear_coeff_val(i, 0), -i);
  }
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(c3->delta_multiplier(n, k) * c3->D(n - k).frobenius(static_cast<unsigned>(k)), c3->D(n));
    }
  EXPECT_TRUE(c3->delta_multiplier(1, 2).is_zero());
}

TEST(Constants, Budget) {
  Budget small;
  small.max_degree = 100;
  const auto c = Constants::make(FqContext::make(2), small);
  EXPECT_EQ(c->max_index(), 4u);  // deg D_4 = 64, deg D_5 = 160
  EXPECT_NO_THROW(c->D(4));
  EXPECT_THROW(c->D(5), BudgetError);
}
