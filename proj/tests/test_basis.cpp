#include <random>

#include <gtest/gtest.h>

#include "fqcalc/basis.hpp"
#include "fqcalc/text.hpp"
#include "oracles.hpp"

using namespace fqcalc;

namespace {
ConstantsPtr C(unsigned q) { return Constants::make(FqContext::make(q)); }
Poly P(unsigned q, const std::string& s) { return parse_poly(FqContext::make(q), s); }
Rational R(const Poly& p) { return Rational(p); }
}  // namespace

TEST(Basis, CarlitzPolynomialsBothPaths) {
  const auto c2 = C(2), c3 = C(3);
  EXPECT_EQ(e_product(*c2, 0), TPoly::t(c2->field()));
  EXPECT_EQ(e_product(*c2, 1).to_string(), "t^2 + t");
  EXPECT_EQ(e_product(*c3, 1).to_string(), "t^3 + 2*t");
  for (unsigned q : {2u, 3u, 4u}) {
    const auto c = C(q);
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(e_product(*c, i), e_binomial(*c, i).to_tpoly(q)) << q << " " << i;
  }
}

TEST(Basis, NormalizedPolynomials) {
  const auto c2 = C(2);
  EXPECT_EQ(f(*c2, 0).to_tpoly(2), TPoly::t(c2->field()));
  const TPoly f1 = f(*c2, 1).to_tpoly(2);
  EXPECT_EQ(f1.den, P(2, "x^2 + x"));
  EXPECT_EQ(f1.to_string(), "(t^2 + t)/(x^2 + x)");
  // f_i vanishes on polynomials of degree < i and is 1 at x^i.
  for (unsigned q : {2u, 3u}) {
    const auto c = C(q);
    for (int i = 1; i <= 3; ++i) {
      for (const Poly& m : poly_enumerate(c->field(), static_cast<unsigned>(i), false)) {
        EXPECT_TRUE(f(*c, i).evaluate(m).is_zero());
      }
      EXPECT_EQ(f(*c, i).evaluate(Poly::monomial(c->field(), 1, static_cast<std::size_t>(i))), R(Poly::constant(c->field(), 1)));
    }
  }
}

TEST(Basis, ValuesMatchProductOracle) {
  std::mt19937_64 rng(17);
  for (int p : {2, 3}) {
    const auto c = C(static_cast<unsigned>(p));
    for (int r = 0; r < 20; ++r) {
      const oracle::NP t = oracle::random_np(rng, 5, p);
      const int i = r % 4;
      const Rational got = e_binomial(*c, i).evaluate(oracle::to_poly(c->field(), t));
      EXPECT_EQ(got, R(oracle::to_poly(c->field(), oracle::e_at(i, t, p))));
    }
  }
}

TEST(Basis, HBasisAndTau) {
  const auto c2 = C(2);
  EXPECT_EQ(h(*c2, 1), TPoly::t(c2->field()));
  EXPECT_EQ(tau_product(*c2, 0).to_string(), "1");
  const TPoly one = TPoly::constant(R(Poly::constant(c2->field(), 1)));
  EXPECT_EQ(tau_product(*c2, 1), TPoly::t(c2->field()) - one);
  EXPECT_EQ(tau_product(*c2, 1), tau_from_g(*c2, 1));

  const auto beta5 = to_h_basis(*c2, h(*c2, 5));
  ASSERT_EQ(beta5.size(), 6u);
  for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(beta5[j].is_zero(), j != 5);
  EXPECT_EQ(beta5[5], R(Poly::constant(c2->field(), 1)));

  for (unsigned q : {2u, 3u}) {
    const auto c = C(q);
    for (unsigned j = 0; j <= 10; ++j) {
      const TPoly tj = TPoly::t(c->field()).pow(j);
      const auto beta = to_h_basis(*c, tj);
      EXPECT_EQ(beta.back(), R(c->gamma(j)));  // t^j = G_j + lower, h_j = G_j/Gamma_j
      EXPECT_EQ(from_h_basis(*c, beta), tj);
    }
    for (int m = 0; m <= 3; ++m) {
      const auto sigma = tau_sigma(*c, m);
      const auto beta = to_h_basis(*c, tau_product(*c, m));
      ASSERT_EQ(sigma.size(), beta.size());
      for (std::size_t j = 0; j < sigma.size(); ++j) EXPECT_EQ(sigma[j], beta[j]) << "q=" << q << " m=" << m;
      EXPECT_EQ(sigma.back(), R(Poly::constant(c->field(), 1)));
    }
  }
}

TEST(Basis, SupNorms) {
  for (unsigned q : {2u, 3u}) {
    const auto c = C(q);
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(sup_norm(*c, f(*c, i).to_tpoly(q)), AbsValue::power(0));
    for (int m = 0; m <= 4; ++m) EXPECT_EQ(sup_norm(*c, tau_product(*c, m)), AbsValue::power(0)) << q << " " << m;
    const TPoly xt = TPoly::t(c->field()).scale(R(Poly::x(c->field())));
    EXPECT_EQ(sup_norm(*c, xt), AbsValue::power(-1));
  }
}

TEST(Basis, MonicSums) {
  const auto c2 = C(2);
  EXPECT_TRUE(monic_sum(*c2, 0, 0, 1).is_zero());
  EXPECT_EQ(monic_sum(*c2, 1, 0, 1).to_string(), "1");
  // Sum of g_{q^n - 1} over monic degree m vanishes for n < m.
  EXPECT_TRUE(monic_sum(*c2, 3, 0, 3).is_zero());
  for (unsigned q : {2u, 3u}) {
    const auto c = C(q);
    for (int m = 1; m <= 2; ++m) {
      const auto table = monic_sum_table(*c, m);
      for (std::size_t l = 0; l < table.size(); ++l)
        for (std::size_t k = 0; k < table[l].size(); ++k) EXPECT_EQ(table[l][k], monic_sum_expected(*c, l, k, m));
    }
  }
}
