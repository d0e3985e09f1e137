#include <random>

#include <gtest/gtest.h>

#include "fqcalc/fqlinear.hpp"
#include "fqcalc/text.hpp"
#include "oracles.hpp"

using namespace fqcalc;

namespace {

Workspace W(unsigned q, std::int64_t n = 40) { return Workspace(FqContext::make(q), n); }

QExpansion monomial(const Workspace& ws, int n, const Laurent& c) {
  QExpansion u;
  u.a.assign(static_cast<std::size_t>(n), ws.zero());
  u.a.push_back(c);
  return u;
}

CarlitzExpansion random_carlitz(std::mt19937_64& rng, const Workspace& ws, int len) {
  CarlitzExpansion u;
  for (int i = 0; i < len; ++i) {
    std::vector<Code> cs(3);
    for (auto& c : cs) c = static_cast<Code>(rng() % ws.q());
    u.c.push_back(Laurent::from_poly(Poly(ws.field(), cs)));
  }
  return u;
}

bool same(const CarlitzExpansion& a, const CarlitzExpansion& b) { return first_difference(a, b, kInfinity) == -1; }

}  // namespace

TEST(FqLinear, EvaluationExamples) {
  const Workspace ws = W(2);
  EXPECT_EQ(evaluate(ws, CarlitzExpansion{{ws.one()}}, ws.x_pow(1)).to_string(), "x (mod x^40)");
  EXPECT_EQ(evaluate(ws, QExpansion{{ws.zero(), ws.one()}}, ws.x_pow(1)).to_string(), "x^2 (mod x^40)");
  // f_2(x) from the product over the four polynomials of degree < 2.
  const oracle::NP num = oracle::e_at(2, {0, 1}, 2);
  const auto ref = oracle::quotient(num, oracle::D(2, 2), 40, 2);
  EXPECT_TRUE(oracle::agrees(basis_value(ws, 2, ws.x_pow(1)), ref, -10, 40));
}

TEST(FqLinear, BasisValuesMatchOracleAtPolynomialPoints) {
  std::mt19937_64 rng(23);
  for (int p : {2, 3}) {
    const Workspace ws = W(static_cast<unsigned>(p), 30);
    for (int r = 0; r < 15; ++r) {
      oracle::NP t = oracle::random_np(rng, 4, p);
      if (t.empty()) t = {0, 1};
      const int n = r % 4;
      const auto ref = oracle::quotient(oracle::e_at(n, t, p), oracle::D(n, p), 30, p);
      EXPECT_TRUE(oracle::agrees(basis_value(ws, n, Laurent::from_poly(oracle::to_poly(ws.field(), t))), ref, -40, 30));
    }
  }
}

TEST(FqLinear, Conversions) {
  const Workspace ws = W(3, 30);
  EXPECT_TRUE(same(to_carlitz(ws, QExpansion{{ws.one()}}), CarlitzExpansion{{ws.one()}}));
  // t^q against its Carlitz expansion at x, x^2, x^3.
  const QExpansion tq = monomial(ws, 1, ws.one());
  const CarlitzExpansion c = to_carlitz(ws, tq);
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(evaluate(ws, c, ws.x_pow(m)), evaluate(ws, tq, ws.x_pow(m)));
  // Round trips on random finitely supported expansions.
  std::mt19937_64 rng(29);
  for (int r = 0; r < 10; ++r) {
    const CarlitzExpansion u = random_carlitz(rng, ws, 5);
    EXPECT_EQ(first_difference(to_carlitz(ws, to_qexpansion(ws, u)), u, 30), -1);
    const ValueTable vals = to_values(ws, u, 8);
    EXPECT_EQ(first_difference(carlitz_from_values(ws, vals), u, 28), -1);
    const QExpansion qa = to_qexpansion(ws, u);
    const auto h = to_h(ws, qa);
    EXPECT_EQ(first_difference(from_h(ws, h), qa, 30), -1);
  }
}

TEST(FqLinear, DifferenceOperator) {
  const Workspace ws = W(2, 30);
  for (int n = 0; n <= 3; ++n) {
    const QExpansion u = monomial(ws, n, ws.one());
    const QExpansion du = delta(ws, u, 1);
    EXPECT_EQ(du.a[static_cast<std::size_t>(n)], ws.bracket(n));
  }
  const QExpansion t = monomial(ws, 0, ws.one());
  EXPECT_EQ(first_difference(delta(ws, t, 0), t, kInfinity), -1);
  const QExpansion d2 = delta(ws, t, 2);
  for (const Laurent& a : d2.a) EXPECT_TRUE(a.is_zero());
}

TEST(FqLinear, LadderRelations) {
  for (unsigned q : {2u, 3u}) {
    const Workspace ws = W(q, 30);
    EXPECT_TRUE(same(a_minus(ws, basis_vector(ws, 0)), CarlitzExpansion{}));
    for (int i = 1; i <= 6; ++i) {
      EXPECT_TRUE(same(a_minus(ws, basis_vector(ws, i)), basis_vector(ws, i - 1)));
      EXPECT_TRUE(same(a_plus(ws, a_minus(ws, basis_vector(ws, i))), scale(basis_vector(ws, i), ws.bracket(i))));
    }
    // The commutator relation with both sides raised to the q-th power:
    // Delta(a+ u) - (Delta u)^q + Delta u = [1] u^q.
    std::mt19937_64 rng(q);
    for (int r = 0; r < 10; ++r) {
      const CarlitzExpansion u = random_carlitz(rng, ws, 5);
      const CarlitzExpansion du = delta(ws, u, 1);
      const CarlitzExpansion lhs = add(sub(delta(ws, a_plus(ws, u), 1), frobenius(ws, du)), du);
      EXPECT_TRUE(same(lhs, scale(frobenius(ws, u), ws.bracket(1))));
    }
  }
}

TEST(FqLinear, TaylorRecovery) {
  const Workspace ws = W(2, 24);
  // u = t^{q^2}/D_2 has a^H_2 = 1.
  const QExpansion u = monomial(ws, 2, ws.constants().inv_D(2, 40));
  const TaylorTrace tr = taylor_recover(ws, u, 2, 16);
  ASSERT_TRUE(tr.stabilized_m.has_value());
  EXPECT_TRUE(tr.matches);
  EXPECT_EQ(tr.value->to_string(), "1 (mod x^24)");
  // a^H = [0, x, 0] recovers x at n = 1.
  const QExpansion v = from_h(ws, {ws.zero(), ws.x_pow(1), ws.zero()});
  const TaylorTrace t1 = taylor_recover(ws, v, 1, 16);
  EXPECT_TRUE(t1.matches);
  EXPECT_TRUE(t1.value->agrees_to(ws.x_pow(1), 24));
  // Beyond the support the divisor eats the precision: every quotient is
  // zero to the precision it carries, but none certifies x^24.
  const TaylorTrace t5 = taylor_recover(ws, v, 5, 8);
  for (const Laurent& qm : t5.quotients) EXPECT_TRUE(qm.is_zero_within_precision());
  EXPECT_LT(t5.quotients.back().precision(), 24);
  EXPECT_FALSE(t5.matches);
}

TEST(FqLinear, SmoothnessNorms) {
  for (unsigned q : {2u, 3u}) {
    const Workspace ws = W(q, 30);
    for (int k = 0; k <= 2; ++k) {
      EXPECT_EQ(dk_norm(ws, basis_vector(ws, k), k), AbsValue::power(0));
      EXPECT_EQ(dk_norm(ws, basis_vector(ws, k + 1), k), AbsValue::power(static_cast<std::int64_t>(ws.constants().q_pow(static_cast<unsigned>(k)))));
    }
    for (int m = 1; m <= 4; ++m) {
      EXPECT_TRUE(dk_apply(ws, basis_vector(ws, 0), 0, ws.x_pow(m)).agrees_to(ws.one(), 30));
    }
  }
}

TEST(FqLinear, AnalyticityBounds) {
  const Workspace ws = W(2, 30);
  for (const BoundRow& row : analyticity_forward(ws, monomial(ws, 2, ws.one()))) EXPECT_TRUE(row.holds) << row.n;
  for (const BoundRow& row : analyticity_backward(ws, basis_vector(ws, 3))) EXPECT_TRUE(row.holds) << row.n;
}

// s_{nj} = -v([n j]). It vanishes on the first off-diagonal, e.g.
// [2 1] = x^2 + x + 1 for q = 2, and is negative everywhere else.
TEST(FqLinear, SExponentSigns) {
  for (unsigned q : {2u, 3u}) {
    const auto c = Constants::make(FqContext::make(q));
    for (int n = 1; n <= 8; ++n)
      for (int j = 0; j < n; ++j) {
        const std::int64_t s = s_exponent(q, n, j);
        if (n == j + 1) EXPECT_EQ(s, 0);
        else EXPECT_LT(s, 0);
        if (n <= 4) EXPECT_EQ(s, -c->binomial(n, j).valuation()) << n << " " << j;
      }
    const SSignReport rep = verify_s_signs(*c, 8);
    EXPECT_FALSE(rep.all_negative);
    EXPECT_TRUE(rep.all_nonpositive);
    EXPECT_TRUE(rep.zeros_adjacent);
    EXPECT_EQ(rep.zero_count, 8);
  }
}
