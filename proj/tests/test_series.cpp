#include <random>

#include <gtest/gtest.h>

#include "fqcalc/laurent.hpp"
#include "fqcalc/poly.hpp"
#include "fqcalc/text.hpp"
#include "oracles.hpp"

using namespace fqcalc;

namespace {

Laurent L2(const std::string& s, unsigned q = 2) { return parse_laurent(FqContext::make(q), s); }

Laurent random_series(std::mt19937_64& rng, const FieldPtr& f, std::int64_t prec) {
  std::vector<Code> cs(static_cast<std::size_t>(prec + 4));
  for (auto& c : cs) c = static_cast<Code>(rng() % f->q());
  cs[0] = static_cast<Code>(1 + rng() % (f->q() - 1));
  const std::int64_t v = static_cast<std::int64_t>(rng() % 7) - 3;
  return Laurent::from_coeffs(f, v, cs, v + prec);
}

}  // namespace

TEST(Series, AdditionRenormalizesValuation) {
  const auto z = L2("x + x^2 (mod x^10)") + L2("x (mod x^10)");
  EXPECT_EQ(z.valuation(), 2);
  EXPECT_EQ(z.to_string(), "x^2 (mod x^10)");
}

TEST(Series, ProductExamples) {
  EXPECT_EQ((L2("x") * L2("x^-1")).to_string(), "1");
  EXPECT_EQ((L2("1 + x") * L2("1 + x")).to_string(), "1 + x^2");
}

TEST(Series, InverseExamples) {
  EXPECT_EQ(L2("x").inverse(10).to_string(), "x^-1 (mod x^10)");
  const Laurent inv = L2("x + x^2").inverse(6);
  EXPECT_EQ(inv.to_string(), "x^-1 + 1 + x + x^2 + x^3 + x^4 + x^5 (mod x^6)");
  EXPECT_EQ((inv * L2("x + x^2")).truncated(6).to_string(), "1 (mod x^6)");
  EXPECT_THROW(Laurent::zero_mod(FqContext::make(2), 5).inverse(10), PrecisionError);
}

TEST(Series, AbsoluteValue) {
  EXPECT_EQ(L2("x^2 + x^5").abs(), AbsValue::power(-2));
  EXPECT_EQ(L2("1").abs(), AbsValue::power(0));
  EXPECT_EQ(L2("x^-1").abs(), AbsValue::power(1));
  EXPECT_TRUE(Laurent::exact_zero(FqContext::make(2)).abs().zero);
  EXPECT_THROW(Laurent::zero_mod(FqContext::make(2), 4).abs(), PrecisionError);
  EXPECT_THROW(Laurent::zero_mod(FqContext::make(2), 4).valuation(), PrecisionError);
}

TEST(Series, FrobeniusAndRoot) {
  EXPECT_EQ(L2("x").frob_power(2).to_string(), "x^4");
  EXPECT_EQ(L2("1 + x").frob_power(1).to_string(), "1 + x^2");
  EXPECT_EQ(L2("1 + x").frob_power(0), L2("1 + x"));
  EXPECT_EQ(L2("x^4").q_root().to_string(), "x^2");
  EXPECT_EQ(L2("x^2 + x^6").q_root().to_string(), "x + x^3");
  EXPECT_THROW(L2("x + x^2").q_root(), DomainError);
}

TEST(Series, RandomProperties) {
  std::mt19937_64 rng(11);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto f = FqContext::make(q);
    for (int r = 0; r < 40; ++r) {
      const Laurent a = random_series(rng, f, 20);
      const Laurent b = random_series(rng, f, 20);
      EXPECT_EQ(a.frob_power(1).q_root(), a);
      EXPECT_EQ((a * b).abs(), a.abs() * b.abs());
      const Laurent s = a + b;
      if (!s.is_zero_within_precision()) {
        EXPECT_LE(s.abs(), std::max(a.abs(), b.abs()));
        if (a.abs() != b.abs()) EXPECT_EQ(s.abs(), std::max(a.abs(), b.abs()));
      }
      // inv(a) a - 1 vanishes to the tracked precision.
      const Laurent one = a * a.inverse(20 - a.valuation()) - Laurent::constant(f, 1);
      EXPECT_TRUE(one.is_zero()) << one.to_string();
    }
  }
}

TEST(Series, DivisionMatchesOracle) {
  std::mt19937_64 rng(5);
  for (int p : {2, 3, 5}) {
    const auto f = FqContext::make(static_cast<unsigned>(p));
    for (int r = 0; r < 20; ++r) {
      oracle::NP num = oracle::random_np(rng, 6, p), den = oracle::random_np(rng, 5, p);
      if (den.empty()) den = {1};
      if (num.empty()) num = {1};
      const auto ref = oracle::quotient(num, den, 30, p);
      const Laurent got = divide(Laurent::from_poly(oracle::to_poly(f, num)), Laurent::from_poly(oracle::to_poly(f, den)), 30);
      EXPECT_TRUE(oracle::agrees(got, ref, -10, 30));
    }
  }
}

TEST(Poly, EnumerationCounts) {
  const auto f2 = FqContext::make(2);
  const auto monic1 = poly_enumerate(f2, 1, true);
  ASSERT_EQ(monic1.size(), 2u);
  EXPECT_EQ(monic1[0].to_string(), "x");
  EXPECT_EQ(monic1[1].to_string(), "x + 1");
  const auto below2 = poly_enumerate(f2, 2, false);
  std::vector<std::string> names;
  for (const Poly& p : below2) names.push_back(p.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"0", "1", "x", "x + 1"}));
  EXPECT_EQ(poly_enumerate(FqContext::make(3), 2, true).size(), 9u);
  EXPECT_THROW(poly_enumerate(f2, 30, false, 1000), BudgetError);
}

TEST(Poly, ProductAndDivisionMatchOracle) {
  std::mt19937_64 rng(3);
  for (int p : {2, 3, 5}) {
    const auto f = FqContext::make(static_cast<unsigned>(p));
    for (int r = 0; r < 30; ++r) {
      // Large enough to cross the Karatsuba threshold.
      const int da = r % 2 ? 200 : 7, db = r % 3 ? 150 : 4;
      const oracle::NP a = oracle::random_np(rng, da, p), b = oracle::random_np(rng, db, p);
      const Poly pa = oracle::to_poly(f, a), pb = oracle::to_poly(f, b);
      EXPECT_EQ(oracle::from_poly(pa * pb), oracle::mul(a, b, p));
      if (b.empty()) continue;
      oracle::NP rem;
      const oracle::NP quo = oracle::divide(a, b, p, &rem);
      const auto [pq, pr] = pa.divmod(pb);
      EXPECT_EQ(oracle::from_poly(pq), quo);
      EXPECT_EQ(oracle::from_poly(pr), rem);
    }
  }
}

TEST(Poly, GcdAndExactDivision) {
  const auto f = FqContext::make(3);
  const Poly a = parse_poly(f, "x^3 + 2x");  // x(x-1)(x+1)
  const Poly b = parse_poly(f, "x^2 + 2");   // (x-1)(x+1)
  EXPECT_EQ(Poly::gcd(a, b), b);
  EXPECT_EQ(a.divide_exact(b).to_string(), "x");
  EXPECT_THROW(b.divide_exact(parse_poly(f, "x")), InvariantError);
  EXPECT_EQ(Poly::binomial(f, 9, 1).divide_by_binomial(3, 1)->to_string(), "x^6 + x^4 + x^2 + 1");
}

TEST(Text, SeriesRoundTrip) {
  for (unsigned q : {2u, 3u, 4u, 9u}) {
    const auto f = FqContext::make(q);
    std::mt19937_64 rng(q);
    for (int r = 0; r < 20; ++r) {
      const Laurent a = random_series(rng, f, 12);
      EXPECT_EQ(parse_laurent(f, a.to_string()), a) << a.to_string();
      EXPECT_EQ(laurent_from_json(f, to_json(a)), a);
    }
  }
  const auto f4 = FqContext::make(4);
  EXPECT_EQ(parse_laurent(f4, "(u+1)*x^-2 + u + O(x^3)").to_string(), "(u+1)*x^-2 + u (mod x^3)");
  EXPECT_THROW(parse_poly(f4, "x^-1"), FieldError);
  EXPECT_THROW(parse_laurent(f4, "x^"), FieldError);
  EXPECT_THROW(parse_laurent(f4, "(1 + x"), FieldError);
}
