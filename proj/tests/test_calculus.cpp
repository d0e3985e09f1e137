#include <random>

#include <gtest/gtest.h>

#include "fqcalc/calculus.hpp"
#include "oracles.hpp"

using namespace fqcalc;

namespace {

Workspace W(unsigned q, std::int64_t n = 40) { return Workspace(FqContext::make(q), n); }

bool same(const CarlitzExpansion& a, const CarlitzExpansion& b) { return first_difference(a, b, kInfinity) == -1; }

Laurent signed_inv_L(const Workspace& ws, int n) {
  const Laurent v = ws.constants().inv_L(n, ws.precision());
  return n % 2 ? -v : v;
}

// p(x)^p = p(x^p) over a prime field.
oracle::NP frob(const oracle::NP& a, int p) {
  oracle::NP r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    r.resize(i * static_cast<std::size_t>(p) + 1, 0);
    r[i * static_cast<std::size_t>(p)] = a[i];
  }
  return r;
}

// Sf(x^n)/x^n modulo x^hi for f = sum c_i f_i, from exact values f(x^k).
oracle::Series limit_oracle(const std::vector<oracle::NP>& c, int p, int n, long hi) {
  oracle::NP u;  // Sf(x^n) = sum_{k<n} x^{n-1-k} f(x^k)^q
  for (int k = 0; k < n; ++k) {
    oracle::NP fk;
    const oracle::NP t = oracle::monomial(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < c.size(); ++i) {
      oracle::NP rem;
      const oracle::NP val = oracle::divide(oracle::e_at(static_cast<int>(i), t, p), oracle::D(static_cast<int>(i), p), p, &rem);
      EXPECT_TRUE(rem.empty());
      fk = oracle::add(fk, oracle::mul(c[i], val, p), p);
    }
    u = oracle::add(u, oracle::mul(oracle::monomial(static_cast<std::size_t>(n - 1 - k)), frob(fk, p), p), p);
  }
  return oracle::quotient(u, oracle::monomial(static_cast<std::size_t>(n)), hi, p);
}

}  // namespace

TEST(Calculus, IndefiniteSumShiftsBasis) {
  for (unsigned q : {2u, 3u}) {
    const Workspace ws = W(q);
    for (int k = 0; k <= 6; ++k) EXPECT_TRUE(same(indefinite_sum(ws, basis_vector(ws, k)), basis_vector(ws, k + 1)));
    EXPECT_TRUE(indefinite_sum(ws, CarlitzExpansion{}).c.empty());
  }
}

TEST(Calculus, IndefiniteSumIsRightInverse) {
  std::mt19937_64 rng(41);
  for (unsigned q : {2u, 3u}) {
    const Workspace ws = W(q);
    for (int r = 0; r < 10; ++r) {
      CarlitzExpansion f;
      for (int i = 0; i < 5; ++i) {
        f.c.push_back(Laurent::from_poly(oracle::to_poly(ws.field(), oracle::random_np(rng, 3, static_cast<int>(q)))));
      }
      EXPECT_EQ(first_difference(a_minus(ws, indefinite_sum(ws, f)), f, kInfinity), -1);
    }
  }
}

TEST(Calculus, InterpolationScheme) {
  const Workspace ws = W(2);
  const ValueTable f0 = to_values(ws, basis_vector(ws, 0), 8);
  const ValueTable u = indefinite_sum_values(ws, f0);
  EXPECT_TRUE(u.values[0].is_zero());
  EXPECT_TRUE(u.values[1].agrees_to(ws.one(), 40));
  EXPECT_TRUE(u.values[2].agrees_to(ws.x_pow(2) + ws.x_pow(1), 40));
  // S f_1 = f_2, read off the tables.
  const ValueTable s1 = indefinite_sum_values(ws, to_values(ws, basis_vector(ws, 1), 8));
  const ValueTable f2 = to_values(ws, basis_vector(ws, 2), 8);
  for (std::size_t m = 0; m < 8; ++m) EXPECT_TRUE(s1.values[m].agrees_to(f2.values[m], 38)) << m;
}

TEST(Calculus, IntegralsOfBasisAndMonomials) {
  for (unsigned q : {2u, 3u}) {
    const Workspace ws = W(q);
    for (int n = 0; n <= 5; ++n) {
      EXPECT_TRUE(volkenborn(ws, basis_vector(ws, n)).value.agrees_to(signed_inv_L(ws, n + 1), 40)) << q << " " << n;
      QExpansion mono;
      mono.a.assign(static_cast<std::size_t>(n), ws.zero());
      mono.a.push_back(ws.one());
      const Laurent expected = -ws.constants().inv_bracket(n + 1, 40);
      EXPECT_TRUE(volkenborn(ws, to_carlitz(ws, mono)).value.agrees_to(expected, 40));
      EXPECT_TRUE(volkenborn_termwise(ws, mono).agrees_to(expected, 40));
    }
  }
}

TEST(Calculus, CharacteristicTwoExample) {
  const Workspace ws = W(2, 8);
  const IntegralResult closed = volkenborn(ws, basis_vector(ws, 0));
  EXPECT_EQ(closed.value.to_string(), "x^-1 + 1 + x + x^2 + x^3 + x^4 + x^5 + x^6 + x^7 (mod x^8)");
  const IntegralResult lim = volkenborn_limit(ws, basis_vector(ws, 0), 8);
  ASSERT_EQ(lim.trace.size(), 8u);
  // Successive differences of the trace have strictly increasing valuation.
  std::int64_t last = -1000;
  for (std::size_t n = 1; n < lim.trace.size(); ++n) {
    const Laurent d = lim.trace[n] - lim.trace[n - 1];
    if (d.is_zero()) break;
    EXPECT_GT(d.valuation(), last);
    last = d.valuation();
  }
  EXPECT_EQ(to_string(closed.method), "closed-form");
}

TEST(Calculus, LimitTraceStabilizes) {
  const Workspace ws = W(2, 30);
  const IntegralResult r = volkenborn_limit(ws, basis_vector(ws, 1), 62);
  ASSERT_TRUE(r.stabilized_n.has_value());
  EXPECT_TRUE(r.value.agrees_to(ws.constants().inv_L(2, 30), 30));
  const IntegralResult z = volkenborn_limit(ws, CarlitzExpansion{}, 10);
  for (const Laurent& t : z.trace) EXPECT_TRUE(t.is_zero());
}

TEST(Calculus, ClosedFormMatchesLimitOracle) {
  std::mt19937_64 rng(43);
  const long N = 16;
  for (int p : {2, 3}) {
    const Workspace ws = W(static_cast<unsigned>(p), N);
    for (int r = 0; r < 4; ++r) {
      std::vector<oracle::NP> c;
      CarlitzExpansion f;
      for (int i = 0; i < 3; ++i) {
        c.push_back(oracle::random_np(rng, 2, p));
        f.c.push_back(Laurent::from_poly(oracle::to_poly(ws.field(), c.back())));
      }
      const auto ref = limit_oracle(c, p, p == 2 ? 48 : 30, N);
      EXPECT_TRUE(oracle::agrees(volkenborn(ws, f).value, ref, -20, N)) << "p=" << p << " r=" << r;
    }
  }
}

TEST(Calculus, InvarianceLaws) {
  for (unsigned q : {2u, 3u}) {
    const Workspace ws = W(q, 30);
    for (int n : {0, 2}) {
      for (const LawCheck& chk : invariance_check(ws, basis_vector(ws, n))) {
        EXPECT_TRUE(chk.holds) << chk.name << " q=" << q << " n=" << n;
      }
    }
    for (const LawCheck& chk : invariance_check(ws, CarlitzExpansion{})) EXPECT_TRUE(chk.holds) << chk.name;
  }
  // Shift law on f_0 by hand: int f(xt) = x int f - 1.
  const Workspace ws = W(2, 30);
  const Laurent I = volkenborn(ws, basis_vector(ws, 0)).value;
  const QExpansion shifted = substitute(ws, to_qexpansion(ws, basis_vector(ws, 0)), Poly::x(ws.field()));
  const Laurent lhs = volkenborn(ws, to_carlitz(ws, shifted)).value;
  EXPECT_TRUE(lhs.agrees_to(ws.x_pow(1) * I - ws.one(), 28));
}
