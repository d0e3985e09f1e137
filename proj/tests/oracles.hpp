#pragma once

// Naive reference implementations over a prime field F_p, written from the
// definitions and sharing no code with the library. Polynomials are
// coefficient vectors, lowest degree first; series are (valuation, coeffs)
// truncated at an absolute precision.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "fqcalc/laurent.hpp"
#include "fqcalc/poly.hpp"

namespace oracle {

using NP = std::vector<int>;

inline int md(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

inline int inv_mod(int a, int p) {
  for (int b = 1; b < p; ++b)
    if (md(static_cast<long long>(a) * b, p) == 1) return b;
  return 0;
}

inline void trim(NP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline NP add(NP a, const NP& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = md(a[i] + b[i], p);
  trim(a);
  return a;
}

inline NP neg(NP a, int p) {
  for (int& c : a) c = md(-c, p);
  return a;
}

inline NP sub(const NP& a, const NP& b, int p) { return add(a, neg(b, p), p); }

inline NP mul(const NP& a, const NP& b, int p) {
  if (a.empty() || b.empty()) return {};
  NP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = md(r[i + j] + static_cast<long long>(a[i]) * b[j], p);
  trim(r);
  return r;
}

inline NP monomial(std::size_t k, int c = 1) {
  NP r(k + 1, 0);
  r[k] = c;
  return r;
}

inline NP constant(int c, int p) {
  NP r{md(c, p)};
  trim(r);
  return r;
}

/// Quotient; the remainder must be zero (returned through `rem`).
inline NP divide(NP a, const NP& b, int p, NP* rem = nullptr) {
  trim(a);
  NP q;
  const int lead_inv = inv_mod(b.back(), p);
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const int c = md(static_cast<long long>(a.back()) * lead_inv, p);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = md(a[i + shift] - static_cast<long long>(c) * b[i], p);
    trim(a);
  }
  trim(q);
  if (rem) *rem = a;
  return q;
}

/// Every polynomial of degree < d, in base-p counting order.
inline std::vector<NP> all_below(int d, int p) {
  std::vector<NP> out;
  long long count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (long long n = 0; n < count; ++n) {
    NP a(static_cast<std::size_t>(d), 0);
    long long v = n;
    for (int i = 0; i < d; ++i) {
      a[static_cast<std::size_t>(i)] = static_cast<int>(v % p);
      v /= p;
    }
    trim(a);
    out.push_back(a);
  }
  return out;
}

inline std::vector<NP> all_monic(int d, int p) {
  std::vector<NP> out;
  for (NP a : all_below(d, p)) {
    a.resize(static_cast<std::size_t>(d) + 1, 0);
    a[static_cast<std::size_t>(d)] = 1;
    out.push_back(a);
  }
  return out;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline NP bracket(int i, int p) { return sub(monomial(static_cast<std::size_t>(ipow(p, i))), monomial(1), p); }

/// D_i as the product of all monic polynomials of degree i.
inline NP D(int i, int p) {
  NP r{1};
  for (const NP& m : all_monic(i, p)) r = mul(r, m, p);
  return r;
}

inline NP L(int i, int p) {
  NP r{1};
  for (int k = 1; k <= i; ++k) r = mul(r, bracket(k, p), p);
  return r;
}

/// e_i(t) = prod over deg m < i of (t - m), at a polynomial t.
inline NP e_at(int i, const NP& t, int p) {
  NP r = t;
  if (i == 0) return r;
  r = {1};
  for (const NP& m : all_below(i, p)) r = mul(r, sub(t, m, p), p);
  return r;
}

inline fqcalc::Poly to_poly(const fqcalc::FieldPtr& f, const NP& a) {
  std::vector<fqcalc::Code> cs(a.begin(), a.end());
  return fqcalc::Poly(f, cs);
}

inline NP from_poly(const fqcalc::Poly& a) {
  NP r(a.coeffs().begin(), a.coeffs().end());
  return r;
}

// ---- truncated series --------------------------------------------------------

/// Coefficients of x^lo .. x^{hi-1}.
struct Series {
  long lo = 0;
  std::vector<int> c;
  long hi() const { return lo + static_cast<long>(c.size()); }
  int at(long e) const { return e < lo || e >= hi() ? 0 : c[static_cast<std::size_t>(e - lo)]; }
};

inline Series from_np(const NP& a, long hi) {
  Series s{0, std::vector<int>(static_cast<std::size_t>(std::max<long>(hi, 0)), 0)};
  for (std::size_t i = 0; i < a.size() && static_cast<long>(i) < hi; ++i) s.c[i] = a[i];
  return s;
}

inline Series mul(const Series& a, const Series& b, long hi, int p) {
  Series r{a.lo + b.lo, std::vector<int>(static_cast<std::size_t>(std::max<long>(hi - a.lo - b.lo, 0)), 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      const long e = a.lo + b.lo + static_cast<long>(i + j);
      if (e < hi) r.c[static_cast<std::size_t>(e - r.lo)] = md(r.c[static_cast<std::size_t>(e - r.lo)] + a.c[i] * b.c[j], p);
    }
  return r;
}

inline Series add(const Series& a, const Series& b, long hi, int p) {
  const long lo = std::min(a.lo, b.lo);
  Series r{lo, std::vector<int>(static_cast<std::size_t>(std::max<long>(hi - lo, 0)), 0)};
  for (long e = lo; e < hi; ++e) r.c[static_cast<std::size_t>(e - lo)] = md(a.at(e) + b.at(e), p);
  return r;
}

inline Series scale(const Series& a, int k, int p) {
  Series r = a;
  for (int& c : r.c) c = md(static_cast<long long>(c) * k, p);
  return r;
}

inline Series shift(Series a, long k) {
  a.lo += k;
  return a;
}

/// num / den by long division, coefficients below x^hi; den != 0.
inline Series quotient(const NP& num, const NP& den, long hi, int p) {
  long vd = 0;
  while (den[static_cast<std::size_t>(vd)] == 0) ++vd;
  const int u0 = inv_mod(den[static_cast<std::size_t>(vd)], p);
  Series r{-vd, std::vector<int>(static_cast<std::size_t>(std::max<long>(hi + vd, 0)), 0)};
  std::vector<int> rem(static_cast<std::size_t>(std::max<long>(hi + vd, 0)) + den.size(), 0);
  for (std::size_t i = 0; i < num.size() && i < rem.size(); ++i) rem[i] = num[i];
  for (long e = -vd; e < hi; ++e) {
    const std::size_t at = static_cast<std::size_t>(e + vd);
    const int c = md(static_cast<long long>(rem[at]) * u0, p);
    r.c[static_cast<std::size_t>(e + vd)] = c;
    if (c == 0) continue;
    for (std::size_t k = static_cast<std::size_t>(vd); k < den.size(); ++k) {
      const std::size_t idx = at + k - static_cast<std::size_t>(vd);
      if (idx >= rem.size()) break;
      rem[idx] = md(rem[idx] - static_cast<long long>(c) * den[k], p);
    }
  }
  return r;
}

/// z^n modulo x^hi by repeated multiplication.
inline Series power(const Series& z, long long n, long hi, int p) {
  Series r{0, std::vector<int>(static_cast<std::size_t>(std::max<long>(hi, 0)), 0)};
  if (hi > 0) r.c[0] = 1;
  for (long long k = 0; k < n; ++k) r = mul(r, z, hi, p);
  return r;
}

/// C_a(z) modulo x^hi via C_x(w) = x w + w^p and Horner in a.
inline Series carlitz(const NP& a, const Series& z, long hi, int p) {
  Series acc{0, std::vector<int>(static_cast<std::size_t>(std::max<long>(hi, 0)), 0)};
  for (std::size_t k = a.size(); k-- > 0;) {
    acc = add(add(shift(acc, 1), power(acc, p, hi, p), hi, p), scale(z, a[k], p), hi, p);
  }
  return acc;
}

/// Agreement check against a library series: coefficients of x^lo .. x^{hi-1}.
inline bool agrees(const fqcalc::Laurent& z, const Series& s, long lo, long hi) {
  for (long e = lo; e < hi; ++e)
    if (static_cast<int>(z.coeff(e)) != s.at(e)) return false;
  return true;
}

inline NP random_np(std::mt19937_64& rng, int max_deg, int p) {
  NP a(static_cast<std::size_t>(max_deg) + 1);
  for (int& c : a) c = static_cast<int>(rng() % static_cast<unsigned>(p));
  trim(a);
  return a;
}

}  // namespace oracle
