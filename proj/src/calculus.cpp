#include "fqcalc/calculus.hpp"

#include <algorithm>

namespace fqcalc {

LawCheck compare(std::string name, Laurent lhs, Laurent rhs, std::int64_t required) {
  LawCheck out{std::move(name), std::move(lhs), std::move(rhs), 0, 0, false, false, ""};
  out.agreement = out.lhs.agreement(out.rhs);
  out.required = required;
  out.holds = out.agreement >= required;
  return out;
}

std::string to_string(IntegralResult::Method m) {
  return m == IntegralResult::Method::ClosedForm ? "closed-form" : "limit-sequence";
}

CarlitzExpansion indefinite_sum(const Workspace& ws, const CarlitzExpansion& f) {
  CarlitzExpansion out;
  out.c.push_back(ws.zero());
  for (const Laurent& phi : f.c) out.c.push_back(phi.frob_power(1));
  while (out.c.size() > 1 && out.c.back().is_exact_zero()) out.c.pop_back();
  if (out.c.size() == 1) out.c.clear();
  return out;
}

ValueTable indefinite_sum_values(const Workspace& ws, const ValueTable& f) {
  if (f.values.size() < 2) throw DomainError("indefinite sum needs a table of length >= 2");
  const std::int64_t N = ws.precision();
  const Laurent x = ws.x_pow(1);
  ValueTable u;
  u.values.push_back(ws.zero());
  for (std::size_t n = 1; n < f.values.size(); ++n) {
    u.values.push_back((x * u.values[n - 1] + f.values[n - 1].frob_power(1, N)).truncated(N));
  }
  return u;
}

IntegralResult volkenborn(const Workspace& ws, const CarlitzExpansion& f) {
  const Constants& c = ws.constants();
  const std::int64_t N = ws.precision();
  Laurent acc = ws.zero();
  for (std::size_t l = 0; l < f.c.size(); ++l) {
    const Laurent& phi = f.c[l];
    if (phi.is_exact_zero()) continue;
    const int i = static_cast<int>(l) + 1;
    const Laurent phq = phi.frob_power(1, N + i);
    if (phq.is_zero_within_precision() && phq.valuation_bound() >= N + i) continue;
    const std::int64_t vp = phq.valuation_bound();
    acc += (phq * c.inv_L(i, N - vp).scale(c.sign(i))).truncated(N);
  }
  return {acc.truncated(N), IntegralResult::Method::ClosedForm, {}, std::nullopt};
}

Laurent volkenborn_termwise(const Workspace& ws, const QExpansion& f) {
  const Constants& c = ws.constants();
  const std::int64_t N = ws.precision();
  Laurent acc = ws.zero();
  for (std::size_t n = 0; n < f.a.size(); ++n) {
    const Laurent& an = f.a[n];
    if (an.is_exact_zero()) continue;
    const int i = static_cast<int>(n) + 1;
    const Laurent aq = an.frob_power(1, N + 1);
    if (aq.is_zero_within_precision() && aq.valuation_bound() >= N + 1) continue;
    acc -= (aq * c.inv_bracket(i, N - aq.valuation_bound())).truncated(N);
  }
  return acc.truncated(N);
}

IntegralResult volkenborn_limit(const Workspace& ws, const Sampler& f, std::int64_t n_max) {
  if (n_max < 2) throw DomainError("limit trace needs n_max >= 2");
  const std::int64_t N = ws.precision();
  const unsigned q = ws.q();
  IntegralResult out{ws.zero(), IntegralResult::Method::LimitSequence, {}, std::nullopt};
  Laurent partial = ws.zero();
  for (std::int64_t k = 0; k < n_max; ++k) {
    // x^{-1-k} f(x^k)^q modulo x^N needs f(x^k) modulo x^{ceil((N+1+k)/q)}.
    const std::int64_t need = N + 1 + k;
    const Laurent fk = f(k, ceil_div(need, q));
    partial = (partial + fk.frob_power(1, need).truncated(need).shift(-1 - k)).truncated(N);
    out.trace.push_back(partial);
  }
  const auto& tr = out.trace;
  std::size_t first = tr.size() - 1;
  while (first > 0 && tr[first - 1].agrees_to(tr.back(), N)) --first;
  if (first + 1 < tr.size()) out.stabilized_n = static_cast<std::int64_t>(first) + 1;
  out.value = tr.back();
  return out;
}

IntegralResult volkenborn_limit(const Workspace& ws, const CarlitzExpansion& f, std::int64_t n_max) {
  return volkenborn_limit(
      ws, [&](std::int64_t m, std::int64_t target) { return evaluate(ws, f, ws.x_pow(m), target); }, n_max);
}

IntegralResult volkenborn_limit(const Workspace& ws, const QExpansion& f, std::int64_t n_max) {
  return volkenborn_limit(
      ws, [&](std::int64_t m, std::int64_t target) { return evaluate(ws, f, ws.x_pow(m), target); }, n_max);
}

QExpansion substitute(const Workspace& ws, const QExpansion& f, const Poly& g) {
  QExpansion out;
  for (std::size_t n = 0; n < f.a.size(); ++n) {
    if (f.a[n].is_exact_zero() || g.is_zero()) {
      out.a.push_back(ws.zero());
      continue;
    }
    out.a.push_back(f.a[n] * Laurent::from_poly(g.frobenius(static_cast<unsigned>(n))));
  }
  return out;
}

std::vector<LawCheck> invariance_check(const Workspace& ws, const CarlitzExpansion& f) {
  const std::int64_t N = ws.precision();
  const std::int64_t req = N - kGuard;
  const auto field = ws.field();
  const QExpansion fq = to_qexpansion(ws, f);
  const Laurent I = volkenborn(ws, f).value;
  auto integral_at = [&](const Poly& g) { return volkenborn(ws, to_carlitz(ws, substitute(ws, fq, g))).value; };
  auto fq_at = [&](std::int64_t m) { return evaluate(ws, f, ws.x_pow(m)).frob_power(1, N + m + 1); };

  std::vector<LawCheck> out;
  out.push_back(compare("shift: int f(xt) = x int f - f^q(1)", integral_at(Poly::x(field)),
                        (ws.x_pow(1) * I - fq_at(0)).truncated(N), req));

  for (int n = 1; n <= 3; ++n) {
    Laurent rhs = ws.x_pow(n) * I;
    for (int k = 1; k <= n; ++k) rhs -= ws.x_pow(n - k) * fq_at(k - 1);
    out.push_back(compare("iterated shift n=" + std::to_string(n),
                          integral_at(Poly::monomial(field, 1, static_cast<std::size_t>(n))), rhs.truncated(N), req));
  }

  for (const Poly& cpoly : {Poly::x(field), Poly(field, {1, 1})}) {
    const Laurent cl = Laurent::from_poly(cpoly);
    out.push_back(compare("scalar c=" + cpoly.to_string(), volkenborn(ws, scale(f, cl)).value,
                          (cl.frob_power(1) * I).truncated(N), req));
  }

  // f vanishes on every polynomial of degree < n0.
  std::size_t n0 = 0;
  while (n0 < f.c.size() && f.c[n0].is_zero()) ++n0;
  std::vector<Poly> gs;
  unsigned d = 0;
  std::uint64_t count = ws.q();
  while (d < n0 && count * ws.q() <= 64) {
    ++d;
    count *= ws.q();
  }
  for (const Poly& g : poly_enumerate(field, d + 1, false)) {
    if (!g.is_zero()) gs.push_back(g);
  }
  if (d < n0) {
    gs.push_back(Poly::monomial(field, 1, n0));
    gs.push_back(Poly::monomial(field, 1, n0) + Poly::constant(field, 1));
  }
  std::optional<LawCheck> worst;
  for (const Poly& g : gs) {
    LawCheck chk = compare("", integral_at(g), (Laurent::from_poly(g) * I).truncated(N), req);
    if (!worst || chk.agreement < worst->agreement) {
      worst = std::move(chk);
      worst->note = "worst g = " + g.to_string();
    }
  }
  worst->name = "vanishing: int f(gt) = g int f, deg g <= " + std::to_string(n0);
  worst->note += ", " + std::to_string(gs.size()) + " polynomials g";
  out.push_back(std::move(*worst));
  return out;
}

}  // namespace fqcalc
