#include "fqcalc/specialfn.hpp"

#include <algorithm>

namespace fqcalc {

namespace {

std::int64_t require_small(const Laurent& z, const char* what) {
  const std::int64_t v = z.valuation();
  if (v < 1) throw DomainError(std::string(what) + " requires |z| < 1");
  return v;
}

std::string arg_text(const std::string& name, const Laurent& z) { return name + " = " + z.to_string(); }

Laurent module_poly(const Workspace& ws, const Poly& s, const Laurent& z) { return carlitz_module(ws, s, z).value; }

LawCheck vacuous(std::string name, const Laurent& zero, std::string note) {
  LawCheck out{std::move(name), zero, zero, 0, 0, false, false, ""};
  out.agreement = kInfinity;
  out.holds = true;
  out.vacuous = true;
  out.note = std::move(note);
  return out;
}

}  // namespace

SpecialValue carlitz_module(const Workspace& ws, const Poly& s, const Laurent& z) {
  const std::int64_t N = ws.precision();
  SpecialValue out{ws.zero(), "C_s", "s = " + s.to_string() + ", " + arg_text("z", z), N};
  if (s.is_zero() || z.is_exact_zero()) return out;
  const Constants& c = ws.constants();
  const std::int64_t vz = z.valuation_bound();
  Laurent acc = ws.zero();
  for (long i = 0; i <= s.degree(); ++i) {
    if (vz > 0 && static_cast<std::int64_t>(c.q_pow(static_cast<unsigned>(i))) * vz >= N) break;
    const Rational fi = basis_value_exact(ws, static_cast<int>(i), s);
    if (fi.is_zero()) continue;
    const Poly fs = fi.num.divide_exact(fi.den);
    const Laurent zq = z.frob_power(static_cast<unsigned>(i), N - static_cast<std::int64_t>(fs.valuation()));
    acc += (Laurent::from_poly(fs) * zq).truncated(N);
  }
  out.value = acc.truncated(N);
  return out;
}

SpecialValue carlitz_module(const Workspace& ws, const Laurent& s, const Laurent& z) {
  const std::int64_t N = ws.precision();
  SpecialValue out{ws.zero(), "C_s", arg_text("s", s) + ", " + arg_text("z", z), N};
  if (z.is_zero() || s.is_exact_zero()) {
    if (z.is_zero_within_precision()) out.value = z.truncated(N);
    return out;
  }
  const std::int64_t vz = require_small(z, "C_s(z) for s outside F_q[x]");
  const Constants& c = ws.constants();
  Laurent acc = ws.zero();
  for (unsigned i = 0;; ++i) {
    const std::int64_t vt = static_cast<std::int64_t>(c.q_pow(i)) * vz;
    if (vt >= N) break;
    const Laurent fi = basis_value(ws, static_cast<int>(i), s, N - vt);
    acc += (fi * z.frob_power(i, N)).truncated(N);
  }
  out.value = acc.truncated(N);
  return out;
}

SpecialValue log_c(const Workspace& ws, const Laurent& z) {
  const std::int64_t N = ws.precision();
  SpecialValue out{ws.zero(), "log_C", arg_text("z", z), N};
  if (z.is_zero()) {
    out.value = z.truncated(N);
    return out;
  }
  const std::int64_t v = require_small(z, "log_C(z)");
  const Constants& c = ws.constants();
  Laurent acc = z.truncated(N);
  for (int n = 1;; ++n) {
    const std::int64_t qn = static_cast<std::int64_t>(c.q_pow(static_cast<unsigned>(n)));
    if (qn * v - n >= N) break;
    const Laurent zq = z.frob_power(static_cast<unsigned>(n), N + n);
    acc += (zq * c.inv_L(n, N - qn * v).scale(c.sign(n))).truncated(N);
  }
  out.value = acc.truncated(N);
  return out;
}

bool exp_converges(unsigned q, const Laurent& z) {
  if (z.is_zero()) return true;
  return z.valuation() * static_cast<std::int64_t>(q - 1) > 1;
}

SpecialValue exp_c(const Workspace& ws, const Laurent& z) {
  const std::int64_t N = ws.precision();
  SpecialValue out{ws.zero(), "e_C", arg_text("z", z), N};
  if (z.is_zero()) {
    out.value = z.truncated(N);
    return out;
  }
  const std::int64_t v = require_small(z, "e_C(z)");
  if (!exp_converges(ws.q(), z)) {
    throw DomainError("e_C(z) diverges at v(z) = " + std::to_string(v) + " for q = " + std::to_string(ws.q()));
  }
  const Constants& c = ws.constants();
  Laurent acc = z.truncated(N);
  for (int n = 1;; ++n) {
    const std::int64_t qn = static_cast<std::int64_t>(c.q_pow(static_cast<unsigned>(n)));
    const std::int64_t vd = c.val_D(n);
    if (qn * v - vd >= N) break;
    const Laurent zq = z.frob_power(static_cast<unsigned>(n), N + vd);
    acc += (zq * c.inv_D(n, N - qn * v)).truncated(N);
  }
  out.value = acc.truncated(N);
  return out;
}

CarlitzExpansion module_expansion(const Workspace& ws, const Laurent& z) {
  CarlitzExpansion out;
  if (z.is_zero()) return out;
  const std::int64_t N = ws.precision();
  const std::int64_t v = z.valuation();
  if (v < 1) throw DomainError("C_s(z) as a function of s requires |z| < 1");
  const Constants& c = ws.constants();
  // The integral sees phi_l^q / L_{l+1}, of valuation q^{l+1} v - (l+1).
  for (unsigned l = 0;; ++l) {
    const std::int64_t e = static_cast<std::int64_t>(c.q_pow(l + 1)) * v - static_cast<std::int64_t>(l + 1);
    if (e >= N) break;
    out.c.push_back(z.frob_power(l, N + l + 1));
  }
  return out;
}

bool IdentityReport::holds() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.holds; });
}

IdentityReport integral_of_module(const Workspace& ws, const Laurent& z) {
  const std::int64_t N = ws.precision();
  const std::int64_t req = N - kGuard;
  IdentityReport rep{"int C_s(z) ds = log_C(z) - z at " + arg_text("z", z), {}};
  const Laurent rhs = (log_c(ws, z).value - z).truncated(N);
  rep.checks.push_back(compare("closed form", volkenborn(ws, module_expansion(ws, z)).value, rhs, req));
  const Sampler sample = [&](std::int64_t m, std::int64_t target) {
    return carlitz_module(ws.with_precision(std::max<std::int64_t>(target, 1)), ws.x_pow(m), z).value;
  };
  const IntegralResult lim = volkenborn_limit(ws, sample, N + 16);
  LawCheck chk = compare("limit trace", lim.value, rhs, req);
  chk.note = lim.stabilized_n ? "stabilized at n = " + std::to_string(*lim.stabilized_n) : "not stabilized";
  rep.checks.push_back(std::move(chk));
  return rep;
}

IdentityReport goss_integral(const Workspace& ws, const Poly& a, const Laurent& z) {
  const std::int64_t N = ws.precision();
  const std::int64_t req = N - kGuard;
  const auto field = ws.field();
  IdentityReport rep{"int C_{sa}(z) ds = a log_C(z) - C_a(z) at a = " + a.to_string() + ", " + arg_text("z", z), {}};
  if (!z.is_zero()) require_small(z, "the Goss integral");
  const Laurent w = module_poly(ws, a, z);
  const Laurent lhs = volkenborn(ws, module_expansion(ws, w)).value;
  const Laurent logz = log_c(ws, z).value;
  const Laurent rhs = (Laurent::from_poly(a) * logz - w).truncated(N);

  // Expansion through the monomials x^n of a:
  //   int C_{s x^n}(z) ds = x^n (log_C(z) - z) - sum_{k=1}^n x^{n-k} C_{x^{k-1}}(z)^q.
  Laurent mid = ws.zero();
  for (long n = 0; n <= a.degree(); ++n) {
    const Code an = a.coeff(static_cast<std::size_t>(n));
    if (an == 0) continue;
    Laurent term = ws.x_pow(n) * (logz - z);
    for (long k = 1; k <= n; ++k) {
      const Laurent ck = module_poly(ws, Poly::monomial(field, 1, static_cast<std::size_t>(k - 1)), z);
      term -= ws.x_pow(n - k) * ck.frob_power(1, N);
    }
    mid += term.truncated(N).scale(an);
  }
  mid = mid.truncated(N);
  rep.checks.push_back(compare("integral = a log_C(z) - C_a(z)", lhs, rhs, req));
  rep.checks.push_back(compare("integral = monomial expansion", lhs, mid, req));
  rep.checks.push_back(compare("a log_C(z) - C_a(z) = monomial expansion", rhs, mid, req));
  return rep;
}

IdentityReport log_functional_equation(const Workspace& ws, const Poly& a, const Laurent& z) {
  const std::int64_t N = ws.precision();
  const std::int64_t req = N - kGuard;
  const auto field = ws.field();
  IdentityReport rep{"a log_C(z) = log_C(C_a(z)) at a = " + a.to_string() + ", " + arg_text("z", z), {}};
  if (!z.is_zero()) require_small(z, "the functional equation");
  const Laurent w = module_poly(ws, a, z);
  const Laurent logz = log_c(ws, z).value;
  if (w.is_zero()) {
    rep.checks.push_back(vacuous("functional equation", ws.zero(),
                                 w.is_exact_zero() ? "C_a(z) = 0" : "C_a(z) = 0 within precision"));
  } else {
    rep.checks.push_back(
        compare("functional equation", (Laurent::from_poly(a) * logz).truncated(N), log_c(ws, w).value, req));
  }

  const long top = std::max<long>(1, a.degree());
  for (long n = 1; n <= top; ++n) {
    const std::string name = "e_C(x^n t) - x^n e_C(t) = C_{x^n}(z) - x^n z, n = " + std::to_string(n);
    // t = log_C(z) inverts e_C only where e_C converges at z.
    if (!exp_converges(ws.q(), z)) {
      rep.checks.push_back(vacuous(name, ws.zero(), "skipped: e_C diverges at this valuation"));
      continue;
    }
    const Laurent xn = ws.x_pow(n);
    const Laurent lhs = (exp_c(ws, xn * logz).value - xn * exp_c(ws, logz).value).truncated(N);
    const Laurent rhs =
        (module_poly(ws, Poly::monomial(field, 1, static_cast<std::size_t>(n)), z) - xn * z).truncated(N);
    rep.checks.push_back(compare(name, lhs, rhs, req));
  }
  return rep;
}

IdentityReport exp_log_roundtrip(const Workspace& ws, const Laurent& z) {
  const std::int64_t req = ws.precision() - kGuard;
  IdentityReport rep{"e_C and log_C are mutually inverse at " + arg_text("z", z), {}};
  if (!exp_converges(ws.q(), z)) {
    rep.checks.push_back(vacuous("exp(log z) = z", ws.zero(), "skipped: e_C diverges at this valuation"));
    rep.checks.push_back(vacuous("log(exp z) = z", ws.zero(), "skipped: e_C diverges at this valuation"));
    return rep;
  }
  rep.checks.push_back(compare("exp(log z) = z", exp_c(ws, log_c(ws, z).value).value, z, req));
  rep.checks.push_back(compare("log(exp z) = z", log_c(ws, exp_c(ws, z).value).value, z, req));
  return rep;
}

IdentityReport exp_integral(const Workspace& ws, const Laurent& t) {
  const std::int64_t N = ws.precision();
  const std::int64_t req = N - kGuard;
  IdentityReport rep{"int e_C(st) ds = t - e_C(t) at " + arg_text("t", t), {}};
  if (t.is_zero()) {
    rep.checks.push_back(compare("termwise", ws.zero(), ws.zero(), req));
    return rep;
  }
  if (!exp_converges(ws.q(), t)) throw DomainError("e_C(st) diverges at v(t) = " + std::to_string(t.valuation()));
  const Constants& c = ws.constants();
  const std::int64_t v = t.valuation();
  // s -> e_C(st) = sum_n (t^{q^n} / D_n) s^{q^n}.
  QExpansion u;
  for (int n = 0;; ++n) {
    const std::int64_t qn1 = static_cast<std::int64_t>(c.q_pow(static_cast<unsigned>(n + 1)));
    if (qn1 * v - c.val_D(n + 1) >= N + 1) break;
    const std::int64_t qn = static_cast<std::int64_t>(c.q_pow(static_cast<unsigned>(n)));
    const std::int64_t vd = c.val_D(n);
    u.a.push_back((t.frob_power(static_cast<unsigned>(n), N + 1 + vd) * c.inv_D(n, N + 1 - qn * v)).truncated(N + 1));
  }
  const Laurent rhs = (t - exp_c(ws, t).value).truncated(N);
  rep.checks.push_back(compare("termwise", volkenborn_termwise(ws, u), rhs, req));
  rep.checks.push_back(compare("closed form", volkenborn(ws, to_carlitz(ws, u)).value, rhs, req));
  return rep;
}

}  // namespace fqcalc
