#pragma once

// The Carlitz module C_s(z), log_C and e_C, and the integral identities that
// tie them to the Volkenborn-type integral.

#include <cstdint>
#include <string>
#include <vector>

#include "fqcalc/calculus.hpp"

namespace fqcalc {

struct SpecialValue {
  Laurent value;
  std::string function;  // "C_s", "log_C", "e_C", ...
  std::string argument;  // e.g. "s = x^2 + 1, z = x^3"
  std::int64_t precision = 0;
};

/// sum_{i <= deg s} f_i(s) z^{q^i}; a finite sum, any z.
SpecialValue carlitz_module(const Workspace& ws, const Poly& s, const Laurent& z);
/// sum_i f_i(s) z^{q^i} for s in O; requires |z| < 1.
SpecialValue carlitz_module(const Workspace& ws, const Laurent& s, const Laurent& z);

/// sum (-1)^n z^{q^n} / L_n; requires |z| < 1.
SpecialValue log_c(const Workspace& ws, const Laurent& z);
/// sum z^{q^n} / D_n; requires v(z) > 1/(q-1), i.e. |z| < 1 for q > 2 and
/// |z| <= q^-2 for q = 2 (the series diverges at v(z) = 1 there).
SpecialValue exp_c(const Workspace& ws, const Laurent& z);
/// True when exp_c accepts z.
bool exp_converges(unsigned q, const Laurent& z);

/// s -> C_s(z) as the Carlitz expansion with coefficients z^{q^i}, truncated
/// once the integral no longer sees the tail.
CarlitzExpansion module_expansion(const Workspace& ws, const Laurent& z);

struct IdentityReport {
  std::string name;
  std::vector<LawCheck> checks;
  bool holds() const;
};

/// int C_s(z) ds = log_C(z) - z. The left side runs through the closed-form
/// integral and, independently, through the limit trace over C_{x^n}(z).
IdentityReport integral_of_module(const Workspace& ws, const Laurent& z);
/// int C_{sa}(z) ds = a log_C(z) - C_a(z); for a = x^n also the expansion
/// x^n (log_C(z) - z) - sum_k x^{n-k} C_{x^{k-1}}(z)^q.
IdentityReport goss_integral(const Workspace& ws, const Poly& a, const Laurent& z);
/// a log_C(z) = log_C(C_a(z)), flagged vacuous when C_a(z) vanishes; plus
/// e_C(x^n t) - x^n e_C(t) = C_{x^n}(z) - x^n z with t = log_C(z) when e_C
/// converges at t.
IdentityReport log_functional_equation(const Workspace& ws, const Poly& a, const Laurent& z);
/// exp_c(log_c(z)) = z and log_c(exp_c(z)) = z.
IdentityReport exp_log_roundtrip(const Workspace& ws, const Laurent& z);
/// int e_C(st) ds = t - e_C(t).
IdentityReport exp_integral(const Workspace& ws, const Laurent& t);

}  // namespace fqcalc
