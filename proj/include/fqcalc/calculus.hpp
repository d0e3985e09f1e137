#pragma once

// The indefinite sum S (right inverse of a- with Sf(1) = 0) and the
// Volkenborn-type integral  int f = lim Sf(x^n)/x^n = (Sf)'(0).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fqcalc/fqlinear.hpp"

namespace fqcalc {

/// One side-by-side identity check. `agreement` is the exponent up to which
/// lhs and rhs coincide (kInfinity when identical); `required` is the
/// exponent they must reach.
struct LawCheck {
  std::string name;
  Laurent lhs;
  Laurent rhs;
  std::int64_t agreement = 0;
  std::int64_t required = 0;
  bool holds = false;
  /// Degenerate instance: the law is trivially true and carries no information.
  bool vacuous = false;
  std::string note;
};

/// Compare two sides; holds iff they agree modulo x^required.
LawCheck compare(std::string name, Laurent lhs, Laurent rhs, std::int64_t required);

/// Default guard band subtracted from the working precision in identity checks.
inline constexpr std::int64_t kGuard = 2;

struct IntegralResult {
  enum class Method { ClosedForm, LimitSequence };
  Laurent value;
  Method method = Method::ClosedForm;
  /// Sf(x^n)/x^n for n = 1 .. n_max (limit method only).
  std::vector<Laurent> trace;
  /// First n from which the trace is constant modulo x^N through n_max.
  std::optional<std::int64_t> stabilized_n;
};

std::string to_string(IntegralResult::Method m);

/// c_0 = 0, c_{l+1} = phi_l^q.
CarlitzExpansion indefinite_sum(const Workspace& ws, const CarlitzExpansion& f);
/// u(1) = 0, u(x^n) = x u(x^{n-1}) + f(x^{n-1})^q; same length as f.
ValueTable indefinite_sum_values(const Workspace& ws, const ValueTable& f);

/// sum_l phi_l^q (-1)^{l+1} / L_{l+1}.
IntegralResult volkenborn(const Workspace& ws, const CarlitzExpansion& f);
/// sum_n a_n^q * (-1/[n+1]).
Laurent volkenborn_termwise(const Workspace& ws, const QExpansion& f);

/// Values of f at x^m, modulo x^target.
using Sampler = std::function<Laurent(std::int64_t m, std::int64_t target)>;

/// Trace Sf(x^n)/x^n = sum_{k<n} x^{-1-k} f(x^k)^q for n = 1 .. n_max.
IntegralResult volkenborn_limit(const Workspace& ws, const Sampler& f, std::int64_t n_max);
IntegralResult volkenborn_limit(const Workspace& ws, const CarlitzExpansion& f, std::int64_t n_max);
IntegralResult volkenborn_limit(const Workspace& ws, const QExpansion& f, std::int64_t n_max);

/// Q-expansion of t -> f(g t) for a polynomial g.
QExpansion substitute(const Workspace& ws, const QExpansion& f, const Poly& g);

/// The invariance laws of the integral on f: the x-shift law, its iterates
/// for n <= 3, the twisted scalar rule for c in {x, 1+x} and, when f vanishes
/// on all polynomials of degree < n, int f(gt) = g int f for deg g <= n.
std::vector<LawCheck> invariance_check(const Workspace& ws, const CarlitzExpansion& f);

}  // namespace fqcalc
