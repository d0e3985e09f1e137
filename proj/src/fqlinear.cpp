#include "fqcalc/fqlinear.hpp"

#include <algorithm>

namespace fqcalc {

Workspace::Workspace(ConstantsPtr constants, std::int64_t precision)
    : constants_(std::move(constants)), precision_(precision) {
  if (precision_ < 1) throw DomainError("precision must be positive");
}

Workspace::Workspace(FieldPtr field, std::int64_t precision, Budget budget)
    : Workspace(Constants::make(std::move(field), budget), precision) {}

Laurent Workspace::bracket(int i) const {
  if (i == 0) return zero();
  return Laurent::from_poly(constants_->bracket(i));
}

Rational to_rational(const Laurent& z) {
  if (!z.is_exact()) throw PrecisionError("exact value required");
  const auto field = z.field();
  if (z.is_zero()) return Rational(Poly(field));
  const std::int64_t v = z.valuation();
  Poly body(field, z.coeffs());
  if (v >= 0) return Rational(body.shift(static_cast<std::size_t>(v)));
  return Rational(body, Poly::monomial(field, 1, static_cast<std::size_t>(-v)));
}

namespace {

std::int64_t target_or(const Workspace& ws, std::optional<std::int64_t> t) { return t.value_or(ws.precision()); }

Laurent frob(const Laurent& z) { return z.frob_power(1); }

// e_n(t) modulo x^te for |t| <= 1.
Laurent e_value(const Workspace& ws, int n, const Laurent& t, std::int64_t te) {
  const Constants& c = ws.constants();
  Laurent acc = Laurent::zero_mod(ws.field(), te);
  if (te <= 0) return acc;
  for (int j = 0; j <= n; ++j) {
    const Poly b = c.binomial(n, j).truncated(static_cast<std::size_t>(te));
    if (b.is_zero()) continue;
    const std::int64_t vb = b.valuation();
    Laurent tj = t.frob_power(static_cast<unsigned>(j), te - vb);
    acc += (Laurent::from_poly(b) * tj).scale(c.sign(n - j)).truncated(te);
  }
  return acc;
}

// e_n(t) for a polynomial t, exactly.
Poly e_exact(const Constants& c, int n, const Poly& t) {
  Poly acc(c.field());
  for (int j = 0; j <= n; ++j) {
    acc += (c.binomial(n, j) * t.frobenius(static_cast<unsigned>(j))).scale(c.sign(n - j));
  }
  return acc;
}

void require_in_O(const Laurent& t) {
  if (!t.is_zero() && t.valuation() < 0) throw DomainError("argument must satisfy |t| <= 1");
}

// Pointwise Delta^{(k)} from values v_i = u(x^i t), i = 0 .. k + extra.
template <class V, class ShiftFn>
std::vector<V> delta_pointwise(std::vector<V> vals, int k, unsigned q, ShiftFn shift) {
  std::int64_t qj = 1;
  for (int j = 1; j <= k; ++j) {
    if (vals.size() < 2) return {};
    std::vector<V> next;
    next.reserve(vals.size() - 1);
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) next.push_back(vals[i + 1] - shift(vals[i], qj));
    vals = std::move(next);
    qj *= q;
  }
  return vals;
}

Laurent shift_laurent(const Laurent& z, std::int64_t e) { return z.shift(e); }

}  // namespace

Laurent basis_value(const Workspace& ws, int n, const Laurent& t, std::optional<std::int64_t> target) {
  const std::int64_t T = target_or(ws, target);
  require_in_O(t);
  if (t.is_exact_zero()) return ws.zero();
  const Constants& c = ws.constants();
  const std::int64_t vd = c.val_D(n);
  const Laurent e = e_value(ws, n, t, T + vd);
  if (n == 0) return e.truncated(T);
  if (e.is_zero()) return Laurent::zero_mod(ws.field(), T);
  return (e * c.inv_D(n, T - e.valuation())).truncated(T);
}

Rational basis_value_exact(const Workspace& ws, int n, const Poly& t) {
  const Constants& c = ws.constants();
  return {e_exact(c, n, t), c.D(n)};
}

Laurent evaluate(const Workspace& ws, const QExpansion& u, const Laurent& t, std::optional<std::int64_t> target) {
  const std::int64_t T = target_or(ws, target);
  require_in_O(t);
  Laurent acc = ws.zero();
  for (std::size_t n = 0; n < u.a.size(); ++n) {
    const Laurent& an = u.a[n];
    if (an.is_exact_zero()) continue;
    const Laurent tn = t.frob_power(static_cast<unsigned>(n), T - an.valuation_bound());
    acc += (an * tn).truncated(T);
  }
  return acc.truncated(T);
}

Laurent evaluate(const Workspace& ws, const CarlitzExpansion& u, const Laurent& t,
                 std::optional<std::int64_t> target) {
  const std::int64_t T = target_or(ws, target);
  require_in_O(t);
  Laurent acc = ws.zero();
  for (std::size_t n = 0; n < u.c.size(); ++n) {
    const Laurent& cn = u.c[n];
    if (cn.is_exact_zero()) continue;
    acc += (cn * basis_value(ws, static_cast<int>(n), t, T - cn.valuation_bound())).truncated(T);
  }
  return acc.truncated(T);
}

Laurent evaluate(const Workspace& ws, const ValueTable& u, const Laurent& t) {
  require_in_O(t);
  const auto L = static_cast<std::int64_t>(u.values.size());
  if (!t.is_exact() && t.precision_or_inf() < L) {
    throw PrecisionError("argument known only modulo x^" + std::to_string(t.precision_or_inf()) +
                         " but the table reaches x^" + std::to_string(L));
  }
  Laurent acc = ws.zero();
  if (t.is_zero()) return acc;
  for (std::int64_t e = t.valuation(); e < t.end(); ++e) {
    const Code z = t.coeff(e);
    if (z == 0) continue;
    if (e >= L) throw PrecisionError("argument has digits beyond the value table");
    acc += u.values[static_cast<std::size_t>(e)].scale(z);
  }
  return acc;
}

CarlitzExpansion to_carlitz(const Workspace& ws, const QExpansion& u) {
  const Constants& c = ws.constants();
  CarlitzExpansion out;
  for (std::size_t n = 0; n < u.a.size(); ++n) {
    Laurent cn = ws.zero();
    for (std::size_t k = n; k < u.a.size(); ++k) {
      if (u.a[k].is_exact_zero()) continue;
      cn += Laurent::from_poly(c.delta_multiplier(static_cast<int>(k), static_cast<int>(n))) * u.a[k];
    }
    out.c.push_back(std::move(cn));
  }
  return out;
}

QExpansion to_qexpansion(const Workspace& ws, const CarlitzExpansion& u) {
  const Constants& c = ws.constants();
  const std::int64_t N = ws.precision();
  QExpansion out;
  for (std::size_t j = 0; j < u.c.size(); ++j) {
    Laurent aj = ws.zero();
    for (std::size_t n = j; n < u.c.size(); ++n) {
      const Laurent& cn = u.c[n];
      if (cn.is_exact_zero()) continue;
      aj += cn * c.linear_coeff(static_cast<int>(n), static_cast<int>(j), N - cn.valuation_bound());
    }
    out.a.push_back(aj.truncated(N));
  }
  return out;
}

ValueTable to_values(const Workspace& ws, const CarlitzExpansion& u, std::size_t length) {
  ValueTable out;
  for (std::size_t m = 0; m < length; ++m) {
    const Laurent t = ws.x_pow(static_cast<std::int64_t>(m));
    Laurent acc = ws.zero();
    for (std::size_t n = 0; n < u.c.size() && n <= m; ++n) {
      const Laurent& cn = u.c[n];
      if (cn.is_exact_zero()) continue;
      acc += cn * basis_value(ws, static_cast<int>(n), t, ws.precision() - cn.valuation_bound());
    }
    out.values.push_back(acc.truncated(ws.precision()));
  }
  return out;
}

ValueTable to_values(const Workspace& ws, const QExpansion& u, std::size_t length) {
  ValueTable out;
  for (std::size_t m = 0; m < length; ++m) {
    out.values.push_back(evaluate(ws, u, ws.x_pow(static_cast<std::int64_t>(m))));
  }
  return out;
}

CarlitzExpansion carlitz_from_values(const Workspace& ws, const ValueTable& u) {
  CarlitzExpansion out;
  const std::int64_t N = ws.precision();
  if (u.values.size() > ws.constants().max_index() + 1) {
    throw BudgetError("value table of length " + std::to_string(u.values.size()) + " needs f_n past the degree cap (max " +
                      std::to_string(ws.constants().max_index()) + ")");
  }
  for (std::size_t m = 0; m < u.values.size(); ++m) {
    const Laurent t = ws.x_pow(static_cast<std::int64_t>(m));
    Laurent cm = u.values[m];
    for (std::size_t n = 0; n < m; ++n) {
      const Laurent& cn = out.c[n];
      if (cn.is_exact_zero()) continue;
      cm -= cn * basis_value(ws, static_cast<int>(n), t, N - cn.valuation_bound());
    }
    out.c.push_back(cm.truncated(N));
  }
  return out;
}

std::vector<Laurent> to_h(const Workspace& ws, const QExpansion& u) {
  std::vector<Laurent> out;
  for (std::size_t n = 0; n < u.a.size(); ++n) {
    out.push_back(Laurent::from_poly(ws.constants().D(static_cast<int>(n))) * u.a[n]);
  }
  return out;
}

QExpansion from_h(const Workspace& ws, const std::vector<Laurent>& ah) {
  QExpansion out;
  const std::int64_t N = ws.precision();
  for (std::size_t n = 0; n < ah.size(); ++n) {
    if (ah[n].is_exact_zero()) {
      out.a.push_back(ws.zero());
      continue;
    }
    const int i = static_cast<int>(n);
    const Laurent inv = ws.constants().inv_D(i, N - ah[n].valuation_bound() + ws.constants().val_D(i));
    out.a.push_back((ah[n] * inv).truncated(N));
  }
  return out;
}

// ---- operators ------------------------------------------------------------

QExpansion delta(const Workspace& ws, const QExpansion& u, int k) {
  if (k < 0) throw DomainError("Delta^(k) needs k >= 0");
  QExpansion out;
  for (std::size_t n = 0; n < u.a.size(); ++n) {
    const int i = static_cast<int>(n);
    if (i < k) {
      out.a.push_back(ws.zero());
    } else {
      out.a.push_back(Laurent::from_poly(ws.constants().delta_multiplier(i, k)) * u.a[n]);
    }
  }
  return out;
}

namespace {

// R_q on Carlitz coordinates: (sum d_i f_i)^q = sum d_i^q (f_i + [i+1] f_{i+1}).
CarlitzExpansion frob_carlitz(const Workspace& ws, const CarlitzExpansion& u) {
  CarlitzExpansion out;
  out.c.assign(u.c.size() + 1, ws.zero());
  for (std::size_t i = 0; i < u.c.size(); ++i) {
    if (u.c[i].is_exact_zero()) continue;
    const Laurent dq = frob(u.c[i]);
    out.c[i] += dq;
    out.c[i + 1] += ws.bracket(static_cast<int>(i) + 1) * dq;
  }
  while (out.c.size() > u.c.size() && out.c.back().is_exact_zero()) out.c.pop_back();
  return out;
}

}  // namespace

CarlitzExpansion delta(const Workspace& ws, const CarlitzExpansion& u, int k) {
  if (k < 0) throw DomainError("Delta^(k) needs k >= 0");
  // Delta^{(k)} f_n = f_{n-k}^{q^k}.
  CarlitzExpansion out;
  out.c.assign(u.c.size(), ws.zero());
  for (std::size_t n = static_cast<std::size_t>(k); n < u.c.size(); ++n) {
    if (u.c[n].is_exact_zero()) continue;
    CarlitzExpansion v = basis_vector(ws, static_cast<int>(n) - k);
    for (int r = 0; r < k; ++r) v = frob_carlitz(ws, v);
    for (std::size_t i = 0; i < v.c.size(); ++i) {
      if (v.c[i].is_exact_zero()) continue;
      if (out.c.size() <= i) out.c.resize(i + 1, ws.zero());
      out.c[i] += u.c[n] * v.c[i];
    }
  }
  return out;
}

ValueTable delta(const Workspace& ws, const ValueTable& u, int k) {
  if (k < 0) throw DomainError("Delta^(k) needs k >= 0");
  return {delta_pointwise(u.values, k, ws.q(), shift_laurent)};
}

QExpansion frobenius(const Workspace& ws, const QExpansion& u) {
  QExpansion out;
  out.a.push_back(ws.zero());
  for (const auto& an : u.a) out.a.push_back(frob(an));
  return out;
}

CarlitzExpansion frobenius(const Workspace& ws, const CarlitzExpansion& u) { return frob_carlitz(ws, u); }

ValueTable frobenius(const Workspace&, const ValueTable& u) {
  ValueTable out;
  for (const auto& v : u.values) out.values.push_back(frob(v));
  return out;
}

QExpansion a_plus(const Workspace& ws, const QExpansion& u) {
  QExpansion out = frobenius(ws, u);
  for (std::size_t n = 0; n < u.a.size(); ++n) out.a[n] -= u.a[n];
  return out;
}

CarlitzExpansion a_plus(const Workspace& ws, const CarlitzExpansion& u) { return sub(frob_carlitz(ws, u), u); }

ValueTable a_plus(const Workspace& ws, const ValueTable& u) {
  ValueTable out = frobenius(ws, u);
  for (std::size_t m = 0; m < u.values.size(); ++m) out.values[m] -= u.values[m];
  return out;
}

QExpansion a_minus(const Workspace& ws, const QExpansion& u) {
  QExpansion out;
  for (std::size_t n = 0; n + 1 < u.a.size(); ++n) {
    out.a.push_back((ws.bracket(static_cast<int>(n) + 1) * u.a[n + 1]).q_root());
  }
  return out;
}

CarlitzExpansion a_minus(const Workspace&, const CarlitzExpansion& u) {
  CarlitzExpansion out;
  for (std::size_t k = 0; k + 1 < u.c.size(); ++k) out.c.push_back(u.c[k + 1].q_root());
  return out;
}

ValueTable a_minus(const Workspace& ws, const ValueTable& u) {
  ValueTable d = delta(ws, u, 1);
  for (auto& v : d.values) v = v.q_root();
  return d;
}

CarlitzExpansion add(const CarlitzExpansion& a, const CarlitzExpansion& b) {
  const CarlitzExpansion& longer = a.c.size() >= b.c.size() ? a : b;
  const CarlitzExpansion& shorter = a.c.size() >= b.c.size() ? b : a;
  CarlitzExpansion out = longer;
  for (std::size_t i = 0; i < shorter.c.size(); ++i) out.c[i] += shorter.c[i];
  return out;
}

CarlitzExpansion sub(const CarlitzExpansion& a, const CarlitzExpansion& b) {
  CarlitzExpansion nb;
  for (const auto& v : b.c) nb.c.push_back(-v);
  return add(a, nb);
}

CarlitzExpansion scale(const CarlitzExpansion& a, const Laurent& s) {
  CarlitzExpansion out;
  for (const auto& v : a.c) out.c.push_back(v * s);
  return out;
}

QExpansion sub(const QExpansion& a, const QExpansion& b) {
  QExpansion out = a;
  if (!b.a.empty() && out.a.size() < b.a.size()) out.a.resize(b.a.size(), Laurent::exact_zero(b.a[0].field()));
  for (std::size_t i = 0; i < b.a.size(); ++i) out.a[i] -= b.a[i];
  return out;
}

namespace {

template <class Vec>
int first_diff(const Vec& a, const Vec& b, std::int64_t n) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const bool ha = i < a.size(), hb = i < b.size();
    if (ha && hb) {
      if (!a[i].agrees_to(b[i], n)) return static_cast<int>(i);
    } else {
      const auto& v = ha ? a[i] : b[i];
      if (!v.agrees_to(Laurent::exact_zero(v.field()), n)) return static_cast<int>(i);
    }
  }
  return -1;
}

}  // namespace

int first_difference(const CarlitzExpansion& a, const CarlitzExpansion& b, std::int64_t n) {
  return first_diff(a.c, b.c, n);
}

int first_difference(const QExpansion& a, const QExpansion& b, std::int64_t n) { return first_diff(a.a, b.a, n); }

CarlitzExpansion basis_vector(const Workspace& ws, int n) {
  if (n < 0) throw DomainError("basis index must be nonnegative");
  CarlitzExpansion out;
  out.c.assign(static_cast<std::size_t>(n) + 1, ws.zero());
  out.c.back() = ws.one();
  return out;
}

// ---- Taylor recovery ------------------------------------------------------

Laurent taylor_quotient(const Workspace& ws, const QExpansion& u, int n, std::int64_t m,
                        std::optional<std::int64_t> target) {
  if (n < 0 || m < 0) throw DomainError("taylor_quotient needs n, m >= 0");
  const std::int64_t N = target_or(ws, target);
  const auto qn = static_cast<std::int64_t>(ws.constants().q_pow(static_cast<unsigned>(n)));
  const std::int64_t T = N + m * qn;
  std::vector<Laurent> vals;
  for (int i = 0; i <= n; ++i) {
    // u(x^s) = sum_k a_k x^{s q^k} modulo x^T.
    const std::int64_t s = m + i;
    Laurent acc = Laurent::zero_mod(ws.field(), T);
    std::int64_t sqk = s;
    for (std::size_t k = 0; k < u.a.size(); ++k) {
      if (!u.a[k].is_exact_zero() && sqk < T) acc += u.a[k].shift(sqk).truncated(T);
      if (sqk >= T) break;
      sqk *= ws.q();
    }
    vals.push_back(std::move(acc));
  }
  auto d = delta_pointwise(std::move(vals), n, ws.q(), shift_laurent);
  return d.at(0).shift(-m * qn).truncated(N);
}

TaylorTrace taylor_recover(const Workspace& ws, const QExpansion& u, int n, std::int64_t m_max) {
  const std::int64_t N = ws.precision();
  Laurent expected = static_cast<std::size_t>(n) < u.a.size()
                         ? Laurent::from_poly(ws.constants().D(n)) * u.a[static_cast<std::size_t>(n)]
                         : ws.zero();
  TaylorTrace tr{n, {}, std::nullopt, std::nullopt, expected, false};
  for (std::int64_t m = 1; m <= m_max + 1; ++m) {
    tr.quotients.push_back(taylor_quotient(ws, u, n, m));
    const std::size_t s = tr.quotients.size();
    if (s >= 2 && tr.quotients[s - 2].agrees_to(tr.quotients[s - 1], N)) {
      tr.stabilized_m = m - 1;
      tr.value = tr.quotients[s - 2];
      break;
    }
  }
  if (tr.value) tr.matches = tr.value->agrees_to(expected, N);
  return tr;
}

// ---- smoothness -----------------------------------------------------------

Laurent dk_apply(const Workspace& ws, const CarlitzExpansion& u, int k, const Laurent& t,
                 std::optional<std::int64_t> target) {
  if (k < 0) throw DomainError("D^k needs k >= 0");
  if (t.is_zero()) throw DomainError("D^k u(t) is defined for t != 0");
  require_in_O(t);
  const std::int64_t N = target_or(ws, target);
  const auto qk = static_cast<std::int64_t>(ws.constants().q_pow(static_cast<unsigned>(k)));
  const std::int64_t T = N + qk * t.valuation();
  std::vector<Laurent> vals;
  for (int i = 0; i <= k; ++i) vals.push_back(evaluate(ws, u, t.shift(i), T));
  const Laurent d = delta_pointwise(std::move(vals), k, ws.q(), shift_laurent).at(0);
  return divide(d, t.frob_power(static_cast<unsigned>(k)), N);
}

Rational dk_apply_exact(const Workspace& ws, const CarlitzExpansion& u, int k, std::int64_t m) {
  if (k < 0 || m < 0) throw DomainError("D^k needs k, m >= 0");
  const Constants& c = ws.constants();
  const auto field = ws.field();
  int top = -1;
  std::int64_t emin = 0;
  for (std::size_t n = 0; n < u.c.size(); ++n) {
    if (u.c[n].is_exact_zero()) continue;
    if (!u.c[n].is_exact()) throw PrecisionError("dk_apply_exact needs exact coefficients");
    top = static_cast<int>(n);
    emin = std::min(emin, u.c[n].valuation());
  }
  if (top < 0) return Rational(Poly(field));
  // Common denominator x^{-emin} D_top.
  const Poly& Dtop = c.D(top);
  std::vector<Poly> nums;
  for (int i = 0; i <= k; ++i) {
    const Poly t = Poly::monomial(field, 1, static_cast<std::size_t>(m + i));
    Poly acc(field);
    for (int n = 0; n <= top; ++n) {
      const Laurent& cn = u.c[static_cast<std::size_t>(n)];
      if (cn.is_exact_zero()) continue;
      const Poly body = Poly(field, cn.coeffs()).shift(static_cast<std::size_t>(cn.valuation() - emin));
      acc += body * e_exact(c, n, t) * Dtop.divide_exact(c.D(n));
    }
    nums.push_back(std::move(acc));
  }
  auto shift_poly = [](const Poly& p, std::int64_t e) { return p.shift(static_cast<std::size_t>(e)); };
  const Poly num = delta_pointwise(std::move(nums), k, ws.q(), shift_poly).at(0);
  const auto qk = static_cast<std::size_t>(c.q_pow(static_cast<unsigned>(k)));
  Poly den = Dtop.shift(static_cast<std::size_t>(-emin) + static_cast<std::size_t>(m) * qk);
  return {num, den};
}

AbsValue dk_norm(const Workspace& ws, const CarlitzExpansion& u, int k) {
  if (k < 0) throw DomainError("D^k needs k >= 0");
  const auto qk = static_cast<std::int64_t>(ws.constants().q_pow(static_cast<unsigned>(k)));
  AbsValue best = AbsValue::of_zero();
  for (std::size_t n = static_cast<std::size_t>(k); n < u.c.size(); ++n) {
    if (u.c[n].is_exact_zero()) continue;
    best = max(best, u.c[n].abs() * AbsValue::power((static_cast<std::int64_t>(n) - k) * qk));
  }
  return best;
}

// ---- analyticity ----------------------------------------------------------

namespace {

// |z|, or the bound q^{-precision} when z vanishes within precision.
AbsValue abs_or_bound(const Laurent& z) {
  if (z.is_zero_within_precision()) return AbsValue::power(-z.precision_or_inf());
  return z.abs();
}

}  // namespace

std::vector<BoundRow> analyticity_forward(const Workspace& ws, const QExpansion& u) {
  const CarlitzExpansion cu = to_carlitz(ws, u);
  std::vector<BoundRow> rows;
  for (std::size_t n = 0; n < u.a.size(); ++n) {
    AbsValue sup = AbsValue::of_zero();
    for (std::size_t k = n; k < u.a.size(); ++k) sup = max(sup, abs_or_bound(u.a[k]));
    const AbsValue rhs = sup * AbsValue::power(-ws.constants().val_D(static_cast<int>(n)));
    const AbsValue lhs = abs_or_bound(cu.c[n]);
    rows.push_back({static_cast<int>(n), lhs, rhs, lhs <= rhs});
  }
  return rows;
}

std::vector<BoundRow> analyticity_backward(const Workspace& ws, const CarlitzExpansion& u) {
  const QExpansion qu = to_qexpansion(ws, u);
  std::vector<BoundRow> rows;
  for (std::size_t n = 0; n < u.c.size(); ++n) {
    AbsValue sup = AbsValue::of_zero();
    for (std::size_t k = n; k < u.c.size(); ++k) {
      sup = max(sup, abs_or_bound(u.c[k]) * AbsValue::power(ws.constants().val_D(static_cast<int>(k))));
    }
    const AbsValue lhs = abs_or_bound(qu.a[n]);
    rows.push_back({static_cast<int>(n), lhs, sup, lhs <= sup});
  }
  return rows;
}

std::int64_t s_exponent(unsigned q, int n, int j) {
  if (j < 0 || n < j) throw DomainError("s_{nj} needs 0 <= j <= n");
  if (n == j) return 0;
  std::int64_t qj = 1;
  for (int i = 0; i < j; ++i) qj *= q;
  std::int64_t s = static_cast<std::int64_t>(n - j) * qj;
  std::int64_t qi = qj;
  for (int i = j; i < n; ++i) {
    s -= qi;
    qi *= q;
  }
  return s;
}

SSignReport verify_s_signs(const Constants& c, int n_max) {
  SSignReport r;
  for (int n = 1; n <= n_max; ++n) {
    for (int j = 0; j < n; ++j) {
      const std::int64_t s = s_exponent(c.q(), n, j);
      ++r.checked;
      if (s >= 0) r.all_negative = false;
      if (s > 0) r.all_nonpositive = false;
      if (s == 0) {
        ++r.zero_count;
        if (n != j + 1) r.zeros_adjacent = false;
      }
      if (static_cast<unsigned>(n) <= c.max_index() && -c.binomial(n, j).valuation() != s) r.matches_binomial = false;
    }
  }
  return r;
}

}  // namespace fqcalc
