#pragma once

// F_q-linear functions on O in three interchangeable representations:
//   QExpansion       u(t) = sum a_n t^{q^n}
//   CarlitzExpansion u(t) = sum c_n f_n(t)
//   ValueTable       u(x^m), m = 0 .. L-1
// plus the difference operators, the ladder operators a+ and a-, Taylor
// coefficient recovery, the smoothness norms and the analyticity bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqcalc/basis.hpp"
#include "fqcalc/constants.hpp"
#include "fqcalc/laurent.hpp"
#include "fqcalc/rational.hpp"

namespace fqcalc {

/// Raw monomial coefficients: u(t) = sum a[n] t^{q^n}. The normalized
/// coefficients of u = sum a^H_n t^{q^n}/D_n are a^H_n = D_n a[n]; see to_h().
struct QExpansion {
  std::vector<Laurent> a;
};

/// Fourier-Carlitz coefficients: u = sum c[n] f_n.
struct CarlitzExpansion {
  std::vector<Laurent> c;
};

/// values[m] = u(x^m).
struct ValueTable {
  std::vector<Laurent> values;
};

class Workspace {
 public:
  explicit Workspace(ConstantsPtr constants, std::int64_t precision = 64);
  Workspace(FieldPtr field, std::int64_t precision = 64, Budget budget = {});

  const Constants& constants() const { return *constants_; }
  const ConstantsPtr& constants_ptr() const { return constants_; }
  const FieldPtr& field() const { return constants_->field(); }
  unsigned q() const { return constants_->q(); }
  std::int64_t precision() const { return precision_; }
  Workspace with_precision(std::int64_t n) const { return Workspace(constants_, n); }

  Laurent zero() const { return Laurent::exact_zero(field()); }
  Laurent one() const { return Laurent::constant(field(), 1); }
  Laurent x_pow(std::int64_t e) const { return Laurent::x_power(field(), e); }
  Laurent from_poly(const Poly& p) const { return Laurent::from_poly(p); }
  Laurent bracket(int i) const;  // [0] = 0

 private:
  ConstantsPtr constants_;
  std::int64_t precision_;
};

/// Exact rational value of an exact Laurent polynomial.
Rational to_rational(const Laurent& z);

// ---- evaluation -----------------------------------------------------------

/// f_n(t) modulo x^target (default: working precision); |t| <= 1.
Laurent basis_value(const Workspace& ws, int n, const Laurent& t, std::optional<std::int64_t> target = std::nullopt);
/// f_n(t) = e_n(t)/D_n exactly.
Rational basis_value_exact(const Workspace& ws, int n, const Poly& t);

Laurent evaluate(const Workspace& ws, const QExpansion& u, const Laurent& t,
                 std::optional<std::int64_t> target = std::nullopt);
Laurent evaluate(const Workspace& ws, const CarlitzExpansion& u, const Laurent& t,
                 std::optional<std::int64_t> target = std::nullopt);
/// sum zeta_n u(x^n) over the digits of t; t must not have known digits past the table.
Laurent evaluate(const Workspace& ws, const ValueTable& u, const Laurent& t);

// ---- conversions ----------------------------------------------------------

/// c_n = sum_{k>=n} (D_k / D_{k-n}^{q^n}) a_k.
CarlitzExpansion to_carlitz(const Workspace& ws, const QExpansion& u);
/// a_j = sum_{n>=j} c_n (-1)^{n-j} / (D_j L_{n-j}^{q^j}).
QExpansion to_qexpansion(const Workspace& ws, const CarlitzExpansion& u);
ValueTable to_values(const Workspace& ws, const CarlitzExpansion& u, std::size_t length);
ValueTable to_values(const Workspace& ws, const QExpansion& u, std::size_t length);
/// Triangular solve c_m = u(x^m) - sum_{n<m} c_n f_n(x^m), using f_m(x^m) = 1.
CarlitzExpansion carlitz_from_values(const Workspace& ws, const ValueTable& u);

/// a^H_n = D_n a_n.
std::vector<Laurent> to_h(const Workspace& ws, const QExpansion& u);
QExpansion from_h(const Workspace& ws, const std::vector<Laurent>& ah);

// ---- operators ------------------------------------------------------------

/// Delta^{(k)}.
QExpansion delta(const Workspace& ws, const QExpansion& u, int k);
CarlitzExpansion delta(const Workspace& ws, const CarlitzExpansion& u, int k);
/// Pointwise recursion; the result is k entries shorter.
ValueTable delta(const Workspace& ws, const ValueTable& u, int k);

/// R_q u = u^q.
QExpansion frobenius(const Workspace& ws, const QExpansion& u);
CarlitzExpansion frobenius(const Workspace& ws, const CarlitzExpansion& u);
ValueTable frobenius(const Workspace& ws, const ValueTable& u);

/// a+ = R_q - I.
QExpansion a_plus(const Workspace& ws, const QExpansion& u);
CarlitzExpansion a_plus(const Workspace& ws, const CarlitzExpansion& u);
ValueTable a_plus(const Workspace& ws, const ValueTable& u);

/// a- = q-th root after Delta; DomainError when a root does not exist in K.
QExpansion a_minus(const Workspace& ws, const QExpansion& u);
CarlitzExpansion a_minus(const Workspace& ws, const CarlitzExpansion& u);
ValueTable a_minus(const Workspace& ws, const ValueTable& u);

CarlitzExpansion add(const CarlitzExpansion& a, const CarlitzExpansion& b);
CarlitzExpansion sub(const CarlitzExpansion& a, const CarlitzExpansion& b);
CarlitzExpansion scale(const CarlitzExpansion& a, const Laurent& s);
QExpansion sub(const QExpansion& a, const QExpansion& b);
/// First index at which the two expansions differ modulo x^n, or -1.
int first_difference(const CarlitzExpansion& a, const CarlitzExpansion& b, std::int64_t n);
int first_difference(const QExpansion& a, const QExpansion& b, std::int64_t n);

/// Unit vector f_n.
CarlitzExpansion basis_vector(const Workspace& ws, int n);

// ---- Taylor recovery ------------------------------------------------------

/// Delta^{(n)} u(x^m) / x^{m q^n}, by the pointwise recursion, modulo x^target.
Laurent taylor_quotient(const Workspace& ws, const QExpansion& u, int n, std::int64_t m,
                        std::optional<std::int64_t> target = std::nullopt);

struct TaylorTrace {
  int n = 0;
  std::vector<Laurent> quotients;       // m = 1, 2, ...
  std::optional<std::int64_t> stabilized_m;  // first m with quotient(m) = quotient(m+1) mod x^N
  std::optional<Laurent> value;         // quotient at stabilized_m
  Laurent expected;                     // a^H_n
  bool matches = false;                 // value = expected mod x^N
};

/// Sweep m = 1 .. m_max.
TaylorTrace taylor_recover(const Workspace& ws, const QExpansion& u, int n, std::int64_t m_max);

// ---- smoothness -----------------------------------------------------------

/// D^k u(t) = t^{-q^k} Delta^{(k)} u(t) modulo x^target; t != 0.
Laurent dk_apply(const Workspace& ws, const CarlitzExpansion& u, int k, const Laurent& t,
                 std::optional<std::int64_t> target = std::nullopt);
/// D^k u(x^m) exactly; u must have exact coefficients.
Rational dk_apply_exact(const Workspace& ws, const CarlitzExpansion& u, int k, std::int64_t m);
/// max_{n>=k} q^{(n-k) q^k} |c_n|.
AbsValue dk_norm(const Workspace& ws, const CarlitzExpansion& u, int k);

// ---- analyticity ----------------------------------------------------------

struct BoundRow {
  int n = 0;
  AbsValue lhs;
  AbsValue rhs;
  bool holds = false;
};

/// |c_n| <= q^{-(q^n-1)/(q-1)} max_{k>=n} |a_k| after converting u forward.
std::vector<BoundRow> analyticity_forward(const Workspace& ws, const QExpansion& u);
/// |a_n| <= max_{k>=n} |c_k / D_k| after converting u backward.
std::vector<BoundRow> analyticity_backward(const Workspace& ws, const CarlitzExpansion& u);

/// s_{nj} with |D_n / (D_j L_{n-j}^{q^j})| = q^{s_{nj}}.
std::int64_t s_exponent(unsigned q, int n, int j);

struct SSignReport {
  int checked = 0;
  bool all_negative = true;
  bool all_nonpositive = true;
  int zero_count = 0;            // pairs with s_{nj} = 0
  bool zeros_adjacent = true;    // every zero sits at n = j + 1
  bool matches_binomial = true;  // s_{nj} = -v([n j]) wherever the binomial is within the cap
};
SSignReport verify_s_signs(const Constants& c, int n_max);

}  // namespace fqcalc
