#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fqcalc/field.hpp"
#include "fqcalc/poly.hpp"

namespace fqcalc {

/// Saturating "infinity" used for exact precision and the valuation of 0.
inline constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

inline std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= kInfinity || b >= kInfinity) return kInfinity;
  return a + b;
}

/// ceil(a / b) for b > 0, any sign of a.
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

/// floor(a / b) for b > 0, any sign of a.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

/// |z| = q^exponent, or zero.
struct AbsValue {
  bool zero = false;
  std::int64_t exponent = 0;

  static AbsValue of_zero() { return {true, 0}; }
  static AbsValue power(std::int64_t e) { return {false, e}; }

  std::strong_ordering operator<=>(const AbsValue& o) const {
    if (zero || o.zero) return static_cast<int>(!zero) <=> static_cast<int>(!o.zero);
    return exponent <=> o.exponent;
  }
  bool operator==(const AbsValue& o) const { return (*this <=> o) == std::strong_ordering::equal; }

  AbsValue operator*(const AbsValue& o) const {
    if (zero || o.zero) return of_zero();
    return power(exponent + o.exponent);
  }

  /// "0", "1", "q^-3".
  std::string to_string() const;
};

inline AbsValue max(const AbsValue& a, const AbsValue& b) { return a < b ? b : a; }

/// Truncated formal Laurent series in x over F_q.
///
/// A series is either exact (a Laurent polynomial; no precision) or known
/// modulo x^N. The stored coefficients cover exponents valuation() .. N-1
/// (inexact) or valuation() .. top degree (exact). Exact zero and
/// zero-within-precision are distinct states.
class Laurent {
 public:
  explicit Laurent(FieldPtr field);  // exact zero

  static Laurent exact_zero(FieldPtr field) { return Laurent(std::move(field)); }
  static Laurent zero_mod(FieldPtr field, std::int64_t precision);
  static Laurent monomial(FieldPtr field, Code c, std::int64_t e);
  static Laurent x_power(FieldPtr field, std::int64_t e) { return monomial(std::move(field), 1, e); }
  static Laurent constant(FieldPtr field, Code c) { return monomial(std::move(field), c, 0); }
  /// x^shift * p, exact.
  static Laurent from_poly(const Poly& p, std::int64_t shift = 0);
  /// Coefficients for exponents v, v+1, ...; `precision` nullopt means exact.
  static Laurent from_coeffs(FieldPtr field, std::int64_t v, std::vector<Code> coeffs,
                             std::optional<std::int64_t> precision);

  const FieldPtr& field() const { return field_; }
  bool is_exact() const { return prec_ >= kInfinity; }
  std::optional<std::int64_t> precision() const;
  /// kInfinity when exact.
  std::int64_t precision_or_inf() const { return prec_; }

  bool is_exact_zero() const { return is_exact() && c_.empty(); }
  bool is_zero_within_precision() const { return !is_exact() && c_.empty(); }
  /// Exact zero or zero within precision.
  bool is_zero() const { return c_.empty(); }

  /// Throws PrecisionError for zero-within-precision and FieldError for exact zero.
  std::int64_t valuation() const;
  /// Exact valuation when known, precision for zero-within-precision, kInfinity for exact zero.
  std::int64_t valuation_bound() const { return val_; }
  /// |z| = q^{-v}; throws PrecisionError on zero-within-precision.
  AbsValue abs() const;

  /// Coefficient of x^e; throws PrecisionError for e beyond the precision.
  Code coeff(std::int64_t e) const;
  /// Highest stored exponent + 1 (== precision for inexact series).
  std::int64_t end() const { return c_.empty() ? val_ : val_ + static_cast<std::int64_t>(c_.size()); }
  const std::vector<Code>& coeffs() const { return c_; }

  Laurent operator+(const Laurent& b) const;
  Laurent operator-(const Laurent& b) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& b) const;
  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
  Laurent& operator*=(const Laurent& b) { return *this = *this * b; }

  Laurent scale(Code c) const;
  /// Multiply by x^k (k may be negative).
  Laurent shift(std::int64_t k) const;
  /// Reduce modulo x^n (no-op when already less precise).
  Laurent truncated(std::int64_t n) const;

  /// z^{q^j}. The optional target bounds the work when only z^{q^j} mod x^target is needed.
  Laurent frob_power(unsigned j, std::int64_t target = kInfinity) const;
  /// Inverse of frob_power(1); DomainError when z is not a q-th power in K.
  Laurent q_root() const;
  /// 1/z modulo x^target.
  Laurent inverse(std::int64_t target) const;
  Laurent pow(std::uint64_t e) const;

  /// Present iff exact with nonnegative valuation (or exact zero).
  std::optional<Poly> as_poly() const;

  /// Precision to which *this and b are known to coincide: kInfinity when the
  /// difference is exactly zero, otherwise the first exponent at which they
  /// differ or stop being known.
  std::int64_t agreement(const Laurent& b) const;
  bool agrees_to(const Laurent& b, std::int64_t n) const { return agreement(b) >= n; }
  /// Structural equality (same state, same coefficients, same precision).
  bool operator==(const Laurent& b) const;

  /// Ascending powers: "x^-1 + 1 + x + 2*x^3 (mod x^64)".
  std::string to_string() const;

 private:
  Laurent(FieldPtr field, std::int64_t v, std::vector<Code> c, std::int64_t prec);
  void normalize();
  void check_same(const Laurent& b) const;

  FieldPtr field_;
  std::int64_t val_ = kInfinity;
  std::vector<Code> c_;
  std::int64_t prec_ = kInfinity;
};

/// a / b modulo x^target.
Laurent divide(const Laurent& a, const Laurent& b, std::int64_t target);

/// Power series inverse of a unit given by its coefficients, modulo x^n.
std::vector<Code> inverse_series(const FqContext& f, const std::vector<Code>& unit, std::size_t n);

}  // namespace fqcalc
