#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqcalc/field.hpp"

namespace fqcalc {

/// Exact polynomial in F_q[x], dense, lowest degree first. The zero
/// polynomial is the empty coefficient vector; otherwise the highest stored
/// coefficient is nonzero.
class Poly {
 public:
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Code> coeffs);

  static Poly constant(FieldPtr field, Code c);
  static Poly monomial(FieldPtr field, Code c, std::size_t k);
  static Poly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }
  /// x^a - x^b.
  static Poly binomial(FieldPtr field, std::size_t a, std::size_t b);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  long valuation() const;
  Code coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Code{0}; }
  Code leading() const { return c_.empty() ? Code{0} : c_.back(); }
  const std::vector<Code>& coeffs() const { return c_; }
  std::size_t nonzero_terms() const;

  Poly operator+(const Poly& b) const;
  Poly operator-(const Poly& b) const;
  Poly operator-() const;
  Poly operator*(const Poly& b) const;
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scale(Code c) const;
  /// Multiply by x^k.
  Poly shift(std::size_t k) const;
  /// Divide by x^k; the k lowest coefficients must vanish.
  Poly unshift(std::size_t k) const;
  /// p(x)^{q^j} = p(x^{q^j}), since coefficients are fixed by Frobenius.
  Poly frobenius(unsigned j = 1) const;
  Poly pow(std::uint64_t e) const;
  /// p mod x^n.
  Poly truncated(std::size_t n) const;
  /// Product modulo x^n.
  Poly mul_trunc(const Poly& b, std::size_t n) const;

  /// Euclidean division by a nonzero divisor: {quotient, remainder}.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  /// Throws InvariantError when d does not divide *this.
  Poly divide_exact(const Poly& d) const;
  /// Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);
  /// Leading coefficient 1; the zero polynomial is returned unchanged.
  Poly monic() const;
  /// Exact division by x^a - x^b (a > b); nullopt when not divisible.
  std::optional<Poly> divide_by_binomial(std::size_t a, std::size_t b) const;

  /// p(s) by Horner.
  Poly compose(const Poly& s) const;

  bool operator==(const Poly& b) const;
  bool operator!=(const Poly& b) const { return !(*this == b); }

  /// Descending powers, e.g. "x^3 + 2*x" or "(u+1)*x^2 + 1".
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  void check_same(const Poly& b) const;

  FieldPtr field_;
  std::vector<Code> c_;
};

/// Coefficient string used in polynomial and series text: "2", "(u+1)".
std::string coeff_text(const FqContext& f, Code c);

/// Low-level product of coefficient vectors (Karatsuba above a threshold).
std::vector<Code> multiply_codes(const FqContext& f, const std::vector<Code>& a, const std::vector<Code>& b);

/// Every polynomial of degree < d (including 0), or every monic polynomial
/// of exact degree d. Throws BudgetError when q^d exceeds `budget`.
std::vector<Poly> poly_enumerate(const FieldPtr& field, unsigned d, bool monic_only,
                                 std::uint64_t budget = std::uint64_t{1} << 20);

}  // namespace fqcalc
