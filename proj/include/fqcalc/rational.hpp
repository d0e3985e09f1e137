#pragma once

#include <string>

#include "fqcalc/laurent.hpp"
#include "fqcalc/poly.hpp"

namespace fqcalc {

/// Exact element num/den of F_q(x); not reduced.
struct Rational {
  Poly num;
  Poly den;

  explicit Rational(Poly n) : num(std::move(n)), den(Poly::constant(num.field(), 1)) {}
  Rational(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw FieldError("rational with zero denominator");
  }

  bool is_zero() const { return num.is_zero(); }
  std::int64_t valuation() const {
    if (num.is_zero()) throw FieldError("valuation of exact zero is infinite");
    return num.valuation() - den.valuation();
  }
  AbsValue abs() const { return is_zero() ? AbsValue::of_zero() : AbsValue::power(-valuation()); }

  Rational operator+(const Rational& b) const { return {num * b.den + b.num * den, den * b.den}; }
  Rational operator-(const Rational& b) const { return {num * b.den - b.num * den, den * b.den}; }
  Rational operator*(const Rational& b) const { return {num * b.num, den * b.den}; }
  Rational operator/(const Rational& b) const {
    if (b.is_zero()) throw FieldError("division by zero rational");
    return {num * b.den, den * b.num};
  }
  Rational operator-() const { return {-num, den}; }
  bool operator==(const Rational& b) const { return num * b.den == b.num * den; }

  /// Lowest terms with a monic denominator.
  Rational reduced() const {
    if (num.is_zero()) return {num, Poly::constant(num.field(), 1)};
    const Poly g = Poly::gcd(num, den);
    const Code lead = g.is_zero() ? Code{1} : den.divide_exact(g).leading();
    const Code s = num.field()->inv(lead);
    return {num.divide_exact(g).scale(s), den.divide_exact(g).scale(s)};
  }

  /// Expansion in K modulo x^prec.
  Laurent to_laurent(std::int64_t prec) const {
    if (num.is_zero()) return Laurent::exact_zero(num.field());
    if (den.degree() == 0) return Laurent::from_poly(num.scale(num.field()->inv(den.coeffs()[0])));
    return divide(Laurent::from_poly(num), Laurent::from_poly(den), prec);
  }

  std::string to_string() const {
    if (den.degree() == 0 && den.coeffs()[0] == 1) return num.to_string();
    return "(" + num.to_string() + ")/(" + den.to_string() + ")";
  }
};

}  // namespace fqcalc
