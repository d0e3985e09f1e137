#pragma once

// Carlitz polynomial families in the function argument t: e_i, f_i, G_j,
// g_j, h_j, tau_m. Coefficients live in F_q(x) and are kept exact as
// polynomials over a common denominator.

#include <cstdint>
#include <string>
#include <vector>

#include "fqcalc/constants.hpp"
#include "fqcalc/rational.hpp"

namespace fqcalc {

/// sum_k num[k] t^k / den.
struct TPoly {
  std::vector<Poly> num;
  Poly den;

  explicit TPoly(FieldPtr field);  // zero
  TPoly(std::vector<Poly> n, Poly d);
  static TPoly constant(const Rational& c);
  static TPoly t(FieldPtr field);

  const FieldPtr& field() const { return den.field(); }
  long degree() const { return static_cast<long>(num.size()) - 1; }
  bool is_zero() const { return num.empty(); }
  Rational coeff(std::size_t k) const;

  TPoly operator+(const TPoly& b) const;
  TPoly operator-(const TPoly& b) const;
  TPoly operator*(const TPoly& b) const;
  TPoly scale(const Rational& c) const;
  TPoly pow(unsigned e) const;
  /// Equality as rational functions.
  bool operator==(const TPoly& b) const;

  /// Exact value at a polynomial argument.
  Rational evaluate(const Poly& t) const;
  std::string to_string() const;

 private:
  void trim();
};

/// sum_j num[j] t^{q^j} / den.
struct LinearTPoly {
  std::vector<Poly> num;
  Poly den;

  const FieldPtr& field() const { return den.field(); }
  Rational coeff(std::size_t j) const { return {num[j], den}; }
  TPoly to_tpoly(unsigned q) const;
  Rational evaluate(const Poly& t) const;
  std::string to_string() const;
};

/// prod over all m in F_q[x] with deg m < i of (t - m). Enumerates q^i polynomials.
TPoly e_product(const Constants& c, int i);
/// sum_j (-1)^{i-j} [i j] t^{q^j}.
LinearTPoly e_binomial(const Constants& c, int i);
/// e_i / D_i.
LinearTPoly f(const Constants& c, int i);

/// prod e_i^{alpha_i} over the base-q digits of j (monic of degree j).
TPoly G(const Constants& c, std::uint64_t j);
/// prod over digits: e_i^{alpha_i} when alpha_i < q-1, e_i^{q-1} - D_i^{q-1} otherwise.
TPoly g(const Constants& c, std::uint64_t j);
/// G_j / Gamma_j.
TPoly h(const Constants& c, std::uint64_t j);
/// prod_{i<m} (f_i^{q-1} - 1).
TPoly tau_product(const Constants& c, int m);
/// g_{q^m - 1} / Gamma_{q^m - 1}.
TPoly tau_from_g(const Constants& c, int m);
/// g_{q^m-1-j}(0) / Gamma_{q^m-1-j} for j = 0 .. q^m - 1.
std::vector<Rational> tau_sigma(const Constants& c, int m);

/// Coefficients beta_j with p = sum beta_j h_j, by back-substitution against the monic G_j.
std::vector<Rational> to_h_basis(const Constants& c, const TPoly& p);
/// sum beta_j h_j.
TPoly from_h_basis(const Constants& c, const std::vector<Rational>& beta);
/// Max |beta_j| over the h-expansion.
AbsValue sup_norm(const Constants& c, const TPoly& p);
AbsValue sup_norm(const std::vector<Rational>& coeffs);

/// sum over monic t of degree m of g_l(t) G_k(t).
Poly monic_sum(const Constants& c, std::uint64_t l, std::uint64_t k, int m);
/// All of the above for l, k < q^m: entry [l][k].
std::vector<std::vector<Poly>> monic_sum_table(const Constants& c, int m);
/// (-1)^m D_m / L_m when k + l = q^m - 1, else 0.
Poly monic_sum_expected(const Constants& c, std::uint64_t l, std::uint64_t k, int m);

}  // namespace fqcalc
