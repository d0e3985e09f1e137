#pragma once

// The Carlitz constants [i], D_i, L_i, Gamma_j and the Carlitz binomial
// coefficients, as exact polynomials in F_q[x], memoized per field.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "fqcalc/field.hpp"
#include "fqcalc/laurent.hpp"
#include "fqcalc/poly.hpp"

namespace fqcalc {

struct Budget {
  /// Largest admissible x-degree of a constant (deg D_i = i q^i).
  std::uint64_t max_degree = std::uint64_t{1} << 17;
  /// Largest number of polynomials a brute-force enumeration may visit.
  std::uint64_t enumeration = std::uint64_t{1} << 20;
};

class Constants {
 public:
  explicit Constants(FieldPtr field, Budget budget = {});
  static std::shared_ptr<const Constants> make(FieldPtr field, Budget budget = {}) {
    return std::make_shared<const Constants>(std::move(field), budget);
  }

  const FieldPtr& field() const { return field_; }
  unsigned q() const { return field_->q(); }
  const Budget& budget() const { return budget_; }

  /// q^i; BudgetError past 2^62.
  std::uint64_t q_pow(unsigned i) const;
  /// Largest i with deg D_i <= budget().max_degree.
  unsigned max_index() const { return max_index_; }

  /// x^{q^i} - x, i >= 1.
  const Poly& bracket(int i) const;
  const Poly& D(int i) const;
  const Poly& L(int i) const;
  /// prod D_i^{alpha_i} over the base-q digits of j.
  Poly gamma(std::uint64_t j) const;
  /// D_i / (D_j L_{i-j}^{q^j}), by exact division.
  const Poly& binomial(int i, int j) const;
  /// Base-q digits alpha_0, alpha_1, ... of j; empty for j = 0.
  std::vector<unsigned> digits(std::uint64_t j) const;

  /// D_n / D_{n-k}^{q^k} = prod_{i<k} (x^{q^n} - x^{q^i}); zero when n < k.
  Poly delta_multiplier(int n, int k) const;

  /// v(D_i) = (q^i - 1)/(q - 1).
  std::int64_t val_D(int i) const;
  /// v(L_i) = i.
  std::int64_t val_L(int i) const { return i; }

  /// 1/D_i, 1/L_i, 1/[i] modulo x^prec.
  Laurent inv_D(int i, std::int64_t prec) const;
  Laurent inv_L(int i, std::int64_t prec) const;
  Laurent inv_bracket(int i, std::int64_t prec) const;

  /// Coefficient of t^{q^j} in f_n: (-1)^{n-j} / (D_j L_{n-j}^{q^j}), modulo x^prec.
  Laurent linear_coeff(int n, int j, std::int64_t prec) const;
  /// Valuation of linear_coeff(n, j): -v(D_j) - (n-j) q^j.
  std::int64_t linear_coeff_val(int n, int j) const;

  /// (-1)^k in F_q.
  Code sign(std::int64_t k) const { return (k % 2 == 0) ? Code{1} : field_->neg(1); }

 private:
  void check_index(int i) const;
  Laurent cached_inverse(int kind, int i, const Poly& p, std::int64_t prec) const;

  FieldPtr field_;
  Budget budget_;
  unsigned max_index_ = 0;

  mutable std::recursive_mutex mu_;
  mutable std::map<int, Poly> bracket_;
  mutable std::map<int, Poly> D_;
  mutable std::map<int, Poly> L_;
  mutable std::map<std::pair<int, int>, Poly> binom_;
  mutable std::map<std::pair<int, int>, Laurent> inv_;
  mutable std::map<std::pair<int, int>, Laurent> lin_;
};

using ConstantsPtr = std::shared_ptr<const Constants>;

}  // namespace fqcalc
