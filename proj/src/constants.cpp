#include "fqcalc/constants.hpp"

#include <string>

namespace fqcalc {

namespace {
enum InverseKind { kInvD = 0, kInvL = 1, kInvBracket = 2 };
}

Constants::Constants(FieldPtr field, Budget budget) : field_(std::move(field)), budget_(budget) {
  const std::uint64_t q = field_->q();
  std::uint64_t qi = q;
  unsigned i = 0;
  while (true) {
    const std::uint64_t next = i + 1;
    if (qi > budget_.max_degree || next * qi > budget_.max_degree) break;
    ++i;
    qi *= q;
  }
  max_index_ = i;
}

std::uint64_t Constants::q_pow(unsigned i) const {
  std::uint64_t r = 1;
  for (unsigned k = 0; k < i; ++k) {
    if (r > (std::uint64_t{1} << 62) / q()) throw BudgetError("q^" + std::to_string(i) + " overflows");
    r *= q();
  }
  return r;
}

void Constants::check_index(int i) const {
  if (i < 0) throw DomainError("index must be nonnegative");
  if (static_cast<unsigned>(i) > max_index_) {
    throw BudgetError("index " + std::to_string(i) + " exceeds the degree cap (max " + std::to_string(max_index_) +
                      " for q = " + std::to_string(q()) + ")");
  }
}

const Poly& Constants::bracket(int i) const {
  if (i <= 0) throw DomainError("bracket [i] needs i >= 1");
  if (q_pow(static_cast<unsigned>(i)) > budget_.max_degree) {
    throw BudgetError("bracket [" + std::to_string(i) + "] exceeds the degree cap for q = " + std::to_string(q()));
  }
  std::lock_guard lock(mu_);
  auto it = bracket_.find(i);
  if (it != bracket_.end()) return it->second;
  return bracket_.emplace(i, Poly::binomial(field_, q_pow(i), 1)).first->second;
}

const Poly& Constants::D(int i) const {
  check_index(i);
  std::lock_guard lock(mu_);
  auto it = D_.find(i);
  if (it != D_.end()) return it->second;
  Poly v = i == 0 ? Poly::constant(field_, 1) : bracket(i) * D(i - 1).frobenius(1);
  return D_.emplace(i, std::move(v)).first->second;
}

const Poly& Constants::L(int i) const {
  check_index(i);
  std::lock_guard lock(mu_);
  auto it = L_.find(i);
  if (it != L_.end()) return it->second;
  Poly v = i == 0 ? Poly::constant(field_, 1) : bracket(i) * L(i - 1);
  return L_.emplace(i, std::move(v)).first->second;
}

std::vector<unsigned> Constants::digits(std::uint64_t j) const {
  std::vector<unsigned> out;
  while (j > 0) {
    out.push_back(static_cast<unsigned>(j % q()));
    j /= q();
  }
  return out;
}

Poly Constants::gamma(std::uint64_t j) const {
  const auto a = digits(j);
  Poly out = Poly::constant(field_, 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    out *= D(static_cast<int>(i)).pow(a[i]);
  }
  return out;
}

const Poly& Constants::binomial(int i, int j) const {
  if (j < 0 || j > i) throw DomainError("Carlitz binomial needs 0 <= j <= i");
  check_index(i);
  std::lock_guard lock(mu_);
  auto key = std::make_pair(i, j);
  auto it = binom_.find(key);
  if (it != binom_.end()) return it->second;

  // D_j = prod_{k=1}^{j} (x^{q^j} - x^{q^{j-k}}), L_{i-j}^{q^j} = prod_{k=1}^{i-j} (x^{q^{k+j}} - x^{q^j}).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> factors;
  for (int k = 1; k <= j; ++k) factors.emplace_back(q_pow(j), q_pow(j - k));
  for (int k = 1; k <= i - j; ++k) factors.emplace_back(q_pow(k + j), q_pow(j));
  Poly v = D(i);
  for (auto [a, b] : factors) {
    auto quo = v.divide_by_binomial(a, b);
    if (!quo) {
      throw InvariantError("Carlitz binomial [" + std::to_string(i) + " " + std::to_string(j) + "] is not integral");
    }
    v = std::move(*quo);
  }
  return binom_.emplace(key, std::move(v)).first->second;
}

Poly Constants::delta_multiplier(int n, int k) const {
  if (n < 0 || k < 0) throw DomainError("delta_multiplier needs n, k >= 0");
  if (n < k) return Poly(field_);
  Poly out = Poly::constant(field_, 1);
  const std::uint64_t qn = q_pow(static_cast<unsigned>(n));
  for (int i = 0; i < k; ++i) out *= Poly::binomial(field_, qn, q_pow(static_cast<unsigned>(i)));
  return out;
}

std::int64_t Constants::val_D(int i) const {
  return static_cast<std::int64_t>((q_pow(static_cast<unsigned>(i)) - 1) / (q() - 1));
}

Laurent Constants::cached_inverse(int kind, int i, const Poly& p, std::int64_t prec) const {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(kind, i);
  auto it = inv_.find(key);
  if (it != inv_.end() && it->second.precision_or_inf() >= prec) return it->second.truncated(prec);
  Laurent v = Laurent::from_poly(p).inverse(prec);
  inv_.insert_or_assign(key, v);
  return v;
}

Laurent Constants::inv_D(int i, std::int64_t prec) const { return cached_inverse(kInvD, i, D(i), prec); }
Laurent Constants::inv_L(int i, std::int64_t prec) const { return cached_inverse(kInvL, i, L(i), prec); }
Laurent Constants::inv_bracket(int i, std::int64_t prec) const {
  return cached_inverse(kInvBracket, i, bracket(i), prec);
}

std::int64_t Constants::linear_coeff_val(int n, int j) const {
  return -val_D(j) - static_cast<std::int64_t>(n - j) * static_cast<std::int64_t>(q_pow(static_cast<unsigned>(j)));
}

Laurent Constants::linear_coeff(int n, int j, std::int64_t prec) const {
  if (j < 0 || j > n) throw DomainError("linear_coeff needs 0 <= j <= n");
  check_index(n);
  std::lock_guard lock(mu_);
  auto key = std::make_pair(n, j);
  auto it = lin_.find(key);
  if (it != lin_.end() && it->second.precision_or_inf() >= prec) return it->second.truncated(prec);

  const std::int64_t vden = -linear_coeff_val(n, j);
  const std::int64_t need = prec + 2 * vden;
  if (need <= 0) return Laurent::zero_mod(field_, prec);
  const auto cut = static_cast<std::size_t>(need);
  const auto qj = q_pow(static_cast<unsigned>(j));
  Poly lq = L(n - j).truncated((cut + qj - 1) / qj).frobenius(static_cast<unsigned>(j)).truncated(cut);
  Poly den = D(j).mul_trunc(lq, cut);
  Laurent den_series = Laurent::from_coeffs(field_, 0, den.coeffs(), need);
  Laurent v = den_series.inverse(prec).scale(sign(n - j));
  lin_.insert_or_assign(key, v);
  return v;
}

}  // namespace fqcalc
