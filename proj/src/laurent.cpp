#include "fqcalc/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace fqcalc {

std::string AbsValue::to_string() const {
  if (zero) return "0";
  if (exponent == 0) return "1";
  if (exponent == 1) return "q";
  return "q^" + std::to_string(exponent);
}

Laurent::Laurent(FieldPtr field) : field_(std::move(field)) {}

Laurent::Laurent(FieldPtr field, std::int64_t v, std::vector<Code> c, std::int64_t prec)
    : field_(std::move(field)), val_(v), c_(std::move(c)), prec_(prec) {
  normalize();
}

void Laurent::normalize() {
  if (prec_ < kInfinity) {
    const std::int64_t known = prec_ - val_;
    if (known <= 0) {
      c_.clear();
    } else if (static_cast<std::int64_t>(c_.size()) > known) {
      c_.resize(static_cast<std::size_t>(known));
    } else {
      c_.resize(static_cast<std::size_t>(known), 0);
    }
  } else {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    val_ = prec_;
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    val_ += static_cast<std::int64_t>(lead);
  }
}

void Laurent::check_same(const Laurent& b) const {
  if (field_.get() != b.field_.get() && !field_->same_as(*b.field_)) {
    throw FieldError("Laurent series over different fields");
  }
}

Laurent Laurent::zero_mod(FieldPtr field, std::int64_t precision) {
  return Laurent(std::move(field), precision, {}, precision);
}

Laurent Laurent::monomial(FieldPtr field, Code c, std::int64_t e) {
  return Laurent(std::move(field), e, {c}, kInfinity);
}

Laurent Laurent::from_poly(const Poly& p, std::int64_t shift) {
  return Laurent(p.field(), shift, p.coeffs(), kInfinity);
}

Laurent Laurent::from_coeffs(FieldPtr field, std::int64_t v, std::vector<Code> coeffs,
                             std::optional<std::int64_t> precision) {
  for (Code c : coeffs) {
    if (c >= field->q()) throw FieldError("coefficient code out of range");
  }
  return Laurent(std::move(field), v, std::move(coeffs), precision.value_or(kInfinity));
}

std::optional<std::int64_t> Laurent::precision() const {
  if (is_exact()) return std::nullopt;
  return prec_;
}

std::int64_t Laurent::valuation() const {
  if (is_exact_zero()) throw FieldError("valuation of exact zero is infinite");
  if (is_zero_within_precision()) throw PrecisionError("valuation undetermined at this precision");
  return val_;
}

AbsValue Laurent::abs() const {
  if (is_exact_zero()) return AbsValue::of_zero();
  if (is_zero_within_precision()) throw PrecisionError("valuation undetermined at this precision");
  return AbsValue::power(-val_);
}

Code Laurent::coeff(std::int64_t e) const {
  if (e >= prec_) throw PrecisionError("coefficient of x^" + std::to_string(e) + " beyond precision");
  if (c_.empty() || e < val_) return 0;
  const std::int64_t i = e - val_;
  return i < static_cast<std::int64_t>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Code{0};
}

namespace {

Laurent add_impl(const Laurent& a, const Laurent& b, bool negate_b) {
  const FqContext& f = *a.field();
  const std::int64_t prec = std::min(a.precision_or_inf(), b.precision_or_inf());
  const std::int64_t lo = std::min(a.valuation_bound(), b.valuation_bound());
  if (lo >= prec) {
    return prec >= kInfinity ? Laurent::exact_zero(a.field()) : Laurent::zero_mod(a.field(), prec);
  }
  std::int64_t hi = prec;
  if (prec >= kInfinity) {
    hi = lo;
    if (!a.is_zero()) hi = std::max(hi, a.end());
    if (!b.is_zero()) hi = std::max(hi, b.end());
  }
  std::vector<Code> out(static_cast<std::size_t>(std::max<std::int64_t>(hi - lo, 0)), 0);
  auto accumulate = [&](const Laurent& s, bool neg) {
    const auto& c = s.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::int64_t e = s.valuation_bound() + static_cast<std::int64_t>(i);
      if (e >= hi) break;
      auto& slot = out[static_cast<std::size_t>(e - lo)];
      slot = neg ? f.sub(slot, c[i]) : f.add(slot, c[i]);
    }
  };
  accumulate(a, false);
  accumulate(b, negate_b);
  return Laurent::from_coeffs(a.field(), lo, std::move(out),
                              prec >= kInfinity ? std::nullopt : std::optional<std::int64_t>(prec));
}

}  // namespace

Laurent Laurent::operator+(const Laurent& b) const {
  check_same(b);
  return add_impl(*this, b, false);
}

Laurent Laurent::operator-(const Laurent& b) const {
  check_same(b);
  return add_impl(*this, b, true);
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.c_) c = field_->neg(c);
  return r;
}

Laurent Laurent::operator*(const Laurent& b) const {
  check_same(b);
  if (is_exact_zero() || b.is_exact_zero()) return exact_zero(field_);
  const std::int64_t va = val_, vb = b.val_;
  const std::int64_t prec = std::min(sat_add(prec_, vb), sat_add(b.prec_, va));
  if (is_zero() || b.is_zero()) return zero_mod(field_, prec);
  std::vector<Code> ac = c_, bc = b.c_;
  if (prec < kInfinity) {
    const std::int64_t len = prec - va - vb;
    if (len <= 0) return zero_mod(field_, prec);
    if (static_cast<std::int64_t>(ac.size()) > len) ac.resize(static_cast<std::size_t>(len));
    if (static_cast<std::int64_t>(bc.size()) > len) bc.resize(static_cast<std::size_t>(len));
  }
  return Laurent(field_, va + vb, multiply_codes(*field_, ac, bc), prec);
}

Laurent Laurent::scale(Code c) const {
  if (c == 0) return is_exact() ? exact_zero(field_) : zero_mod(field_, prec_);
  Laurent r = *this;
  for (auto& x : r.c_) x = field_->mul(x, c);
  return r;
}

Laurent Laurent::shift(std::int64_t k) const {
  Laurent r = *this;
  if (!r.c_.empty() || !is_exact()) r.val_ += k;
  if (!is_exact()) r.prec_ += k;
  return r;
}

Laurent Laurent::truncated(std::int64_t n) const {
  if (n >= prec_) return *this;
  return Laurent(field_, std::min(val_, n), c_.empty() ? std::vector<Code>{} : c_, n);
}

Laurent Laurent::frob_power(unsigned j, std::int64_t target) const {
  if (j == 0) return target < prec_ ? truncated(target) : *this;
  std::int64_t qj = 1;
  for (unsigned i = 0; i < j; ++i) {
    if (qj > kInfinity / field_->q()) throw BudgetError("Frobenius power exponent overflow");
    qj *= field_->q();
  }
  // Only coefficients below ceil(target / q^j) matter.
  Laurent src = target < kInfinity ? truncated(ceil_div(target, qj)) : *this;
  const std::int64_t prec = src.prec_ >= kInfinity ? kInfinity : src.prec_ * qj;
  if (src.c_.empty()) return prec >= kInfinity ? exact_zero(field_) : zero_mod(field_, prec);
  if (src.val_ > kInfinity / qj || -src.val_ > kInfinity / qj) throw BudgetError("Frobenius power exponent overflow");
  const std::int64_t top = static_cast<std::int64_t>(src.c_.size() - 1) * qj + 1;
  if (prec >= kInfinity && top > (std::int64_t{1} << 28)) throw BudgetError("Frobenius power too large");
  std::vector<Code> out(static_cast<std::size_t>(top), 0);
  for (std::size_t i = 0; i < src.c_.size(); ++i) out[i * static_cast<std::size_t>(qj)] = src.c_[i];
  Laurent r(field_, src.val_ * qj, std::move(out), prec);
  return target < r.prec_ ? r.truncated(target) : r;
}

Laurent Laurent::q_root() const {
  const std::int64_t q = field_->q();
  const std::int64_t prec = is_exact() ? kInfinity : ceil_div(prec_, q);
  if (c_.empty()) return is_exact() ? exact_zero(field_) : zero_mod(field_, prec);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0 && floor_div(val_ + static_cast<std::int64_t>(i), q) * q != val_ + static_cast<std::int64_t>(i)) {
      throw DomainError("not a q-th power in K");
    }
  }
  const std::int64_t v = floor_div(val_, q);
  std::vector<Code> out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto idx = static_cast<std::size_t>((val_ + static_cast<std::int64_t>(i)) / q - v);
    if (out.size() <= idx) out.resize(idx + 1, 0);
    out[idx] = c_[i];
  }
  return Laurent(field_, v, std::move(out), prec);
}

std::vector<Code> inverse_series(const FqContext& f, const std::vector<Code>& unit, std::size_t n) {
  if (n == 0) return {};
  if (unit.empty() || unit[0] == 0) throw InvariantError("inverse_series needs a unit");
  std::vector<Code> g{f.inv(unit[0])};
  std::size_t k = 1;
  while (k < n) {
    const std::size_t k2 = std::min(2 * k, n);
    std::vector<Code> u(unit.begin(), unit.begin() + static_cast<std::ptrdiff_t>(std::min(unit.size(), k2)));
    std::vector<Code> ug = multiply_codes(f, u, g);
    ug.resize(k2, 0);
    // h = 1 - u g, whose low k coefficients vanish.
    std::vector<Code> h(k2, 0);
    for (std::size_t i = k; i < k2; ++i) h[i] = f.neg(ug[i]);
    std::vector<Code> hi(h.begin() + static_cast<std::ptrdiff_t>(k), h.end());
    std::vector<Code> corr = multiply_codes(f, g, hi);
    g.resize(k2, 0);
    for (std::size_t i = 0; i + k < k2 && i < corr.size(); ++i) g[i + k] = f.add(g[i + k], corr[i]);
    k = k2;
  }
  return g;
}

Laurent Laurent::inverse(std::int64_t target) const {
  if (is_exact_zero()) throw FieldError("division by exact zero");
  if (is_zero_within_precision()) throw PrecisionError("cannot invert a series that is zero within precision");
  const std::int64_t v = val_;
  if (is_exact() && c_.size() == 1) {
    return Laurent(field_, -v, {field_->inv(c_[0])}, kInfinity).truncated(target);
  }
  if (target >= kInfinity) throw PrecisionError("inverse is not a Laurent polynomial; give a target precision");
  if (target <= -v) return zero_mod(field_, target);
  const std::int64_t rel = target + v;
  if (!is_exact() && rel > prec_ - v) {
    throw PrecisionError("insufficient precision to invert to x^" + std::to_string(target) + " (achievable x^" +
                         std::to_string(prec_ - 2 * v) + ")");
  }
  std::vector<Code> unit = c_;
  if (static_cast<std::int64_t>(unit.size()) > rel) unit.resize(static_cast<std::size_t>(rel));
  return Laurent(field_, -v, inverse_series(*field_, unit, static_cast<std::size_t>(rel)), target);
}

Laurent Laurent::pow(std::uint64_t e) const {
  Laurent result = constant(field_, 1);
  Laurent base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::optional<Poly> Laurent::as_poly() const {
  if (!is_exact()) return std::nullopt;
  if (c_.empty()) return Poly(field_);
  if (val_ < 0) return std::nullopt;
  std::vector<Code> out(static_cast<std::size_t>(val_), 0);
  out.insert(out.end(), c_.begin(), c_.end());
  return Poly(field_, std::move(out));
}

std::int64_t Laurent::agreement(const Laurent& b) const {
  const Laurent d = *this - b;
  if (d.is_exact_zero()) return kInfinity;
  return d.val_;
}

bool Laurent::operator==(const Laurent& b) const {
  return field_->same_as(*b.field_) && prec_ == b.prec_ && c_ == b.c_ && (c_.empty() || val_ == b.val_);
}

std::string Laurent::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const std::int64_t e = val_ + static_cast<std::int64_t>(i);
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i] == 1;
    if (e == 0) {
      os << coeff_text(*field_, c_[i]);
      continue;
    }
    if (!unit) os << coeff_text(*field_, c_[i]) << "*";
    os << "x";
    if (e != 1) os << "^" << e;
  }
  if (first) os << "0";
  if (!is_exact()) os << " (mod x^" << prec_ << ")";
  return os.str();
}

Laurent divide(const Laurent& a, const Laurent& b, std::int64_t target) {
  if (a.is_exact_zero()) return Laurent::exact_zero(a.field());
  const std::int64_t va = a.valuation_bound();
  const std::int64_t need = target >= kInfinity ? kInfinity : target - va;
  if (need >= kInfinity) throw PrecisionError("exact division needs a finite target precision");
  return (a * b.inverse(need)).truncated(target);
}

}  // namespace fqcalc
