#include "fqcalc/poly.hpp"

#include <algorithm>
#include <sstream>

namespace fqcalc {

namespace {

constexpr std::size_t kKaratsubaThreshold = 32;
constexpr std::size_t kSparseTerms = 16;

template <bool Prime>
struct Arith {
  const FqContext& f;
  unsigned p;

  Code add(Code a, Code b) const {
    if constexpr (Prime) {
      const unsigned s = static_cast<unsigned>(a) + b;
      return static_cast<Code>(s >= p ? s - p : s);
    } else {
      return f.add(a, b);
    }
  }
  Code sub(Code a, Code b) const {
    if constexpr (Prime) {
      return static_cast<Code>(a >= b ? a - b : a + p - b);
    } else {
      return f.sub(a, b);
    }
  }
};

// out[0 .. na+nb-1) += a * b, with nb small.
template <bool Prime>
void schoolbook(const Arith<Prime>& ar, const Code* a, std::size_t na, const Code* b, std::size_t nb, Code* out) {
  if constexpr (Prime) {
    const std::size_t n = na + nb - 1;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t jlo = k >= na ? k - na + 1 : 0;
      const std::size_t jhi = std::min(k, nb - 1);
      std::uint64_t acc = out[k];
      for (std::size_t j = jlo; j <= jhi; ++j) {
        acc += static_cast<std::uint64_t>(a[k - j]) * b[j];
      }
      out[k] = static_cast<Code>(acc % ar.p);
    }
  } else {
    for (std::size_t j = 0; j < nb; ++j) {
      if (b[j] == 0) continue;
      for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        out[i + j] = ar.f.add(out[i + j], ar.f.mul(a[i], b[j]));
      }
    }
  }
}

template <bool Prime>
void kmul(const Arith<Prime>& ar, const Code* a, std::size_t na, const Code* b, std::size_t nb, Code* out) {
  if (na == 0 || nb == 0) return;
  if (na < nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  if (nb <= kKaratsubaThreshold) {
    schoolbook(ar, a, na, b, nb, out);
    return;
  }
  if (na >= 2 * nb) {
    for (std::size_t off = 0; off < na; off += nb) {
      kmul(ar, a + off, std::min(nb, na - off), b, nb, out + off);
    }
    return;
  }
  const std::size_t m = (na + 1) / 2;
  const std::size_t na1 = na - m;
  const std::size_t nb0 = std::min(m, nb);
  const std::size_t nb1 = nb - nb0;
  if (nb1 == 0) {
    kmul(ar, a, m, b, nb, out);
    kmul(ar, a + m, na1, b, nb, out + m);
    return;
  }
  std::vector<Code> z0(2 * m - 1, 0);
  std::vector<Code> z2(na1 + nb1 - 1, 0);
  kmul(ar, a, m, b, nb0, z0.data());
  kmul(ar, a + m, na1, b + m, nb1, z2.data());
  std::vector<Code> sa(a, a + m);
  for (std::size_t i = 0; i < na1; ++i) sa[i] = ar.add(sa[i], a[m + i]);
  std::vector<Code> sb(b, b + nb0);
  for (std::size_t i = 0; i < nb1; ++i) sb[i] = ar.add(sb[i], b[m + i]);
  std::vector<Code> z1(sa.size() + sb.size() - 1, 0);
  kmul(ar, sa.data(), sa.size(), sb.data(), sb.size(), z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = ar.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = ar.sub(z1[i], z2[i]);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = ar.add(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) out[m + i] = ar.add(out[m + i], z1[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * m + i] = ar.add(out[2 * m + i], z2[i]);
}

std::vector<Code> sparse_mul(const FqContext& f, const std::vector<Code>& sparse, const std::vector<Code>& dense) {
  std::vector<Code> out(sparse.size() + dense.size() - 1, 0);
  for (std::size_t i = 0; i < sparse.size(); ++i) {
    const Code s = sparse[i];
    if (s == 0) continue;
    Code* o = out.data() + i;
    if (s == 1) {
      for (std::size_t j = 0; j < dense.size(); ++j) {
        if (dense[j] != 0) o[j] = f.add(o[j], dense[j]);
      }
    } else {
      for (std::size_t j = 0; j < dense.size(); ++j) {
        if (dense[j] != 0) o[j] = f.add(o[j], f.mul(s, dense[j]));
      }
    }
  }
  return out;
}

std::size_t count_nonzero(const std::vector<Code>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Code c) { return c != 0; }));
}

}  // namespace

std::vector<Code> multiply_codes(const FqContext& f, const std::vector<Code>& a, const std::vector<Code>& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) > kSparseTerms) {
    if (count_nonzero(a) <= kSparseTerms) return sparse_mul(f, a, b);
    if (count_nonzero(b) <= kSparseTerms) return sparse_mul(f, b, a);
  }
  std::vector<Code> out(a.size() + b.size() - 1, 0);
  if (f.gamma() == 1) {
    Arith<true> ar{f, f.p()};
    kmul(ar, a.data(), a.size(), b.data(), b.size(), out.data());
  } else {
    Arith<false> ar{f, f.p()};
    kmul(ar, a.data(), a.size(), b.data(), b.size(), out.data());
  }
  return out;
}

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw FieldError("polynomial without a field");
}

Poly::Poly(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) throw FieldError("polynomial without a field");
  trim();
}

Poly Poly::constant(FieldPtr field, Code c) { return Poly(std::move(field), std::vector<Code>{c}); }

Poly Poly::monomial(FieldPtr field, Code c, std::size_t k) {
  std::vector<Code> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::binomial(FieldPtr field, std::size_t a, std::size_t b) {
  std::vector<Code> v(std::max(a, b) + 1, 0);
  v[a] = field->add(v[a], 1);
  v[b] = field->sub(v[b], 1);
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& b) const {
  if (field_ != b.field_ && !field_->same_as(*b.field_)) throw FieldError("polynomials over different fields");
}

long Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<long>(i);
  }
  return -1;
}

std::size_t Poly::nonzero_terms() const { return count_nonzero(c_); }

Poly Poly::operator+(const Poly& b) const {
  check_same(b);
  std::vector<Code> out(std::max(c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->add(coeff(i), b.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& b) const {
  check_same(b);
  std::vector<Code> out(std::max(c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->sub(coeff(i), b.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator-() const {
  std::vector<Code> out(c_);
  for (auto& c : out) c = field_->neg(c);
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& b) const {
  check_same(b);
  return Poly(field_, multiply_codes(*field_, c_, b.c_));
}

Poly Poly::scale(Code s) const {
  if (s == 0) return Poly(field_);
  std::vector<Code> out(c_);
  for (auto& c : out) c = field_->mul(c, s);
  return Poly(field_, std::move(out));
}

Poly Poly::shift(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<Code> out(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
  return Poly(field_, std::move(out));
}

Poly Poly::unshift(std::size_t k) const {
  if (is_zero()) return *this;
  for (std::size_t i = 0; i < std::min(k, c_.size()); ++i) {
    if (c_[i] != 0) throw InvariantError("unshift: polynomial not divisible by x^" + std::to_string(k));
  }
  if (k >= c_.size()) return Poly(field_);
  return Poly(field_, std::vector<Code>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

Poly Poly::frobenius(unsigned j) const {
  if (is_zero() || j == 0) return *this;
  std::size_t step = 1;
  for (unsigned i = 0; i < j; ++i) step *= field_->q();
  std::vector<Code> out((c_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * step] = c_[i];
  return Poly(field_, std::move(out));
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result = constant(field_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::truncated(std::size_t n) const {
  if (c_.size() <= n) return *this;
  return Poly(field_, std::vector<Code>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Poly Poly::mul_trunc(const Poly& b, std::size_t n) const {
  return (truncated(n) * b.truncated(n)).truncated(n);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  check_same(d);
  if (d.is_zero()) throw FieldError("polynomial division by zero");
  if (degree() < d.degree()) return {Poly(field_), *this};
  std::vector<Code> r(c_);
  const std::size_t dd = d.c_.size() - 1;
  const Code lead_inv = field_->inv(d.c_.back());
  std::vector<Code> quo(c_.size() - dd, 0);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Code t = field_->mul(r[k + dd], lead_inv);
    quo[k] = t;
    if (t == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) {
      if (d.c_[i] != 0) r[k + i] = field_->sub(r[k + i], field_->mul(t, d.c_[i]));
    }
  }
  return {Poly(field_, std::move(quo)), Poly(field_, std::move(r))};
}

Poly Poly::divide_exact(const Poly& d) const {
  auto [quo, rem] = divmod(d);
  if (!rem.is_zero()) throw InvariantError("inexact polynomial division");
  return quo;
}

std::optional<Poly> Poly::divide_by_binomial(std::size_t a, std::size_t b) const {
  if (a <= b) throw FieldError("divide_by_binomial expects x^a - x^b with a > b");
  if (is_zero()) return *this;
  for (std::size_t i = 0; i < std::min(b, c_.size()); ++i) {
    if (c_[i] != 0) return std::nullopt;
  }
  if (c_.size() <= b) return std::nullopt;
  // P = Q (x^c - 1) with P = *this / x^b.
  const std::size_t c = a - b;
  const std::size_t np = c_.size() - b;
  if (np <= c) return std::nullopt;
  const Code* pp = c_.data() + b;
  std::vector<Code> quo(np - c, 0);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Code above = k + c < quo.size() ? quo[k + c] : Code{0};
    quo[k] = field_->add(pp[k + c], above);
  }
  for (std::size_t k = 0; k < c; ++k) {
    const Code qk = k < quo.size() ? quo[k] : Code{0};
    if (field_->add(pp[k], qk) != 0) return std::nullopt;
  }
  return Poly(field_, std::move(quo));
}

Poly Poly::compose(const Poly& s) const {
  check_same(s);
  Poly out(field_);
  for (std::size_t k = c_.size(); k-- > 0;) {
    out = out * s + constant(field_, c_[k]);
  }
  return out;
}

bool Poly::operator==(const Poly& b) const {
  return (field_ == b.field_ || field_->same_as(*b.field_)) && c_ == b.c_;
}

std::string coeff_text(const FqContext& f, Code c) {
  std::string s = f.to_string(c);
  if (f.gamma() > 1 && s.find('+') != std::string::npos) return "(" + s + ")";
  return s;
}

Poly Poly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scale(field_->inv(leading()));
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << coeff_text(*field_, c_[k]);
      continue;
    }
    if (c_[k] != 1) os << coeff_text(*field_, c_[k]) << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::vector<Poly> poly_enumerate(const FieldPtr& field, unsigned d, bool monic_only, std::uint64_t budget) {
  const unsigned q = field->q();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) {
    count *= q;
    if (count > budget) throw BudgetError("enumerating q^" + std::to_string(d) + " polynomials exceeds budget");
  }
  std::vector<Poly> out;
  out.reserve(count);
  std::vector<Code> digits(d, 0);
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t v = n;
    for (unsigned i = 0; i < d; ++i) {
      digits[i] = static_cast<Code>(v % q);
      v /= q;
    }
    std::vector<Code> coeffs(digits);
    if (monic_only) coeffs.push_back(1);
    out.emplace_back(field, std::move(coeffs));
  }
  return out;
}

}  // namespace fqcalc
