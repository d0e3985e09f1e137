#include "fqcalc/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace fqcalc {

namespace {

// Built-in moduli, coefficients from degree 0 up.
const std::map<unsigned, std::vector<unsigned>>& builtin_moduli() {
  static const std::map<unsigned, std::vector<unsigned>> table = {
      {4, {1, 1, 1}},        // u^2 + u + 1
      {8, {1, 1, 0, 1}},     // u^3 + u + 1
      {9, {1, 0, 1}},        // u^2 + 1
      {16, {1, 1, 0, 0, 1}}, // u^4 + u + 1
      {25, {2, 0, 1}},       // u^2 + 2
      {27, {1, 2, 0, 1}},    // u^3 + 2u + 1
  };
  return table;
}

using PPoly = std::vector<unsigned>;  // dense over F_p, low degree first

void trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmod(PPoly a, const PPoly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  // m is monic
  while (a.size() > dm) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

// Next monic polynomial of degree d in lexicographic order; false on wrap.
bool next_monic(PPoly& a, unsigned p) {
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (++a[i] < p) return true;
    a[i] = 0;
  }
  return false;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(const std::vector<unsigned>& poly, unsigned p) {
  PPoly f = poly;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    PPoly g(d + 1, 0);
    g[d] = 1;
    do {
      if (pmod(f, g, p).empty()) return false;
    } while (next_monic(g, p));
  }
  return true;
}

FieldPtr FqContext::make(unsigned q) {
  if (q < 2) throw FieldError("field order must be at least 2");
  unsigned p = 0;
  for (unsigned d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned gamma = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++gamma;
  }
  if (rest != 1) throw FieldError("field order " + std::to_string(q) + " is not a prime power");
  return make(p, gamma);
}

FieldPtr FqContext::make(unsigned p, unsigned gamma, std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (gamma == 0) throw FieldError("extension degree must be positive");
  unsigned long long q = 1;
  for (unsigned i = 0; i < gamma; ++i) {
    q *= p;
    if (q > kMaxOrder) throw FieldError("field order exceeds " + std::to_string(kMaxOrder));
  }
  std::vector<unsigned> mod;
  if (gamma > 1) {
    if (modulus) {
      mod = *modulus;
      for (auto& c : mod) c %= p;
      trim(mod);
    } else {
      auto it = builtin_moduli().find(static_cast<unsigned>(q));
      if (it != builtin_moduli().end()) {
        mod = it->second;
      } else {
        PPoly g(gamma + 1, 0);
        g[gamma] = 1;
        bool found = false;
        do {
          if (is_irreducible_mod_p(g, p)) {
            found = true;
            break;
          }
        } while (next_monic(g, p));
        if (!found) throw FieldError("no irreducible modulus found");
        mod = g;
      }
    }
    if (mod.size() != gamma + 1 || mod.back() != 1) {
      throw FieldError("modulus must be monic of degree " + std::to_string(gamma));
    }
    if (!is_irreducible_mod_p(mod, p)) throw FieldError("modulus is reducible over F_" + std::to_string(p));
  } else if (modulus && !modulus->empty()) {
    throw FieldError("a prime field takes no modulus");
  }
  return FieldPtr(new FqContext(p, gamma, std::move(mod)));
}

FqContext::FqContext(unsigned p, unsigned gamma, std::vector<unsigned> modulus)
    : p_(p), gamma_(gamma), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < gamma_; ++i) q_ *= p_;
  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  std::vector<PPoly> polys(q_);
  for (unsigned a = 0; a < q_; ++a) {
    polys[a] = coords(static_cast<Code>(a));
  }
  for (unsigned a = 0; a < q_; ++a) {
    PPoly n(gamma_);
    for (unsigned i = 0; i < gamma_; ++i) n[i] = (p_ - polys[a][i]) % p_;
    neg_[a] = from_coords(n);
    for (unsigned b = 0; b < q_; ++b) {
      PPoly s(gamma_);
      for (unsigned i = 0; i < gamma_; ++i) s[i] = (polys[a][i] + polys[b][i]) % p_;
      add_[idx(a, b)] = from_coords(s);

      PPoly prod(2 * gamma_, 0);
      for (unsigned i = 0; i < gamma_; ++i) {
        for (unsigned j = 0; j < gamma_; ++j) {
          prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p_;
        }
      }
      PPoly r = gamma_ > 1 ? pmod(prod, modulus_, p_) : PPoly{prod[0] % p_};
      r.resize(gamma_, 0);
      mul_[idx(a, b)] = from_coords(r);
    }
  }
  for (unsigned a = 1; a < q_; ++a) {
    for (unsigned b = 1; b < q_; ++b) {
      if (mul_[idx(a, b)] == 1) {
        inv_[a] = static_cast<Code>(b);
        break;
      }
    }
  }
}

Code FqContext::inv(Code a) const {
  if (a == 0) throw FieldError("division by zero in F_" + std::to_string(q_));
  return inv_[a];
}

Code FqContext::pow(Code a, std::uint64_t e) const {
  Code result = 1;
  Code base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Code FqContext::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

std::vector<unsigned> FqContext::coords(Code a) const {
  std::vector<unsigned> c(gamma_);
  unsigned v = a;
  for (unsigned i = 0; i < gamma_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Code FqContext::from_coords(const std::vector<unsigned>& c) const {
  unsigned v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + (c[i] % p_);
  return static_cast<Code>(v);
}

std::vector<Code> FqContext::elements() const {
  std::vector<Code> out(q_);
  for (unsigned a = 0; a < q_; ++a) out[a] = static_cast<Code>(a);
  return out;
}

std::string FqContext::to_string(Code a) const {
  if (gamma_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  const auto c = coords(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]);
      out += "u";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Code FqContext::parse(std::string_view text) const {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s += ch;
  }
  if (s.empty()) throw FieldError("empty field element");
  std::vector<unsigned> acc(gamma_, 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    long long coef = 1;
    bool have_coef = false;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) {
      coef = std::stoll(s.substr(start, pos - start));
      have_coef = true;
    }
    unsigned power = 0;
    if (pos < s.size() && s[pos] == 'u') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t e0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == e0) throw FieldError("bad exponent in field element '" + std::string(text) + "'");
        power = static_cast<unsigned>(std::stoul(s.substr(e0, pos - e0)));
      }
    } else if (!have_coef) {
      throw FieldError("cannot parse field element '" + std::string(text) + "'");
    }
    if (power >= gamma_) throw FieldError("field element '" + std::string(text) + "' is not reduced");
    long long v = (sign * coef) % static_cast<long long>(p_);
    if (v < 0) v += p_;
    acc[power] = (acc[power] + static_cast<unsigned>(v)) % p_;
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      throw FieldError("cannot parse field element '" + std::string(text) + "'");
    }
  }
  return from_coords(acc);
}

bool FqContext::same_as(const FqContext& other) const {
  return this == &other || (p_ == other.p_ && gamma_ == other.gamma_ && modulus_ == other.modulus_);
}

std::string FqContext::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (gamma_ > 1) {
    os << " = F_" << p_ << "[u]/(";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0 || modulus_[i] != 1) os << modulus_[i];
      if (i > 0) os << "u";
      if (i > 1) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

FqElement::FqElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_) throw FieldError("element without a field");
  if (code_ >= field_->q()) throw FieldError("element code out of range");
}

FqElement FqElement::parse(FieldPtr field, std::string_view text) {
  const Code c = field->parse(text);
  return {std::move(field), c};
}

void FqElement::check_same(const FqElement& b) const {
  if (!field_->same_as(*b.field_)) {
    throw FieldError("context mismatch: " + field_->describe() + " vs " + b.field_->describe());
  }
}

FqElement FqElement::operator+(const FqElement& b) const {
  check_same(b);
  return {field_, field_->add(code_, b.code_)};
}

FqElement FqElement::operator-(const FqElement& b) const {
  check_same(b);
  return {field_, field_->sub(code_, b.code_)};
}

FqElement FqElement::operator*(const FqElement& b) const {
  check_same(b);
  return {field_, field_->mul(code_, b.code_)};
}

FqElement FqElement::operator/(const FqElement& b) const {
  check_same(b);
  return {field_, field_->div(code_, b.code_)};
}

FqElement FqElement::inv() const { return {field_, field_->inv(code_)}; }

bool FqElement::operator==(const FqElement& b) const {
  return field_->same_as(*b.field_) && code_ == b.code_;
}

std::vector<FqElement> enumerate_fq(const FieldPtr& field) {
  std::vector<FqElement> out;
  out.reserve(field->q());
  for (Code c : field->elements()) out.emplace_back(field, c);
  return out;
}

}  // namespace fqcalc
