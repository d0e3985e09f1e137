#include "fqcalc/basis.hpp"

#include <sstream>

namespace fqcalc {

namespace {

std::vector<Poly> conv(const std::vector<Poly>& a, const std::vector<Poly>& b, const FieldPtr& field) {
  if (a.empty() || b.empty()) return {};
  std::vector<Poly> out(a.size() + b.size() - 1, Poly(field));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly one(const FieldPtr& field) { return Poly::constant(field, 1); }

// e_i as a TPoly with denominator 1, through the binomial form.
TPoly e_tpoly(const Constants& c, int i) { return e_binomial(c, i).to_tpoly(c.q()); }

// Value of e_i at a polynomial argument, through the binomial form.
Poly e_at(const Constants& c, int i, const Poly& t) {
  Poly out(c.field());
  for (int j = 0; j <= i; ++j) {
    out += (c.binomial(i, j) * t.frobenius(static_cast<unsigned>(j))).scale(c.sign(i - j));
  }
  return out;
}

}  // namespace

TPoly::TPoly(FieldPtr field) : den(one(field)) {}

TPoly::TPoly(std::vector<Poly> n, Poly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw FieldError("TPoly with zero denominator");
  trim();
}

TPoly TPoly::constant(const Rational& c) { return TPoly({c.num}, c.den); }

TPoly TPoly::t(FieldPtr field) { return TPoly({Poly(field), one(field)}, one(field)); }

void TPoly::trim() {
  while (!num.empty() && num.back().is_zero()) num.pop_back();
}

Rational TPoly::coeff(std::size_t k) const { return {k < num.size() ? num[k] : Poly(field()), den}; }

TPoly TPoly::operator+(const TPoly& b) const {
  const bool same = den == b.den;
  std::vector<Poly> out(std::max(num.size(), b.num.size()), Poly(field()));
  for (std::size_t k = 0; k < num.size(); ++k) out[k] += same ? num[k] : num[k] * b.den;
  for (std::size_t k = 0; k < b.num.size(); ++k) out[k] += same ? b.num[k] : b.num[k] * den;
  return TPoly(std::move(out), same ? den : den * b.den);
}

TPoly TPoly::operator-(const TPoly& b) const { return *this + b.scale(Rational(Poly::constant(field(), field()->neg(1)))); }

TPoly TPoly::operator*(const TPoly& b) const { return TPoly(conv(num, b.num, field()), den * b.den); }

TPoly TPoly::scale(const Rational& c) const {
  std::vector<Poly> out;
  out.reserve(num.size());
  for (const auto& p : num) out.push_back(p * c.num);
  return TPoly(std::move(out), den * c.den);
}

TPoly TPoly::pow(unsigned e) const {
  TPoly r = constant(Rational(one(field())));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool TPoly::operator==(const TPoly& b) const {
  if (num.size() != b.num.size()) return false;
  for (std::size_t k = 0; k < num.size(); ++k) {
    if (num[k] * b.den != b.num[k] * den) return false;
  }
  return true;
}

Rational TPoly::evaluate(const Poly& t) const {
  Poly acc(field());
  for (std::size_t k = num.size(); k-- > 0;) acc = acc * t + num[k];
  return {acc, den};
}

std::string TPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = num.size(); k-- > 0;) {
    if (num[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string c = num[k].to_string();
    const bool simple = num[k].nonzero_terms() == 1 && c.find('+') == std::string::npos;
    if (k == 0) {
      os << (simple ? c : "(" + c + ")");
      continue;
    }
    if (!(num[k].degree() == 0 && num[k].leading() == 1)) os << (simple ? c : "(" + c + ")") << "*";
    os << "t";
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  if (!(den.degree() == 0 && den.leading() == 1)) return "(" + os.str() + ")/(" + den.to_string() + ")";
  return os.str();
}

TPoly LinearTPoly::to_tpoly(unsigned q) const {
  std::vector<Poly> out;
  std::size_t qj = 1;
  for (std::size_t j = 0; j < num.size(); ++j, qj *= q) {
    if (out.size() <= qj) out.resize(qj + 1, Poly(field()));
    out[qj] = num[j];
  }
  return TPoly(std::move(out), den);
}

Rational LinearTPoly::evaluate(const Poly& t) const {
  Poly acc(field());
  for (std::size_t j = 0; j < num.size(); ++j) acc += num[j] * t.frobenius(static_cast<unsigned>(j));
  return {acc, den};
}

std::string LinearTPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = num.size(); j-- > 0;) {
    if (num[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = num[j].degree() == 0 && num[j].leading() == 1;
    if (!unit) os << "(" << num[j].to_string() << ")*";
    os << "t";
    if (j > 0) os << "^(q^" << j << ")";
  }
  if (first) os << "0";
  if (!(den.degree() == 0 && den.leading() == 1)) return "(" + os.str() + ")/(" + den.to_string() + ")";
  return os.str();
}

TPoly e_product(const Constants& c, int i) {
  if (i < 0) throw DomainError("e_i needs i >= 0");
  const auto field = c.field();
  const auto ms = poly_enumerate(field, static_cast<unsigned>(i), false, c.budget().enumeration);
  std::vector<Poly> prod{one(field)};
  for (const auto& m : ms) {
    std::vector<Poly> next(prod.size() + 1, Poly(field));
    for (std::size_t k = 0; k < prod.size(); ++k) {
      next[k + 1] += prod[k];
      next[k] -= prod[k] * m;
    }
    prod = std::move(next);
  }
  return TPoly(std::move(prod), one(field));
}

LinearTPoly e_binomial(const Constants& c, int i) {
  if (i < 0) throw DomainError("e_i needs i >= 0");
  LinearTPoly out{{}, one(c.field())};
  for (int j = 0; j <= i; ++j) out.num.push_back(c.binomial(i, j).scale(c.sign(i - j)));
  return out;
}

LinearTPoly f(const Constants& c, int i) {
  LinearTPoly out = e_binomial(c, i);
  out.den = c.D(i);
  return out;
}

TPoly G(const Constants& c, std::uint64_t j) {
  const auto a = c.digits(j);
  TPoly out = TPoly::constant(Rational(one(c.field())));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) out = out * e_tpoly(c, static_cast<int>(i)).pow(a[i]);
  }
  return out;
}

TPoly g(const Constants& c, std::uint64_t j) {
  const auto a = c.digits(j);
  const unsigned q = c.q();
  TPoly out = TPoly::constant(Rational(one(c.field())));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    TPoly factor = e_tpoly(c, static_cast<int>(i)).pow(a[i]);
    if (a[i] == q - 1) factor = factor - TPoly::constant(Rational(c.D(static_cast<int>(i)).pow(q - 1)));
    out = out * factor;
  }
  return out;
}

TPoly h(const Constants& c, std::uint64_t j) {
  TPoly out = G(c, j);
  out.den = c.gamma(j);
  return out;
}

TPoly tau_product(const Constants& c, int m) {
  if (m < 0) throw DomainError("tau_m needs m >= 0");
  const auto field = c.field();
  TPoly out = TPoly::constant(Rational(one(field)));
  for (int i = 0; i < m; ++i) {
    TPoly fi = f(c, i).to_tpoly(c.q());
    out = out * (fi.pow(c.q() - 1) - TPoly::constant(Rational(one(field))));
  }
  return out;
}

TPoly tau_from_g(const Constants& c, int m) {
  if (m < 0) throw DomainError("tau_m needs m >= 0");
  const std::uint64_t n = c.q_pow(static_cast<unsigned>(m)) - 1;
  TPoly out = g(c, n);
  return TPoly(out.num, out.den * c.gamma(n));
}

std::vector<Rational> tau_sigma(const Constants& c, int m) {
  const std::uint64_t top = c.q_pow(static_cast<unsigned>(m)) - 1;
  std::vector<Rational> out;
  for (std::uint64_t j = 0; j <= top; ++j) {
    const TPoly gl = g(c, top - j);
    out.push_back(Rational(gl.coeff(0).num, gl.den * c.gamma(top - j)));
  }
  return out;
}

std::vector<Rational> to_h_basis(const Constants& c, const TPoly& p) {
  const auto field = c.field();
  std::vector<Poly> rem = p.num;
  std::vector<Rational> out(rem.size(), Rational(Poly(field)));
  for (std::size_t j = rem.size(); j-- > 0;) {
    if (rem[j].is_zero()) continue;
    const Poly beta = rem[j];
    const TPoly gj = G(c, j);
    if (gj.degree() != static_cast<long>(j) || gj.num[j] != one(field)) {
      throw InvariantError("G_j is not monic of degree j");
    }
    for (std::size_t k = 0; k <= j; ++k) {
      if (!gj.num[k].is_zero()) rem[k] -= beta * gj.num[k];
    }
    out[j] = Rational(beta * c.gamma(j), p.den);
  }
  return out;
}

TPoly from_h_basis(const Constants& c, const std::vector<Rational>& beta) {
  TPoly out(c.field());
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (!beta[j].is_zero()) out = out + h(c, j).scale(beta[j]);
  }
  return out;
}

AbsValue sup_norm(const std::vector<Rational>& coeffs) {
  AbsValue best = AbsValue::of_zero();
  for (const auto& r : coeffs) best = max(best, r.abs());
  return best;
}

AbsValue sup_norm(const Constants& c, const TPoly& p) { return sup_norm(to_h_basis(c, p)); }

namespace {

struct MonicEval {
  std::vector<std::vector<Poly>> epow;  // epow[i][a] = e_i(t)^a, a < q
  std::vector<Poly> gtop;               // e_i(t)^{q-1} - D_i^{q-1}
};

MonicEval eval_at(const Constants& c, const Poly& t, int m) {
  MonicEval ev;
  const unsigned q = c.q();
  for (int i = 0; i < m; ++i) {
    const Poly e = e_at(c, i, t);
    std::vector<Poly> pw{one(c.field())};
    for (unsigned a = 1; a < q; ++a) pw.push_back(pw.back() * e);
    ev.gtop.push_back(pw[q - 1] - c.D(i).pow(q - 1));
    ev.epow.push_back(std::move(pw));
  }
  return ev;
}

Poly G_at(const Constants& c, const MonicEval& ev, std::uint64_t k) {
  const auto a = c.digits(k);
  Poly out = one(c.field());
  for (std::size_t i = 0; i < a.size(); ++i) out *= ev.epow[i][a[i]];
  return out;
}

Poly g_at(const Constants& c, const MonicEval& ev, std::uint64_t l) {
  const auto a = c.digits(l);
  Poly out = one(c.field());
  for (std::size_t i = 0; i < a.size(); ++i) out *= a[i] == c.q() - 1 ? ev.gtop[i] : ev.epow[i][a[i]];
  return out;
}

std::vector<Poly> monic_polys(const Constants& c, int m) {
  if (m < 0) throw DomainError("monic sum needs m >= 0");
  return poly_enumerate(c.field(), static_cast<unsigned>(m), true, c.budget().enumeration);
}

}  // namespace

Poly monic_sum(const Constants& c, std::uint64_t l, std::uint64_t k, int m) {
  const std::uint64_t qm = c.q_pow(static_cast<unsigned>(m));
  if (l >= qm || k >= qm) throw DomainError("monic sum needs k, l < q^m");
  Poly sum(c.field());
  for (const auto& t : monic_polys(c, m)) {
    const auto ev = eval_at(c, t, m);
    sum += g_at(c, ev, l) * G_at(c, ev, k);
  }
  return sum;
}

std::vector<std::vector<Poly>> monic_sum_table(const Constants& c, int m) {
  const std::uint64_t qm = c.q_pow(static_cast<unsigned>(m));
  if (qm * qm > c.budget().enumeration * 16) throw BudgetError("monic sum table too large");
  std::vector<std::vector<Poly>> table(qm, std::vector<Poly>(qm, Poly(c.field())));
  for (const auto& t : monic_polys(c, m)) {
    const auto ev = eval_at(c, t, m);
    std::vector<Poly> Gs, gs;
    for (std::uint64_t k = 0; k < qm; ++k) {
      Gs.push_back(G_at(c, ev, k));
      gs.push_back(g_at(c, ev, k));
    }
    for (std::uint64_t l = 0; l < qm; ++l) {
      for (std::uint64_t k = 0; k < qm; ++k) table[l][k] += gs[l] * Gs[k];
    }
  }
  return table;
}

Poly monic_sum_expected(const Constants& c, std::uint64_t l, std::uint64_t k, int m) {
  if (k + l != c.q_pow(static_cast<unsigned>(m)) - 1) return Poly(c.field());
  return c.D(m).divide_exact(c.L(m)).scale(c.sign(m));
}

}  // namespace fqcalc
