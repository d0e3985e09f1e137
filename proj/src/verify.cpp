#include "fqcalc/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "fqcalc/basis.hpp"
#include "fqcalc/calculus.hpp"
#include "fqcalc/fqlinear.hpp"
#include "fqcalc/specialfn.hpp"

namespace fqcalc {

namespace {

using Rng = std::mt19937_64;

// Extra terms given to every limit trace beyond the working precision.
constexpr std::int64_t kLimitSlack = 32;
// Required stabilization point for Taylor recovery, and the longer sweep used for diagnostics.
constexpr std::int64_t kTaylorBound = 4;
constexpr std::int64_t kTaylorLong = 64;

// Identity checks must agree to x^N; they run kGuard coefficients deeper.
Workspace guarded(const FieldPtr& f, const VerifyConfig& cfg) {
  return Workspace(Constants::make(f, cfg.budget), cfg.precision + kGuard);
}

Rng rng_for(const VerifyConfig& cfg, int id, unsigned q) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(q)};
  return Rng(seq);
}

std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

Poly random_poly(Rng& rng, const FieldPtr& f, unsigned max_deg, bool nonzero = true) {
  while (true) {
    std::vector<Code> cs(max_deg + 1);
    for (auto& c : cs) c = static_cast<Code>(below(rng, f->q()));
    Poly p(f, std::move(cs));
    if (!nonzero || !p.is_zero()) return p;
  }
}

// x^e * (nonzero poly with unit constant term).
Laurent random_laurent(Rng& rng, const FieldPtr& f, std::int64_t emin, std::int64_t emax, unsigned max_deg) {
  Poly p = random_poly(rng, f, max_deg);
  if (p.coeff(0) == 0) p += Poly::constant(f, 1);
  const auto e = emin + static_cast<std::int64_t>(below(rng, static_cast<std::uint64_t>(emax - emin + 1)));
  return Laurent::from_poly(p, e);
}

bool same(const CarlitzExpansion& a, const CarlitzExpansion& b) { return first_difference(a, b, kInfinity) == -1; }

// Delta(a+ u) - (Delta u)^q + Delta u = [1] u^q, on the Carlitz side.
bool lifted_commutator(const Workspace& ws, const CarlitzExpansion& u) {
  const CarlitzExpansion du = delta(ws, u, 1);
  const CarlitzExpansion lhs = add(sub(delta(ws, a_plus(ws, u), 1), frobenius(ws, du)), du);
  return same(lhs, scale(frobenius(ws, u), ws.bracket(1)));
}

bool lifted_commutator_q(const Workspace& ws, const QExpansion& u) {
  const QExpansion du = delta(ws, u, 1);
  QExpansion lhs = sub(delta(ws, a_plus(ws, u), 1), frobenius(ws, du));
  for (std::size_t i = 0; i < du.a.size(); ++i) lhs.a[i] += du.a[i];
  QExpansion rhs = frobenius(ws, u);
  for (auto& a : rhs.a) a = ws.bracket(1) * a;
  return first_difference(lhs, rhs, ws.precision() - kGuard) == -1;
}

struct Tally {
  int total = 0;
  int failed = 0;
  std::string first_failure;
  void add(bool ok, const std::string& what) {
    ++total;
    if (!ok) {
      if (failed == 0) first_failure = what;
      ++failed;
    }
  }
  bool ok() const { return failed == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << (total - failed) << "/" << total << " hold";
    if (failed) os << "; first failure: " << first_failure;
    return os.str();
  }
};

std::string qtext(const FieldPtr& f) { return "q=" + std::to_string(f->q()); }

// f_0..f_5, t^{q^n} for n <= 3, and four random 4-term expansions.
std::vector<std::pair<std::string, CarlitzExpansion>> corpus(const Workspace& ws, Rng& rng) {
  std::vector<std::pair<std::string, CarlitzExpansion>> out;
  for (int n = 0; n <= 5; ++n) out.emplace_back("f_" + std::to_string(n), basis_vector(ws, n));
  for (int n = 0; n <= 3; ++n) {
    QExpansion u;
    u.a.assign(static_cast<std::size_t>(n), ws.zero());
    u.a.push_back(ws.one());
    out.emplace_back("t^{q^" + std::to_string(n) + "}", to_carlitz(ws, u));
  }
  for (int r = 0; r < 4; ++r) {
    CarlitzExpansion u;
    u.c.assign(6, ws.zero());
    int placed = 0;
    while (placed < 4) {
      const auto i = static_cast<std::size_t>(below(rng, 6));
      if (!u.c[i].is_exact_zero()) continue;
      u.c[i] = Laurent::from_poly(random_poly(rng, ws.field(), 2));
      ++placed;
    }
    out.emplace_back("random#" + std::to_string(r), std::move(u));
  }
  return out;
}

// ---- criteria -----------------------------------------------------------

CheckResult gamma_factorial(const FieldPtr& f, const VerifyConfig& cfg) {
  const Constants c(f, cfg.budget);
  const int top = std::min<int>(6, static_cast<int>(c.max_index()));
  Tally t;
  for (int m = 1; m <= top; ++m) {
    const std::uint64_t qm = c.q_pow(static_cast<unsigned>(m));
    Poly factored = Poly::constant(f, 1);
    for (int k = 1; k <= m; ++k) {
      factored *= Poly::binomial(f, qm, c.q_pow(static_cast<unsigned>(m - k)));
    }
    const bool ok = c.gamma(qm - 1) * c.L(m) == c.D(m) && c.D(m) == factored;
    t.add(ok, "m=" + std::to_string(m));
  }
  return {"", t.ok(), qtext(f) + ", m=1.." + std::to_string(top) + ": Gamma_{q^m-1} L_m = D_m exactly: " + t.summary()};
}

CheckResult basis_dual_path(const FieldPtr& f, const VerifyConfig& cfg) {
  const Constants c(f, cfg.budget);
  Tally e, tau;
  for (int i = 0; i <= 3; ++i) {
    e.add(e_product(c, i) == e_binomial(c, i).to_tpoly(f->q()), "e_" + std::to_string(i));
  }
  // The tau comparison multiplies out polynomials of degree q^m - 1 in t.
  const int mtop = f->q() <= 3 ? 4 : 2;
  for (int m = 0; m <= mtop; ++m) tau.add(tau_product(c, m) == tau_from_g(c, m), "tau_" + std::to_string(m));
  return {"", e.ok() && tau.ok(),
          qtext(f) + ": e_product = e_binomial for i<=3: " + e.summary() + "; tau product = g/Gamma for m<=" +
              std::to_string(mtop) + ": " + tau.summary()};
}

CheckResult tau_orthonormality(const FieldPtr& f, const VerifyConfig& cfg) {
  const Constants c(f, cfg.budget);
  Rng rng = rng_for(cfg, 3, f->q());
  const int mtop = f->q() <= 3 ? 4 : 2;
  std::vector<TPoly> taus;
  Tally norms, ineq;
  int equal = 0;
  for (int m = 0; m <= mtop; ++m) {
    taus.push_back(tau_product(c, m));
    norms.add(sup_norm(c, taus.back()) == AbsValue::power(0), "tau_" + std::to_string(m));
  }
  for (int m = 1; m <= mtop; ++m) {
    for (int r = 0; r < 20; ++r) {
      TPoly sum(f);
      AbsValue biggest = AbsValue::of_zero();
      AbsValue last = AbsValue::of_zero();
      for (int k = 0; k <= m; ++k) {
        const Poly p = random_poly(rng, f, 2);
        const auto e = static_cast<std::size_t>(below(rng, 4));
        const Rational lam(p, Poly::monomial(f, 1, e));
        sum = sum + taus[static_cast<std::size_t>(k)].scale(lam);
        biggest = max(biggest, lam.abs());
        last = lam.abs();
      }
      const AbsValue n = sup_norm(c, sum);
      ineq.add(n >= last, "m=" + std::to_string(m) + " tuple " + std::to_string(r));
      if (n == biggest) ++equal;
    }
  }
  std::ostringstream os;
  os << qtext(f) << ": ||tau_m|| = 1 for m<=" << mtop << ": " << norms.summary()
     << "; ||sum lambda_k tau_k|| >= |lambda_m| on 20 tuples per m: " << ineq.summary() << " (norm = max|lambda_k| in "
     << equal << "/" << ineq.total << ")";
  return {"", norms.ok() && ineq.ok(), os.str()};
}

CheckResult monic_sum(const FieldPtr& f, const VerifyConfig& cfg) {
  const Constants c(f, cfg.budget);
  Tally t;
  int mtop = 0;
  for (int m = 1; m <= 3; ++m) {
    if (c.q_pow(static_cast<unsigned>(m)) > 27) break;
    mtop = m;
    const auto table = monic_sum_table(c, m);
    for (std::uint64_t l = 0; l < table.size(); ++l) {
      for (std::uint64_t k = 0; k < table.size(); ++k) {
        t.add(table[l][k] == monic_sum_expected(c, l, k, m),
              "m=" + std::to_string(m) + " l=" + std::to_string(l) + " k=" + std::to_string(k));
      }
    }
  }
  return {"", t.ok(), qtext(f) + ", m<=" + std::to_string(mtop) + ", all k,l < q^m: " + t.summary()};
}

CheckResult ladder(const FieldPtr& f, const VerifyConfig& cfg) {
  const Workspace ws(Constants::make(f, cfg.budget), cfg.precision);
  Rng rng = rng_for(cfg, 5, f->q());
  Tally basis, random;
  const int top = std::min<int>(8, static_cast<int>(ws.constants().max_index()));
  for (int i = 0; i <= top; ++i) {
    const CarlitzExpansion fi = basis_vector(ws, i);
    const CarlitzExpansion below_i = i > 0 ? basis_vector(ws, i - 1) : CarlitzExpansion{};
    const std::string tag = "f_" + std::to_string(i);
    basis.add(same(a_minus(ws, fi), below_i), "a- lowers " + tag);
    if (i > 0) basis.add(same(a_plus(ws, below_i), scale(fi, ws.bracket(i))), "a+ raises " + tag);
    basis.add(same(a_plus(ws, a_minus(ws, fi)), scale(fi, ws.bracket(i))), "a+ a- = [i] " + tag);
    basis.add(lifted_commutator(ws, fi), "commutator " + tag);
  }
  for (int r = 0; r < 20; ++r) {
    const std::string tag = "expansion " + std::to_string(r);
    // F_q-combinations: the raising and lowering rules extend linearly.
    CarlitzExpansion u, am, aa;
    for (int i = 0; i <= top; ++i) {
      const Code a = static_cast<Code>(below(rng, f->q()));
      const Laurent al = Laurent::constant(f, a);
      u.c.push_back(a == 0 ? ws.zero() : al);
      if (i > 0) am.c.push_back(a == 0 ? ws.zero() : al);
      aa.c.push_back(a == 0 ? ws.zero() : al * ws.bracket(i));
    }
    random.add(same(a_minus(ws, u), am), "a- lowers " + tag);
    random.add(same(a_plus(ws, a_minus(ws, u)), aa), "a+ a- = [i] " + tag);
    // F_q[x] coefficients: the lifted commutator on both sides, and a-(sum c_i^q f_i) = sum c_i f_{i-1}.
    CarlitzExpansion v, vq, vroot;
    for (int i = 0; i <= top; ++i) {
      const Laurent ci = below(rng, 3) == 0 ? ws.zero() : Laurent::from_poly(random_poly(rng, f, 3));
      v.c.push_back(ci);
      vq.c.push_back(ci.frob_power(1));
      if (i > 0) vroot.c.push_back(ci);
    }
    random.add(lifted_commutator(ws, v), "commutator carlitz " + tag);
    random.add(lifted_commutator_q(ws, to_qexpansion(ws, v)), "commutator q-side " + tag);
    random.add(same(a_minus(ws, vq), vroot), "a- semilinear " + tag);
  }
  return {"", basis.ok() && random.ok(),
          qtext(f) + ": f_0..f_" + std::to_string(top) + ": " + basis.summary() + "; 20 random expansions: " + random.summary()};
}

CheckResult taylor(const FieldPtr& f, const VerifyConfig& cfg) {
  const Workspace ws(Constants::make(f, cfg.budget), cfg.precision);
  Rng rng = rng_for(cfg, 6, f->q());
  int cases_ok = 0, sweeps = 0, sweeps_ok = 0, eventual = 0, mismatched = 0;
  std::int64_t worst_m = 0;
  std::string first_bad;
  for (int r = 0; r < 30; ++r) {
    QExpansion u;
    u.a.assign(4, ws.zero());
    const int terms = 1 + static_cast<int>(below(rng, 4));
    for (int s = 0; s < terms; ++s) {
      u.a[static_cast<std::size_t>(below(rng, 4))] = Laurent::from_poly(random_poly(rng, f, 2));
    }
    bool all = true;
    for (int n = 0; n < 4; ++n) {
      ++sweeps;
      const TaylorTrace tr = taylor_recover(ws, u, n, kTaylorBound);
      const bool ok = tr.stabilized_m && *tr.stabilized_m <= kTaylorBound && tr.matches;
      if (ok) {
        ++sweeps_ok;
        worst_m = std::max(worst_m, *tr.stabilized_m);
        continue;
      }
      all = false;
      if (first_bad.empty()) first_bad = "case " + std::to_string(r) + " n=" + std::to_string(n);
      const TaylorTrace longer = taylor_recover(ws, u, n, kTaylorLong);
      if (longer.stabilized_m && longer.matches) {
        ++eventual;
        worst_m = std::max(worst_m, *longer.stabilized_m);
      } else if (longer.stabilized_m) {
        ++mismatched;
      }
    }
    if (all) ++cases_ok;
  }
  std::ostringstream os;
  os << qtext(f) << ", N=" << cfg.precision << ": " << cases_ok << "/30 cases recovered with stabilization by m<="
     << kTaylorBound << " (" << sweeps_ok << "/" << sweeps << " coefficients)";
  if (cases_ok < 30) {
    os << "; first miss " << first_bad << "; of the misses " << eventual << " stabilize later and match a^H_n (max m "
       << worst_m << "), " << mismatched << " stabilize to a wrong value";
  }
  return {"", cases_ok == 30, os.str()};
}

CheckResult norm_identity(const FieldPtr& f, const VerifyConfig& cfg) {
  const Workspace ws(Constants::make(f, cfg.budget), cfg.precision);
  Rng rng = rng_for(cfg, 7, f->q());
  Tally t;
  for (int r = 0; r < 20; ++r) {
    CarlitzExpansion u;
    const int len = 3 + static_cast<int>(below(rng, 4));
    for (int i = 0; i < len; ++i) {
      u.c.push_back(below(rng, 4) == 0 ? ws.zero() : random_laurent(rng, f, -2, 2, 2));
    }
    u.c.back() = random_laurent(rng, f, -2, 2, 2);
    for (int k = 0; k <= 2; ++k) {
      AbsValue sampled = AbsValue::of_zero();
      for (std::int64_t m = 0; m <= 8; ++m) sampled = max(sampled, dk_apply_exact(ws, u, k, m).abs());
      const AbsValue norm = dk_norm(ws, u, k);
      t.add(norm == sampled, "expansion " + std::to_string(r) + " k=" + std::to_string(k) + ": norm " +
                                 norm.to_string() + " vs sampled " + sampled.to_string());
    }
  }
  return {"", t.ok(), qtext(f) + ": sup_{n>=k} q^{(n-k)q^k}|c_n| = max_{m<=8} |D^k u(x^m)|, k=0,1,2: " + t.summary()};
}

CheckResult analyticity(const FieldPtr& f, const VerifyConfig& cfg) {
  const Workspace ws(Constants::make(f, cfg.budget), cfg.precision);
  Rng rng = rng_for(cfg, 8, f->q());
  Tally t;
  for (int r = 0; r < 20; ++r) {
    QExpansion u;
    const int len = 2 + static_cast<int>(below(rng, 5));
    for (int i = 0; i < len; ++i) {
      if (below(rng, 3) == 0) {
        u.a.push_back(ws.zero());
        continue;
      }
      const auto a = static_cast<Code>(1 + below(rng, f->q() - 1));
      u.a.push_back(Laurent::monomial(f, a, static_cast<std::int64_t>(below(rng, 10)) - 3));
    }
    for (const BoundRow& row : analyticity_forward(ws, u)) {
      t.add(row.holds, "input " + std::to_string(r) + " n=" + std::to_string(row.n));
    }
  }
  const Constants& c = ws.constants();
  const int ntop = std::min<int>(8, static_cast<int>(c.max_index()));
  const SSignReport s = verify_s_signs(c, ntop);
  std::ostringstream os;
  os << qtext(f) << ": forward bound on 20 inputs: " << t.summary() << "; s_nj < 0 for 0<=j<n<=" << ntop << ": "
     << (s.all_negative ? "yes" : "no") << " (" << s.checked << " pairs; " << s.zero_count << " with s_nj = 0"
     << (s.zero_count && s.zeros_adjacent ? ", all at n = j+1" : "") << "; s_nj <= 0: "
     << (s.all_nonpositive ? "yes" : "no") << "; matches -v([n j]): " << (s.matches_binomial ? "yes" : "no") << ")";
  return {"", t.ok() && s.all_negative && s.matches_binomial, os.str()};
}

CheckResult indefinite(const FieldPtr& f, const VerifyConfig& cfg) {
  const Workspace ws = guarded(f, cfg);
  Rng rng = rng_for(cfg, 9, f->q());
  const std::int64_t req = cfg.precision;
  Tally shift, tables, inverse;
  for (int k = 0; k <= 6; ++k) {
    shift.add(same(indefinite_sum(ws, basis_vector(ws, k)), basis_vector(ws, k + 1)), "S f_" + std::to_string(k));
  }
  for (const auto& [name, u] : corpus(ws, rng)) {
    const ValueTable interp = indefinite_sum_values(ws, to_values(ws, u, 8));
    const ValueTable coeff = to_values(ws, indefinite_sum(ws, u), 8);
    bool ok = true;
    for (std::size_t m = 0; m < 8; ++m) ok = ok && interp.values[m].agrees_to(coeff.values[m], req);
    tables.add(ok, name);
  }
  for (int r = 0; r < 10; ++r) {
    CarlitzExpansion u;
    for (int i = 0; i < 6; ++i) u.c.push_back(Laurent::from_poly(random_poly(rng, f, 3, false)));
    inverse.add(same(a_minus(ws, indefinite_sum(ws, u)), u), "random " + std::to_string(r));
  }
  return {"", shift.ok() && tables.ok() && inverse.ok(),
          qtext(f) + ": S f_k = f_{k+1}, k<=6: " + shift.summary() + "; coefficient vs interpolation, length 8: " +
              tables.summary() + "; a-(S f) = f: " + inverse.summary()};
}

CheckResult integral_laws(const FieldPtr& f, const VerifyConfig& cfg) {
  const Workspace ws = guarded(f, cfg);
  const Constants& c = ws.constants();
  Rng rng = rng_for(cfg, 10, f->q());
  const std::int64_t N = ws.precision();
  const std::int64_t req = cfg.precision;
  Tally monomials, basis_ints, laws;
  for (int n = 0; n <= 3; ++n) {
    QExpansion u;
    u.a.assign(static_cast<std::size_t>(n), ws.zero());
    u.a.push_back(ws.one());
    const Laurent expected = -c.inv_bracket(n + 1, N);
    const Laurent closed = volkenborn(ws, to_carlitz(ws, u)).value;
    const IntegralResult lim = volkenborn_limit(ws, u, N + kLimitSlack);
    const std::string tag = "n=" + std::to_string(n);
    monomials.add(closed.agrees_to(expected, req), "closed " + tag);
    monomials.add(lim.value.agrees_to(expected, req), "limit " + tag);
    monomials.add(volkenborn_termwise(ws, u).agrees_to(expected, req), "termwise " + tag);
    // Trace entries (x^{k(q^{n+1}-1)} - 1)/[n+1].
    const auto Q = static_cast<std::int64_t>(c.q_pow(static_cast<unsigned>(n + 1)));
    for (std::int64_t k = 1; k <= 5; ++k) {
      const Laurent formula = ((ws.x_pow(k * (Q - 1)) - ws.one()) * c.inv_bracket(n + 1, N + 1)).truncated(N);
      monomials.add(lim.trace[static_cast<std::size_t>(k - 1)].agrees_to(formula, req), "trace " + tag);
    }
  }
  for (int n = 0; n <= 5; ++n) {
    const CarlitzExpansion fn = basis_vector(ws, n);
    const Laurent expected = c.inv_L(n + 1, N).scale(c.sign(n + 1));
    const std::string tag = "n=" + std::to_string(n);
    basis_ints.add(volkenborn(ws, fn).value.agrees_to(expected, req), "closed " + tag);
    basis_ints.add(volkenborn_limit(ws, fn, N + kLimitSlack).value.agrees_to(expected, req), "limit " + tag);
  }
  for (const auto& [name, u] : corpus(ws, rng)) {
    for (const LawCheck& chk : invariance_check(ws, u)) laws.add(chk.holds, name + ": " + chk.name);
  }
  return {"", monomials.ok() && basis_ints.ok() && laws.ok(),
          qtext(f) + ", N=" + std::to_string(req) + ": int t^(q^n) = -1/[n+1], n<=3, by closed form, limit, termwise and trace: " + monomials.summary() +
              "; int f_n = (-1)^(n+1)/L_(n+1), n<=5: " + basis_ints.summary() + "; shift law, its iterates, scalar and vanishing laws on the corpus: " +
              laws.summary()};
}

std::vector<Laurent> grid_z(const Workspace& ws, std::initializer_list<int> exps) {
  std::vector<Laurent> out;
  for (int e : exps) out.push_back(ws.x_pow(e));
  return out;
}

std::vector<Poly> grid_a(const FieldPtr& f) {
  return {Poly::constant(f, 1), Poly::x(f), Poly::monomial(f, 1, 2), Poly(f, {1, 0, 1})};
}

void tally_report(Tally& t, const IdentityReport& rep, int* vacuous = nullptr) {
  for (const LawCheck& chk : rep.checks) {
    t.add(chk.holds, rep.name + ": " + chk.name);
    if (vacuous && chk.vacuous) ++*vacuous;
  }
}

CheckResult module_integral(const FieldPtr& f, const VerifyConfig& cfg) {
  const Workspace ws = guarded(f, cfg);
  Tally t;
  for (const Laurent& z : grid_z(ws, {1, 2, 3})) tally_report(t, integral_of_module(ws, z));
  return {"", t.ok(), qtext(f) + ", z in {x, x^2, x^3}, closed form and limit trace vs log_C(z) - z mod x^" +
                          std::to_string(cfg.precision) + ": " + t.summary()};
}

CheckResult goss(const FieldPtr& f, const VerifyConfig& cfg) {
  const Workspace ws = guarded(f, cfg);
  Tally t;
  for (const Laurent& z : grid_z(ws, {2, 3})) {
    for (const Poly& a : grid_a(f)) tally_report(t, goss_integral(ws, a, z));
  }
  return {"", t.ok(), qtext(f) + ", a in {1, x, x^2, x^2+1}, z in {x^2, x^3}, three-way agreement: " + t.summary()};
}

CheckResult funceq(const FieldPtr& f, const VerifyConfig& cfg) {
  const Workspace ws = guarded(f, cfg);
  Tally t;
  int vac = 0;
  for (const Laurent& z : grid_z(ws, {2, 3})) {
    for (const Poly& a : grid_a(f)) tally_report(t, log_functional_equation(ws, a, z), &vac);
    tally_report(t, exp_log_roundtrip(ws, z), &vac);
  }
  return {"", t.ok(), qtext(f) + ", functional equation, e_C identity and exp/log round trip: " + t.summary() + " (" +
                          std::to_string(vac) + " vacuous)"};
}

CheckResult gate(const FieldPtr& f, const VerifyConfig& cfg) {
  const Workspace ws = guarded(f, cfg);
  Rng rng = rng_for(cfg, 14, f->q());
  const std::int64_t N = ws.precision();
  Tally t;
  std::int64_t latest = 0;
  for (const auto& [name, u] : corpus(ws, rng)) {
    const Laurent closed = volkenborn(ws, u).value;
    const IntegralResult lim = volkenborn_limit(ws, u, N + kLimitSlack);
    t.add(lim.stabilized_n.has_value() && closed.agrees_to(lim.value, cfg.precision), name);
    if (lim.stabilized_n) latest = std::max(latest, *lim.stabilized_n);
  }
  return {"", t.ok(), qtext(f) + ": closed form vs limit definition on the corpus: " + t.summary() +
                          " (traces stable from n<=" + std::to_string(latest) + ")"};
}

using CheckFn = CheckResult (*)(const FieldPtr&, const VerifyConfig&);

struct Entry {
  const char* name;
  CheckFn fn;
  std::vector<unsigned> qs;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {"01-gamma-factorial", gamma_factorial, {2, 3, 4, 5}},
      {"02-basis-dual-path", basis_dual_path, {2, 3, 4}},
      {"03-tau-orthonormality", tau_orthonormality, {2, 3}},
      {"04-monic-sum", monic_sum, {2, 3}},
      {"05-ladder-relations", ladder, {2, 3}},
      {"06-taylor-recovery", taylor, {2, 3}},
      {"07-norm-identity", norm_identity, {2, 3}},
      {"08-analyticity-bounds", analyticity, {2, 3}},
      {"09-indefinite-sum", indefinite, {2, 3}},
      {"10-integral-laws", integral_laws, {2, 3}},
      {"11-module-integral", module_integral, {2, 3}},
      {"12-goss-integral", goss, {2, 3}},
      {"13-functional-equation", funceq, {2, 3}},
      {"14-derived-formula-gate", gate, {2, 3}},
  };
  return r;
}

const Entry& entry(int id) {
  if (id < 1 || id > kCriteria) throw DomainError("no criterion " + std::to_string(id));
  return registry()[static_cast<std::size_t>(id - 1)];
}

}  // namespace

std::string criterion_name(int id) { return entry(id).name; }

std::vector<unsigned> criterion_fields(int id) { return entry(id).qs; }

CheckResult run_criterion(int id, const FieldPtr& field, const VerifyConfig& cfg) {
  const Entry& e = entry(id);
  CheckResult r;
  try {
    r = e.fn(field, cfg);
  } catch (const Error& ex) {
    r = {"", false, "q=" + std::to_string(field->q()) + ": error: " + ex.what()};
  }
  r.name = e.name;
  return r;
}

std::vector<CheckResult> run_all(const FieldPtr& field, const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, field, cfg));
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

CheckResult run_criterion_grid(int id, const VerifyConfig& cfg) {
  CheckResult merged{criterion_name(id), true, ""};
  for (unsigned q : criterion_fields(id)) {
    const CheckResult r = run_criterion(id, FqContext::make(q), cfg);
    merged.passed = merged.passed && r.passed;
    if (!merged.detail.empty()) merged.detail += " | ";
    merged.detail += r.detail;
  }
  return merged;
}

std::vector<CheckResult> run_suite(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion_grid(id, cfg));
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

}  // namespace fqcalc
