#include "fqcalc/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fqcalc/calculus.hpp"
#include "fqcalc/specialfn.hpp"
#include "fqcalc/text.hpp"
#include "fqcalc/verify.hpp"

namespace fqcalc::cli {

namespace {

constexpr int kSchema = 1;
constexpr std::int64_t kDefaultPrecision = 64;
constexpr std::int64_t kLimitSlack = 32;

struct Common {
  std::optional<unsigned> q;
  std::optional<unsigned> p;
  std::optional<unsigned> gamma;
  std::string modulus;
  std::optional<std::int64_t> precision;
  std::string format = "text";
  std::uint64_t seed = 7;
  std::uint64_t budget = Budget{}.max_degree;

  bool json() const { return format == "json"; }
  bool field_given() const { return q || p || gamma || !modulus.empty(); }
  std::int64_t n() const { return precision.value_or(kDefaultPrecision); }
};

std::vector<unsigned> parse_modulus(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw FieldError("bad modulus coefficient '" + item + "'");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

FieldPtr make_field(const Common& c) {
  if (c.q && (c.p || c.gamma)) {
    if (!c.p || !c.gamma) throw FieldError("--q cannot be combined with only one of --p, --gamma");
    unsigned q = 1;
    for (unsigned i = 0; i < *c.gamma; ++i) q *= *c.p;
    if (q != *c.q) throw FieldError("--q disagrees with --p and --gamma");
  }
  if (c.p) {
    const unsigned gamma = c.gamma.value_or(1);
    std::optional<std::vector<unsigned>> mod;
    if (!c.modulus.empty()) mod = parse_modulus(c.modulus);
    return FqContext::make(*c.p, gamma, mod);
  }
  if (c.gamma) throw FieldError("--gamma needs --p");
  if (!c.modulus.empty()) throw FieldError("--modulus needs --p and --gamma");
  return FqContext::make(c.q.value_or(2));
}

Workspace make_workspace(const Common& c) {
  if (c.n() < 1) throw DomainError("--precision must be positive");
  Budget b;
  b.max_degree = c.budget;
  return Workspace(Constants::make(make_field(c), b), c.n());
}

Json field_json(const FqContext& f) {
  Json j{{"p", f.p()}, {"gamma", f.gamma()}, {"q", f.q()}};
  j["modulus"] = f.modulus();
  return j;
}

Json header(const std::string& command, const Workspace& ws) {
  return Json{{"schema", kSchema}, {"command", command}, {"field", field_json(*ws.field())},
              {"precision", ws.precision()}};
}

void emit(std::ostream& out, const Common& c, const Json& j, const std::string& text) {
  if (c.json()) out << j.dump(2) << "\n";
  else out << text;
}

std::string poly_factor(const Poly& p) {
  const bool single = p.degree() <= 0 || std::count_if(p.coeffs().begin(), p.coeffs().end(), [](Code x) {
                                           return x != 0;
                                         }) == 1;
  return single ? p.to_string() : "(" + p.to_string() + ")";
}

std::string rational_text(const Rational& raw) {
  const Rational r = raw.reduced();
  if (r.den.degree() == 0 && r.den.coeffs()[0] == 1) return r.num.to_string();
  return poly_factor(r.num) + "/" + poly_factor(r.den);
}

Json rational_json(const Rational& raw) {
  const Rational r = raw.reduced();
  Json j = to_json(r);
  j["text"] = rational_text(r);
  return j;
}

// Series arguments accept the text form or a JSON object as printed by --format json.
Laurent series_arg(const FieldPtr& f, const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') return laurent_from_json(f, Json::parse(text));
  return parse_laurent(f, text);
}

// ---- expansions ----------------------------------------------------------

enum class Kind { Q, Carlitz, Values };

Kind kind_of(const std::string& s) {
  if (s == "q") return Kind::Q;
  if (s == "carlitz") return Kind::Carlitz;
  if (s == "values") return Kind::Values;
  throw DomainError("unknown representation '" + s + "'");
}

struct Input {
  Kind kind = Kind::Q;
  std::vector<Laurent> coeffs;

  QExpansion as_q(const Workspace& ws) const {
    if (kind == Kind::Q) return {coeffs};
    return to_qexpansion(ws, as_carlitz(ws));
  }
  CarlitzExpansion as_carlitz(const Workspace& ws) const {
    if (kind == Kind::Carlitz) return {coeffs};
    if (kind == Kind::Values) return carlitz_from_values(ws, {coeffs});
    return to_carlitz(ws, {coeffs});
  }
};

// --coeffs is a ';'-separated list, or a JSON expansion {"kind": ..., "coeffs": [...]}.
Input read_input(const Workspace& ws, const std::string& from, const std::string& coeffs) {
  Input in;
  in.kind = kind_of(from);
  const auto first = coeffs.find_first_not_of(" \t");
  if (first != std::string::npos && coeffs[first] == '{') {
    const Json j = Json::parse(coeffs);
    if (j.contains("kind")) in.kind = kind_of(j.at("kind").get<std::string>());
    for (const auto& c : j.at("coeffs")) in.coeffs.push_back(laurent_from_json(ws.field(), c));
  } else {
    in.coeffs = parse_laurent_list(ws.field(), coeffs);
  }
  if (in.coeffs.empty()) throw DomainError("--coeffs is empty");
  return in;
}

std::string numbered(const std::string& label, const std::vector<Laurent>& zs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < zs.size(); ++i) os << label << "[" << i << "] = " << zs[i].to_string() << "\n";
  return os.str();
}

// ---- subcommands -----------------------------------------------------------

struct ConstantsOpts {
  std::string kind = "bracket";
  std::int64_t i = 1;
  std::int64_t j = 0;
};

int cmd_constants(const Common& c, const ConstantsOpts& o, std::ostream& out) {
  const Workspace ws = make_workspace(c);
  const Constants& k = ws.constants();
  if (o.i < 0 || o.j < 0) throw DomainError("--i and --j must be nonnegative");
  const int i = static_cast<int>(o.i);
  Poly v(ws.field());
  if (o.kind == "bracket") v = k.bracket(i);
  else if (o.kind == "D") v = k.D(i);
  else if (o.kind == "L") v = k.L(i);
  else if (o.kind == "gamma") v = k.gamma(static_cast<std::uint64_t>(o.i));
  else if (o.kind == "binomial") v = k.binomial(i, static_cast<int>(o.j));
  else throw DomainError("unknown --kind '" + o.kind + "'");
  Json j = header("constants", ws);
  j["kind"] = o.kind;
  j["i"] = o.i;
  if (o.kind == "binomial") j["j"] = o.j;
  j["value"] = to_json(v);
  j["degree"] = v.degree();
  emit(out, c, j, v.to_string() + "\n");
  return kExitOk;
}

struct BasisOpts {
  std::string family = "f";
  std::uint64_t index = 0;
};

int cmd_basis(const Common& c, const BasisOpts& o, std::ostream& out) {
  const Workspace ws = make_workspace(c);
  const Constants& k = ws.constants();
  const int i = static_cast<int>(o.index);
  TPoly p(ws.field());
  if (o.family == "e") p = e_product(k, i);
  else if (o.family == "f") p = f(k, i).to_tpoly(ws.q());
  else if (o.family == "G") p = G(k, o.index);
  else if (o.family == "g") p = g(k, o.index);
  else if (o.family == "h") p = h(k, o.index);
  else if (o.family == "tau") p = tau_product(k, i);
  else throw DomainError("unknown --family '" + o.family + "'");
  const std::vector<Rational> beta = to_h_basis(k, p);
  const AbsValue norm = sup_norm(beta);

  Json j = header("basis", ws);
  j["family"] = o.family;
  j["index"] = o.index;
  j["value"] = to_json(p);
  Json hs = Json::array();
  for (const Rational& b : beta) hs.push_back(rational_json(b));
  j["h_expansion"] = hs;
  j["sup_norm"] = to_json(norm);

  std::ostringstream os;
  os << o.family << "_" << o.index << "(t) = " << p.to_string() << "\n";
  for (std::size_t m = 0; m < beta.size(); ++m) {
    if (!beta[m].is_zero()) os << "  h_" << m << ": " << rational_text(beta[m]) << "\n";
  }
  os << "sup norm: " << norm.to_string() << "\n";
  emit(out, c, j, os.str());
  return kExitOk;
}

struct ExpandOpts {
  std::string from = "q";
  std::string to = "carlitz";
  std::string coeffs;
  std::size_t length = 8;
};

int cmd_expand(const Common& c, const ExpandOpts& o, std::ostream& out) {
  const Workspace ws = make_workspace(c);
  const Input in = read_input(ws, o.from, o.coeffs);
  Json j = header("expand", ws);
  std::string text;
  if (o.to == "q") {
    const QExpansion u = in.as_q(ws);
    j["result"] = to_json(u);
    text = numbered("a", u.a);
  } else if (o.to == "carlitz") {
    const CarlitzExpansion u = in.as_carlitz(ws);
    j["result"] = to_json(u);
    text = numbered("c", u.c);
  } else if (o.to == "values") {
    const ValueTable u = in.kind == Kind::Q ? to_values(ws, in.as_q(ws), o.length)
                                            : to_values(ws, in.as_carlitz(ws), o.length);
    j["result"] = to_json(u);
    text = numbered("u(x^m), m", u.values);
  } else if (o.to == "h") {
    const std::vector<Laurent> ah = to_h(ws, in.as_q(ws));
    Json arr = Json::array();
    for (const Laurent& z : ah) arr.push_back(to_json(z));
    j["result"] = Json{{"kind", "h"}, {"coeffs", arr}};
    text = numbered("aH", ah);
  } else {
    throw DomainError("unknown --to '" + o.to + "'");
  }
  emit(out, c, j, text);
  return kExitOk;
}

struct ApplyOpts {
  std::string op = "delta";
  int k = 1;
  std::string from = "carlitz";
  std::string coeffs;
  std::string at;
};

template <class E>
E apply_op(const Workspace& ws, const std::string& op, int k, const E& u) {
  if (op == "delta") return delta(ws, u, k);
  if (op == "a+") return a_plus(ws, u);
  if (op == "a-") return a_minus(ws, u);
  if (op == "frobenius") return frobenius(ws, u);
  throw DomainError("unknown --op '" + op + "'");
}

int cmd_apply(const Common& c, const ApplyOpts& o, std::ostream& out) {
  const Workspace ws = make_workspace(c);
  const Input in = read_input(ws, o.from, o.coeffs);
  if (o.k < 0) throw DomainError("--k must be nonnegative");
  Json j = header("apply", ws);
  j["op"] = o.op;
  j["k"] = o.k;
  std::string text;
  if (o.op == "D") {
    if (o.at.empty()) throw DomainError("--op D needs --at");
    const Laurent t = series_arg(ws.field(), o.at);
    const Laurent v = dk_apply(ws, in.as_carlitz(ws), o.k, t);
    j["at"] = to_json(t);
    j["result"] = to_json(v);
    text = "D^" + std::to_string(o.k) + " u(" + t.to_string() + ") = " + v.to_string() + "\n";
  } else if (o.op == "S") {
    if (in.kind == Kind::Values) {
      const ValueTable u = indefinite_sum_values(ws, {in.coeffs});
      j["result"] = to_json(u);
      text = numbered("Su(x^m), m", u.values);
    } else {
      const CarlitzExpansion u = indefinite_sum(ws, in.as_carlitz(ws));
      j["result"] = to_json(u);
      text = numbered("c", u.c);
    }
  } else if (in.kind == Kind::Q) {
    const QExpansion u = apply_op(ws, o.op, o.k, QExpansion{in.coeffs});
    j["result"] = to_json(u);
    text = numbered("a", u.a);
  } else if (in.kind == Kind::Carlitz) {
    const CarlitzExpansion u = apply_op(ws, o.op, o.k, CarlitzExpansion{in.coeffs});
    j["result"] = to_json(u);
    text = numbered("c", u.c);
  } else {
    const ValueTable u = apply_op(ws, o.op, o.k, ValueTable{in.coeffs});
    j["result"] = to_json(u);
    text = numbered("u(x^m), m", u.values);
  }
  emit(out, c, j, text);
  return kExitOk;
}

struct RecoverOpts {
  std::string from = "q";
  std::string coeffs;
  std::optional<int> n;
  std::int64_t m_max = 16;
};

int cmd_recover(const Common& c, const RecoverOpts& o, std::ostream& out) {
  const Workspace ws = make_workspace(c);
  const QExpansion u = read_input(ws, o.from, o.coeffs).as_q(ws);
  if (o.m_max < 2) throw DomainError("--m-max must be at least 2");
  std::vector<int> ns;
  if (o.n) ns.push_back(*o.n);
  else
    for (std::size_t n = 0; n < u.a.size(); ++n) ns.push_back(static_cast<int>(n));

  Json j = header("recover", ws);
  j["m_max"] = o.m_max;
  Json rows = Json::array();
  std::ostringstream os;
  for (int n : ns) {
    const TaylorTrace tr = taylor_recover(ws, u, n, o.m_max);
    Json row{{"n", n}, {"expected", to_json(tr.expected)}, {"matches", tr.matches}};
    row["stabilized_m"] = tr.stabilized_m ? Json(*tr.stabilized_m) : Json(nullptr);
    row["value"] = tr.value ? to_json(*tr.value) : Json(nullptr);
    rows.push_back(row);
    os << "n=" << n << ": ";
    if (tr.stabilized_m) os << "stable from m=" << *tr.stabilized_m << ", " << tr.value->to_string();
    else os << "not stable by m=" << o.m_max;
    os << "; a^H_" << n << " = " << tr.expected.to_string() << "; " << (tr.matches ? "match" : "no match") << "\n";
  }
  j["rows"] = rows;
  emit(out, c, j, os.str());
  return kExitOk;
}

struct IntegrateOpts {
  std::optional<int> basis_index;
  std::string from = "carlitz";
  std::string coeffs;
  std::string method = "both";
  std::optional<std::int64_t> n_max;
};

int cmd_integrate(const Common& c, const IntegrateOpts& o, std::ostream& out) {
  const Workspace ws = make_workspace(c);
  if (o.basis_index.has_value() == !o.coeffs.empty()) throw DomainError("give exactly one of --basis-index, --coeffs");
  if (o.method != "closed" && o.method != "limit" && o.method != "both") {
    throw DomainError("unknown --method '" + o.method + "'");
  }
  CarlitzExpansion u;
  std::optional<Rational> exact;
  if (o.basis_index) {
    if (*o.basis_index < 0) throw DomainError("--basis-index must be nonnegative");
    u = basis_vector(ws, *o.basis_index);
    const Poly minus_one = Poly::constant(ws.field(), ws.field()->neg(1));
    exact = Rational(minus_one, ws.constants().bracket(*o.basis_index + 1));
  } else {
    u = read_input(ws, o.from, o.coeffs).as_carlitz(ws);
  }
  const std::int64_t n_max = o.n_max.value_or(ws.precision() + kLimitSlack);

  Json j = header("integrate", ws);
  j["method"] = o.method;
  std::ostringstream os;
  std::optional<Laurent> closed, limit;
  if (o.method != "limit") {
    closed = volkenborn(ws, u).value;
    j["closed"] = to_json(*closed);
    os << "closed form: " << closed->to_string() << "\n";
  }
  if (o.method != "closed") {
    const IntegralResult r = volkenborn_limit(ws, u, n_max);
    limit = r.value;
    Json trace = Json::array();
    for (const Laurent& z : r.trace) trace.push_back(to_json(z));
    j["limit"] = Json{{"value", to_json(r.value)}, {"n_max", n_max}, {"trace", trace}};
    j["limit"]["stabilized_n"] = r.stabilized_n ? Json(*r.stabilized_n) : Json(nullptr);
    os << "limit: " << r.value.to_string();
    if (r.stabilized_n) os << " (stable from n=" << *r.stabilized_n << " of " << n_max << ")\n";
    else os << " (not stable by n=" << n_max << ")\n";
  }
  if (closed && limit) {
    const LawCheck chk = compare("closed vs limit", *closed, *limit, ws.precision() - kGuard);
    j["agreement"] = Json{{"holds", chk.holds}, {"agreement", chk.agreement >= kInfinity ? Json(nullptr) : Json(chk.agreement)},
                          {"required", chk.required}};
    os << "agreement: " << (chk.holds ? "yes" : "no") << " (mod x^" << chk.required << ")\n";
  }
  if (exact) {
    j["exact"] = rational_json(*exact);
    os << "exact: " << rational_text(*exact) << "\n";
  }
  emit(out, c, j, os.str());
  return kExitOk;
}

struct CarlitzOpts {
  std::string fn = "log";
  std::string z;
  std::string s;
  std::string a = "x";
};

Json check_json(const LawCheck& chk) {
  Json j{{"name", chk.name},       {"holds", chk.holds},   {"vacuous", chk.vacuous},
         {"required", chk.required}, {"lhs", to_json(chk.lhs)}, {"rhs", to_json(chk.rhs)}};
  j["agreement"] = chk.agreement >= kInfinity ? Json(nullptr) : Json(chk.agreement);
  if (!chk.note.empty()) j["note"] = chk.note;
  return j;
}

int cmd_carlitz(const Common& c, const CarlitzOpts& o, std::ostream& out) {
  const Workspace ws = make_workspace(c);
  if (o.z.empty()) throw DomainError("--z is required");
  const Laurent z = series_arg(ws.field(), o.z);
  Json j = header("carlitz", ws);
  j["fn"] = o.fn;
  j["z"] = to_json(z);
  std::ostringstream os;
  auto value_out = [&](const SpecialValue& v) {
    j["value"] = to_json(v.value);
    j["function"] = v.function;
    j["argument"] = v.argument;
    os << v.function << "(" << v.argument << ") = " << v.value.to_string() << "\n";
  };
  auto report_out = [&](const IdentityReport& r) {
    Json checks = Json::array();
    for (const LawCheck& chk : r.checks) checks.push_back(check_json(chk));
    j["identity"] = r.name;
    j["holds"] = r.holds();
    j["checks"] = checks;
    os << r.name << ": " << (r.holds() ? "holds" : "FAILS") << "\n";
    for (const LawCheck& chk : r.checks) {
      os << "  " << (chk.holds ? "ok  " : "FAIL") << " " << chk.name;
      if (chk.vacuous) os << " (vacuous)";
      if (!chk.note.empty()) os << " [" << chk.note << "]";
      os << "\n";
    }
  };

  if (o.fn == "module") {
    if (o.s.empty()) throw DomainError("--fn module needs --s");
    const std::string s = o.s;
    std::optional<Poly> sp;
    try {
      sp = parse_poly(ws.field(), s);
    } catch (const FieldError&) {
      sp.reset();
    }
    value_out(sp ? carlitz_module(ws, *sp, z) : carlitz_module(ws, series_arg(ws.field(), s), z));
  } else if (o.fn == "log") {
    value_out(log_c(ws, z));
  } else if (o.fn == "exp") {
    value_out(exp_c(ws, z));
  } else if (o.fn == "goss") {
    report_out(goss_integral(ws, parse_poly(ws.field(), o.a), z));
  } else if (o.fn == "funceq") {
    report_out(log_functional_equation(ws, parse_poly(ws.field(), o.a), z));
  } else {
    throw DomainError("unknown --fn '" + o.fn + "'");
  }
  emit(out, c, j, os.str());
  if (j.contains("holds") && !j["holds"].get<bool>()) return kExitVerifyFailed;
  return kExitOk;
}

int cmd_verify(const Common& c, std::ostream& out) {
  VerifyConfig cfg;
  if (c.precision) cfg.precision = *c.precision;
  cfg.seed = c.seed;
  cfg.budget.max_degree = c.budget;
  if (cfg.precision < 4) throw DomainError("--precision must be at least 4 for verify");

  std::vector<CheckResult> results;
  Json j{{"schema", kSchema}, {"command", "verify"}, {"precision", cfg.precision}, {"seed", cfg.seed}};
  if (c.field_given()) {
    const FieldPtr f = make_field(c);
    j["field"] = field_json(*f);
    results = run_all(f, cfg);
  } else {
    j["field"] = nullptr;
    results = run_suite(cfg);
  }

  Json checks = Json::array();
  std::ostringstream os;
  int failed = 0;
  for (const CheckResult& r : results) {
    checks.push_back(Json{{"name", r.name}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}});
    os << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  j["checks"] = checks;
  j["passed"] = static_cast<int>(results.size()) - failed;
  j["failed"] = failed;
  os << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " checks passed\n";
  emit(out, c, j, os.str());
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

void add_common(CLI::App& app, Common& c) {
  app.add_option("--q", c.q, "field order q (prime power)");
  app.add_option("--p", c.p, "field characteristic");
  app.add_option("--gamma", c.gamma, "extension degree, q = p^gamma");
  app.add_option("--modulus", c.modulus, "modulus coefficients over F_p, constant term first, e.g. 1,1,1");
  app.add_option("--precision", c.precision, "working precision N (coefficients of x)");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", c.seed, "seed for randomized checks");
  app.add_option("--budget", c.budget, "largest x-degree allowed for a constant");
}

void add_input(CLI::App* sub, std::string& from, std::string& coeffs, const std::string& default_from) {
  from = default_from;
  sub->add_option("--from", from, "input representation")->check(CLI::IsMember({"q", "carlitz", "values"}));
  sub->add_option("--coeffs", coeffs, "';'-separated coefficients, or a JSON expansion");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact F_q-linear calculus over F_q((x))", "fqcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  add_common(app, common);

  ConstantsOpts co;
  auto* s_const = app.add_subcommand("constants", "print [i], D_i, L_i, Gamma_j or a Carlitz binomial");
  s_const->add_option("--kind", co.kind)->check(CLI::IsMember({"bracket", "D", "L", "gamma", "binomial"}));
  s_const->add_option("--i", co.i, "index i (or j for gamma)");
  s_const->add_option("--j", co.j, "lower index of the binomial");

  BasisOpts bo;
  auto* s_basis = app.add_subcommand("basis", "print a basis polynomial and its h-basis expansion");
  s_basis->add_option("--family", bo.family)->check(CLI::IsMember({"e", "f", "G", "g", "h", "tau"}));
  s_basis->add_option("--index", bo.index);

  ExpandOpts eo;
  auto* s_expand = app.add_subcommand("expand", "convert between q-expansion, Carlitz expansion and values");
  add_input(s_expand, eo.from, eo.coeffs, "q");
  s_expand->add_option("--to", eo.to)->check(CLI::IsMember({"q", "carlitz", "values", "h"}));
  s_expand->add_option("--length", eo.length, "number of values for --to values");

  ApplyOpts ao;
  auto* s_apply = app.add_subcommand("apply", "apply Delta^k, a+, a-, Frobenius, D^k or the indefinite sum");
  add_input(s_apply, ao.from, ao.coeffs, "carlitz");
  s_apply->add_option("--op", ao.op)->check(CLI::IsMember({"delta", "a+", "a-", "frobenius", "D", "S"}));
  s_apply->add_option("--k", ao.k, "order for delta and D");
  s_apply->add_option("--at", ao.at, "evaluation point for D");

  RecoverOpts ro;
  auto* s_recover = app.add_subcommand("recover", "recover normalized Taylor coefficients from differences");
  add_input(s_recover, ro.from, ro.coeffs, "q");
  s_recover->add_option("--n", ro.n, "single coefficient index");
  s_recover->add_option("--m-max", ro.m_max, "last m in the sweep");

  IntegrateOpts io;
  auto* s_int = app.add_subcommand("integrate", "Volkenborn-type integral by closed form and limit");
  s_int->add_option("--basis-index", io.basis_index, "integrate f_n");
  add_input(s_int, io.from, io.coeffs, "carlitz");
  s_int->add_option("--method", io.method)->check(CLI::IsMember({"closed", "limit", "both"}));
  s_int->add_option("--n-max", io.n_max, "length of the limit trace");

  CarlitzOpts cao;
  auto* s_carlitz = app.add_subcommand("carlitz", "Carlitz module, logarithm, exponential and their identities");
  s_carlitz->add_option("--fn", cao.fn)->check(CLI::IsMember({"module", "log", "exp", "goss", "funceq"}));
  s_carlitz->add_option("--z", cao.z, "argument z (text or JSON series)");
  s_carlitz->add_option("--s", cao.s, "module parameter s");
  s_carlitz->add_option("--a", cao.a, "polynomial a for goss and funceq");

  auto* s_verify = app.add_subcommand("verify", "run the identity suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*s_const) return cmd_constants(common, co, out);
    if (*s_basis) return cmd_basis(common, bo, out);
    if (*s_expand) return cmd_expand(common, eo, out);
    if (*s_apply) return cmd_apply(common, ao, out);
    if (*s_recover) return cmd_recover(common, ro, out);
    if (*s_int) return cmd_integrate(common, io, out);
    if (*s_carlitz) return cmd_carlitz(common, cao, out);
    if (*s_verify) return cmd_verify(common, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Json::exception& e) {
    err << "error: bad JSON input: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace fqcalc::cli
