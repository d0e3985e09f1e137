#include "fqcalc/text.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace fqcalc {

namespace {

std::string squeeze(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  return s;
}

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

std::int64_t parse_int(const std::string& s, std::string_view context) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw FieldError("bad integer '" + s + "' in '" + std::string(context) + "'");
  return v;
}

// Strips a trailing "(mod x^N)" or "+O(x^N)" and returns N.
std::optional<std::int64_t> take_precision(std::string& s, std::string_view context) {
  for (const char* open : {"(modx^", "O(x^"}) {
    const std::size_t at = s.rfind(open);
    if (at == std::string::npos || !ends_with(s, ")")) continue;
    const std::size_t start = at + std::string(open).size();
    const std::int64_t n = parse_int(s.substr(start, s.size() - 1 - start), context);
    s.erase(at);
    if (std::string(open) == "O(x^") {
      if (!s.empty() && s.back() == '+') s.pop_back();
    }
    return n;
  }
  return std::nullopt;
}

std::vector<std::pair<int, std::string>> split_terms(const std::string& s, std::string_view context) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0;
  int sign = 1;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw FieldError("unbalanced parentheses in '" + std::string(context) + "'");
    const bool exponent_sign = i > 0 && s[i - 1] == '^';
    if (depth == 0 && (ch == '+' || ch == '-') && !exponent_sign) {
      if (!cur.empty()) out.emplace_back(sign, cur);
      else if (i > 0) throw FieldError("empty term in '" + std::string(context) + "'");
      cur.clear();
      sign = ch == '-' ? -1 : 1;
      continue;
    }
    cur += ch;
  }
  if (depth != 0) throw FieldError("unbalanced parentheses in '" + std::string(context) + "'");
  if (cur.empty()) throw FieldError("empty term in '" + std::string(context) + "'");
  out.emplace_back(sign, cur);
  return out;
}

Code parse_coeff(const FqContext& f, std::string c, std::string_view context) {
  if (!c.empty() && c.back() == '*') c.pop_back();
  if (c.empty()) return 1;
  if (c.front() == '(' && c.back() == ')') c = c.substr(1, c.size() - 2);
  try {
    return f.parse(c);
  } catch (const FieldError&) {
    throw FieldError("bad coefficient '" + c + "' in '" + std::string(context) + "'");
  }
}

std::map<std::int64_t, Code> parse_terms(const FieldPtr& field, const std::string& body, std::string_view context) {
  std::map<std::int64_t, Code> terms;
  if (body.empty() || body == "0") return terms;
  const FqContext& f = *field;
  for (const auto& [sign, term] : split_terms(body, context)) {
    int depth = 0;
    std::size_t xpos = std::string::npos;
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '(') ++depth;
      if (term[i] == ')') --depth;
      if (depth == 0 && term[i] == 'x') {
        xpos = i;
        break;
      }
    }
    Code c;
    std::int64_t e = 0;
    if (xpos == std::string::npos) {
      c = parse_coeff(f, term, context);
    } else {
      c = parse_coeff(f, term.substr(0, xpos), context);
      const std::string rest = term.substr(xpos + 1);
      if (rest.empty()) e = 1;
      else if (rest[0] == '^') e = parse_int(rest.substr(1), context);
      else throw FieldError("unexpected '" + rest + "' in '" + std::string(context) + "'");
    }
    if (sign < 0) c = f.neg(c);
    terms[e] = f.add(terms[e], c);
  }
  return terms;
}

Json coeff_list(const FqContext& f, const std::vector<Code>& cs) {
  Json arr = Json::array();
  for (Code c : cs) arr.push_back(f.to_string(c));
  return arr;
}

}  // namespace

Laurent parse_laurent(const FieldPtr& field, std::string_view text) {
  std::string s = squeeze(text);
  const auto prec = take_precision(s, text);
  auto terms = parse_terms(field, s, text);
  std::vector<Code> coeffs;
  std::int64_t v = 0;
  bool have = false;
  for (const auto& [e, c] : terms) {
    if (c == 0 || (prec && e >= *prec)) continue;
    if (!have) {
      v = e;
      have = true;
    }
    coeffs.resize(static_cast<std::size_t>(e - v + 1), 0);
    coeffs[static_cast<std::size_t>(e - v)] = c;
  }
  if (!have) return prec ? Laurent::zero_mod(field, *prec) : Laurent::exact_zero(field);
  return Laurent::from_coeffs(field, v, std::move(coeffs), prec);
}

Poly parse_poly(const FieldPtr& field, std::string_view text) {
  std::string s = squeeze(text);
  if (take_precision(s, text)) throw FieldError("'" + std::string(text) + "' is a truncated series, not a polynomial");
  const auto terms = parse_terms(field, s, text);
  std::vector<Code> coeffs;
  for (const auto& [e, c] : terms) {
    if (e < 0) throw FieldError("'" + std::string(text) + "' has a negative exponent");
    if (c == 0) continue;
    coeffs.resize(std::max(coeffs.size(), static_cast<std::size_t>(e) + 1), 0);
    coeffs[static_cast<std::size_t>(e)] = c;
  }
  return Poly(field, std::move(coeffs));
}

std::vector<Laurent> parse_laurent_list(const FieldPtr& field, std::string_view text) {
  std::vector<Laurent> out;
  std::size_t start = 0;
  const std::string s(text);
  if (squeeze(s).empty()) return out;
  while (true) {
    const std::size_t semi = s.find(';', start);
    out.push_back(parse_laurent(field, s.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

Json to_json(const Laurent& z) {
  Json j;
  const auto& f = *z.field();
  if (z.is_zero()) {
    j["valuation"] = nullptr;
    j["coeffs"] = Json::array();
  } else {
    j["valuation"] = z.valuation();
    j["coeffs"] = coeff_list(f, z.coeffs());
  }
  if (z.is_exact()) j["precision"] = nullptr;
  else j["precision"] = *z.precision();
  j["text"] = z.to_string();
  return j;
}

Laurent laurent_from_json(const FieldPtr& field, const Json& j) {
  if (j.is_string()) return parse_laurent(field, j.get<std::string>());
  std::optional<std::int64_t> prec;
  if (j.contains("precision") && !j.at("precision").is_null()) prec = j.at("precision").get<std::int64_t>();
  const Json& v = j.at("valuation");
  if (v.is_null()) return prec ? Laurent::zero_mod(field, *prec) : Laurent::exact_zero(field);
  std::vector<Code> coeffs;
  for (const auto& c : j.at("coeffs")) {
    coeffs.push_back(c.is_string() ? field->parse(c.get<std::string>()) : field->from_int(c.get<long long>()));
  }
  return Laurent::from_coeffs(field, v.get<std::int64_t>(), std::move(coeffs), prec);
}

Json to_json(const Poly& p) { return Json{{"text", p.to_string()}, {"coeffs", coeff_list(*p.field(), p.coeffs())}}; }

Json to_json(const Rational& r) {
  return Json{{"text", r.to_string()}, {"num", to_json(r.num)}, {"den", to_json(r.den)}};
}

Json to_json(const AbsValue& a) {
  if (a.zero) return Json{{"text", "0"}, {"exponent", nullptr}};
  return Json{{"text", a.to_string()}, {"exponent", a.exponent}};
}

Json to_json(const TPoly& p) {
  Json num = Json::array();
  for (const Poly& c : p.num) num.push_back(to_json(c));
  return Json{{"text", p.to_string()}, {"num", num}, {"den", to_json(p.den)}};
}

Json to_json(const LinearTPoly& p) {
  Json num = Json::array();
  for (const Poly& c : p.num) num.push_back(to_json(c));
  return Json{{"text", p.to_string()}, {"num", num}, {"den", to_json(p.den)}};
}

namespace {
Json series_list(const std::vector<Laurent>& zs) {
  Json arr = Json::array();
  for (const Laurent& z : zs) arr.push_back(to_json(z));
  return arr;
}
}  // namespace

Json to_json(const QExpansion& u) { return Json{{"kind", "q"}, {"coeffs", series_list(u.a)}}; }
Json to_json(const CarlitzExpansion& u) { return Json{{"kind", "carlitz"}, {"coeffs", series_list(u.c)}}; }
Json to_json(const ValueTable& u) { return Json{{"kind", "values"}, {"coeffs", series_list(u.values)}}; }

std::string list_text(const std::vector<Laurent>& zs) {
  std::string out;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (i) out += "; ";
    out += zs[i].to_string();
  }
  return out;
}

}  // namespace fqcalc
