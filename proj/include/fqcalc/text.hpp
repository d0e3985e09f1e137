#pragma once

// Text and JSON forms of polynomials, series and expansions.
//
// Series text: "x^-1 + 1 + 2*x + (u+1)*x^3 (mod x^64)"; a trailing
// "(mod x^N)" or "+ O(x^N)" marks a truncated series, otherwise it is exact.
// Lists of series are separated by ';'.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fqcalc/basis.hpp"
#include "fqcalc/fqlinear.hpp"
#include "fqcalc/laurent.hpp"
#include "fqcalc/poly.hpp"
#include "fqcalc/rational.hpp"

namespace fqcalc {

using Json = nlohmann::json;

Laurent parse_laurent(const FieldPtr& field, std::string_view text);
/// FieldError when the text has negative exponents or a precision marker.
Poly parse_poly(const FieldPtr& field, std::string_view text);
std::vector<Laurent> parse_laurent_list(const FieldPtr& field, std::string_view text);

/// {"valuation": v, "coeffs": [...], "precision": N}; null valuation for
/// zero, null precision for exact values.
Json to_json(const Laurent& z);
Laurent laurent_from_json(const FieldPtr& field, const Json& j);

/// {"text": ..., "coeffs": [...] (ascending)}.
Json to_json(const Poly& p);
Json to_json(const Rational& r);
/// "0", "1" or "q^e" plus the exponent.
Json to_json(const AbsValue& a);
Json to_json(const TPoly& p);
Json to_json(const LinearTPoly& p);

Json to_json(const QExpansion& u);
Json to_json(const CarlitzExpansion& u);
Json to_json(const ValueTable& u);

std::string list_text(const std::vector<Laurent>& zs);

}  // namespace fqcalc
