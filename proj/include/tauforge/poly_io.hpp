#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tauforge/poly.hpp"

namespace tauforge {

/// "t3", or "t[2]3" when the component must be spelled out.
std::string var_name(VarId v, bool show_component);

/// Canonical text form: terms in descending monomial order, e.g. "t3 + t1*t2 + 1/6*t1^3".
/// Components are written as t[a]k whenever the ambient count exceeds 1 or a != 1.
std::string to_text(const Poly& p);

/// Inverse of to_text. Accepts sums of products of rationals and variables with
/// optional ^exponent; whitespace is ignored.
Poly parse_poly_text(std::string_view text);

/// {"terms":[{"coeff":"p/q","monomial":[["T",a,k,exp],...]},...]} plus "components"
/// when the ambient count is fixed. Terms are listed in ascending monomial order.
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

/// Rational from a JSON string "p/q" or an integer.
Rational rational_from_json(const nlohmann::json& j);

} // namespace tauforge
