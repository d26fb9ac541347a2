#pragma once

#include "tbern/characters.hpp"
#include "tbern/cyclotomic.hpp"
#include "tbern/padic.hpp"
#include "tbern/symmetry.hpp"
#include "tbern/sympoly.hpp"

#include <nlohmann/json.hpp>

namespace tbern {

using Json = nlohmann::ordered_json;

// Rationals are strings "p/q" (or "p"), never floats.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// {"L": int, "coeffs": ["p/q", ...]}
Json to_json(const CycloNumber& c);
CycloNumber cyclo_from_json(const Json& j);

// {"d": int, "exponents": [int], "conductor": int, "order": int}
Json to_json(const DirichletCharacter& chi);

// [{"monomial": "y1^2*y2", "coeff": CycloNumber}, ...] in monomial order.
Json to_json(const SymPoly& p);

Json to_json(const Valuation& v);
Json to_json(const TheoremReport& report);

} // namespace tbern
