#include "tbern/serialize.hpp"

#include <stdexcept>

namespace tbern {

Json to_json(const Rational& q)
{
    return to_string(q);
}

Rational rational_from_json(const Json& j)
{
    if (!j.is_string()) {
        throw std::invalid_argument("rational must be a string");
    }
    return parse_rational(j.get<std::string>());
}

Json to_json(const CycloNumber& c)
{
    Json coeffs = Json::array();
    for (const Rational& q : c.coeffs()) {
        coeffs.push_back(to_json(q));
    }
    return Json{{"L", c.order()}, {"coeffs", std::move(coeffs)}};
}

CycloNumber cyclo_from_json(const Json& j)
{
    const auto order = j.at("L").get<std::uint32_t>();
    if (order == 0) {
        throw std::invalid_argument("field order must be positive");
    }
    const FieldPtr field = CycloField::of(order);
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != field->degree()) {
        throw std::invalid_argument("coefficient count does not match the field degree");
    }
    std::vector<Rational> values;
    values.reserve(coeffs.size());
    for (const Json& q : coeffs) {
        values.push_back(rational_from_json(q));
    }
    return CycloNumber(field, std::move(values));
}

Json to_json(const DirichletCharacter& chi)
{
    return Json{{"d", chi.modulus()},
                {"exponents", chi.exponents()},
                {"conductor", chi.conductor()},
                {"order", chi.value_order()}};
}

Json to_json(const SymPoly& p)
{
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        out.push_back(Json{{"monomial", to_string(m)}, {"coeff", to_json(c)}});
    }
    return out;
}

Json to_json(const Valuation& v)
{
    return v.to_string();
}

Json to_json(const TheoremReport& report)
{
    Json detail{{"message", report.detail}};
    if (report.printed_form_holds) {
        detail["printed_form_holds"] = *report.printed_form_holds;
    }
    Json exprs = Json::array();
    for (std::size_t i = 0; i < report.expressions.size(); ++i) {
        exprs.push_back(Json{{"label", report.labels[i]}, {"value", to_json(report.expressions[i])}});
    }
    detail["expressions"] = std::move(exprs);
    return Json{{"theorem", report.theorem},
                {"params",
                 {{"context", report.context}, {"w", report.w}, {"n", report.n}}},
                {"verdict", report.pass ? "pass" : "fail"},
                {"detail", std::move(detail)}};
}

} // namespace tbern
