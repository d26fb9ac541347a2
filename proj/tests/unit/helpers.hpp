#pragma once

#include "tbern/special_functions.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace tbern::test {

inline Rational q(const char* text)
{
    return parse_rational(text);
}

inline CycloNumber cyclo(std::uint32_t order, std::initializer_list<const char*> coeffs)
{
    std::vector<Rational> values;
    for (const char* c : coeffs) {
        values.push_back(parse_rational(c));
    }
    return CycloNumber(CycloField::of(order), std::move(values));
}

inline DirichletCharacter character(long d, std::size_t index)
{
    return enumerate_characters(d).at(index);
}

inline TwistContext context(long d, std::size_t index, std::uint32_t xi_order, long xi_exp = 1)
{
    return TwistContext(character(d, index), xi_order, xi_exp);
}

} // namespace tbern::test
