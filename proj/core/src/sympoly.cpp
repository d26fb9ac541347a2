#include "tbern/sympoly.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace tbern {

std::string var_name(Var v)
{
    switch (v) {
    case Var::y: return "y";
    case Var::y1: return "y1";
    case Var::y2: return "y2";
    case Var::y3: return "y3";
    }
    return "?";
}

std::string to_string(const Monomial& m)
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (m[i] == 0) {
            continue;
        }
        if (!first) {
            out << '*';
        }
        first = false;
        out << var_name(static_cast<Var>(i));
        if (m[i] > 1) {
            out << '^' << static_cast<unsigned>(m[i]);
        }
    }
    if (first) {
        out << '1';
    }
    return out.str();
}

SymPoly::SymPoly(const CycloNumber& constant) : field_(constant.field())
{
    add_term(Monomial{}, constant);
}

SymPoly SymPoly::variable(Var v, const FieldPtr& field)
{
    Monomial m{};
    m[static_cast<std::size_t>(v)] = 1;
    return monomial(m, CycloNumber::one(field));
}

SymPoly SymPoly::monomial(const Monomial& m, const CycloNumber& coeff)
{
    SymPoly p(coeff.field());
    p.add_term(m, coeff);
    return p;
}

SymPoly SymPoly::linear(Var v, const Rational& scale, const Rational& shift, const FieldPtr& field)
{
    SymPoly p(field);
    Monomial m{};
    p.add_term(m, CycloNumber(field, shift));
    m[static_cast<std::size_t>(v)] = 1;
    p.add_term(m, CycloNumber(field, scale));
    return p;
}

void SymPoly::adopt_field(const FieldPtr& other)
{
    if (!other) {
        return;
    }
    if (!field_) {
        field_ = other;
    } else if (field_ != other) {
        throw std::invalid_argument("field mismatch");
    }
}

void SymPoly::add_term(const Monomial& m, const CycloNumber& c)
{
    adopt_field(c.field());
    if (c.is_zero()) {
        return;
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

std::optional<CycloNumber> SymPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        return std::nullopt;
    }
    return it->second;
}

unsigned SymPoly::degree_in(Var v) const
{
    unsigned deg = 0;
    for (const auto& [m, c] : terms_) {
        deg = std::max<unsigned>(deg, m[static_cast<std::size_t>(v)]);
    }
    return deg;
}

std::vector<Var> SymPoly::variables() const
{
    std::vector<Var> out;
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (degree_in(static_cast<Var>(i)) > 0) {
            out.push_back(static_cast<Var>(i));
        }
    }
    return out;
}

SymPoly& SymPoly::operator+=(const SymPoly& other)
{
    adopt_field(other.field_);
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other)
{
    adopt_field(other.field_);
    for (const auto& [m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b)
{
    SymPoly out(a.field_ ? a.field_ : b.field_);
    out.add_product(a, b);
    return out;
}

void SymPoly::add_product(const SymPoly& a, const SymPoly& b)
{
    adopt_field(a.field_);
    adopt_field(b.field_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (std::size_t i = 0; i < kVarCount; ++i) {
                const unsigned e = static_cast<unsigned>(ma[i]) + mb[i];
                if (e > 255) {
                    throw std::overflow_error("SymPoly exponent overflow");
                }
                m[i] = static_cast<std::uint8_t>(e);
            }
            add_term(m, ca * cb);
        }
    }
}

void SymPoly::add_scaled(const SymPoly& p, const CycloNumber& c)
{
    adopt_field(p.field_);
    adopt_field(c.field());
    if (c.is_zero()) {
        return;
    }
    for (const auto& [m, coeff] : p.terms_) {
        add_term(m, coeff * c);
    }
}

SymPoly& SymPoly::operator*=(const SymPoly& other)
{
    *this = *this * other;
    return *this;
}

SymPoly& SymPoly::operator*=(const CycloNumber& scalar)
{
    adopt_field(scalar.field());
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

SymPoly& SymPoly::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

SymPoly SymPoly::operator-() const
{
    SymPoly out(*this);
    for (auto& [m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

SymPoly SymPoly::pow(unsigned exponent) const
{
    if (!field_) {
        throw std::logic_error("pow of a field-less zero polynomial");
    }
    SymPoly result(CycloNumber::one(field_));
    for (unsigned i = 0; i < exponent; ++i) {
        result *= *this;
    }
    return result;
}

SymPoly SymPoly::embed(const FieldPtr& target) const
{
    SymPoly out(target);
    for (const auto& [m, c] : terms_) {
        out.add_term(m, c.embed(target));
    }
    return out;
}

std::string SymPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << '(' << c.to_string() << ')';
        if (m != Monomial{}) {
            out << '*' << tbern::to_string(m);
        }
    }
    return out.str();
}

std::optional<TermDifference> first_difference(const SymPoly& a, const SymPoly& b)
{
    std::set<Monomial> keys;
    for (const auto& [m, c] : a.terms()) {
        keys.insert(m);
    }
    for (const auto& [m, c] : b.terms()) {
        keys.insert(m);
    }
    for (const auto& m : keys) {
        auto ca = a.coefficient(m);
        auto cb = b.coefficient(m);
        if (ca.has_value() != cb.has_value() || (ca && !(*ca == *cb))) {
            return TermDifference{m, ca, cb};
        }
    }
    return std::nullopt;
}

} // namespace tbern
