#pragma once

#include "tbern/cyclotomic.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tbern {

// The symbolic variables used across the identities: a single shared y, and
// y1, y2, y3 for the three-slot expressions.
enum class Var : std::uint8_t { y = 0, y1 = 1, y2 = 2, y3 = 3 };

inline constexpr std::size_t kVarCount = 4;

// Exponents of (y, y1, y2, y3).
using Monomial = std::array<std::uint8_t, kVarCount>;

std::string var_name(Var v);
std::string to_string(const Monomial& m);

// Multivariate polynomial in y, y1, y2, y3 with cyclotomic coefficients.
// Zero coefficients are never stored, so equality is term-by-term identity.
class SymPoly {
public:
    SymPoly() = default;
    explicit SymPoly(FieldPtr field) : field_(std::move(field)) {}
    explicit SymPoly(const CycloNumber& constant);

    static SymPoly variable(Var v, const FieldPtr& field);
    static SymPoly monomial(const Monomial& m, const CycloNumber& coeff);
    // scale * v + shift
    static SymPoly linear(Var v, const Rational& scale, const Rational& shift, const FieldPtr& field);

    // Null for a zero polynomial built without a field.
    const FieldPtr& field() const noexcept { return field_; }
    const std::map<Monomial, CycloNumber>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    // Coefficient of m; nullopt when absent (i.e. zero).
    std::optional<CycloNumber> coefficient(const Monomial& m) const;
    // Largest exponent of v over all terms.
    unsigned degree_in(Var v) const;
    std::vector<Var> variables() const;

    SymPoly& operator+=(const SymPoly& other);
    SymPoly& operator-=(const SymPoly& other);
    SymPoly& operator*=(const SymPoly& other);
    SymPoly& operator*=(const CycloNumber& scalar);
    SymPoly& operator*=(const Rational& scalar);
    SymPoly operator-() const;

    // this += a * b
    void add_product(const SymPoly& a, const SymPoly& b);
    // this += c * p
    void add_scaled(const SymPoly& p, const CycloNumber& c);

    SymPoly pow(unsigned exponent) const;
    SymPoly embed(const FieldPtr& target) const;

    std::string to_string() const;

    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(SymPoly a, const CycloNumber& s) { return a *= s; }
    friend SymPoly operator*(SymPoly a, const Rational& s) { return a *= s; }
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

private:
    void adopt_field(const FieldPtr& other);
    void add_term(const Monomial& m, const CycloNumber& c);

    FieldPtr field_;
    std::map<Monomial, CycloNumber> terms_;
};

// First monomial (in monomial order) where a and b differ, with both
// coefficients (nullopt meaning zero).
struct TermDifference {
    Monomial monomial;
    std::optional<CycloNumber> lhs;
    std::optional<CycloNumber> rhs;
};
std::optional<TermDifference> first_difference(const SymPoly& a, const SymPoly& b);

} // namespace tbern
