#pragma once

#include "tbern/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tbern {

// Coefficients of the L-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(std::uint32_t order);

long euler_phi(long n);

class CycloField;
using FieldPtr = std::shared_ptr<const CycloField>;

// Q(zeta_L) presented as Q[x]/Phi_L(x). Fields are interned: there is one
// instance per order, so two FieldPtr compare equal iff the orders agree.
class CycloField {
public:
    static FieldPtr of(std::uint32_t order);

    std::uint32_t order() const noexcept { return order_; }
    std::size_t degree() const noexcept { return modulus_.size() - 1; }
    const std::vector<long>& modulus() const noexcept { return modulus_; }

    // zeta^k reduced modulo Phi_L, as degree() integer coefficients.
    const std::vector<long>& power(std::uint64_t k) const { return powers_[k % order_]; }

    CycloField(const CycloField&) = delete;
    CycloField& operator=(const CycloField&) = delete;

private:
    explicit CycloField(std::uint32_t order);

    std::uint32_t order_;
    std::vector<long> modulus_;
    std::vector<std::vector<long>> powers_;
};

FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b);

// Element of Q(zeta_L): coefficients of 1, zeta, ..., zeta^{phi(L)-1}.
class CycloNumber {
public:
    explicit CycloNumber(FieldPtr field);
    CycloNumber(FieldPtr field, Rational value);
    CycloNumber(FieldPtr field, std::vector<Rational> coeffs);

    static CycloNumber zero(const FieldPtr& field) { return CycloNumber(field); }
    static CycloNumber one(const FieldPtr& field) { return CycloNumber(field, Rational(1)); }
    // zeta_L^k, k taken modulo L.
    static CycloNumber root(const FieldPtr& field, long k);

    const FieldPtr& field() const noexcept { return field_; }
    std::uint32_t order() const noexcept { return field_->order(); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    std::optional<Rational> as_rational() const;

    CycloNumber& operator+=(const CycloNumber& other);
    CycloNumber& operator-=(const CycloNumber& other);
    CycloNumber& operator*=(const CycloNumber& other);
    CycloNumber& operator/=(const CycloNumber& other);
    CycloNumber& operator*=(const Rational& scalar);
    CycloNumber& operator/=(const Rational& scalar);

    // this += a * b without a temporary product allocation on the rational path.
    void add_product(const CycloNumber& a, const CycloNumber& b);

    CycloNumber operator-() const;

    CycloNumber inverse() const;
    CycloNumber pow(long exponent) const;
    // Galois automorphism zeta -> zeta^k, gcd(k, L) = 1.
    CycloNumber conjugate(long k) const;
    // Product of all Galois conjugates.
    Rational norm() const;

    // Image under zeta_L -> zeta_M^{M/L}; M must be a multiple of L unless
    // the value is rational.
    CycloNumber embed(const FieldPtr& target) const;

    // "c0 + c1*z + c2*z^2 ..." with z = zeta_L.
    std::string to_string() const;

    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
    friend CycloNumber operator*(CycloNumber a, const Rational& s) { return a *= s; }
    friend CycloNumber operator*(const Rational& s, CycloNumber a) { return a *= s; }
    friend CycloNumber operator/(CycloNumber a, const Rational& s) { return a /= s; }

    // Values in different fields are compared inside their join.
    friend bool operator==(const CycloNumber& a, const CycloNumber& b);

private:
    void require_same_field(const CycloNumber& other) const;

    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

inline CycloNumber cyclo_root(const FieldPtr& field, long k)
{
    return CycloNumber::root(field, k);
}

// Embeds both operands into Q(zeta_lcm(L1, L2)).
std::pair<CycloNumber, CycloNumber> field_join(const CycloNumber& a, const CycloNumber& b);

// Smallest j > 0 with value^j = 1, when value is a root of unity of order
// dividing the field order; nullopt otherwise.
std::optional<std::uint32_t> root_of_unity_order(const CycloNumber& value);

} // namespace tbern
