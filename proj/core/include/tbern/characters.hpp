#pragma once

#include "tbern/cyclotomic.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace tbern {

struct UnitGenerator {
    long residue;
    long order;

    friend bool operator==(const UnitGenerator&, const UnitGenerator&) = default;
};

// (Z/dZ)^* as a product of cyclic groups, one generator per factor.
//
// Odd prime powers contribute one primitive root, 4 contributes 3, and 2^k
// with k >= 3 contributes -1 (order 2) and 3 (order 2^{k-2}). Composite
// moduli are assembled by CRT, each generator lifted to be 1 modulo the
// other prime-power factors.
class UnitGroupStructure {
public:
    explicit UnitGroupStructure(long modulus);

    long modulus() const noexcept { return modulus_; }
    const std::vector<UnitGenerator>& generators() const noexcept { return generators_; }
    long size() const noexcept { return size_; }
    // lcm of the generator orders.
    long exponent() const noexcept { return exponent_; }

    // Exponent vector of a unit residue with respect to generators();
    // nullopt when gcd(a, d) > 1.
    const std::vector<long>* discrete_log(long a) const;

private:
    long modulus_;
    long size_;
    long exponent_;
    std::vector<UnitGenerator> generators_;
    std::vector<std::vector<long>> logs_;
    std::vector<bool> is_unit_;
};

UnitGroupStructure unit_group(long modulus);

// Dirichlet character mod d, stored as exponents against the generator
// presentation: chi(g_i) = zeta_{o_i}^{e_i}.
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group, std::vector<long> exponents);

    long modulus() const noexcept { return group_->modulus(); }
    const std::vector<long>& exponents() const noexcept { return exponents_; }
    const UnitGroupStructure& group() const noexcept { return *group_; }
    // Least m with chi^m principal; values live in Q(zeta_m).
    long value_order() const noexcept { return value_order_; }
    long conductor() const noexcept { return conductor_; }
    bool is_primitive() const noexcept { return conductor_ == modulus(); }
    bool is_principal() const noexcept { return value_order_ == 1; }
    bool is_real() const noexcept { return value_order_ <= 2; }

    // chi(a) = zeta_m^E; nullopt when chi(a) = 0. Periodic mod d.
    std::optional<long> value_exponent(long a) const;

    // chi(a) in Q(zeta_m). chi(0) = 1 when d = 1 and 0 otherwise.
    CycloNumber evaluate(long a) const;

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b)
    {
        return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
    }

private:
    long compute_conductor() const;

    std::shared_ptr<const UnitGroupStructure> group_;
    std::vector<long> exponents_;
    long value_order_;
    long conductor_;
};

// All phi(d) characters mod d. The order is deterministic: exponent vectors in
// lexicographic order (first generator most significant), so index 0 is always
// the principal character.
std::vector<DirichletCharacter> enumerate_characters(long modulus);

inline long conductor(const DirichletCharacter& chi) { return chi.conductor(); }
inline CycloNumber evaluate(const DirichletCharacter& chi, long a) { return chi.evaluate(a); }

DirichletCharacter principal_character(long modulus);

} // namespace tbern
