#pragma once

#include "tbern/cyclotomic.hpp"
#include "tbern/special_functions.hpp"

#include <string>
#include <vector>

namespace tbern {

// Value of the valuation v with v(p) = 1: a rational, or +infinity for zero.
struct Valuation {
    bool infinite = false;
    Rational value;

    static Valuation infinity() { return Valuation{true, Rational(0)}; }
    static Valuation of(Rational v) { return Valuation{false, std::move(v)}; }

    // "a/b", "a", or "inf".
    std::string to_string() const;

    friend bool operator==(const Valuation& a, const Valuation& b)
    {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator<(const Valuation& a, const Valuation& b)
    {
        if (a.infinite) {
            return false;
        }
        return b.infinite || a.value < b.value;
    }
};

Valuation operator+(const Valuation& a, const Valuation& b);

// Q(zeta_{p^s}) with ramification index e = phi(p^s) and uniformizer
// pi = 1 - zeta; s = 0 gives Q.
class PadicContext {
public:
    PadicContext(unsigned long p, unsigned s);
    explicit PadicContext(const TwistContext& ctx);

    unsigned long p() const noexcept { return p_; }
    unsigned s() const noexcept { return s_; }
    long ramification_index() const noexcept { return e_; }
    const FieldPtr& field() const noexcept { return field_; }
    CycloNumber uniformizer() const;

private:
    unsigned long p_;
    unsigned s_;
    long e_;
    FieldPtr field_;
};

Valuation rational_valuation(const Rational& q, unsigned long p);

// Throws DomainError when alpha is not in Q(zeta_{p^s}).
Valuation pi_valuation(const CycloNumber& alpha, const PadicContext& ctx);

// (1/(d p^N)) sum_{j < d p^N} chi(j) xi^j j^k; ctx must be ramified.
CycloNumber volkenborn_partial(const TwistContext& ctx, unsigned k, unsigned level);

struct ConvergenceReport {
    bool pass = true;
    // valuations[i] = v(V_{i+1} - B_k)
    std::vector<Valuation> valuations;
    std::string detail;
};

// Strictly increasing valuations, N = 1..N_max. Once the difference vanishes
// the remaining entries must stay +infinity.
ConvergenceReport convergence_check(const TwistContext& ctx, unsigned k, unsigned max_level);

// B_m(n) - B_m = m sum_{a<n} a^{m-1} for the classical polynomials.
CheckReport shift_identity_check(unsigned m, unsigned n);

} // namespace tbern
