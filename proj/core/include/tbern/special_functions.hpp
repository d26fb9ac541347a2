#pragma once

#include "tbern/characters.hpp"
#include "tbern/cyclotomic.hpp"
#include "tbern/series.hpp"
#include "tbern/sympoly.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tbern {

struct Ramification {
    unsigned long p;
    unsigned s;
};

// The data (d, chi, xi) every generating function depends on. xi is stored as
// zeta_L^k inside a fixed ambient field Q(zeta_L) that also holds the
// character values, so twisting xi -> xi^tau never changes fields.
class TwistContext {
public:
    // xi = zeta_order^exponent, ambient field Q(zeta_lcm(order(xi), m_chi)).
    TwistContext(DirichletCharacter chi, std::uint32_t xi_order, long xi_exponent);
    // xi = zeta_L^index in the given ambient field.
    TwistContext(DirichletCharacter chi, FieldPtr field, long xi_index);

    // xi = zeta_{p^s}^exponent in Q(zeta_{p^s}); xi must have order exactly
    // p^s (s = 0 gives xi = 1) and chi must be real-valued.
    static TwistContext ramified(DirichletCharacter chi, unsigned long p, unsigned s, long xi_exponent = 1);

    long d() const noexcept { return chi_->modulus(); }
    const DirichletCharacter& character() const noexcept { return *chi_; }
    const FieldPtr& field() const noexcept { return field_; }
    long xi_index() const noexcept { return xi_index_; }
    // Exact multiplicative order of xi.
    std::uint32_t xi_order() const noexcept;
    const std::optional<Ramification>& ramification() const noexcept { return ramification_; }

    CycloNumber xi() const { return xi_power(1); }
    CycloNumber xi_power(long k) const;
    // chi(a) embedded in the ambient field.
    const CycloNumber& chi(long a) const;
    // chi(a) xi^{a c}, built directly from root indices.
    CycloNumber chi_xi(long a, long c) const;
    CycloNumber zero() const { return CycloNumber::zero(field_); }
    CycloNumber one() const { return CycloNumber::one(field_); }

    // Same chi and field, xi replaced by xi^tau.
    TwistContext twisted(long tau) const;
    bool xi_power_is_one(long k) const;

    std::string describe() const;

private:
    std::shared_ptr<const DirichletCharacter> chi_;
    FieldPtr field_;
    long xi_index_;
    // chi(a) = sign * zeta_L^index for a unit a; sign 0 marks chi(a) = 0.
    struct ChiRoot {
        int sign;
        long index;
    };
    std::shared_ptr<const std::vector<CycloNumber>> chi_values_;
    std::shared_ptr<const std::vector<ChiRoot>> chi_roots_;
    std::optional<Ramification> ramification_;
};

struct BernoulliTable {
    TwistContext context;
    std::vector<CycloNumber> values; // B_{0,chi,xi} ... B_{N,chi,xi}
};

// sum_{a<d} chi(a) xi^{a c} e^{a c t}
PowerSeries<CycloNumber> character_exp_sum(const TwistContext& ctx, long c, long upper, std::size_t truncation);

// t sum_{a<d} chi(a) xi^a e^{at} / (xi^d e^{dt} - 1), to order N.
PowerSeries<CycloNumber> bernoulli_generating_function(const TwistContext& ctx, std::size_t truncation);

BernoulliTable bernoulli_numbers(const TwistContext& ctx, std::size_t max_index);

// n! [t^n] e^{xt} * (number GF).
CycloNumber bernoulli_polynomial(const TwistContext& ctx, unsigned n, const Rational& x);
SymPoly bernoulli_polynomial(const TwistContext& ctx, unsigned n, const SymPoly& x);

// sum_k C(n,k) B_k x^{n-k}; table must reach index n.
CycloNumber bernoulli_polynomial_binomial(const BernoulliTable& table, unsigned n, const Rational& x);
SymPoly bernoulli_polynomial_binomial(const BernoulliTable& table, unsigned n, const SymPoly& x);

// n! [t^n] t / (xi e^t - 1).
std::vector<CycloNumber> plain_twisted_numbers(const CycloNumber& xi, std::size_t max_index);

// sum_{a=0}^{n} chi(a) xi^a a^k with 0^0 = 1.
CycloNumber power_sum(const TwistContext& ctx, unsigned k, long n);

struct CheckReport {
    bool pass = true;
    std::string detail;
};

// Coefficient-wise comparison, up to order K, of
//   (xi^{dw} e^{dwt} - 1)/(xi^d e^{dt} - 1) * sum_{a<d} chi(a) xi^a e^{at},
//   sum_{a<dw} chi(a) xi^a e^{at},
//   sum_k S_k(dw-1; chi, xi) t^k/k!.
CheckReport powersum_gf_check(const TwistContext& ctx, long w, std::size_t max_order);

} // namespace tbern
