#pragma once

#include "tbern/cyclotomic.hpp"
#include "tbern/errors.hpp"
#include "tbern/sympoly.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tbern {

// Coefficient-domain hooks used by PowerSeries. Both domains carry their
// field, so the neutral elements are built from an existing value.
inline CycloNumber zero_like(const CycloNumber& c) { return CycloNumber::zero(c.field()); }
inline CycloNumber one_like(const CycloNumber& c) { return CycloNumber::one(c.field()); }
inline bool is_zero(const CycloNumber& c) { return c.is_zero(); }
inline CycloNumber inverse(const CycloNumber& c) { return c.inverse(); }

inline SymPoly zero_like(const SymPoly& p) { return SymPoly(p.field()); }
inline SymPoly one_like(const SymPoly& p)
{
    if (!p.field()) {
        throw std::logic_error("one_like on a field-less zero polynomial");
    }
    return SymPoly(CycloNumber::one(p.field()));
}
inline bool is_zero(const SymPoly& p) { return p.is_zero(); }

// Truncated power series c_0 + c_1 t + ... + c_N t^N. Coefficients are the
// ordinary ones; the EGF value n! c_n is produced only by egf().
template <class C>
class PowerSeries {
public:
    explicit PowerSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("power series needs at least one coefficient");
        }
    }

    // The constant series c at truncation N.
    static PowerSeries constant(const C& c, std::size_t truncation)
    {
        std::vector<C> coeffs(truncation + 1, zero_like(c));
        coeffs[0] = c;
        return PowerSeries(std::move(coeffs));
    }

    std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
    const C& operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::vector<C>& coeffs() const noexcept { return coeffs_; }

    C egf(std::size_t n) const
    {
        C out = coeffs_.at(n);
        out *= Rational(factorial(n));
        return out;
    }

    PowerSeries truncated(std::size_t n) const
    {
        if (n > truncation()) {
            throw std::invalid_argument("cannot extend a truncated series");
        }
        return PowerSeries(std::vector<C>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1)));
    }

    PowerSeries& operator+=(const PowerSeries& other)
    {
        coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()), zero_like(coeffs_[0]));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] += other.coeffs_[i];
        }
        return *this;
    }

    PowerSeries& operator-=(const PowerSeries& other)
    {
        coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()), zero_like(coeffs_[0]));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] -= other.coeffs_[i];
        }
        return *this;
    }

    PowerSeries& operator*=(const Rational& s)
    {
        for (auto& c : coeffs_) {
            c *= s;
        }
        return *this;
    }

    PowerSeries& operator*=(const C& s)
    {
        for (auto& c : coeffs_) {
            c *= s;
        }
        return *this;
    }

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }

    // Cauchy product truncated at min(N_a, N_b).
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
    {
        const std::size_t n = std::min(a.truncation(), b.truncation());
        std::vector<C> out(n + 1, zero_like(a.coeffs_[0]));
        for (std::size_t i = 0; i <= n; ++i) {
            if (is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (!is_zero(b.coeffs_[j])) {
                    out[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
                }
            }
        }
        return PowerSeries(std::move(out));
    }

    PowerSeries& operator*=(const PowerSeries& other) { return *this = *this * other; }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<C> coeffs_;
};

// sum_{j <= N} c^j t^j / j!
template <class C>
PowerSeries<C> exp_scaled(const C& c, std::size_t truncation)
{
    std::vector<C> coeffs;
    coeffs.reserve(truncation + 1);
    coeffs.push_back(one_like(c));
    for (std::size_t j = 1; j <= truncation; ++j) {
        C next = coeffs.back() * c;
        next *= make_rational(1, static_cast<long>(j));
        coeffs.push_back(std::move(next));
    }
    return PowerSeries<C>(std::move(coeffs));
}

inline PowerSeries<CycloNumber> exp_scaled(const FieldPtr& field, const Rational& c, std::size_t truncation)
{
    return exp_scaled(CycloNumber(field, c), truncation);
}

// Multiplicative inverse; requires an invertible constant term.
template <class C>
PowerSeries<C> series_invert(const PowerSeries<C>& a)
{
    if (is_zero(a[0])) {
        throw DomainError("not invertible; use divide_by_t first");
    }
    const std::size_t n = a.truncation();
    const C inv0 = inverse(a[0]);
    std::vector<C> out;
    out.reserve(n + 1);
    out.push_back(inv0);
    for (std::size_t k = 1; k <= n; ++k) {
        C acc = zero_like(a[0]);
        for (std::size_t j = 1; j <= k; ++j) {
            if (!is_zero(a[j])) {
                acc.add_product(a[j], out[k - j]);
            }
        }
        out.push_back(-(acc * inv0));
    }
    return PowerSeries<C>(std::move(out));
}

// A / t^k; requires c_0 = ... = c_{k-1} = 0. Truncation drops to N - k.
template <class C>
PowerSeries<C> divide_by_t(const PowerSeries<C>& a, std::size_t k)
{
    if (k > a.truncation()) {
        throw DomainError("not divisible by t^k: truncation too small");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!is_zero(a[i])) {
            throw DomainError("not divisible by t^k");
        }
    }
    return PowerSeries<C>(std::vector<C>(a.coeffs().begin() + static_cast<std::ptrdiff_t>(k), a.coeffs().end()));
}

// t^k * A, known exactly up to N + k.
template <class C>
PowerSeries<C> multiply_by_t(const PowerSeries<C>& a, std::size_t k)
{
    std::vector<C> out(k, zero_like(a[0]));
    out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
    return PowerSeries<C>(std::move(out));
}

// A(lambda t): c_n -> lambda^n c_n.
template <class C>
PowerSeries<C> rescale_t(const PowerSeries<C>& a, const Rational& lambda)
{
    std::vector<C> out;
    out.reserve(a.truncation() + 1);
    Rational scale(1);
    for (std::size_t n = 0; n <= a.truncation(); ++n) {
        C c = a[n];
        c *= scale;
        out.push_back(std::move(c));
        scale *= lambda;
    }
    return PowerSeries<C>(std::move(out));
}

inline PowerSeries<SymPoly> lift(const PowerSeries<CycloNumber>& a)
{
    std::vector<SymPoly> out;
    out.reserve(a.truncation() + 1);
    for (const auto& c : a.coeffs()) {
        SymPoly p(c.field());
        if (!c.is_zero()) {
            p = SymPoly(c);
        }
        out.push_back(std::move(p));
    }
    return PowerSeries<SymPoly>(std::move(out));
}

template <class C>
PowerSeries<C> embed(const PowerSeries<C>& a, const FieldPtr& target)
{
    std::vector<C> out;
    out.reserve(a.truncation() + 1);
    for (const auto& c : a.coeffs()) {
        out.push_back(c.embed(target));
    }
    return PowerSeries<C>(std::move(out));
}

} // namespace tbern
