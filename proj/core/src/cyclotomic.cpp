#include "tbern/cyclotomic.hpp"

#include "tbern/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tbern {

namespace {

using IntPoly = std::vector<Integer>;

IntPoly multiply(const IntPoly& a, const IntPoly& b)
{
    IntPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Exact division by a monic divisor; throws if there is a remainder.
IntPoly divide_exact(IntPoly num, const IntPoly& den)
{
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) {
        throw std::logic_error("cyclotomic division: degree underflow");
    }
    IntPoly quot(num.size() - dn, Integer(0));
    for (std::size_t i = num.size(); i-- > dn;) {
        const Integer c = num[i];
        quot[i - dn] = c;
        if (c != 0) {
            for (std::size_t j = 0; j <= dn; ++j) {
                num[i - dn + j] -= c * den[j];
            }
        }
    }
    for (std::size_t i = 0; i < dn; ++i) {
        if (num[i] != 0) {
            throw std::logic_error("cyclotomic division left a remainder");
        }
    }
    return quot;
}

IntPoly cyclotomic_exact(std::uint32_t order)
{
    static std::mutex mutex;
    static std::map<std::uint32_t, IntPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(order); it != cache.end()) {
            return it->second;
        }
    }
    IntPoly xl(order + 1, Integer(0));
    xl[0] = -1;
    xl[order] = 1;
    IntPoly lower{Integer(1)};
    for (std::uint32_t d = 1; d < order; ++d) {
        if (order % d == 0) {
            lower = multiply(lower, cyclotomic_exact(d));
        }
    }
    IntPoly phi = divide_exact(std::move(xl), lower);
    std::lock_guard lock(mutex);
    cache.emplace(order, phi);
    return phi;
}

long to_long(const Integer& v)
{
    if (!v.fits_slong_p()) {
        throw std::overflow_error("cyclotomic coefficient exceeds machine range");
    }
    return v.get_si();
}

} // namespace

std::vector<long> cyclotomic_polynomial(std::uint32_t order)
{
    if (order == 0) {
        throw ParameterError("cyclotomic order must be positive");
    }
    std::vector<long> out;
    for (const auto& c : cyclotomic_exact(order)) {
        out.push_back(to_long(c));
    }
    return out;
}

long euler_phi(long n)
{
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

// ---------------------------------------------------------------------------
// CycloField

CycloField::CycloField(std::uint32_t order) : order_(order), modulus_(cyclotomic_polynomial(order))
{
    const std::size_t n = degree();
    powers_.reserve(order_);
    std::vector<long> current(n, 0);
    current[0] = 1;
    for (std::uint32_t k = 0; k < order_; ++k) {
        powers_.push_back(current);
        // Multiply by x and reduce by the monic modulus.
        const long top = current[n - 1];
        for (std::size_t i = n - 1; i > 0; --i) {
            current[i] = current[i - 1] - top * modulus_[i];
        }
        current[0] = -top * modulus_[0];
    }
}

FieldPtr CycloField::of(std::uint32_t order)
{
    if (order == 0) {
        throw ParameterError("cyclotomic order must be positive");
    }
    static std::mutex mutex;
    static std::map<std::uint32_t, FieldPtr> registry;
    std::lock_guard lock(mutex);
    auto& slot = registry[order];
    if (!slot) {
        slot = FieldPtr(new CycloField(order));
    }
    return slot;
}

FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b)
{
    return CycloField::of(std::lcm(a->order(), b->order()));
}

// ---------------------------------------------------------------------------
// CycloNumber

CycloNumber::CycloNumber(FieldPtr field) : field_(std::move(field)), coeffs_(field_->degree())
{
}

CycloNumber::CycloNumber(FieldPtr field, Rational value) : CycloNumber(std::move(field))
{
    coeffs_[0] = std::move(value);
}

CycloNumber::CycloNumber(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != field_->degree()) {
        throw ParameterError("coefficient count does not match field degree");
    }
}

CycloNumber CycloNumber::root(const FieldPtr& field, long k)
{
    const long order = field->order();
    const auto reduced = static_cast<std::uint64_t>(((k % order) + order) % order);
    const auto& p = field->power(reduced);
    std::vector<Rational> coeffs;
    coeffs.reserve(p.size());
    for (long c : p) {
        coeffs.emplace_back(c);
    }
    return CycloNumber(field, std::move(coeffs));
}

bool CycloNumber::is_zero() const
{
    for (const auto& c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool CycloNumber::is_one() const
{
    if (coeffs_[0] != 1) {
        return false;
    }
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            return false;
        }
    }
    return true;
}

std::optional<Rational> CycloNumber::as_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            return std::nullopt;
        }
    }
    return coeffs_[0];
}

void CycloNumber::require_same_field(const CycloNumber& other) const
{
    if (field_ != other.field_) {
        throw std::invalid_argument("field mismatch");
    }
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& other)
{
    require_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& other)
{
    require_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b)
{
    CycloNumber out(a.field_);
    out.add_product(a, b);
    return out;
}

void CycloNumber::add_product(const CycloNumber& a, const CycloNumber& b)
{
    require_same_field(a);
    require_same_field(b);
    const std::size_t n = coeffs_.size();
    if (n == 1) {
        coeffs_[0] += a.coeffs_[0] * b.coeffs_[0];
        return;
    }
    std::vector<Rational> raw(2 * n - 1);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coeffs_[j] != 0) {
                raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
                any = true;
            }
        }
    }
    if (!any) {
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        coeffs_[i] += raw[i];
    }
    for (std::size_t j = n; j < raw.size(); ++j) {
        if (raw[j] == 0) {
            continue;
        }
        const auto& p = field_->power(j);
        for (std::size_t i = 0; i < n; ++i) {
            if (p[i] != 0) {
                coeffs_[i] += raw[j] * p[i];
            }
        }
    }
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& other)
{
    *this = *this * other;
    return *this;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& other)
{
    require_same_field(other);
    *this = *this * other.inverse();
    return *this;
}

CycloNumber& CycloNumber::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

CycloNumber& CycloNumber::operator/=(const Rational& scalar)
{
    if (scalar == 0) {
        throw std::domain_error("zero divisor");
    }
    for (auto& c : coeffs_) {
        c /= scalar;
    }
    return *this;
}

CycloNumber CycloNumber::operator-() const
{
    CycloNumber out(*this);
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

CycloNumber CycloNumber::conjugate(long k) const
{
    const long order = field_->order();
    const long kk = ((k % order) + order) % order;
    if (std::gcd(kk, order) != 1) {
        throw ParameterError("Galois exponent must be coprime to the field order");
    }
    CycloNumber out(field_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) {
            continue;
        }
        const auto& p = field_->power(static_cast<std::uint64_t>(j) * static_cast<std::uint64_t>(kk));
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] != 0) {
                out.coeffs_[i] += coeffs_[j] * p[i];
            }
        }
    }
    return out;
}

CycloNumber CycloNumber::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("zero divisor");
    }
    if (auto q = as_rational()) {
        return CycloNumber(field_, Rational(1) / *q);
    }
    // x^{-1} = (product of the other conjugates) / N(x).
    const long order = field_->order();
    CycloNumber others = one(field_);
    for (long k = 2; k < order; ++k) {
        if (std::gcd(k, order) == 1) {
            others *= conjugate(k);
        }
    }
    const auto norm = (*this * others).as_rational();
    if (!norm) {
        throw std::logic_error("norm computation did not produce a rational");
    }
    return others / *norm;
}

Rational CycloNumber::norm() const
{
    const long order = field_->order();
    CycloNumber product = *this;
    for (long k = 2; k < order; ++k) {
        if (std::gcd(k, order) == 1) {
            product *= conjugate(k);
        }
    }
    auto q = product.as_rational();
    if (!q) {
        throw std::logic_error("norm computation did not produce a rational");
    }
    return *q;
}

CycloNumber CycloNumber::pow(long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    CycloNumber result = one(field_);
    CycloNumber base = *this;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

CycloNumber CycloNumber::embed(const FieldPtr& target) const
{
    if (target == field_) {
        return *this;
    }
    if (auto q = as_rational()) {
        return CycloNumber(target, *q);
    }
    if (target->order() % field_->order() != 0) {
        throw std::invalid_argument("field mismatch");
    }
    const std::uint64_t step = target->order() / field_->order();
    CycloNumber out(target);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) {
            continue;
        }
        const auto& p = target->power(step * j);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] != 0) {
                out.coeffs_[i] += coeffs_[j] * p[i];
            }
        }
    }
    return out;
}

std::string CycloNumber::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (first) {
            if (c < 0) {
                out << '-';
            }
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << tbern::to_string(mag);
            continue;
        }
        if (mag != 1) {
            out << tbern::to_string(mag) << '*';
        }
        out << 'z';
        if (i > 1) {
            out << '^' << i;
        }
    }
    if (first) {
        out << '0';
    }
    return out.str();
}

bool operator==(const CycloNumber& a, const CycloNumber& b)
{
    if (a.field_ == b.field_) {
        return a.coeffs_ == b.coeffs_;
    }
    auto [ja, jb] = field_join(a, b);
    return ja.coeffs_ == jb.coeffs_;
}

std::pair<CycloNumber, CycloNumber> field_join(const CycloNumber& a, const CycloNumber& b)
{
    const FieldPtr joined = join_fields(a.field(), b.field());
    return {a.embed(joined), b.embed(joined)};
}

std::optional<std::uint32_t> root_of_unity_order(const CycloNumber& value)
{
    const std::uint32_t order = value.order();
    CycloNumber power = value;
    for (std::uint32_t j = 1; j <= 2 * order; ++j) {
        if (power.is_one()) {
            return j;
        }
        power *= value;
    }
    return std::nullopt;
}

} // namespace tbern
