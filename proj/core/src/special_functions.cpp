#include "tbern/special_functions.hpp"

#include "tbern/errors.hpp"

#include <numeric>
#include <sstream>

namespace tbern {

namespace {

long mod(long a, long m)
{
    const long r = a % m;
    return r < 0 ? r + m : r;
}

bool is_prime(unsigned long p)
{
    if (p < 2) {
        return false;
    }
    for (unsigned long q = 2; q * q <= p; ++q) {
        if (p % q == 0) {
            return false;
        }
    }
    return true;
}

// Smallest ambient order holding both xi (order r) and the values of chi.
std::uint32_t ambient_order(std::uint32_t r, long value_order)
{
    const long m = value_order <= 2 ? 1 : value_order;
    return static_cast<std::uint32_t>(std::lcm(static_cast<long>(r), m));
}

std::uint32_t reduced_order(std::uint32_t xi_order, long xi_exponent)
{
    if (xi_order == 0) {
        throw ParameterError("xi order must be at least 1");
    }
    const long o = xi_order;
    return static_cast<std::uint32_t>(o / std::gcd(o, mod(xi_exponent, o)));
}

FieldPtr ambient_field(const DirichletCharacter& chi, std::uint32_t xi_order, long xi_exponent)
{
    return CycloField::of(ambient_order(reduced_order(xi_order, xi_exponent), chi.value_order()));
}

// zeta_o^e written as a power of zeta_L.
long ambient_index(const DirichletCharacter& chi, std::uint32_t xi_order, long xi_exponent)
{
    const long r = reduced_order(xi_order, xi_exponent);
    const long L = ambient_order(static_cast<std::uint32_t>(r), chi.value_order());
    const long e = mod(xi_exponent, xi_order) / (static_cast<long>(xi_order) / r);
    return e * (L / r);
}

} // namespace

TwistContext::TwistContext(DirichletCharacter chi, std::uint32_t xi_order, long xi_exponent)
    : TwistContext(chi, ambient_field(chi, xi_order, xi_exponent), ambient_index(chi, xi_order, xi_exponent))
{
}

TwistContext::TwistContext(DirichletCharacter chi, FieldPtr field, long xi_index)
    : chi_(std::make_shared<const DirichletCharacter>(std::move(chi))), field_(std::move(field)), xi_index_(0)
{
    if (!field_) {
        throw ParameterError("twist context needs a field");
    }
    const long L = field_->order();
    xi_index_ = mod(xi_index, L);
    const long m = chi_->value_order();
    if (m > 2 && L % m != 0) {
        throw ParameterError("character values do not lie in the ambient field");
    }
    const long dd = d();
    std::vector<ChiRoot> roots(static_cast<std::size_t>(dd));
    std::vector<CycloNumber> values;
    values.reserve(static_cast<std::size_t>(dd));
    for (long a = 0; a < dd; ++a) {
        const auto e = chi_->value_exponent(a);
        ChiRoot r{0, 0};
        if (e) {
            if (m <= 2) {
                r = {*e == 0 ? 1 : -1, 0};
            } else {
                r = {1, *e * (L / m)};
            }
        }
        roots[static_cast<std::size_t>(a)] = r;
        CycloNumber v = r.sign == 0 ? CycloNumber::zero(field_) : CycloNumber::root(field_, r.index);
        if (r.sign < 0) {
            v = -v;
        }
        values.push_back(std::move(v));
    }
    chi_values_ = std::make_shared<const std::vector<CycloNumber>>(std::move(values));
    chi_roots_ = std::make_shared<const std::vector<ChiRoot>>(std::move(roots));
}

TwistContext TwistContext::ramified(DirichletCharacter chi, unsigned long p, unsigned s, long xi_exponent)
{
    if (!is_prime(p)) {
        throw ParameterError("p must be prime");
    }
    if (!chi.is_real()) {
        throw DomainError("unsupported: values outside Q(zeta_{p^s})");
    }
    unsigned long q = 1;
    for (unsigned i = 0; i < s; ++i) {
        q *= p;
    }
    if (s > 0 && mod(xi_exponent, static_cast<long>(p)) == 0) {
        throw ParameterError("xi must have order exactly p^s");
    }
    TwistContext ctx(std::move(chi), CycloField::of(static_cast<std::uint32_t>(q)), s == 0 ? 0 : xi_exponent);
    ctx.ramification_ = Ramification{p, s};
    return ctx;
}

std::uint32_t TwistContext::xi_order() const noexcept
{
    const long L = field_->order();
    return static_cast<std::uint32_t>(L / std::gcd(L, xi_index_));
}

CycloNumber TwistContext::xi_power(long k) const
{
    const long L = field_->order();
    return CycloNumber::root(field_, static_cast<long>((static_cast<long long>(mod(k, L)) * xi_index_) % L));
}

const CycloNumber& TwistContext::chi(long a) const
{
    return (*chi_values_)[static_cast<std::size_t>(mod(a, d()))];
}

CycloNumber TwistContext::chi_xi(long a, long c) const
{
    const auto& r = (*chi_roots_)[static_cast<std::size_t>(mod(a, d()))];
    if (r.sign == 0) {
        return zero();
    }
    const long L = field_->order();
    const long long ac = static_cast<long long>(mod(a, L)) * mod(c, L) % L;
    const long k = static_cast<long>((ac * xi_index_ + r.index) % L);
    CycloNumber v = CycloNumber::root(field_, k);
    if (r.sign < 0) {
        v = -v;
    }
    return v;
}

TwistContext TwistContext::twisted(long tau) const
{
    TwistContext out(*this);
    const long L = field_->order();
    out.xi_index_ = static_cast<long>((static_cast<long long>(mod(tau, L)) * xi_index_) % L);
    out.ramification_.reset();
    return out;
}

bool TwistContext::xi_power_is_one(long k) const
{
    const long L = field_->order();
    return (static_cast<long long>(mod(k, L)) * xi_index_) % L == 0;
}

std::string TwistContext::describe() const
{
    std::ostringstream out;
    out << "d=" << d() << " chi=[";
    for (std::size_t i = 0; i < chi_->exponents().size(); ++i) {
        out << (i ? "," : "") << chi_->exponents()[i];
    }
    out << "] xi=zeta_" << field_->order() << "^" << xi_index_;
    return out.str();
}

PowerSeries<CycloNumber> character_exp_sum(const TwistContext& ctx, long c, long upper, std::size_t truncation)
{
    std::vector<CycloNumber> coeffs(truncation + 1, ctx.zero());
    std::vector<Rational> inv_fact(truncation + 1);
    inv_fact[0] = 1;
    for (std::size_t j = 1; j <= truncation; ++j) {
        inv_fact[j] = inv_fact[j - 1] / static_cast<long>(j);
    }
    for (long a = 0; a < upper; ++a) {
        const CycloNumber w = ctx.chi_xi(a, c);
        if (w.is_zero()) {
            continue;
        }
        const Rational ac(static_cast<long>(a * c));
        Rational p(1);
        for (std::size_t j = 0; j <= truncation; ++j) {
            if (p == 0) {
                break;
            }
            coeffs[j] += w * (p * inv_fact[j]);
            p *= ac;
        }
    }
    return PowerSeries<CycloNumber>(std::move(coeffs));
}

PowerSeries<CycloNumber> bernoulli_generating_function(const TwistContext& ctx, std::size_t truncation)
{
    const long d = ctx.d();
    const auto num = character_exp_sum(ctx, 1, d, truncation);
    const auto one = PowerSeries<CycloNumber>::constant(ctx.one(), truncation + 1);
    if (ctx.xi_power_is_one(d)) {
        const auto den = divide_by_t(exp_scaled(ctx.field(), Rational(d), truncation + 1) - one, 1);
        return num * series_invert(den);
    }
    auto den = exp_scaled(ctx.field(), Rational(d), truncation);
    den *= ctx.xi_power(d);
    den -= one.truncated(truncation);
    return multiply_by_t(num * series_invert(den), 1).truncated(truncation);
}

BernoulliTable bernoulli_numbers(const TwistContext& ctx, std::size_t max_index)
{
    const auto gf = bernoulli_generating_function(ctx, max_index);
    BernoulliTable table{ctx, {}};
    table.values.reserve(max_index + 1);
    for (std::size_t n = 0; n <= max_index; ++n) {
        table.values.push_back(gf.egf(n));
    }
    return table;
}

CycloNumber bernoulli_polynomial(const TwistContext& ctx, unsigned n, const Rational& x)
{
    const auto gf = bernoulli_generating_function(ctx, n);
    return (exp_scaled(ctx.field(), x, n) * gf).egf(n);
}

SymPoly bernoulli_polynomial(const TwistContext& ctx, unsigned n, const SymPoly& x)
{
    const SymPoly arg = x.field() && x.field() != ctx.field() ? x.embed(ctx.field()) : x;
    SymPoly base = arg;
    if (!base.field()) {
        base = SymPoly(ctx.field());
    }
    std::vector<SymPoly> powers;
    powers.reserve(n + 1);
    powers.push_back(SymPoly(ctx.one()));
    for (unsigned j = 1; j <= n; ++j) {
        SymPoly next = powers.back() * base;
        next *= make_rational(1, j);
        powers.push_back(std::move(next));
    }
    const PowerSeries<SymPoly> ex(std::move(powers));
    return (ex * lift(bernoulli_generating_function(ctx, n))).egf(n);
}

CycloNumber bernoulli_polynomial_binomial(const BernoulliTable& table, unsigned n, const Rational& x)
{
    if (table.values.size() <= n) {
        throw std::invalid_argument("Bernoulli table too short");
    }
    CycloNumber out = table.context.zero();
    Rational xp(1);
    for (unsigned j = 0; j <= n; ++j) {
        const unsigned k = n - j;
        out += table.values[k] * (Rational(binomial(n, k)) * xp);
        xp *= x;
    }
    return out;
}

SymPoly bernoulli_polynomial_binomial(const BernoulliTable& table, unsigned n, const SymPoly& x)
{
    if (table.values.size() <= n) {
        throw std::invalid_argument("Bernoulli table too short");
    }
    const FieldPtr& field = table.context.field();
    const SymPoly arg = x.field() && x.field() != field ? x.embed(field) : x;
    SymPoly out(field);
    SymPoly xp(CycloNumber::one(field));
    for (unsigned j = 0; j <= n; ++j) {
        const unsigned k = n - j;
        out.add_scaled(xp, table.values[k] * Rational(binomial(n, k)));
        if (j < n) {
            xp *= arg;
        }
    }
    return out;
}

std::vector<CycloNumber> plain_twisted_numbers(const CycloNumber& xi, std::size_t max_index)
{
    const FieldPtr& field = xi.field();
    const auto one = PowerSeries<CycloNumber>::constant(CycloNumber::one(field), max_index + 1);
    PowerSeries<CycloNumber> gf = one;
    if (xi.is_one()) {
        gf = series_invert(divide_by_t(exp_scaled(field, Rational(1), max_index + 1) - one, 1));
    } else {
        auto den = exp_scaled(field, Rational(1), max_index);
        den *= xi;
        den -= one.truncated(max_index);
        gf = multiply_by_t(series_invert(den), 1);
    }
    std::vector<CycloNumber> out;
    out.reserve(max_index + 1);
    for (std::size_t n = 0; n <= max_index; ++n) {
        out.push_back(gf.egf(n));
    }
    return out;
}

CycloNumber power_sum(const TwistContext& ctx, unsigned k, long n)
{
    CycloNumber out = ctx.zero();
    for (long a = 0; a <= n; ++a) {
        const CycloNumber w = ctx.chi_xi(a, 1);
        if (w.is_zero()) {
            continue;
        }
        Integer ak;
        mpz_pow_ui(ak.get_mpz_t(), Integer(a).get_mpz_t(), k);
        out += w * Rational(ak);
    }
    return out;
}

CheckReport powersum_gf_check(const TwistContext& ctx, long w, std::size_t max_order)
{
    if (w < 1) {
        throw ParameterError("w must be at least 1");
    }
    const long d = ctx.d();
    const std::size_t N = max_order;
    const auto num = character_exp_sum(ctx, 1, d, N);
    const auto one = PowerSeries<CycloNumber>::constant(ctx.one(), N + 1);

    PowerSeries<CycloNumber> ratio = one;
    if (ctx.xi_power_is_one(d)) {
        const auto top = divide_by_t(exp_scaled(ctx.field(), Rational(d * w), N + 1) - one, 1);
        const auto bottom = divide_by_t(exp_scaled(ctx.field(), Rational(d), N + 1) - one, 1);
        ratio = top * series_invert(bottom);
    } else {
        auto top = exp_scaled(ctx.field(), Rational(d * w), N);
        top *= ctx.xi_power(d * w);
        top -= one.truncated(N);
        auto bottom = exp_scaled(ctx.field(), Rational(d), N);
        bottom *= ctx.xi_power(d);
        bottom -= one.truncated(N);
        ratio = top * series_invert(bottom);
    }
    const auto lhs = ratio * num;
    const auto middle = character_exp_sum(ctx, 1, d * w, N);

    CheckReport report;
    for (std::size_t k = 0; k <= N; ++k) {
        CycloNumber rhs = power_sum(ctx, static_cast<unsigned>(k), d * w - 1);
        rhs /= Rational(factorial(k));
        if (!(lhs[k] == middle[k]) || !(middle[k] == rhs)) {
            std::ostringstream out;
            out << "coefficient t^" << k << ": quotient=" << lhs[k].to_string() << " sum=" << middle[k].to_string()
                << " powersum=" << rhs.to_string();
            report.pass = false;
            report.detail = out.str();
            return report;
        }
    }
    report.detail = "all coefficients agree up to t^" + std::to_string(N);
    return report;
}

} // namespace tbern
