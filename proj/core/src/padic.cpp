#include "tbern/padic.hpp"

#include "tbern/errors.hpp"

#include <sstream>

namespace tbern {

namespace {

unsigned long ipow(unsigned long p, unsigned s)
{
    unsigned long q = 1;
    for (unsigned i = 0; i < s; ++i) {
        q *= p;
    }
    return q;
}

const Ramification& require_ramification(const TwistContext& ctx)
{
    if (!ctx.ramification()) {
        throw ParameterError("context has no (p, s)");
    }
    return *ctx.ramification();
}

} // namespace

std::string Valuation::to_string() const
{
    return infinite ? "inf" : tbern::to_string(value);
}

Valuation operator+(const Valuation& a, const Valuation& b)
{
    if (a.infinite || b.infinite) {
        return Valuation::infinity();
    }
    return Valuation::of(a.value + b.value);
}

PadicContext::PadicContext(unsigned long p, unsigned s)
    : p_(p), s_(s), e_(s == 0 ? 1 : euler_phi(static_cast<long>(ipow(p, s)))),
      field_(CycloField::of(static_cast<std::uint32_t>(ipow(p, s))))
{
    if (p < 2) {
        throw ParameterError("p must be prime");
    }
    for (unsigned long q = 2; q * q <= p; ++q) {
        if (p % q == 0) {
            throw ParameterError("p must be prime");
        }
    }
}

PadicContext::PadicContext(const TwistContext& ctx)
    : PadicContext(require_ramification(ctx).p, require_ramification(ctx).s)
{
}

CycloNumber PadicContext::uniformizer() const
{
    return CycloNumber::one(field_) - CycloNumber::root(field_, 1);
}

Valuation rational_valuation(const Rational& q, unsigned long p)
{
    if (q == 0) {
        return Valuation::infinity();
    }
    return Valuation::of(Rational(valuation(q.get_num(), p) - valuation(q.get_den(), p)));
}

Valuation pi_valuation(const CycloNumber& alpha, const PadicContext& ctx)
{
    if (alpha.field() != ctx.field()) {
        throw DomainError("unsupported: values outside Q(zeta_{p^s})");
    }
    if (alpha.is_zero()) {
        return Valuation::infinity();
    }
    const unsigned long p = ctx.p();
    // Content: the least p-adic valuation among the coefficients.
    long content = 0;
    bool first = true;
    Integer den_lcm(1);
    for (const Rational& c : alpha.coeffs()) {
        if (c == 0) {
            continue;
        }
        const long v = valuation(c.get_num(), p) - valuation(c.get_den(), p);
        if (first || v < content) {
            content = v;
        }
        first = false;
        Integer den = c.get_den();
        while (den % p == 0) {
            den /= p;
        }
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    if (ctx.s() == 0) {
        return Valuation::of(Rational(content));
    }
    // beta is in Z[zeta] and not divisible by p.
    CycloNumber beta = alpha * (Rational(den_lcm) * power(Rational(static_cast<long>(p)), -content));
    const CycloNumber pi = ctx.uniformizer();
    long count = 0;
    while (true) {
        Integer sum(0);
        for (const Rational& c : beta.coeffs()) {
            sum += c.get_num();
        }
        if (sum % p != 0) {
            break;
        }
        beta /= pi;
        ++count;
        if (count > ctx.ramification_index()) {
            throw std::logic_error("pi-division did not terminate");
        }
    }
    return Valuation::of(Rational(content) + make_rational(count, ctx.ramification_index()));
}

CycloNumber volkenborn_partial(const TwistContext& ctx, unsigned k, unsigned level)
{
    const long count = ctx.d() * static_cast<long>(ipow(require_ramification(ctx).p, level));
    CycloNumber sum = ctx.zero();
    for (long j = 0; j < count; ++j) {
        const CycloNumber w = ctx.chi_xi(j, 1);
        if (w.is_zero()) {
            continue;
        }
        Integer jk;
        mpz_pow_ui(jk.get_mpz_t(), Integer(j).get_mpz_t(), k);
        sum += w * Rational(jk);
    }
    return sum / Rational(count);
}

ConvergenceReport convergence_check(const TwistContext& ctx, unsigned k, unsigned max_level)
{
    const PadicContext padic(ctx);
    const CycloNumber target = bernoulli_numbers(ctx, k).values[k];
    ConvergenceReport report;
    for (unsigned level = 1; level <= max_level; ++level) {
        report.valuations.push_back(pi_valuation(volkenborn_partial(ctx, k, level) - target, padic));
    }
    for (std::size_t i = 1; i < report.valuations.size(); ++i) {
        const Valuation& prev = report.valuations[i - 1];
        const Valuation& cur = report.valuations[i];
        const bool ok = cur.infinite || prev < cur;
        if (!ok) {
            report.pass = false;
            report.detail = "v(V_" + std::to_string(i + 1) + " - B_k) = " + cur.to_string() +
                            " does not exceed v(V_" + std::to_string(i) + " - B_k) = " + prev.to_string();
            return report;
        }
    }
    report.detail = "strictly increasing";
    return report;
}

CheckReport shift_identity_check(unsigned m, unsigned n)
{
    if (n < 1) {
        throw ParameterError("shift must be at least 1");
    }
    const TwistContext ctx(principal_character(1), 1, 0);
    const auto table = bernoulli_numbers(ctx, m);
    const CycloNumber lhs = bernoulli_polynomial(ctx, m, Rational(n)) - table.values[m];
    Rational rhs(0);
    if (m > 0) {
        for (unsigned a = 0; a < n; ++a) {
            Integer am;
            mpz_pow_ui(am.get_mpz_t(), Integer(a).get_mpz_t(), m - 1);
            rhs += Rational(am);
        }
        rhs *= m;
    }
    CheckReport report;
    report.pass = lhs == CycloNumber(ctx.field(), rhs);
    std::ostringstream out;
    out << "B_" << m << "(" << n << ") - B_" << m << " = " << lhs.to_string() << ", m*sum = " << to_string(rhs);
    report.detail = out.str();
    return report;
}

} // namespace tbern
