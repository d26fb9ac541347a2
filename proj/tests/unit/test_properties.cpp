#include "helpers.hpp"

#include "tbern/padic.hpp"
#include "tbern/symmetry.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace tbern;

namespace {

std::mt19937& rng()
{
    static std::mt19937 gen(20240917);
    return gen;
}

long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

Rational random_rational(long bound = 9)
{
    return make_rational(uniform(-bound, bound), uniform(1, bound));
}

CycloNumber random_element(const FieldPtr& field)
{
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < field->degree(); ++i) {
        coeffs.push_back(uniform(0, 3) == 0 ? Rational(0) : random_rational());
    }
    return CycloNumber(field, std::move(coeffs));
}

PowerSeries<CycloNumber> random_series(const FieldPtr& field, std::size_t n)
{
    std::vector<CycloNumber> coeffs;
    for (std::size_t i = 0; i <= n; ++i) {
        coeffs.push_back(random_element(field));
    }
    return PowerSeries<CycloNumber>(std::move(coeffs));
}

TwistContext random_context()
{
    static const long moduli[] = {1, 3, 4, 5, 7, 8, 12};
    const long d = moduli[uniform(0, 6)];
    const auto chars = enumerate_characters(d);
    const auto& chi = chars[static_cast<std::size_t>(uniform(0, static_cast<long>(chars.size()) - 1))];
    const auto order = static_cast<std::uint32_t>(uniform(1, 6));
    return TwistContext(chi, order, uniform(0, static_cast<long>(order) - 1));
}

Weights random_weights()
{
    return {uniform(1, 4), uniform(1, 4), uniform(1, 4)};
}

constexpr int kTrials = 25;

} // namespace

TEST_SUITE("properties")
{
    TEST_CASE("field inverse")
    {
        for (int trial = 0; trial < kTrials; ++trial) {
            const FieldPtr f = CycloField::of(static_cast<std::uint32_t>(uniform(1, 30)));
            const CycloNumber a = random_element(f);
            if (a.is_zero()) {
                continue;
            }
            CHECK(a * a.inverse() == CycloNumber::one(f));
            CHECK(a.inverse().inverse() == a);
            CHECK((a * a).norm() == a.norm() * a.norm());
        }
    }

    TEST_CASE("field ring axioms")
    {
        for (int trial = 0; trial < kTrials; ++trial) {
            const FieldPtr f = CycloField::of(static_cast<std::uint32_t>(uniform(1, 24)));
            const CycloNumber a = random_element(f), b = random_element(f), c = random_element(f);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
        }
    }

    TEST_CASE("join is a homomorphism")
    {
        for (int trial = 0; trial < kTrials; ++trial) {
            const auto l = static_cast<std::uint32_t>(uniform(1, 12));
            const auto m = l * static_cast<std::uint32_t>(uniform(1, 4));
            const FieldPtr small = CycloField::of(l), big = CycloField::of(m);
            const CycloNumber a = random_element(small), b = random_element(small);
            CHECK((a + b).embed(big) == a.embed(big) + b.embed(big));
            CHECK((a * b).embed(big) == a.embed(big) * b.embed(big));
            const long k = uniform(0, static_cast<long>(l) - 1);
            CHECK(CycloNumber::root(small, k).embed(big) == CycloNumber::root(big, k * static_cast<long>(m / l)));
        }
    }

    TEST_CASE("character laws")
    {
        for (long d = 1; d <= 30; ++d) {
            CAPTURE(d);
            const auto chars = enumerate_characters(d);
            CHECK(static_cast<long>(chars.size()) == euler_phi(d));
            const FieldPtr f = CycloField::of(static_cast<std::uint32_t>(std::max(1L, unit_group(d).exponent())));
            for (const auto& chi : chars) {
                const long a = uniform(0, 3 * d), b = uniform(0, 3 * d);
                CHECK(chi.evaluate(a * b) == chi.evaluate(a) * chi.evaluate(b));
                CHECK(chi.evaluate(a + d) == chi.evaluate(a));
                CHECK(d % chi.conductor() == 0);
                CycloNumber sum = CycloNumber::zero(f);
                for (long x = 0; x < d; ++x) {
                    sum += chi.evaluate(x).embed(f);
                }
                CHECK(sum == CycloNumber(f, Rational(chi.is_principal() ? euler_phi(d) : 0)));
            }
            for (long a = 0; a < d; ++a) {
                if (std::gcd(a, d) != 1) {
                    continue;
                }
                CycloNumber sum = CycloNumber::zero(f);
                for (const auto& chi : chars) {
                    sum += chi.evaluate(a).embed(f);
                }
                CHECK(sum == CycloNumber(f, Rational(a % d == 1 % d ? euler_phi(d) : 0)));
            }
        }
    }

    TEST_CASE("series ring axioms")
    {
        for (int trial = 0; trial < kTrials; ++trial) {
            const FieldPtr f = CycloField::of(static_cast<std::uint32_t>(uniform(1, 12)));
            const std::size_t n = static_cast<std::size_t>(uniform(0, 6));
            const auto a = random_series(f, n), b = random_series(f, n), c = random_series(f, n);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a[0].is_zero()) {
                CHECK(series_invert(series_invert(a)) == a);
                CHECK(a * series_invert(a) == PowerSeries<CycloNumber>::constant(CycloNumber::one(f), n));
            }
        }
    }

    TEST_CASE("exp functional equation")
    {
        for (int trial = 0; trial < kTrials; ++trial) {
            const FieldPtr f = CycloField::of(static_cast<std::uint32_t>(uniform(1, 12)));
            const CycloNumber a = random_element(f), b = random_element(f);
            CHECK(exp_scaled(a, 7) * exp_scaled(b, 7) == exp_scaled(a + b, 7));
        }
    }

    TEST_CASE("binomial path equals generating-function path")
    {
        for (int trial = 0; trial < 10; ++trial) {
            const auto ctx = random_context();
            CAPTURE(ctx.describe());
            const auto table = bernoulli_numbers(ctx, 10);
            const Rational x = random_rational();
            for (unsigned n = 0; n <= 10; ++n) {
                CHECK(bernoulli_polynomial(ctx, n, x) == bernoulli_polynomial_binomial(table, n, x));
            }
            if (!ctx.xi_power_is_one(ctx.d())) {
                CHECK(table.values[0].is_zero());
            }
        }
    }

    TEST_CASE("power-sum recurrence")
    {
        for (int trial = 0; trial < 10; ++trial) {
            const auto ctx = random_context();
            CAPTURE(ctx.describe());
            const auto k = static_cast<unsigned>(uniform(0, 5));
            for (long n = 1; n <= 12; ++n) {
                Integer nk;
                mpz_pow_ui(nk.get_mpz_t(), Integer(n).get_mpz_t(), k);
                CHECK(power_sum(ctx, k, n) == power_sum(ctx, k, n - 1) + ctx.chi_xi(n, 1) * Rational(nk));
            }
        }
    }

    TEST_CASE("power-sum generating function")
    {
        for (int trial = 0; trial < 10; ++trial) {
            const auto ctx = random_context();
            CAPTURE(ctx.describe());
            const auto report = powersum_gf_check(ctx, uniform(1, 4), 8);
            CHECK_MESSAGE(report.pass, report.detail);
        }
    }

    TEST_CASE("S3 invariance of the closed forms")
    {
        for (int trial = 0; trial < 6; ++trial) {
            const auto ctx = random_context();
            const Weights w = random_weights();
            CAPTURE(ctx.describe());
            for (Family family : {Family::L23, Family::L13, Family::L12}) {
                const int i = static_cast<int>(uniform(0, family == Family::L12 ? 1 : 3));
                const auto base = quotient_series(QuotientSpec{family, i, w, ctx}, 4);
                for (const Weights& perm : permutations(w)) {
                    CHECK(quotient_series(QuotientSpec{family, i, perm, ctx}, 4) == base);
                }
            }
        }
    }

    TEST_CASE("expansion forms agree with the closed forms")
    {
        for (int trial = 0; trial < 4; ++trial) {
            const auto ctx = random_context();
            const Weights w = random_weights();
            CAPTURE(ctx.describe());
            for (Family family : {Family::L23, Family::L13, Family::L12}) {
                for (int i = 0; i <= (family == Family::L12 ? 1 : 3); ++i) {
                    const QuotientSpec spec{family, i, w, ctx};
                    const auto series = quotient_series(spec, 3);
                    Evaluator evaluator = make_form_evaluator(spec);
                    for (Form form : forms_for(spec)) {
                        for (unsigned n = 0; n <= 3; ++n) {
                            CHECK(expansion_coefficient(form, n, spec, evaluator) == series.egf(n));
                        }
                    }
                }
            }
        }
    }

    TEST_CASE("theorems on random points")
    {
        for (int trial = 0; trial < 4; ++trial) {
            const auto ctx = random_context();
            const Weights w = random_weights();
            CAPTURE(ctx.describe());
            Evaluator evaluator(ctx, w);
            for (int id = 1; id <= 8; ++id) {
                const auto report = verify_theorem(id, evaluator, static_cast<unsigned>(uniform(0, 4)));
                CHECK_MESSAGE(report.pass, report.detail);
            }
        }
    }

    TEST_CASE("valuation laws")
    {
        for (const auto& [p, s] : std::vector<std::pair<unsigned long, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {5, 1}, {3, 2}}) {
            const PadicContext ctx(p, s);
            for (int trial = 0; trial < 10; ++trial) {
                const CycloNumber a = random_element(ctx.field()), b = random_element(ctx.field());
                const Valuation va = pi_valuation(a, ctx), vb = pi_valuation(b, ctx);
                CHECK(pi_valuation(a * b, ctx) == va + vb);
                const Valuation vsum = pi_valuation(a + b, ctx);
                CHECK_FALSE(vsum < (va < vb ? va : vb));
                if (!a.is_zero()) {
                    const Rational v_norm = rational_valuation(a.norm(), p).value;
                    CHECK(va.value * ctx.ramification_index() == v_norm);
                }
            }
        }
    }

    TEST_CASE("shift identity")
    {
        for (unsigned m = 0; m <= 8; ++m) {
            for (unsigned n = 1; n <= 6; ++n) {
                CHECK(shift_identity_check(m, n).pass);
            }
        }
    }
}
