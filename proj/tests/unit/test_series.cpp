#include "helpers.hpp"

#include "tbern/series.hpp"

#include <doctest.h>

using namespace tbern;
using tbern::test::cyclo;
using tbern::test::q;

namespace {

PowerSeries<CycloNumber> series(std::uint32_t order, std::initializer_list<const char*> coeffs)
{
    std::vector<CycloNumber> out;
    for (const char* c : coeffs) {
        out.emplace_back(CycloField::of(order), parse_rational(c));
    }
    return PowerSeries<CycloNumber>(std::move(out));
}

} // namespace

TEST_SUITE("series")
{
    TEST_CASE("exp_scaled")
    {
        const FieldPtr q1 = CycloField::of(1);
        CHECK(exp_scaled(q1, Rational(1), 3) == series(1, {"1", "1", "1/2", "1/6"}));
        CHECK(exp_scaled(q1, Rational(0), 5) == series(1, {"1", "0", "0", "0", "0", "0"}));
        const auto e = exp_scaled(CycloNumber::root(CycloField::of(4), 1), 2);
        CHECK(e[0] == cyclo(4, {"1", "0"}));
        CHECK(e[1] == cyclo(4, {"0", "1"}));
        CHECK(e[2] == cyclo(4, {"-1/2", "0"}));
        CHECK(e.egf(2) == cyclo(4, {"-1", "0"}));
    }

    TEST_CASE("products")
    {
        const auto a = series(1, {"1", "1", "0"});
        const auto b = series(1, {"1", "-1", "0"});
        CHECK(a * b == series(1, {"1", "0", "-1"}));
        CHECK(a * series(1, {"1", "0", "0"}) == a);
        CHECK((a * series(1, {"1", "0"})).truncation() == 1);
        const FieldPtr q1 = CycloField::of(1);
        CHECK(exp_scaled(q1, q("2/3"), 8) * exp_scaled(q1, q("-5"), 8) == exp_scaled(q1, q("-13/3"), 8));
    }

    TEST_CASE("inversion")
    {
        CHECK(series_invert(series(1, {"1", "-1", "0", "0"})) == series(1, {"1", "1", "1", "1"}));
        const FieldPtr q1 = CycloField::of(1);
        CHECK(series_invert(exp_scaled(q1, Rational(1), 7)) == exp_scaled(q1, Rational(-1), 7));
        CHECK_THROWS_WITH(series_invert(series(1, {"0", "1"})), "not invertible; use divide_by_t first");
    }

    TEST_CASE("shifts in t")
    {
        CHECK(divide_by_t(series(1, {"0", "1", "1"}), 1) == series(1, {"1", "1"}));
        const FieldPtr q1 = CycloField::of(1);
        const auto em1 = exp_scaled(q1, Rational(1), 6) - PowerSeries<CycloNumber>::constant(CycloNumber::one(q1), 6);
        CHECK(divide_by_t(em1, 1) == series(1, {"1", "1/2", "1/6", "1/24", "1/120", "1/720"}));
        CHECK_THROWS_AS(divide_by_t(series(1, {"1", "1"}), 1), DomainError);
        CHECK(multiply_by_t(series(1, {"2", "3"}), 2) == series(1, {"0", "0", "2", "3"}));
        CHECK(rescale_t(series(1, {"1", "1", "1"}), q("-2")) == series(1, {"1", "-2", "4"}));
    }

    TEST_CASE("lift and embed")
    {
        const auto a = series(1, {"1", "0", "-1/2"});
        const auto lifted = lift(a);
        CHECK(lifted[1].is_zero());
        CHECK(lifted[2] == SymPoly(cyclo(1, {"-1/2"})));
        const auto e = embed(a, CycloField::of(6));
        CHECK(e[2].order() == 6);
        CHECK(e[2] == cyclo(1, {"-1/2"}));
    }
}
