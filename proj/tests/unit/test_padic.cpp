#include "helpers.hpp"

#include "tbern/padic.hpp"

#include <doctest.h>

using namespace tbern;
using tbern::test::character;
using tbern::test::cyclo;
using tbern::test::q;

namespace {

std::vector<std::string> valuation_strings(const ConvergenceReport& report)
{
    std::vector<std::string> out;
    for (const auto& v : report.valuations) {
        out.push_back(v.to_string());
    }
    return out;
}

} // namespace

TEST_SUITE("padic")
{
    TEST_CASE("partial sums")
    {
        const auto ctx = TwistContext::ramified(character(1, 0), 3, 0);
        CHECK(volkenborn_partial(ctx, 0, 1) == cyclo(1, {"1"}));
        CHECK(volkenborn_partial(ctx, 1, 1) == cyclo(1, {"1"}));
        CHECK(volkenborn_partial(ctx, 1, 2) == cyclo(1, {"4"}));
    }

    TEST_CASE("valuations")
    {
        const PadicContext p3(3, 1);
        CHECK(p3.ramification_index() == 2);
        CHECK(pi_valuation(cyclo(3, {"3", "0"}), p3) == Valuation::of(Rational(1)));
        CHECK(pi_valuation(p3.uniformizer(), p3) == Valuation::of(q("1/2")));
        CHECK(pi_valuation(cyclo(3, {"2", "0"}), p3) == Valuation::of(Rational(0)));
        CHECK(pi_valuation(cyclo(3, {"1/9", "0"}), p3) == Valuation::of(Rational(-2)));
        CHECK(pi_valuation(CycloNumber::zero(p3.field()), p3).infinite);
        CHECK_THROWS_AS(pi_valuation(cyclo(4, {"1", "1"}), p3), DomainError);
        const PadicContext p2(2, 3);
        CHECK(pi_valuation(p2.uniformizer(), p2) == Valuation::of(q("1/4")));
        CHECK(pi_valuation(cyclo(8, {"1", "1", "0", "0"}), p2) == Valuation::of(q("1/4")));
        CHECK(pi_valuation(cyclo(1, {"12"}), PadicContext(2, 0)) == Valuation::of(Rational(2)));
        CHECK(rational_valuation(q("-9/2"), 3) == Valuation::of(Rational(2)));
        CHECK_THROWS_AS(PadicContext(6, 1), ParameterError);
    }

    TEST_CASE("valuation order")
    {
        CHECK(Valuation::of(Rational(1)) < Valuation::infinity());
        CHECK_FALSE(Valuation::infinity() < Valuation::infinity());
        CHECK((Valuation::of(q("1/2")) + Valuation::of(q("3/2"))) == Valuation::of(Rational(2)));
        CHECK((Valuation::of(Rational(1)) + Valuation::infinity()).infinite);
        CHECK(Valuation::of(q("-3/4")).to_string() == "-3/4");
    }

    TEST_CASE("convergence")
    {
        const auto plain = TwistContext::ramified(character(1, 0), 3, 0);
        auto report = convergence_check(plain, 1, 5);
        CHECK(report.pass);
        CHECK(valuation_strings(report) == std::vector<std::string>{"1", "2", "3", "4", "5"});

        report = convergence_check(plain, 0, 4);
        CHECK(report.pass);
        CHECK(valuation_strings(report) == std::vector<std::string>{"inf", "inf", "inf", "inf"});

        // xi = -1: every partial sum already equals B_1
        report = convergence_check(TwistContext::ramified(character(1, 0), 2, 1), 1, 5);
        CHECK(report.pass);
        CHECK(valuation_strings(report) == std::vector<std::string>{"inf", "inf", "inf", "inf", "inf"});

        // V_1 = B_4 = -1/2 exactly, so the sequence starts at +infinity
        report = convergence_check(TwistContext::ramified(character(1, 0), 2, 1), 4, 5);
        CHECK_FALSE(report.pass);
        CHECK(valuation_strings(report) == std::vector<std::string>{"inf", "4", "6", "8", "10"});

        const auto gauss = TwistContext::ramified(character(1, 0), 2, 2);
        CHECK(valuation_strings(convergence_check(gauss, 1, 5)) ==
              std::vector<std::string>{"-1", "inf", "inf", "inf", "inf"});
        CHECK(valuation_strings(convergence_check(gauss, 2, 5)) ==
              std::vector<std::string>{"-1", "3/2", "5/2", "7/2", "9/2"});

        report = convergence_check(TwistContext::ramified(character(3, 1), 3, 1), 2, 4);
        CHECK(report.pass);
        CHECK(valuation_strings(report) == std::vector<std::string>{"1", "2", "3", "4"});

        CHECK_THROWS_AS(convergence_check(tbern::test::context(1, 0, 1), 1, 3), ParameterError);
    }

    TEST_CASE("shift identity")
    {
        CHECK(shift_identity_check(1, 1).pass);
        const auto r = shift_identity_check(3, 4);
        CHECK(r.pass);
        CHECK(r.detail.find("= 42") != std::string::npos);
        CHECK(shift_identity_check(0, 5).pass);
        CHECK_THROWS_AS(shift_identity_check(2, 0), ParameterError);
    }
}
