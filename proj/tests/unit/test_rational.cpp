#include "tbern/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace tbern;

TEST_SUITE("rational")
{
    TEST_CASE("construction is canonical")
    {
        const Rational r = make_rational(6, -4);
        CHECK(r == make_rational(-3, 2));
        CHECK(is_canonical(r));
        CHECK(to_string(r) == "-3/2");
        CHECK(to_string(make_rational(8, 4)) == "2");
        CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    }

    TEST_CASE("parsing")
    {
        CHECK(parse_rational("-691/2730") == make_rational(-691, 2730));
        CHECK(parse_rational("+5") == 5);
        CHECK(parse_rational("4/6") == make_rational(2, 3));
        CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational("2/"), std::invalid_argument);
        for (const char* s : {"0", "-1", "7/3", "-12345678901234567890/7"}) {
            CHECK(to_string(parse_rational(s)) == s);
        }
    }

    TEST_CASE("combinatorics")
    {
        CHECK(factorial(0) == 1);
        CHECK(factorial(12) == 479001600);
        CHECK(binomial(10, 3) == 120);
        CHECK(binomial(3, 5) == 0);
        CHECK(multinomial(2, 1, 1) == 12);
        CHECK(multinomial(0, 0, 0) == 1);
    }

    TEST_CASE("powers and valuations")
    {
        CHECK(power(make_rational(2, 3), -2) == make_rational(9, 4));
        CHECK(power(Rational(5), 0) == 1);
        CHECK_THROWS(power(Rational(0), -1));
        CHECK(valuation(Integer(48), 2) == 4);
        CHECK(valuation(Integer(-27), 3) == 3);
        CHECK(valuation(Integer(7), 3) == 0);
        CHECK_THROWS(valuation(Integer(0), 3));
    }
}
