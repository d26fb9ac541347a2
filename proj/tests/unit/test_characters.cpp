#include "helpers.hpp"

#include "tbern/characters.hpp"

#include <doctest.h>

using namespace tbern;
using tbern::test::character;

TEST_SUITE("characters")
{
    TEST_CASE("unit group presentations")
    {
        CHECK(unit_group(5).generators() == std::vector<UnitGenerator>{{2, 4}});
        CHECK(unit_group(8).generators() == std::vector<UnitGenerator>{{7, 2}, {3, 2}});
        CHECK(unit_group(1).generators().empty());
        CHECK(unit_group(15).size() == 8);
        CHECK_THROWS(unit_group(0));
    }

    TEST_CASE("enumeration counts")
    {
        CHECK(enumerate_characters(1).size() == 1);
        CHECK(enumerate_characters(4).size() == 2);
        const auto mod5 = enumerate_characters(5);
        CHECK(mod5.size() == 4);
        long primitive = 0;
        for (const auto& chi : mod5) {
            primitive += chi.is_primitive() ? 1 : 0;
        }
        CHECK(primitive == 3);
        CHECK(enumerate_characters(12).size() == 4);
        for (long d : {1, 3, 4, 5, 8, 12}) {
            CHECK(enumerate_characters(d).front().is_principal());
        }
    }

    TEST_CASE("conductors")
    {
        CHECK(principal_character(4).conductor() == 1);
        CHECK(character(4, 1).conductor() == 4);
        int induced = 0;
        for (const auto& chi : enumerate_characters(8)) {
            if (chi.evaluate(3) == chi.evaluate(7) && chi.evaluate(5).is_one() && !chi.is_principal()) {
                CHECK(chi.conductor() == 4);
                ++induced;
            }
        }
        CHECK(induced == 1);
        CHECK(character(1, 0).conductor() == 1);
    }

    TEST_CASE("evaluation")
    {
        CHECK(*character(4, 1).evaluate(3).as_rational() == -1);
        CHECK(character(4, 1).evaluate(0).is_zero());
        CHECK(character(5, 2).evaluate(10).is_zero());
        CHECK(character(1, 0).evaluate(0).is_one());
        CHECK(character(1, 0).evaluate(17).is_one());
        CHECK(character(5, 2).is_real());
        CHECK_FALSE(character(5, 1).is_real());
        CHECK(character(5, 1).value_order() == 4);
        CHECK(character(5, 1).evaluate(2) == CycloNumber::root(CycloField::of(4), 1));
        CHECK(character(5, 1).evaluate(-3) == character(5, 1).evaluate(2));
    }
}
