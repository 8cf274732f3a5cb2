#include <catch2/catch_amalgamated.hpp>

#include "hcaff/characters.hpp"
#include "hcaff/constructions.hpp"

using namespace hcaff;

TEST_CASE("character json round trip")
{
    Character c = Character::word({0, 1, 2}, 3) + Character::word({1, 0, 2});
    auto j = to_json(c);
    CHECK(character_from_json(j) == c);
    CHECK(character_from_json(nlohmann::json::parse(j.dump())) == c);
    nlohmann::json bad = {{"d", 2}, {"terms", {{{"word", {1}}, {"mult", 1}}}}};
    CHECK_THROWS_AS(character_from_json(bad), std::invalid_argument);
}

TEST_CASE("shuffles at q = 1 count binomially")
{
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            Word u, v;
            for (int k = 0; k < a; ++k) u.push_back(k);
            for (int k = 0; k < b; ++k) v.push_back(10 + k);
            auto s = shuffle_q1(u, v);
            long long binom = factorial(a + b) / (factorial(a) * factorial(b));
            REQUIRE(s.total() == binom);
            REQUIRE(static_cast<long long>(s.terms.size()) == binom); // distinct letters
        }
    CHECK(shuffle_q1({1}, {1}) == Character::word({1, 1}, 2));
    CHECK(char_product(Character::word({0}), Character::word({1}, 2)) == Character::word({0, 1}, 2) + Character::word({1, 0}, 2));
}

TEST_CASE("Clifford block dimensions")
{
    CHECK(clifford_block_dim({1, 2}) == 4);
    CHECK(clifford_block_dim({0}) == 2);
    CHECK(clifford_block_dim({0, 0, 1}) == 4);
    CHECK(clifford_block_dim({0, 1, 0, 0}) == 8);
}

TEST_CASE("calibrated character is a sum over fillings")
{
    auto shape = ShiftedSkewShape::parse("3,1/0,0");
    Character expect;
    expect.d = shape.size();
    for (const auto& f : standard_fillings(shape)) expect += Character::word(content_reading(f));
    CHECK(calibrated_character(shape) == expect);
    CHECK(calibrated_character(shape).total() == static_cast<long long>(standard_fillings(shape).size()));
}

TEST_CASE("character of an induced product follows the shuffle rule")
{
    auto m = segment(1, 1), n = segment(2, 2);
    auto prod = induce(outer_tensor(m, n));
    CHECK(character(prod) == char_product(character(m), character(n)));
}
