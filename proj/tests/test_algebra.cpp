#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hcaff/ahca.hpp"

using namespace hcaff;

TEST_CASE("defining relations hold for small ranks")
{
    for (int d = 2; d <= 4; ++d) {
        auto r = verify_algebra(d, 3);
        INFO("d=" << d << " " << (r.first_failure() ? r.first_failure()->name : ""));
        CHECK(r.ok());
    }
}

TEST_CASE("corrupted Clifford square is caught")
{
    AlgebraRules bad;
    bad.clifford_square = 1;
    auto r = verify_algebra(3, 3, bad);
    CHECK_FALSE(r.ok());
}

TEST_CASE("hand-checked products")
{
    int d = 3;
    auto c1 = PbwElement::c(1, d), c2 = PbwElement::c(2, d);
    auto x1 = PbwElement::x(1, d), x2 = PbwElement::x(2, d);
    auto s1 = PbwElement::s(1, d);
    PbwElement one(d, Surd(1));
    CHECK(c1 * c1 == -one);
    CHECK(c1 * c2 == -(c2 * c1));
    CHECK(x1 * c1 == -(c1 * x1));
    CHECK(x1 * c2 == c2 * x1);
    CHECK(s1 * x1 == x2 * s1 - one + c1 * c2);
    CHECK(s1 * s1 == one);
    CHECK(s1 * c1 == PbwElement::c(2, d) * s1);
}

TEST_CASE("tau reverses products and sigma preserves them")
{
    int d = 3;
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        auto a = PbwElement::monomial(random_monomial(d, rng), d);
        auto b = PbwElement::monomial(random_monomial(d, rng), d);
        REQUIRE(tau_antiauto(a * b) == tau_antiauto(b) * tau_antiauto(a));
        REQUIRE(sigma_twist(a * b) == sigma_twist(a) * sigma_twist(b));
        REQUIRE(tau_antiauto(tau_antiauto(a)) == a);
    }
}

TEST_CASE("intertwiner square")
{
    int d = 3;
    for (int i = 1; i < d; ++i) {
        auto xi = PbwElement::x(i, d), xj = PbwElement::x(i + 1, d);
        auto xi2 = xi * xi, xj2 = xj * xj;
        auto diff = xi2 - xj2;
        auto expect = Surd(2) * xi2 + Surd(2) * xj2 - diff * diff;
        auto phi = intertwiner_phi(i, d);
        CHECK(phi * phi == expect);
    }
}
