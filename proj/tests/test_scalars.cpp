#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hcaff/laurent.hpp"
#include "hcaff/rational.hpp"
#include "hcaff/surd.hpp"

using namespace hcaff;

TEST_CASE("rational arithmetic stays exact across the int64 boundary")
{
    Rational big(1);
    for (int k = 0; k < 5; ++k) big *= Rational(1000000007LL);
    CHECK_FALSE(big.is_small());
    for (int k = 0; k < 5; ++k) big /= Rational(1000000007LL);
    CHECK(big.is_small());
    CHECK(big == Rational(1));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(0).inverse(), ZeroInverse);
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
}

TEST_CASE("rational matches mpq on random data")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-(1LL << 40), 1LL << 40), den(1, 1LL << 30);
    for (int t = 0; t < 500; ++t) {
        long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        mpq_class x(mpz_class(std::to_string(a)), mpz_class(std::to_string(b)));
        mpq_class y(mpz_class(std::to_string(c)), mpz_class(std::to_string(d)));
        x.canonicalize();
        y.canonicalize();
        Rational p(a, b), q(c, d);
        REQUIRE((p * q).to_mpq() == x * y);
        REQUIRE((p + q).to_mpq() == x + y);
        REQUIRE((p - q).to_mpq() == x - y);
        REQUIRE((p < q) == (x < y));
    }
}

TEST_CASE("surd products of radicals")
{
    Surd r2 = Surd::root(2), r3 = Surd::root(3);
    CHECK(r2 * r3 == Surd::root(6));
    CHECK(r2 * r2 == Surd(2));
    CHECK(Surd::i() * Surd::i() == Surd(-1));
    CHECK(Surd::root(8) == Surd::root(2, Rational(2)));
    CHECK(Surd::sqrt(Rational(9, 4)) == Surd(Rational(3, 2)));
    CHECK_THROWS_AS(Surd::sqrt(Rational(-1)), NegativeRadicand);
    CHECK(Surd::root(6).flip_prime(2) == -Surd::root(6));
    CHECK(Surd::root(6).flip_prime(5) == Surd::root(6));
}

namespace {

Surd random_surd(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> c(-4, 4);
    const std::uint64_t rads[] = {1, 2, 3, 6, 5};
    Surd s;
    for (auto r : rads)
        if (int k = c(rng)) s += Surd::root(r, Rational(k)) * (c(rng) > 0 ? Surd::i() : Surd(1));
    return s;
}

} // namespace

TEST_CASE("surd field axioms on random elements")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        Surd a = random_surd(rng), b = random_surd(rng), c = random_surd(rng);
        REQUIRE((a + b) * c == a * c + b * c);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        if (!a.is_zero()) REQUIRE(a * a.inverse() == Surd(1));
        auto z = (a * b).to_complex(), w = a.to_complex() * b.to_complex();
        REQUIRE(std::abs(z - w) < 1e-9 * (1 + std::abs(w)));
    }
}

TEST_CASE("laurent polynomials")
{
    Laurent q = Laurent::q();
    CHECK(Laurent::quantum_int(2, 1) == q + Laurent::q(-1));
    CHECK(Laurent::quantum_int(3, 2) == Laurent::q(4) + Laurent(1) + Laurent::q(-4));
    CHECK((q - Laurent::q(-1)).pow(2) == Laurent::q(2) - Laurent(2) + Laurent::q(-2));
    CHECK((Laurent::q(3) + Laurent(2)).bar() == Laurent::q(-3) + Laurent(2));
    CHECK(Laurent::quantum_int(2, 1).at_one() == Rational(2));
}
