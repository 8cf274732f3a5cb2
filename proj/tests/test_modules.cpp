#include <catch2/catch_amalgamated.hpp>

#include <deque>
#include <random>

#include "hcaff/characters.hpp"
#include "hcaff/constructions.hpp"

using namespace hcaff;

namespace {

// every basis vector through every generator, no shortcuts
int naive_spin_dim(const SuperModule& m, const std::vector<Vec>& seeds)
{
    Echelon e(m.dim);
    std::deque<Vec> queue;
    for (const auto& s : seeds)
        for (int p = 0; p < 2; ++p) {
            Vec part = parity_part(s, m.parity, p);
            if (e.insert(part)) queue.push_back(part);
        }
    auto gens = module_generators(m);
    while (!queue.empty()) {
        Vec v = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            Vec w = g.matrix->apply(v);
            if (e.insert(w)) queue.push_back(w);
        }
    }
    return e.dim();
}

Vec sparse_random(int n, std::mt19937_64& rng, int nonzeros)
{
    Vec v(n);
    std::uniform_int_distribution<int> pos(0, n - 1), val(-3, 3);
    for (int k = 0; k < nonzeros; ++k) v[pos(rng)] = Surd(val(rng));
    return v;
}

// same module in a scrambled, parity-preserving basis
SuperModule conjugated(const SuperModule& m, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> val(-1, 1);
    Matrix p = Matrix::identity(m.dim);
    for (int r = 0; r < m.dim; ++r)
        for (int c = 0; c < m.dim; ++c)
            if (r != c && m.parity[r] == m.parity[c])
                if (int k = val(rng)) p.add(r, c, Surd(k));
    auto inv = inverse(p);
    REQUIRE(inv.has_value());
    SuperModule out = m;
    for (auto* gens : {&out.s, &out.c, &out.x})
        for (auto& g : *gens)
            if (!g.empty()) g = *inv * g * p;
    return out;
}

bool verified(const SuperModule& m)
{
    auto r = verify_module(m);
    if (!r.ok()) UNSCOPED_INFO(r.first_failure()->name);
    return r.ok();
}

} // namespace

TEST_CASE("segment modules satisfy the relations")
{
    for (int b = 0; b <= 3; ++b)
        for (int a = -b; a <= b; ++a) {
            INFO("[" << a << "," << b << "]");
            REQUIRE(verified(big_segment(a, b)));
        }
    CHECK(big_segment(0, 2).dim == 8);
    CHECK(big_segment(1, 2).dim == 8);
    CHECK(segment(1, 2).dim == 4);
    CHECK(segment(-1, 1).dim == 8);
    CHECK(segment(-1, 2).dim == 16);
    CHECK(verified(segment(-1, 2)));
    CHECK(verified(tau_dual(segment(-1, 2))));
}

TEST_CASE("segment characters")
{
    CHECK(character(big_segment(0, 2)) == Character::word({0, 1, 2}));
    CHECK(character(big_segment(1, 2)) == Character::word({1, 2}, 2));
    CHECK(character(big_segment(-1, 2)) == Character::word({0, 0, 1, 2}, 4));
    CHECK(character(segment(1, 2)) == Character::word({1, 2}));
    CHECK(character(segment(-1, 2)) == Character::word({0, 0, 1, 2}, 2));
}

TEST_CASE("analysis of small segments")
{
    auto q = analyze(big_segment(0, 2));
    CHECK(q.irreducible == Irreducibility::Yes);
    CHECK(q.type == ModuleType::Q);
    auto split = analyze(big_segment(1, 2));
    CHECK(split.irreducible == Irreducibility::No);
    auto m = analyze(segment(-1, 2));
    CHECK(m.irreducible == Irreducibility::Yes);
    CHECK(m.type == ModuleType::M);
}

TEST_CASE("endomorphism counts agree with the full linear system")
{
    for (auto mod : {segment(1, 2), big_segment(0, 2), segment(-1, 1), kato_module(0, 2), kato_module(0, 3)}) {
        auto an = analyze(mod);
        REQUIRE(an.even_endomorphisms >= 0);
        CHECK(an.even_endomorphisms == static_cast<int>(all_homs(mod, mod, 0).size()));
        CHECK(an.odd_endomorphisms == static_cast<int>(all_homs(mod, mod, 1).size()));
    }
}

TEST_CASE("Clifford-saturated spin matches the naive spin")
{
    std::mt19937_64 rng(3);
    std::vector<SuperModule> mods{big_segment(1, 2), big_segment(-1, 2), standard_module(Multisegment::parse("2,1/0,0")),
                                  standard_module(Multisegment::parse("2,2/0,1")), calibrated_module_full(ShiftedSkewShape::parse("3,1/0,0"))};
    for (const auto& m : mods) {
        REQUIRE(verified(m));
        for (int t = 0; t < 6; ++t) {
            std::vector<Vec> seeds{sparse_random(m.dim, rng, 1 + t % 3)};
            if (is_zero(seeds[0])) continue;
            auto sub = spin_up(m, seeds);
            REQUIRE(static_cast<int>(sub.basis.size()) == naive_spin_dim(m, seeds));
            REQUIRE(verified(sub.module));
        }
    }
}

TEST_CASE("standard module dimensions")
{
    for (int d = 1; d <= 3; ++d)
        for (int n = 1; n <= 2; ++n)
            for (const auto& ms : enumerate_Bd(d, n)) {
                auto m = standard_module(ms);
                INFO(ms.str());
                REQUIRE(m.dim == standard_dimension(ms));
                REQUIRE(verified(m));
            }
    // d!/prod d_i! * 2^{d - floor(gamma_0/2)} by hand
    CHECK(standard_dimension(Multisegment::parse("2,1/0,0")) == 3 * 4);
    CHECK(standard_dimension(Multisegment::parse("3,2/-1,1")) == 5 * 32);
}

TEST_CASE("diagonal weight multiplicities agree with the weight table")
{
    std::vector<SuperModule> mods{big_segment(-1, 2), segment(-2, 2), calibrated_module(ShiftedSkewShape::parse("3,1/0,0"))};
    for (int d = 1; d <= 3; ++d)
        for (int n = 1; n <= d; ++n)
            for (const auto& ms : enumerate_Bd(d, n)) mods.push_back(standard_module(ms));
    std::mt19937_64 rng(8);
    for (int k = 0; k < 3; ++k) mods.push_back(conjugated(mods[k], rng));
    for (const auto& m : mods) {
        std::map<std::vector<int>, int> slow;
        for (const auto& [w, s] : weight_table(m).entries)
            if (s.gen_dim) slow[w] = s.gen_dim;
        REQUIRE(weight_multiplicities(m) == slow);
    }
}

TEST_CASE("Kato modules")
{
    for (int d = 1; d <= 3; ++d) {
        auto k0 = kato_module(0, d), k1 = kato_module(1, d);
        REQUIRE(verified(k0));
        REQUIRE(verified(k1));
        auto a0 = analyze(k0), a1 = analyze(k1);
        CHECK(a0.irreducible == Irreducibility::Yes);
        CHECK(a1.irreducible == Irreducibility::Yes);
        CHECK(a0.type == (d % 2 ? ModuleType::Q : ModuleType::M));
        CHECK(a1.type == ModuleType::M);
    }
}

TEST_CASE("calibrated modules and isomorphism search")
{
    for (const auto& shape : enumerate_shapes(3, 3)) {
        auto h = calibrated_module(shape);
        REQUIRE(verified(h));
        CHECK(character(h) == calibrated_character(shape));
        CHECK(iso_search(h, h).has_value());
    }
    CHECK_FALSE(iso_search(segment(1, 2), segment(0, 1)).has_value());
}
