#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "hcaff/shuffle.hpp"

using namespace hcaff;

namespace {

// sum over position sets; each letter of b pays -(beta_a, beta_b) for every letter of a before it
ShuffleElement closed_form_shuffle(const Word& a, const Word& b, const CartanB& cartan)
{
    ShuffleElement out;
    int n = static_cast<int>(a.size() + b.size());
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(mask) != static_cast<int>(a.size())) continue;
        Word w;
        int ia = 0, ib = 0, e = 0;
        std::vector<int> seen_a;
        for (int p = 0; p < n; ++p) {
            if (mask >> p & 1) {
                w.push_back(a[ia]);
                seen_a.push_back(a[ia++]);
            } else {
                for (int x : seen_a) e -= cartan.form(x, b[ib]);
                w.push_back(b[ib++]);
            }
        }
        out.add(w, Laurent::q(e));
    }
    return out;
}

// lexicographic on reversed words, a word that runs out first being the larger
int rl_compare(const Word& u, const Word& v)
{
    Word ru(u.rbegin(), u.rend()), rv(v.rbegin(), v.rend());
    for (std::size_t k = 0; k < std::min(ru.size(), rv.size()); ++k)
        if (ru[k] != rv[k]) return ru[k] < rv[k] ? -1 : 1;
    if (ru.size() == rv.size()) return 0;
    return ru.size() < rv.size() ? 1 : -1;
}

// larger than every proper left factor
bool lyndon_by_prefixes(const Word& w)
{
    if (w.empty()) return false;
    for (std::size_t j = 1; j < w.size(); ++j)
        if (rl_compare(Word(w.begin(), w.begin() + j), w) >= 0) return false;
    return true;
}

std::vector<Word> all_words(int len, int r)
{
    std::vector<Word> out{{}};
    for (int k = 0; k < len; ++k) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (int a = 0; a < r; ++a) {
                next.push_back(w);
                next.back().push_back(a);
            }
        out = std::move(next);
    }
    return out;
}

// every split of w into Lyndon words with non-increasing factors
std::vector<std::vector<Word>> lyndon_splits(const Word& w)
{
    std::vector<std::vector<Word>> out;
    std::vector<Word> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (start == w.size()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t end = start + 1; end <= w.size(); ++end) {
            Word f(w.begin() + start, w.begin() + end);
            if (!lyndon_by_prefixes(f)) continue;
            if (!cur.empty() && rl_compare(cur.back(), f) < 0) continue;
            cur.push_back(f);
            rec(end);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

ShuffleElement random_element(std::mt19937_64& rng, int r)
{
    std::uniform_int_distribution<int> len(1, 3), letter(0, r - 1), e(-2, 2);
    ShuffleElement x;
    for (int t = 0; t < 2; ++t) {
        Word w(len(rng));
        for (auto& a : w) a = letter(rng);
        x.add(w, Laurent::q(e(rng)));
    }
    return x;
}

} // namespace

TEST_CASE("type B form")
{
    CartanB b(3);
    CHECK(b.form(0, 0) == 2);
    CHECK(b.form(1, 1) == 4);
    CHECK(b.form(0, 1) == -2);
    CHECK(b.form(0, 2) == 0);
    CHECK(b.degree({0, 1, 0}) == std::vector<int>{2, 1, 0});
}

TEST_CASE("quantum shuffle matches the closed form")
{
    CartanB cartan(3);
    for (const auto& u : all_words(2, 3))
        for (const auto& v : all_words(3, 3)) REQUIRE(qshuffle(u, v, cartan) == closed_form_shuffle(u, v, cartan));
    CHECK(qshuffle({0}, {1}, cartan) == ShuffleElement::word({0, 1}, Laurent::q(2)) + ShuffleElement::word({1, 0}));
}

TEST_CASE("quantum shuffle is associative and twisted commutative")
{
    CartanB cartan(3);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        auto x = random_element(rng, 3), y = random_element(rng, 3), z = random_element(rng, 3);
        REQUIRE(qshuffle(qshuffle(x, y, cartan), z, cartan) == qshuffle(x, qshuffle(y, z, cartan), cartan));
    }
    for (const auto& u : all_words(2, 3))
        for (const auto& v : all_words(2, 3)) {
            int total = cartan.form(cartan.degree(u), cartan.degree(v));
            REQUIRE(qshuffle(v, u, cartan) == Laurent::q(-total) * qshuffle(u, v, cartan).bar_coefficients());
        }
}

TEST_CASE("right-to-left order")
{
    for (int len = 0; len <= 3; ++len)
        for (const auto& u : all_words(len, 3))
            for (int len2 = 0; len2 <= 3; ++len2)
                for (const auto& v : all_words(len2, 3)) REQUIRE(word_compare(u, v) == rl_compare(u, v));
}

TEST_CASE("Lyndon words and factorization by brute force")
{
    for (int len = 1; len <= 6; ++len)
        for (const auto& w : all_words(len, 3)) {
            REQUIRE(is_lyndon(w) == lyndon_by_prefixes(w));
            auto splits = lyndon_splits(w);
            REQUIRE(splits.size() == 1);
            REQUIRE(lyndon_factorize(w) == splits.front());
        }
    CHECK_THROWS_AS(standard_factorization({1, 0, 0, 1}), NotLyndon);
    auto [l1, l2] = standard_factorization({0, 1, 2});
    CHECK(l1 == Word{0});
    CHECK(l2 == Word{1, 2});
}

TEST_CASE("good Lyndon words and good words")
{
    for (int r = 1; r <= 5; ++r) {
        auto good = good_lyndon_words(r);
        REQUIRE(static_cast<int>(good.size()) == r * r);
        for (const auto& l : good) REQUIRE(lyndon_by_prefixes(l));
    }
    for (int r = 1; r <= 3; ++r) {
        auto good = good_lyndon_words(r);
        std::set<Word> lyn(good.begin(), good.end());
        for (int d = 1; d <= 5; ++d) {
            std::set<Word> expect;
            for (const auto& w : all_words(d, r)) {
                bool ok = true;
                auto splits = lyndon_splits(w);
                for (const auto& f : splits.front()) ok = ok && lyn.count(f);
                if (ok) expect.insert(w);
            }
            auto got = good_words(d, r);
            REQUIRE(std::set<Word>(got.begin(), got.end()) == expect);
        }
    }
}

TEST_CASE("r_g of segments and the double segment coefficient")
{
    Laurent t = Laurent::q(2) - Laurent::q(-2);
    for (int k = 0; k <= 2; ++k) {
        CartanB cartan(k + 1);
        Word g;
        for (int a = 0; a <= k; ++a) g.push_back(a);
        CHECK(bracket_rg(g, cartan) == ShuffleElement::word(g, t.pow(k)));
    }
    CHECK(bracket_rg({0, 0, 1}, CartanB(2)) == ShuffleElement::word({0, 0, 1}, t.pow(2)));
    auto dc = dual_canonical_lyndon({0, 0, 1}, 2);
    CHECK(dc == ShuffleElement::word({0, 0, 1}, Laurent::q() + Laurent::q(-1)));
    CHECK_THROWS_AS(dual_canonical_lyndon({1, 0}, 2), NotGoodLyndon);
}
