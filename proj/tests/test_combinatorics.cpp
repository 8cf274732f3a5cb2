#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <set>

#include "hcaff/combinatorics.hpp"

using namespace hcaff;

namespace {

int inversions(const Permutation& w)
{
    int n = 0;
    for (int a = 1; a <= w.size(); ++a)
        for (int b = a + 1; b <= w.size(); ++b)
            if (w(a) > w(b)) ++n;
    return n;
}

// linear extensions of the box order (right and down neighbours are larger)
long long count_fillings(const ShiftedSkewShape& shape)
{
    auto boxes = shape.boxes();
    std::vector<int> order(boxes.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    long long n = 0;
    do {
        std::vector<int> pos(boxes.size());
        for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
        bool ok = true;
        for (std::size_t a = 0; a < boxes.size() && ok; ++a)
            for (std::size_t b = 0; b < boxes.size() && ok; ++b) {
                bool right = boxes[b].row == boxes[a].row && boxes[b].col == boxes[a].col + 1;
                bool down = boxes[b].col == boxes[a].col && boxes[b].row == boxes[a].row + 1;
                if ((right || down) && pos[b] < pos[a]) ok = false;
            }
        if (ok) ++n;
    } while (std::next_permutation(order.begin(), order.end()));
    return n;
}

} // namespace

TEST_CASE("permutation length is the inversion count")
{
    for (int d = 1; d <= 5; ++d)
        for (const auto& w : all_permutations(d)) {
            REQUIRE(w.length() == inversions(w));
            Permutation p = Permutation::identity(d);
            for (int i : w.reduced_word()) p = p * Permutation::simple(i, d);
            REQUIRE(p == w);
            REQUIRE(static_cast<int>(w.reduced_word().size()) == w.length());
            REQUIRE(w * w.inverse() == Permutation::identity(d));
        }
}

TEST_CASE("minimal coset representatives")
{
    for (Composition mu : {Composition{2, 1}, Composition{1, 2, 1}, Composition{2, 2}, Composition{3, 1, 1}}) {
        int d = 0;
        long long expect = 1;
        for (int b : mu) d += b;
        expect = factorial(d);
        for (int b : mu) expect /= factorial(b);
        auto reps = min_coset_reps(mu);
        REQUIRE(static_cast<long long>(reps.size()) == expect);
        auto blk = block_of(mu);
        for (const auto& u : all_permutations(d)) {
            auto [u1, u2] = coset_factor(u, mu);
            REQUIRE(u1 * u2 == u);
            REQUIRE(std::find(reps.begin(), reps.end(), u1) != reps.end());
            for (int k = 1; k <= d; ++k) REQUIRE(blk[u2(k) - 1] == blk[k - 1]);
            REQUIRE(u.length() == u1.length() + u2.length());
        }
    }
}

TEST_CASE("shifted skew shapes")
{
    auto s = ShiftedSkewShape::parse("5,2,1/3,1,0");
    CHECK(s.size() == 4);
    CHECK(s.str() == "5,2,1/3,1,0");
    CHECK_THROWS_AS(ShiftedSkewShape::parse("2,3/0,0"), std::invalid_argument);
    CHECK(ShiftedSkewShape::content({1, 3}) == 2);
    for (const auto& shape : enumerate_shapes(4, 5)) {
        auto fills = standard_fillings(shape);
        REQUIRE(static_cast<long long>(fills.size()) == count_fillings(shape));
        for (const auto& f : fills) REQUIRE(content_reading(f).size() == static_cast<std::size_t>(shape.size()));
    }
}

TEST_CASE("B_d enumeration against a brute-force box search")
{
    for (int d = 1; d <= 4; ++d)
        for (int n = 1; n <= 3; ++n)
            for (int maxl = 1; maxl <= d + 1; ++maxl) {
                std::set<std::pair<std::vector<int>, std::vector<int>>> oracle;
                std::vector<int> lam(n), mu(n);
                std::function<void(int)> rec = [&](int i) {
                    if (i == n) {
                        int sum = 0;
                        for (int k = 0; k < n; ++k) {
                            if (k + 1 < n && lam[k] < lam[k + 1]) return;
                            if (std::abs(mu[k]) >= lam[k]) return;
                            sum += lam[k] - mu[k];
                            for (int j = k + 1; j < n; ++j)
                                if (lam[k] == lam[j] && mu[k] < mu[j]) return;
                        }
                        if (sum == d) oracle.insert({lam, mu});
                        return;
                    }
                    for (int l = 1; l <= maxl; ++l)
                        for (int m = -maxl; m <= maxl; ++m) {
                            lam[i] = l;
                            mu[i] = m;
                            rec(i + 1);
                        }
                };
                rec(0);
                std::set<std::pair<std::vector<int>, std::vector<int>>> got;
                for (const auto& m : enumerate_Bd(d, n, maxl)) got.insert({m.lambda, m.mu});
                REQUIRE(got == oracle);
            }
}

TEST_CASE("multisegment words and folding")
{
    auto m = Multisegment::parse("3,2/-1,1");
    CHECK(m.degree() == 5);
    CHECK(multisegment_to_word(m) == std::vector<int>{-1, 0, 1, 2, 1});
    CHECK(fold(multisegment_to_word(m)) == std::vector<int>{0, 0, 1, 2, 1});
    CHECK(fold(-3) == 2);
    CHECK(m.block_sizes() == Composition{4, 1});
    CHECK(Multisegment::parse("2,1/0,0").zero_count() == 2);
    CHECK(parse_int_list("1, -2,3") == std::vector<int>{1, -2, 3});
}
