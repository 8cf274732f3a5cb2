#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hcaff/sergeev.hpp"

using namespace hcaff;

namespace {

GradedMatrix random_graded(int rows, int cols, int parity, const std::vector<int>& prow, const std::vector<int>& pcol,
                           std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> v(-2, 2);
    GradedMatrix g{Matrix(rows, cols), parity};
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if ((prow[r] ^ pcol[c]) == parity)
                if (int k = v(rng)) g.m.add(r, c, Surd(k));
    return g;
}

} // namespace

TEST_CASE("q(n) generators")
{
    int n = 2;
    auto f11 = qn_f(n, 1, 1);
    CHECK(f11.parity == 1);
    CHECK((f11.m * f11.m) == qn_e(n, 1, 1).m);
    auto br = superbracket(qn_e(n, 1, 2), qn_e(n, 2, 1));
    CHECK(br.m == qn_e(n, 1, 1).m - qn_e(n, 2, 2).m);
    auto fbr = superbracket(qn_f(n, 1, 2), qn_f(n, 2, 1));
    CHECK(fbr.m == qn_e(n, 1, 1).m + qn_e(n, 2, 2).m);
    CHECK(qn_generators(n).size() == 8);
    auto e11 = qn_e(1, 1, 1).m;
    CHECK(e11 == Matrix::identity(2));
    auto c = clifford_c(n);
    CHECK(c.m * c.m == Matrix::identity(2 * n, Surd(-1)));
    CHECK(verify_qmodule(natural_qmodule(3)).ok());
    CHECK(verify_qmodule(trivial_qmodule(2)).ok());
}

TEST_CASE("graded Kronecker product against its definition")
{
    std::mt19937_64 rng(4);
    std::vector<int> pa{0, 1, 1}, pb{0, 1};
    for (int t = 0; t < 20; ++t) {
        int p = t % 2, q = (t / 2) % 2;
        auto a = random_graded(3, 3, p, pa, pa, rng), b = random_graded(2, 2, q, pb, pb, rng);
        auto k = graded_kron(a, pa, b);
        REQUIRE(k.parity == (p ^ q));
        // (A (x) B)(u_i (x) v_j) = (-1)^{p(B) p(u_i)} A u_i (x) B v_j
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j)
                for (int r = 0; r < 3; ++r)
                    for (int s = 0; s < 2; ++s) {
                        Surd want = a.m.at(r, i) * b.m.at(s, j);
                        if (q && pa[i]) want = -want;
                        REQUIRE(k.m.at(r * 2 + s, i * 2 + j) == want);
                    }
    }
    CHECK(tensor_parity(pa, pb) == std::vector<int>{0, 1, 1, 0, 1, 0});
}

TEST_CASE("Omega identities")
{
    for (int n = 1; n <= 3; ++n) {
        auto r = check_omega(n);
        INFO(n << (r.first_failure() ? r.first_failure()->name : ""));
        CHECK(r.ok());
    }
}

TEST_CASE("a broken q(n)-module is rejected")
{
    QModule bad = natural_qmodule(2);
    bad.action[0] = Surd(2) * bad.action[0];
    CHECK_FALSE(verify_qmodule(bad).ok());
    CHECK_THROWS_AS(duality_operators(2, 2, bad), NotAModule);
}

TEST_CASE("trivial coefficient module kills Omega_0i")
{
    TensorSpace space(trivial_qmodule(2), 2);
    CHECK(space.dim() == 16);
    CHECK(space.omega_0(1).is_zero());
    CHECK(space.omega_0(2).is_zero());
}

TEST_CASE("affine action on tensor space")
{
    auto op = duality_operators(1, 2, trivial_qmodule(1));
    CHECK(verify_module(op).ok());
    CHECK(check_tau_compatibility(op).ok());
    auto v = natural_qmodule(2);
    auto op2 = duality_operators(2, 2, v);
    CHECK(verify_module(op2).ok());
    CHECK(check_qn_commutation(op2, TensorSpace(v, 2), static_cast<int>(qn_generators(2).size())).ok());
    auto rep = verify_sergeev(2, 2);
    CHECK(rep.checks.ok());
    CHECK(rep.injectivity_tested);
    CHECK(rep.image_rank == rep.basis_size);
}
