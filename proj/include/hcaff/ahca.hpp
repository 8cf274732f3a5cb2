#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hcaff/check.hpp"
#include "hcaff/combinatorics.hpp"
#include "hcaff/surd.hpp"

namespace hcaff {

struct RankMismatch : std::invalid_argument {
    RankMismatch() : std::invalid_argument("rank mismatch") {}
};

// Which value c_i^2 takes. The algebra uses -1; +1 exists only as a negative control.
struct AlgebraRules {
    int clifford_square = -1;
};

// x^alpha c^eps w, with c-factors in increasing index order.
struct Monomial {
    std::vector<int> alpha;
    std::uint32_t eps = 0;
    Permutation w;

    int degree() const;
    int odd() const { return __builtin_popcount(eps); }
    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        if (a.eps != b.eps) return a.eps < b.eps;
        return a.w < b.w;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.alpha == b.alpha && a.eps == b.eps && a.w == b.w; }
};

class PbwElement {
public:
    using Terms = std::map<Monomial, Surd>;

    PbwElement() = default;
    explicit PbwElement(int rank) : rank_(rank) {}
    PbwElement(int rank, const Surd& scalar);
    static PbwElement x(int i, int d);
    static PbwElement c(int i, int d);
    static PbwElement s(int i, int d);
    static PbwElement perm(const Permutation& w);
    static PbwElement monomial(const Monomial& m, int d, const Surd& coef = Surd(1));
    static PbwElement parse(const std::string& text, int d);

    int rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    int parity() const; // parity of a homogeneous element
    Surd coeff(const Monomial& m) const;
    void add(const Monomial& m, const Surd& c);
    std::string str() const;

    PbwElement operator-() const;
    friend PbwElement operator+(const PbwElement& a, const PbwElement& b);
    friend PbwElement operator-(const PbwElement& a, const PbwElement& b);
    friend PbwElement operator*(const Surd& k, const PbwElement& a);
    friend PbwElement operator*(const PbwElement& a, const PbwElement& b);
    PbwElement& operator+=(const PbwElement& b) { return *this = *this + b; }
    PbwElement& operator-=(const PbwElement& b) { return *this = *this - b; }
    friend bool operator==(const PbwElement& a, const PbwElement& b) { return a.rank_ == b.rank_ && a.terms_ == b.terms_; }
    friend bool operator!=(const PbwElement& a, const PbwElement& b) { return !(a == b); }

private:
    int rank_ = 0;
    Terms terms_;
};

PbwElement pbw_multiply(const PbwElement& a, const PbwElement& b, const AlgebraRules& rules = {});
// s_i * b, c_i * b, x_i * b
PbwElement left_s(int i, const PbwElement& b, const AlgebraRules& rules = {});
PbwElement left_c(int i, const PbwElement& b, const AlgebraRules& rules = {});
PbwElement left_x(int i, const PbwElement& b);

PbwElement sigma_twist(const PbwElement& a, const AlgebraRules& rules = {});
PbwElement tau_antiauto(const PbwElement& a, const AlgebraRules& rules = {});

PbwElement intertwiner_phi(int i, int d, const AlgebraRules& rules = {});
PbwElement jucys_murphy(int i, int d, const AlgebraRules& rules = {});
// prod_{i not in S} (x_i + kappa_i); S holds 1-based indices
PbwElement x_selector(const std::vector<int>& S, const std::vector<Surd>& kappas, int d);

struct AlgebraReport : CheckReport {
    int rank = 0;
};

AlgebraReport verify_algebra(int d, std::uint64_t seed = 1, const AlgebraRules& rules = {});

// the generators s_1..s_{d-1}, c_1..c_d, x_1..x_d with their names
std::vector<std::pair<std::string, PbwElement>> generators(int d);
// random monomial with bounded x-degree
Monomial random_monomial(int d, std::mt19937_64& rng, int max_exp = 2);

} // namespace hcaff
