#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/container/small_vector.hpp>

#include "hcaff/rational.hpp"

namespace hcaff {

struct NegativeRadicand : std::domain_error {
    NegativeRadicand() : std::domain_error("square root of a negative rational") {}
};

struct Gaussian {
    Rational re, im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(int r) : re(r) {}

    static Gaussian i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    Gaussian conj() const { return {re, -im}; }
    Gaussian inverse() const;
    std::string str() const;

    Gaussian operator-() const { return {-re, -im}; }
    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b)
    {
        if (a.im.is_zero() && b.im.is_zero()) return {a.re * b.re};
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

// Element of Q(i)(sqrt 2, sqrt 3, ...): sum of g_r * sqrt(r) over squarefree r,
// kept sorted by r with no zero coefficients. r = 1 is the Gaussian part.
class Surd {
public:
    struct Term {
        std::uint64_t rad;
        Gaussian coef;
    };
    using Terms = boost::container::small_vector<Term, 1>;

    Surd() = default;
    Surd(int v) : Surd(Rational(v)) {}
    Surd(long long v) : Surd(Rational(v)) {}
    Surd(Rational r)
    {
        if (!r.is_zero()) terms_.push_back({1, Gaussian(std::move(r))});
    }
    Surd(Gaussian g)
    {
        if (!g.is_zero()) terms_.push_back({1, std::move(g)});
    }
    static Surd i() { return Surd(Gaussian::i()); }
    // c * sqrt(r) for a positive integer r (not necessarily squarefree)
    static Surd root(std::uint64_t r, Rational c = Rational(1));
    // nonnegative square root of a nonnegative rational
    static Surd sqrt(const Rational& r);
    static Surd parse(const std::string& s);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].rad == 1 && terms_[0].coef.im.is_zero() && terms_[0].coef.re.is_one(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].rad == 1 && terms_[0].coef.im.is_zero()); }
    bool is_gaussian() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].rad == 1); }
    Rational rational_value() const; // requires is_rational()
    Gaussian gaussian_value() const; // requires is_gaussian()
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    Surd operator-() const;
    Surd inverse() const;
    // image under sqrt(p) -> -sqrt(p) for the prime p
    Surd flip_prime(std::uint64_t p) const;
    Surd conj() const;
    std::complex<double> to_complex() const;
    std::string str() const;

    friend Surd operator+(const Surd& a, const Surd& b);
    friend Surd operator-(const Surd& a, const Surd& b);
    friend Surd operator*(const Surd& a, const Surd& b);
    friend Surd operator/(const Surd& a, const Surd& b) { return a * b.inverse(); }
    Surd& operator+=(const Surd& b);
    Surd& operator-=(const Surd& b);
    Surd& operator*=(const Surd& b) { return *this = *this * b; }
    friend bool operator==(const Surd& a, const Surd& b);
    friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

    // this -= f * g without materializing f * g when both are single terms
    void sub_mul(const Surd& f, const Surd& g);

    std::size_t hash() const;

private:
    void add_term(std::uint64_t rad, const Gaussian& c);
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Surd& s);

// squarefree part s and square factor k with n = k^2 * s
std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n);

} // namespace hcaff
