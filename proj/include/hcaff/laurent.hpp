#pragma once

#include <map>
#include <string>

#include "hcaff/rational.hpp"

namespace hcaff {

// Laurent polynomial in q with rational coefficients.
class Laurent {
public:
    Laurent() = default;
    Laurent(int c) : Laurent(Rational(c)) {}
    Laurent(Rational c)
    {
        if (!c.is_zero()) coeffs_[0] = std::move(c);
    }
    static Laurent monomial(int exp, Rational c = Rational(1));
    static Laurent q(int exp = 1) { return monomial(exp); }
    // (k)_i = (q_i^k - q_i^-k)/(q_i - q_i^-1) with q_i = q^di
    static Laurent quantum_int(int k, int di);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int e) const;
    Rational at_one() const;
    Laurent bar() const; // q -> q^-1
    std::string str() const;

    Laurent operator-() const;
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
    Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
    Laurent& operator*=(const Laurent& b) { return *this = *this * b; }
    Laurent pow(int n) const;
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

private:
    std::map<int, Rational> coeffs_;
};

} // namespace hcaff
