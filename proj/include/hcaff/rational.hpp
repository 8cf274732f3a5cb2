#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hcaff {

struct ZeroInverse : std::domain_error {
    ZeroInverse() : std::domain_error("inverse of zero") {}
};

// Exact rational. Values that fit in int64 stay inline; anything larger
// spills to a heap mpq_class and is demoted again when it shrinks.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(int n) : num_(n) {}
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q) { assign_big(q); }
    static Rational parse(const std::string& s);

    Rational(const Rational& o) : num_(o.num_), den_(o.den_), big_(o.big_ ? new mpq_class(*o.big_) : nullptr) {}
    Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) { o.big_ = nullptr; }
    Rational& operator=(const Rational& o)
    {
        if (this != &o) {
            if (o.big_) {
                if (big_) *big_ = *o.big_;
                else big_ = new mpq_class(*o.big_);
            } else {
                delete big_;
                big_ = nullptr;
                num_ = o.num_;
                den_ = o.den_;
            }
        }
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept
    {
        if (this != &o) {
            delete big_;
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_;
            o.big_ = nullptr;
        }
        return *this;
    }
    ~Rational() { delete big_; }

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }
    bool is_small() const { return !big_; }

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    double to_double() const { return big_ ? big_->get_d() : double(num_) / double(den_); }
    std::string str() const;

    Rational operator-() const;
    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::size_t hash() const;

private:
    void assign_big(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    mpq_class* big_ = nullptr;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace hcaff
