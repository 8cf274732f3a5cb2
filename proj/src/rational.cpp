#include "hcaff/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace hcaff {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// kMin is excluded so that negation never overflows
bool fits(i128 v) { return v > i128(kMin) && v <= i128(kMax); }

std::uint64_t uabs(std::int64_t v) { return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v); }

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

mpz_class to_mpz(i128 v)
{
    bool neg = v < 0;
    u128 u = neg ? u128(0) - u128(v) : u128(v);
    mpz_class hi(static_cast<unsigned long>(std::uint64_t(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(std::uint64_t(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

} // namespace

Rational::Rational(long long n, long long d)
{
    if (d == 0) throw ZeroInverse();
    assign_big(mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))));
}

void Rational::assign_big(mpq_class q)
{
    q.canonicalize();
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != kMin) {
        delete big_;
        big_ = nullptr;
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
    } else {
        if (big_) *big_ = q;
        else big_ = new mpq_class(q);
        num_ = 0;
        den_ = 1;
    }
}

mpq_class Rational::to_mpq() const
{
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_)); }

std::string Rational::str() const
{
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s)
{
    Rational r;
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw ZeroInverse();
    r.assign_big(q);
    return r;
}

Rational Rational::operator-() const
{
    Rational r;
    if (big_) {
        r.assign_big(-*big_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero()) throw ZeroInverse();
    Rational r;
    if (big_) {
        r.assign_big(1 / *big_);
    } else if (num_ > 0) {
        r.num_ = den_;
        r.den_ = num_;
    } else {
        r.num_ = -den_;
        r.den_ = -num_;
    }
    return r;
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            i128 s = i128(a.num_) + b.num_;
            if (fits(s)) return Rational(static_cast<long long>(s));
        } else {
            std::uint64_t g1 = gcd64(std::uint64_t(a.den_), std::uint64_t(b.den_));
            i128 t = i128(a.num_) * (b.den_ / std::int64_t(g1)) + i128(b.num_) * (a.den_ / std::int64_t(g1));
            if (t == 0) return Rational();
            u128 ut = t < 0 ? u128(0) - u128(t) : u128(t);
            std::uint64_t g2 = gcd64(std::uint64_t(ut % g1), g1);
            if (g2 == 0) g2 = g1;
            i128 n = t / i128(g2);
            i128 d = i128(a.den_ / std::int64_t(g1)) * (b.den_ / std::int64_t(g2));
            if (fits(n) && fits(d)) {
                Rational r;
                r.num_ = std::int64_t(n);
                r.den_ = std::int64_t(d);
                return r;
            }
        }
    }
    Rational r;
    r.assign_big(a.to_mpq() + b.to_mpq());
    return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        std::uint64_t g1 = gcd64(uabs(a.num_), std::uint64_t(b.den_));
        std::uint64_t g2 = gcd64(uabs(b.num_), std::uint64_t(a.den_));
        i128 n = i128(a.num_ / std::int64_t(g1)) * (b.num_ / std::int64_t(g2));
        i128 d = i128(a.den_ / std::int64_t(g2)) * (b.den_ / std::int64_t(g1));
        if (fits(n) && fits(d)) {
            Rational r;
            r.num_ = std::int64_t(n);
            r.den_ = std::int64_t(d);
            return r;
        }
        Rational r;
        r.assign_big(mpq_class(to_mpz(n), to_mpz(d)));
        return r;
    }
    Rational r;
    r.assign_big(a.to_mpq() * b.to_mpq());
    return r;
}

bool operator==(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false; // canonical: a big value never equals a small one
}

bool operator<(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

std::size_t Rational::hash() const
{
    if (!big_) return std::hash<std::int64_t>()(num_) * 1000003u ^ std::hash<std::int64_t>()(den_);
    return std::hash<std::string>()(big_->get_str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace hcaff
