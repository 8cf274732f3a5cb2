#include "hcaff/surd.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <vector>

namespace hcaff {

Gaussian Gaussian::inverse() const
{
    if (im.is_zero()) return {re.inverse()};
    Rational n = re * re + im * im;
    Rational inv = n.inverse();
    return {re * inv, -im * inv};
}

std::string Gaussian::str() const
{
    if (im.is_zero()) return re.str();
    std::string imag = im.abs().is_one() ? std::string("i") : im.abs().str() + "*i";
    if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + imag;
    return re.str() + (im.sign() < 0 ? "-" : "+") + imag;
}

namespace {

Gaussian parse_gaussian(std::string s)
{
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    auto parse_imag = [](std::string t) {
        // t ends with "i": forms "i", "-i", "r*i"
        t.pop_back();
        if (t.empty() || t == "+") return Rational(1);
        if (t == "-") return Rational(-1);
        if (t.back() == '*') t.pop_back();
        return Rational::parse(t.front() == '+' ? t.substr(1) : t);
    };
    if (s.back() != 'i') return {Rational::parse(s)};
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return {Rational(0), parse_imag(s)};
    return {Rational::parse(s.substr(0, split)), parse_imag(s.substr(split))};
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace

std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n)
{
    std::uint64_t s = 1, k = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int j = 0; j < e / 2; ++j) k *= p;
        if (e % 2) s *= p;
    }
    s *= n;
    return {s, k};
}

Surd Surd::root(std::uint64_t r, Rational c)
{
    Surd out;
    if (r == 0 || c.is_zero()) return out;
    auto [s, k] = squarefree_split(r);
    out.terms_.push_back({s, Gaussian(c * Rational(static_cast<long long>(k)))});
    return out;
}

Surd Surd::sqrt(const Rational& r)
{
    if (r.sign() < 0) throw NegativeRadicand();
    if (r.is_zero()) return {};
    // sqrt(n/d) = sqrt(n*d)/d
    mpz_class n = r.numerator() * r.denominator();
    if (!n.fits_ulong_p()) throw std::overflow_error("radicand too large");
    return root(n.get_ui(), Rational(mpq_class(1, r.denominator())));
}

Surd Surd::parse(const std::string& text)
{
    Surd out;
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    if (s.empty()) throw std::invalid_argument("empty scalar");
    // split on top-level '+' that precede a new term: we render terms joined by " + ",
    // so split the original text on that token instead
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t k = text.find(" + ", pos);
        parts.push_back(text.substr(pos, k == std::string::npos ? std::string::npos : k - pos));
        if (k == std::string::npos) break;
        pos = k + 3;
    }
    for (auto part : parts) {
        part.erase(std::remove(part.begin(), part.end(), ' '), part.end());
        std::uint64_t rad = 1;
        auto k = part.find("sqrt(");
        if (k != std::string::npos) {
            auto close = part.find(')', k);
            rad = std::stoull(part.substr(k + 5, close - k - 5));
            part = part.substr(0, k);
            if (!part.empty() && part.back() == '*') part.pop_back();
            if (part.empty()) part = "1";
            else if (part == "-") part = "-1";
        }
        Gaussian g = parse_gaussian(part);
        auto [sf, sq] = squarefree_split(rad);
        out.add_term(sf, g * Gaussian(Rational(static_cast<long long>(sq))));
    }
    return out;
}

Rational Surd::rational_value() const
{
    if (terms_.empty()) return {};
    if (!is_rational()) throw std::domain_error("not rational: " + str());
    return terms_[0].coef.re;
}

Gaussian Surd::gaussian_value() const
{
    if (terms_.empty()) return {};
    if (!is_gaussian()) throw std::domain_error("not Gaussian: " + str());
    return terms_[0].coef;
}

void Surd::add_term(std::uint64_t rad, const Gaussian& c)
{
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), rad, [](const Term& t, std::uint64_t r) { return t.rad < r; });
    if (it != terms_.end() && it->rad == rad) {
        it->coef = it->coef + c;
        if (it->coef.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, Term{rad, c});
    }
}

Surd Surd::operator-() const
{
    Surd r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Surd operator+(const Surd& a, const Surd& b)
{
    Surd r = a;
    r += b;
    return r;
}

Surd operator-(const Surd& a, const Surd& b)
{
    Surd r = a;
    r -= b;
    return r;
}

Surd& Surd::operator+=(const Surd& b)
{
    if (terms_.empty()) return *this = b;
    for (const auto& t : b.terms_) add_term(t.rad, t.coef);
    return *this;
}

Surd& Surd::operator-=(const Surd& b)
{
    if (terms_.size() == 1 && b.terms_.size() == 1 && terms_[0].rad == b.terms_[0].rad) {
        terms_[0].coef = terms_[0].coef - b.terms_[0].coef;
        if (terms_[0].coef.is_zero()) terms_.clear();
        return *this;
    }
    for (const auto& t : b.terms_) add_term(t.rad, -t.coef);
    return *this;
}

namespace {

// sqrt(r1) * sqrt(r2) = g * sqrt((r1/g)(r2/g)) for squarefree r1, r2
inline std::pair<std::uint64_t, std::uint64_t> rad_product(std::uint64_t r1, std::uint64_t r2)
{
    if (r1 == 1) return {r2, 1};
    if (r2 == 1) return {r1, 1};
    std::uint64_t g = std::gcd(r1, r2);
    return {(r1 / g) * (r2 / g), g};
}

} // namespace

Surd operator*(const Surd& a, const Surd& b)
{
    Surd r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        auto [rad, g] = rad_product(a.terms_[0].rad, b.terms_[0].rad);
        Gaussian c = a.terms_[0].coef * b.terms_[0].coef;
        if (g != 1) c = c * Gaussian(Rational(static_cast<long long>(g)));
        r.terms_.push_back({rad, std::move(c)});
        return r;
    }
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            auto [rad, g] = rad_product(s.rad, t.rad);
            Gaussian c = s.coef * t.coef;
            if (g != 1) c = c * Gaussian(Rational(static_cast<long long>(g)));
            r.add_term(rad, c);
        }
    }
    return r;
}

void Surd::sub_mul(const Surd& f, const Surd& g)
{
    if (f.terms_.empty() || g.terms_.empty()) return;
    if (f.terms_.size() == 1 && g.terms_.size() == 1) {
        auto [rad, k] = rad_product(f.terms_[0].rad, g.terms_[0].rad);
        Gaussian c = f.terms_[0].coef * g.terms_[0].coef;
        if (k != 1) c = c * Gaussian(Rational(static_cast<long long>(k)));
        add_term(rad, -c);
        return;
    }
    *this -= f * g;
}

bool operator==(const Surd& a, const Surd& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
        if (a.terms_[k].rad != b.terms_[k].rad || a.terms_[k].coef != b.terms_[k].coef) return false;
    return true;
}

Surd Surd::flip_prime(std::uint64_t p) const
{
    Surd r = *this;
    for (auto& t : r.terms_)
        if (t.rad % p == 0) t.coef = -t.coef;
    return r;
}

Surd Surd::conj() const
{
    Surd r = *this;
    for (auto& t : r.terms_) t.coef = t.coef.conj();
    return r;
}

Surd Surd::inverse() const
{
    if (terms_.empty()) throw ZeroInverse();
    if (terms_.size() == 1) {
        // (g sqrt r)^-1 = g^-1 sqrt(r) / r
        const auto& t = terms_[0];
        Surd r;
        r.terms_.push_back({t.rad, t.coef.inverse() * Gaussian(Rational(1, static_cast<long long>(t.rad)))});
        return r;
    }
    // a * flip_p(a) has no radicand divisible by p; repeat until Gaussian
    Surd num(1);
    Surd cur = *this;
    while (!cur.is_gaussian()) {
        std::uint64_t rad = 1;
        for (const auto& t : cur.terms_)
            if (t.rad != 1) {
                rad = t.rad;
                break;
            }
        std::uint64_t p = prime_factors(rad).front();
        Surd c = cur.flip_prime(p);
        num = num * c;
        cur = cur * c;
    }
    return num * Surd(cur.gaussian_value().inverse());
}

std::complex<double> Surd::to_complex() const
{
    std::complex<double> z;
    for (const auto& t : terms_)
        z += std::complex<double>(t.coef.re.to_double(), t.coef.im.to_double()) * std::sqrt(double(t.rad));
    return z;
}

std::string Surd::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        if (k) out += " + ";
        if (t.rad == 1) {
            out += t.coef.str();
            continue;
        }
        bool compound = !t.coef.re.is_zero() && !t.coef.im.is_zero();
        std::string g = t.coef.str();
        if (compound) out += "(" + g + ")*";
        else if (t.coef.is_real() && t.coef.re.is_one()) out += "";
        else if (t.coef.is_real() && (-t.coef.re).is_one()) out += "-";
        else out += g + "*";
        out += "sqrt(" + std::to_string(t.rad) + ")";
    }
    return out;
}

std::size_t Surd::hash() const
{
    std::size_t h = 0;
    for (const auto& t : terms_) h = h * 31 + t.rad * 7 + t.coef.re.hash() * 13 + t.coef.im.hash();
    return h;
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.str(); }

} // namespace hcaff
