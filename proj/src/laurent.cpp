#include "hcaff/laurent.hpp"

#include <stdexcept>

namespace hcaff {

Laurent Laurent::monomial(int exp, Rational c)
{
    Laurent p;
    if (!c.is_zero()) p.coeffs_[exp] = std::move(c);
    return p;
}

Laurent Laurent::quantum_int(int k, int di)
{
    if (k < 0) return -quantum_int(-k, di);
    Laurent p;
    // q_i^(k-1) + q_i^(k-3) + ... + q_i^(1-k)
    for (int e = k - 1; e >= 1 - k; e -= 2) p += monomial(e * di);
    return p;
}

Rational Laurent::coeff(int e) const
{
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rational() : it->second;
}

Rational Laurent::at_one() const
{
    Rational s;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

Laurent Laurent::bar() const
{
    Laurent p;
    for (const auto& [e, c] : coeffs_) p.coeffs_[-e] = c;
    return p;
}

Laurent Laurent::operator-() const
{
    Laurent p = *this;
    for (auto& [e, c] : p.coeffs_) c = -c;
    return p;
}

Laurent operator+(const Laurent& a, const Laurent& b)
{
    Laurent p = a;
    for (const auto& [e, c] : b.coeffs_) {
        Rational& slot = p.coeffs_[e];
        slot += c;
        if (slot.is_zero()) p.coeffs_.erase(e);
    }
    return p;
}

Laurent operator*(const Laurent& a, const Laurent& b)
{
    Laurent p;
    for (const auto& [e1, c1] : a.coeffs_) {
        for (const auto& [e2, c2] : b.coeffs_) {
            Rational& slot = p.coeffs_[e1 + e2];
            slot += c1 * c2;
            if (slot.is_zero()) p.coeffs_.erase(e1 + e2);
        }
    }
    return p;
}

Laurent Laurent::pow(int n) const
{
    if (n < 0) throw std::domain_error("negative power of a Laurent polynomial");
    Laurent r(1);
    for (int k = 0; k < n; ++k) r *= *this;
    return r;
}

std::string Laurent::str() const
{
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        auto [e, c] = *it;
        bool neg = c.sign() < 0;
        Rational mag = c.abs();
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        std::string mono = e == 0 ? "" : e == 1 ? "q" : "q^" + std::to_string(e);
        if (mono.empty()) out += mag.str();
        else if (mag.is_one()) out += mono;
        else out += mag.str() + "*" + mono;
    }
    return out;
}

} // namespace hcaff
