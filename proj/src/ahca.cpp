#include "hcaff/ahca.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcaff {

int Monomial::degree() const
{
    int s = 0;
    for (int a : alpha) s += a;
    return s;
}

PbwElement::PbwElement(int rank, const Surd& scalar) : rank_(rank)
{
    add(Monomial{std::vector<int>(rank, 0), 0, Permutation::identity(rank)}, scalar);
}

PbwElement PbwElement::x(int i, int d)
{
    if (i < 1 || i > d) throw std::out_of_range("x index out of range");
    Monomial m{std::vector<int>(d, 0), 0, Permutation::identity(d)};
    m.alpha[i - 1] = 1;
    return monomial(m, d);
}

PbwElement PbwElement::c(int i, int d)
{
    if (i < 1 || i > d) throw std::out_of_range("c index out of range");
    return monomial(Monomial{std::vector<int>(d, 0), 1u << (i - 1), Permutation::identity(d)}, d);
}

PbwElement PbwElement::s(int i, int d)
{
    if (i < 1 || i >= d) throw std::out_of_range("s index out of range");
    return perm(Permutation::simple(i, d));
}

PbwElement PbwElement::perm(const Permutation& w)
{
    int d = w.size();
    return monomial(Monomial{std::vector<int>(d, 0), 0, w}, d);
}

PbwElement PbwElement::monomial(const Monomial& m, int d, const Surd& coef)
{
    PbwElement e(d);
    e.add(m, coef);
    return e;
}

bool PbwElement::is_homogeneous() const
{
    int p = -1;
    for (const auto& [m, c] : terms_) {
        int q = m.odd() % 2;
        if (p >= 0 && p != q) return false;
        p = q;
    }
    return true;
}

int PbwElement::parity() const { return terms_.empty() ? 0 : terms_.begin()->first.odd() % 2; }

Surd PbwElement::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Surd() : it->second;
}

void PbwElement::add(const Monomial& m, const Surd& c)
{
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::string PbwElement::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (int k = 0; k < rank_; ++k) {
            if (m.alpha[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(k + 1);
            if (m.alpha[k] > 1) mono += "^" + std::to_string(m.alpha[k]);
        }
        for (int k = 0; k < rank_; ++k) {
            if (!(m.eps >> k & 1)) continue;
            if (!mono.empty()) mono += "*";
            mono += "c" + std::to_string(k + 1);
        }
        for (int j : m.w.reduced_word()) {
            if (!mono.empty()) mono += "*";
            mono += "s" + std::to_string(j);
        }
        if (!first) out += " + ";
        first = false;
        if (mono.empty()) {
            out += c.str();
        } else if (c.is_one()) {
            out += mono;
        } else if (c == Surd(-1)) {
            out += "-" + mono;
        } else {
            out += (c.size() > 1 ? "(" + c.str() + ")" : c.str()) + "*" + mono;
        }
    }
    return out;
}

PbwElement PbwElement::operator-() const
{
    PbwElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

PbwElement operator+(const PbwElement& a, const PbwElement& b)
{
    if (a.rank_ != b.rank_) throw RankMismatch();
    PbwElement r = a;
    for (const auto& [m, c] : b.terms_) r.add(m, c);
    return r;
}

PbwElement operator-(const PbwElement& a, const PbwElement& b) { return a + (-b); }

PbwElement operator*(const Surd& k, const PbwElement& a)
{
    PbwElement r(a.rank_);
    if (k.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.add(m, k * c);
    return r;
}

PbwElement operator*(const PbwElement& a, const PbwElement& b) { return pbw_multiply(a, b); }

PbwElement left_x(int i, const PbwElement& b)
{
    PbwElement r(b.rank());
    for (const auto& [m, c] : b.terms()) {
        Monomial n = m;
        n.alpha[i - 1] += 1;
        r.add(n, c);
    }
    return r;
}

namespace {

void left_c_mono(int i, const Monomial& m, const Surd& c, PbwElement& out, const AlgebraRules& rules)
{
    std::uint32_t bit = 1u << (i - 1);
    int flips = m.alpha[i - 1] + __builtin_popcount(m.eps & (bit - 1));
    Surd k = (flips % 2) ? -c : c;
    Monomial n = m;
    if (m.eps & bit) {
        n.eps &= ~bit;
        if (rules.clifford_square < 0) k = -k;
    } else {
        n.eps |= bit;
    }
    out.add(n, k);
}

// s_i * (c * m), accumulated into out
void left_s_mono(int i, const Monomial& m, const Surd& c, PbwElement& out, const AlgebraRules& rules)
{
    int d = out.rank();
    int k = m.alpha[i - 1] > 0 ? i : (m.alpha[i] > 0 ? i + 1 : 0);
    if (k == 0) {
        // s_i x^beta c^delta v = x^beta c^{s_i delta} s_i v
        Monomial n = m;
        std::uint32_t bi = 1u << (i - 1), bj = 1u << i;
        bool hi = m.eps & bi, hj = m.eps & bj;
        n.eps &= ~(bi | bj);
        if (hi) n.eps |= bj;
        if (hj) n.eps |= bi;
        n.w = Permutation::simple(i, d) * m.w;
        out.add(n, (hi && hj) ? -c : c);
        return;
    }
    Monomial rest = m;
    rest.alpha[k - 1] -= 1;
    // s_i x_i = x_{i+1} s_i - 1 + c_i c_{i+1};  s_i x_{i+1} = x_i s_i + 1 + c_i c_{i+1}
    PbwElement moved(d);
    left_s_mono(i, rest, c, moved, rules);
    out += left_x(k == i ? i + 1 : i, moved);
    out.add(rest, k == i ? -c : c);
    PbwElement cc(d);
    left_c_mono(i + 1, rest, c, cc, rules);
    out += left_c(i, cc, rules);
}

} // namespace

PbwElement left_c(int i, const PbwElement& b, const AlgebraRules& rules)
{
    PbwElement r(b.rank());
    for (const auto& [m, c] : b.terms()) left_c_mono(i, m, c, r, rules);
    return r;
}

PbwElement left_s(int i, const PbwElement& b, const AlgebraRules& rules)
{
    PbwElement r(b.rank());
    for (const auto& [m, c] : b.terms()) left_s_mono(i, m, c, r, rules);
    return r;
}

PbwElement pbw_multiply(const PbwElement& a, const PbwElement& b, const AlgebraRules& rules)
{
    if (a.rank() != b.rank()) throw RankMismatch();
    int d = a.rank();
    PbwElement result(d);
    std::map<Permutation, PbwElement> moved;
    for (const auto& [m, coef] : a.terms()) {
        auto it = moved.find(m.w);
        if (it == moved.end()) {
            PbwElement t = b;
            auto word = m.w.reduced_word();
            for (auto j = word.rbegin(); j != word.rend(); ++j) t = left_s(*j, t, rules);
            it = moved.emplace(m.w, std::move(t)).first;
        }
        PbwElement t = it->second;
        for (int k = d; k >= 1; --k)
            if (m.eps >> (k - 1) & 1) t = left_c(k, t, rules);
        for (const auto& [n, c] : t.terms()) {
            Monomial r = n;
            for (int k = 0; k < d; ++k) r.alpha[k] += m.alpha[k];
            result.add(r, coef * c);
        }
    }
    return result;
}

PbwElement sigma_twist(const PbwElement& a, const AlgebraRules&)
{
    int d = a.rank();
    std::vector<int> w0img(d);
    for (int k = 0; k < d; ++k) w0img[k] = d - k;
    Permutation w0(w0img);
    PbwElement r(d);
    for (const auto& [m, c] : a.terms()) {
        Monomial n;
        n.alpha.assign(m.alpha.rbegin(), m.alpha.rend());
        n.eps = 0;
        for (int k = 1; k <= d; ++k)
            if (m.eps >> (k - 1) & 1) n.eps |= 1u << (d - k);
        int odd = m.odd();
        n.w = w0 * m.w * w0;
        int flips = odd * (odd - 1) / 2 + m.w.length();
        r.add(n, flips % 2 ? -c : c);
    }
    return r;
}

PbwElement tau_antiauto(const PbwElement& a, const AlgebraRules& rules)
{
    // tau(x^a c^e w) = w^{-1} (-1)^{|e|} rev(c^e) x^a
    int d = a.rank();
    PbwElement r(d);
    for (const auto& [m, c] : a.terms()) {
        int odd = m.odd();
        int flips = odd + odd * (odd - 1) / 2;
        for (int k = 0; k < d; ++k)
            if (m.eps >> k & 1) flips += m.alpha[k];
        Monomial n{m.alpha, m.eps, Permutation::identity(d)};
        PbwElement t = PbwElement::monomial(n, d, flips % 2 ? -c : c);
        r += pbw_multiply(PbwElement::perm(m.w.inverse()), t, rules);
    }
    return r;
}

PbwElement intertwiner_phi(int i, int d, const AlgebraRules& rules)
{
    if (i < 1 || i >= d) throw std::out_of_range("intertwiner index out of range");
    auto X = [&](int k) { return PbwElement::x(k, d); };
    auto mul = [&](const PbwElement& u, const PbwElement& v) { return pbw_multiply(u, v, rules); };
    PbwElement xi2 = mul(X(i), X(i)), xj2 = mul(X(i + 1), X(i + 1));
    PbwElement cc = mul(PbwElement::c(i, d), PbwElement::c(i + 1, d));
    return mul(PbwElement::s(i, d), xi2 - xj2) + (X(i) + X(i + 1)) - mul(cc, X(i) - X(i + 1));
}

PbwElement jucys_murphy(int i, int d, const AlgebraRules& rules)
{
    if (i < 1 || i > d) throw std::out_of_range("Jucys-Murphy index out of range");
    PbwElement L(d);
    for (int j = 1; j < i; ++j) {
        PbwElement cc = pbw_multiply(PbwElement::c(j, d), PbwElement::c(i, d), rules);
        L += pbw_multiply(PbwElement(d, Surd(1)) - cc, PbwElement::perm(Permutation::transposition(j, i, d)), rules);
    }
    return L;
}

PbwElement x_selector(const std::vector<int>& S, const std::vector<Surd>& kappas, int d)
{
    PbwElement r(d, Surd(1));
    for (int i = 1; i <= d; ++i) {
        if (std::find(S.begin(), S.end(), i) != S.end()) continue;
        r = pbw_multiply(r, PbwElement::x(i, d) + PbwElement(d, kappas.at(i - 1)));
    }
    return r;
}

std::vector<std::pair<std::string, PbwElement>> generators(int d)
{
    std::vector<std::pair<std::string, PbwElement>> g;
    for (int i = 1; i < d; ++i) g.emplace_back("s" + std::to_string(i), PbwElement::s(i, d));
    for (int i = 1; i <= d; ++i) g.emplace_back("c" + std::to_string(i), PbwElement::c(i, d));
    for (int i = 1; i <= d; ++i) g.emplace_back("x" + std::to_string(i), PbwElement::x(i, d));
    return g;
}

Monomial random_monomial(int d, std::mt19937_64& rng, int max_exp)
{
    Monomial m;
    std::uniform_int_distribution<int> e(0, max_exp);
    for (int k = 0; k < d; ++k) m.alpha.push_back(e(rng));
    m.eps = static_cast<std::uint32_t>(rng() & ((1u << d) - 1));
    std::vector<int> img(d);
    for (int k = 0; k < d; ++k) img[k] = k + 1;
    std::shuffle(img.begin(), img.end(), rng);
    m.w = Permutation(img);
    return m;
}

PbwElement PbwElement::parse(const std::string& text, int d)
{
    std::string src;
    for (char ch : text)
        if (ch != ' ') src += ch;
    if (src.empty()) throw std::invalid_argument("empty element");
    PbwElement total(d);
    std::size_t pos = 0;
    while (pos < src.size()) {
        int sign = 1;
        while (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) {
            if (src[pos] == '-') sign = -sign;
            ++pos;
        }
        std::size_t end = pos;
        while (end < src.size() && src[end] != '+' && src[end] != '-') ++end;
        std::string term = src.substr(pos, end - pos);
        if (term.empty()) throw std::invalid_argument("dangling sign in element: " + text);
        PbwElement prod(d, Surd(sign));
        std::size_t p = 0;
        while (p <= term.size()) {
            std::size_t star = term.find('*', p);
            std::string f = term.substr(p, star == std::string::npos ? std::string::npos : star - p);
            if (f.empty()) throw std::invalid_argument("empty factor in element: " + text);
            PbwElement factor(d);
            if (f[0] == 'x' || f[0] == 'c' || f[0] == 's') {
                auto caret = f.find('^');
                int idx = std::stoi(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
                int power = caret == std::string::npos ? 1 : std::stoi(f.substr(caret + 1));
                PbwElement g = f[0] == 'x' ? x(idx, d) : f[0] == 'c' ? c(idx, d) : s(idx, d);
                factor = PbwElement(d, Surd(1));
                for (int k = 0; k < power; ++k) factor = pbw_multiply(factor, g);
            } else {
                factor = PbwElement(d, Surd(Rational::parse(f)));
            }
            prod = pbw_multiply(prod, factor);
            if (star == std::string::npos) break;
            p = star + 1;
        }
        total += prod;
        pos = end;
    }
    return total;
}

AlgebraReport verify_algebra(int d, std::uint64_t seed, const AlgebraRules& rules)
{
    AlgebraReport rep;
    rep.rank = d;
    auto mul = [&](const PbwElement& u, const PbwElement& v) { return pbw_multiply(u, v, rules); };
    auto one = PbwElement(d, Surd(1));
    auto X = [&](int k) { return PbwElement::x(k, d); };
    auto C = [&](int k) { return PbwElement::c(k, d); };
    auto S = [&](int k) { return PbwElement::s(k, d); };
    auto expect = [&](const std::string& name, const PbwElement& lhs, const PbwElement& rhs) {
        bool ok = lhs == rhs;
        rep.checks.push_back({name, ok, ok ? "" : lhs.str() + " != " + rhs.str()});
    };
    auto idx = [](int a, int b) { return std::to_string(a) + "," + std::to_string(b); };

    // generator-triple associativity catches any inconsistency between the rewriting rules
    auto gens = generators(d);
    bool assoc_ok = true;
    std::string assoc_detail;
    for (const auto& [na, a] : gens) {
        for (const auto& [nb, b] : gens) {
            PbwElement ab = mul(a, b);
            for (const auto& [nc, c] : gens) {
                if (mul(ab, c) != mul(a, mul(b, c))) {
                    if (assoc_ok) assoc_detail = na + "*" + nb + "*" + nc;
                    assoc_ok = false;
                }
            }
        }
    }
    rep.checks.push_back({"relation (s&x) compatibility: generator triple associativity", assoc_ok, assoc_detail});

    for (int i = 1; i <= d; ++i) {
        expect("(c) c" + std::to_string(i) + "^2 = -1", mul(C(i), C(i)), -one);
        for (int j = i + 1; j <= d; ++j) expect("(c) c_i c_j = -c_j c_i at " + idx(i, j), mul(C(i), C(j)), -mul(C(j), C(i)));
    }
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) expect("x_i x_j = x_j x_i at " + idx(i, j), mul(X(i), X(j)), mul(X(j), X(i)));
    for (int i = 1; i < d; ++i) {
        expect("(s) s" + std::to_string(i) + "^2 = 1", mul(S(i), S(i)), one);
        if (i + 1 < d)
            expect("(s) braid at " + std::to_string(i), mul(S(i), mul(S(i + 1), S(i))), mul(S(i + 1), mul(S(i), S(i + 1))));
        for (int j = i + 2; j < d; ++j) expect("(s) s_i s_j = s_j s_i at " + idx(i, j), mul(S(i), S(j)), mul(S(j), S(i)));
    }
    for (int i = 1; i < d; ++i) {
        expect("(c&s) s_i c_i = c_{i+1} s_i at " + std::to_string(i), mul(S(i), C(i)), mul(C(i + 1), S(i)));
        expect("(c&s) s_i c_{i+1} = c_i s_i at " + std::to_string(i), mul(S(i), C(i + 1)), mul(C(i), S(i)));
        for (int j = 1; j <= d; ++j)
            if (j != i && j != i + 1) expect("(c&s) s_i c_j = c_j s_i at " + idx(i, j), mul(S(i), C(j)), mul(C(j), S(i)));
    }
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            if (i == j) expect("(c&x) c_i x_i = -x_i c_i at " + std::to_string(i), mul(C(i), X(i)), -mul(X(i), C(i)));
            else expect("(c&x) c_j x_i = x_i c_j at " + idx(i, j), mul(C(j), X(i)), mul(X(i), C(j)));
        }
    }
    for (int i = 1; i < d; ++i) {
        expect("(s&x) s_i x_i = x_{i+1} s_i - 1 + c_i c_{i+1} at " + std::to_string(i), mul(S(i), X(i)),
               mul(X(i + 1), S(i)) - one + mul(C(i), C(i + 1)));
        for (int j = 1; j <= d; ++j)
            if (j != i && j != i + 1) expect("(s&x) s_i x_j = x_j s_i at " + idx(i, j), mul(S(i), X(j)), mul(X(j), S(i)));
    }
    for (int i = 1; i < d; ++i) {
        PbwElement phi = intertwiner_phi(i, d, rules);
        PbwElement a = mul(X(i), X(i)), b = mul(X(i + 1), X(i + 1));
        PbwElement diff = a - b;
        PbwElement expected = Surd(2) * a + Surd(2) * b - mul(diff, diff);
        expect("phi_i^2 = 2x_i^2 + 2x_{i+1}^2 - (x_i^2 - x_{i+1}^2)^2 at " + std::to_string(i), mul(phi, phi), expected);
    }
    for (int i = 2; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            PbwElement Li = jucys_murphy(i, d, rules), Lj = jucys_murphy(j, d, rules);
            expect("L_i L_j = L_j L_i at " + idx(i, j), mul(Li, Lj), mul(Lj, Li));
        }
    // sigma is a homomorphism, tau an antiautomorphism, on generator pairs
    bool sigma_ok = true, tau_ok = true;
    std::string sigma_detail, tau_detail;
    for (const auto& [na, a] : gens) {
        for (const auto& [nb, b] : gens) {
            PbwElement ab = mul(a, b);
            if (sigma_twist(ab, rules) != mul(sigma_twist(a, rules), sigma_twist(b, rules))) {
                if (sigma_ok) sigma_detail = na + "*" + nb;
                sigma_ok = false;
            }
            if (tau_antiauto(ab, rules) != mul(tau_antiauto(b, rules), tau_antiauto(a, rules))) {
                if (tau_ok) tau_detail = na + "*" + nb;
                tau_ok = false;
            }
        }
    }
    rep.checks.push_back({"sigma is a homomorphism on generator pairs", sigma_ok, sigma_detail});
    rep.checks.push_back({"tau is an antiautomorphism on generator pairs", tau_ok, tau_detail});

    // random monomial triples
    std::mt19937_64 rng(seed);
    bool rnd_ok = true, sig2_ok = true, rtau_ok = true;
    std::string rnd_detail;
    for (int t = 0; t < 100; ++t) {
        PbwElement a = PbwElement::monomial(random_monomial(d, rng, 1), d);
        PbwElement b = PbwElement::monomial(random_monomial(d, rng, 1), d);
        PbwElement c = PbwElement::monomial(random_monomial(d, rng, 1), d);
        PbwElement ab = mul(a, b);
        if (mul(ab, c) != mul(a, mul(b, c))) {
            if (rnd_ok) rnd_detail = a.str() + " | " + b.str() + " | " + c.str();
            rnd_ok = false;
        }
        if (sigma_twist(sigma_twist(a, rules), rules) != a) sig2_ok = false;
        if (t < 30) {
            if (tau_antiauto(ab, rules) != mul(tau_antiauto(b, rules), tau_antiauto(a, rules))) rtau_ok = false;
        }
    }
    rep.checks.push_back({"associativity on 100 random monomial triples", rnd_ok, rnd_detail});
    rep.checks.push_back({"sigma^2 = id on random monomials", sig2_ok, ""});
    rep.checks.push_back({"tau antiautomorphism on random monomial pairs", rtau_ok, ""});
    return rep;
}

} // namespace hcaff
