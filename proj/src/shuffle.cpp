#include "hcaff/shuffle.hpp"

#include <algorithm>

namespace hcaff {

CartanB::CartanB(int r) : r_(r)
{
    if (r < 1) throw std::invalid_argument("rank must be positive");
}

int CartanB::form(int i, int j) const
{
    if (i < 0 || j < 0 || i >= r_ || j >= r_) throw std::out_of_range("letter outside the alphabet");
    if (i == j) return i == 0 ? 2 : 4;
    if (i - j == 1 || j - i == 1) return -2;
    return 0;
}

int CartanB::form(const std::vector<int>& a, const std::vector<int>& b) const
{
    int s = 0;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j)
            if (a[i] && b[j]) s += a[i] * b[j] * form(i, j);
    return s;
}

std::vector<int> CartanB::degree(const Word& w) const
{
    std::vector<int> d(r_, 0);
    for (int a : w) {
        if (a < 0 || a >= r_) throw std::out_of_range("letter outside the alphabet");
        ++d[a];
    }
    return d;
}

ShuffleElement ShuffleElement::word(const Word& w, Laurent c)
{
    ShuffleElement e;
    e.add(w, c);
    return e;
}

Laurent ShuffleElement::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Laurent() : it->second;
}

ShuffleElement& ShuffleElement::add(const Word& w, const Laurent& c)
{
    if (c.is_zero()) return *this;
    Laurent& t = terms_[w];
    t += c;
    if (t.is_zero()) terms_.erase(w);
    return *this;
}

ShuffleElement& ShuffleElement::operator+=(const ShuffleElement& o)
{
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

ShuffleElement operator*(const Laurent& k, const ShuffleElement& a)
{
    ShuffleElement out;
    if (k.is_zero()) return out;
    for (const auto& [w, c] : a.terms_) out.add(w, k * c);
    return out;
}

ShuffleElement ShuffleElement::bar_coefficients() const
{
    ShuffleElement out;
    for (const auto& [w, c] : terms_) out.add(w, c.bar());
    return out;
}

std::string ShuffleElement::str() const
{
    if (terms_.empty()) return "0";
    std::vector<Word> words;
    for (const auto& [w, c] : terms_) words.push_back(w);
    std::sort(words.begin(), words.end(), WordLess());
    std::string s;
    for (const auto& w : words) {
        if (!s.empty()) s += " + ";
        std::string c = terms_.at(w).str();
        if (c != "1") s += "(" + c + ")";
        s += "[";
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
        s += "]";
    }
    return s;
}

int word_compare(const Word& u, const Word& v)
{
    std::size_t n = std::max(u.size(), v.size());
    for (std::size_t s = 0; s < n; ++s) {
        bool ue = s >= u.size(), ve = s >= v.size();
        if (ue || ve) return ue && ve ? 0 : (ue ? 1 : -1); // the empty continuation is largest
        int a = u[u.size() - 1 - s], b = v[v.size() - 1 - s];
        if (a != b) return a < b ? -1 : 1;
    }
    return 0;
}

ShuffleElement concat(const ShuffleElement& a, const ShuffleElement& b)
{
    ShuffleElement out;
    for (const auto& [u, c] : a.terms())
        for (const auto& [v, e] : b.terms()) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add(w, c * e);
        }
    return out;
}

namespace {

class Shuffler {
public:
    Shuffler(const CartanB& cartan, int sign) : cartan_(cartan), sign_(sign) {}

    const ShuffleElement& operator()(const Word& a, const Word& b)
    {
        auto key = std::make_pair(a, b);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        ShuffleElement out;
        if (a.empty()) out = ShuffleElement::word(b);
        else if (b.empty()) out = ShuffleElement::word(a);
        else {
            Word x(a.begin(), a.end() - 1), y(b.begin(), b.end() - 1);
            int i = a.back(), j = b.back();
            for (const auto& [w, c] : (*this)(x, b).terms()) {
                Word t = w;
                t.push_back(i);
                out.add(t, c);
            }
            std::vector<int> bj(cartan_.rank(), 0);
            bj[j] = 1;
            Laurent k = Laurent::q(-sign_ * cartan_.form(cartan_.degree(a), bj));
            for (const auto& [w, c] : (*this)(a, y).terms()) {
                Word t = w;
                t.push_back(j);
                out.add(t, k * c);
            }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    const CartanB& cartan_;
    int sign_;
    std::map<std::pair<Word, Word>, ShuffleElement> memo_;
};

ShuffleElement shuffle_elements(const ShuffleElement& x, const ShuffleElement& y, const CartanB& cartan, int sign)
{
    Shuffler sh(cartan, sign);
    ShuffleElement out;
    for (const auto& [u, c] : x.terms())
        for (const auto& [v, e] : y.terms()) out += (c * e) * sh(u, v);
    return out;
}

// Duval's algorithm for the usual left-to-right order
std::vector<Word> duval(const Word& s)
{
    std::vector<Word> out;
    std::size_t n = s.size(), i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && s[k] <= s[j]) {
            k = s[k] < s[j] ? i : k + 1;
            ++j;
        }
        while (i <= k) {
            out.emplace_back(s.begin() + i, s.begin() + i + (j - k));
            i += j - k;
        }
    }
    return out;
}

Word negated_reverse(const Word& w)
{
    Word t(w.rbegin(), w.rend());
    for (auto& a : t) a = -a;
    return t;
}

} // namespace

ShuffleElement qshuffle(const Word& a, const Word& b, const CartanB& cartan)
{
    return Shuffler(cartan, 1)(a, b);
}

ShuffleElement qshuffle(const ShuffleElement& x, const ShuffleElement& y, const CartanB& cartan)
{
    return shuffle_elements(x, y, cartan, 1);
}

ShuffleElement bar_qshuffle(const ShuffleElement& x, const ShuffleElement& y, const CartanB& cartan)
{
    return shuffle_elements(x, y, cartan, -1);
}

ShuffleElement bar_involution(const ShuffleElement& x, const CartanB& cartan)
{
    ShuffleElement out;
    for (const auto& [w, c] : x.terms()) {
        int e = 0;
        for (std::size_t s = 0; s < w.size(); ++s)
            for (std::size_t t = s + 1; t < w.size(); ++t) e += cartan.form(w[s], w[t]);
        out.add(Word(w.rbegin(), w.rend()), Laurent::q(-e) * c.bar());
    }
    return out;
}

bool is_lyndon(const Word& w)
{
    if (w.empty()) return false;
    for (std::size_t j = 1; j < w.size(); ++j)
        if (word_compare(Word(w.begin(), w.begin() + j), w) >= 0) return false;
    return true;
}

// In the right-to-left order, w is Lyndon iff the negated reversal is Lyndon
// for the usual order, so the usual factorization transfers.
std::vector<Word> lyndon_factorize(const Word& w)
{
    auto parts = duval(negated_reverse(w));
    std::vector<Word> out;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) out.push_back(negated_reverse(*it));
    return out;
}

std::pair<Word, Word> standard_factorization(const Word& l)
{
    if (l.size() < 2 || !is_lyndon(l)) throw NotLyndon("standard factorization needs a Lyndon word of length at least 2");
    for (std::size_t s = 1; s < l.size(); ++s) {
        Word suffix(l.begin() + s, l.end());
        if (is_lyndon(suffix)) return {Word(l.begin(), l.begin() + s), suffix};
    }
    throw NotLyndon("no Lyndon suffix");
}

namespace {

ShuffleElement bracket_lyndon(const Word& l, const CartanB& cartan)
{
    if (l.size() == 1) return ShuffleElement::word(l);
    auto [l1, l2] = standard_factorization(l);
    ShuffleElement a = bracket_lyndon(l1, cartan), b = bracket_lyndon(l2, cartan);
    Laurent k = Laurent::q(cartan.form(cartan.degree(l1), cartan.degree(l2)));
    return concat(a, b) - k * concat(b, a);
}

} // namespace

ShuffleElement bracketing(const Word& g, const CartanB& cartan)
{
    ShuffleElement out = ShuffleElement::word({});
    for (const auto& l : lyndon_factorize(g)) out = concat(out, bracket_lyndon(l, cartan));
    return out;
}

ShuffleElement xi_map(const ShuffleElement& x, const CartanB& cartan)
{
    Shuffler sh(cartan, 1);
    std::map<Word, ShuffleElement> memo;
    memo[{}] = ShuffleElement::word({});
    auto image = [&](auto&& self, const Word& w) -> const ShuffleElement& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        Word prefix(w.begin(), w.end() - 1);
        ShuffleElement acc;
        for (const auto& [u, c] : self(self, prefix).terms()) acc += c * sh(u, {w.back()});
        return memo.emplace(w, std::move(acc)).first->second;
    };
    ShuffleElement out;
    for (const auto& [w, c] : x.terms()) out += c * image(image, w);
    return out;
}

ShuffleElement bracket_rg(const Word& g, const CartanB& cartan) { return xi_map(bracketing(g, cartan), cartan); }

std::vector<Word> good_lyndon_words(int r)
{
    if (r < 1) throw std::invalid_argument("rank must be positive");
    std::vector<Word> out;
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            Word w;
            for (int a = i; a <= j; ++a) w.push_back(a);
            out.push_back(w);
        }
    for (int k = 1; k < r; ++k)
        for (int j = 0; j < k; ++j) {
            Word w;
            for (int a = j; a >= 0; --a) w.push_back(a);
            for (int a = 0; a <= k; ++a) w.push_back(a);
            out.push_back(w);
        }
    std::sort(out.begin(), out.end(), WordLess());
    return out;
}

bool is_double_segment_word(const Word& l)
{
    auto zero = std::find(l.begin(), l.end(), 0);
    if (zero == l.end() || zero + 1 == l.end() || zero[1] != 0) return false;
    int j = static_cast<int>(zero - l.begin());
    int k = static_cast<int>(l.size()) - j - 2;
    if (j >= k) return false;
    for (int s = 0; s <= j; ++s)
        if (l[s] != j - s) return false;
    for (int t = 0; t <= k; ++t)
        if (l[j + 1 + t] != t) return false;
    return true;
}

std::vector<int> root_of(const Word& l, int r) { return CartanB(r).degree(l); }

ShuffleElement dual_canonical_lyndon(const Word& l, int r)
{
    auto good = good_lyndon_words(r);
    if (std::find(good.begin(), good.end(), l) == good.end()) throw NotGoodLyndon("not a good Lyndon word for this rank");
    if (is_double_segment_word(l)) return ShuffleElement::word(l, Laurent::quantum_int(2, CartanB(r).di(0)));
    return ShuffleElement::word(l);
}

std::vector<Word> good_words(int d, int r)
{
    auto lyndon = good_lyndon_words(r); // increasing
    std::vector<Word> out;
    Word cur;
    // nonincreasing sequences: each factor at most the previous one
    auto rec = [&](auto&& self, int remaining, int max_index) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int idx = max_index; idx >= 0; --idx) {
            const Word& l = lyndon[idx];
            if (static_cast<int>(l.size()) > remaining) continue;
            std::size_t mark = cur.size();
            cur.insert(cur.end(), l.begin(), l.end());
            self(self, remaining - static_cast<int>(l.size()), idx);
            cur.resize(mark);
        }
    };
    if (d > 0) rec(rec, d, static_cast<int>(lyndon.size()) - 1);
    std::sort(out.begin(), out.end(), WordLess());
    return out;
}

Word min_monomial(const ShuffleElement& x)
{
    if (x.is_zero()) throw std::invalid_argument("zero element has no minimal monomial");
    const Word* best = nullptr;
    for (const auto& [w, c] : x.terms())
        if (!best || word_compare(w, *best) < 0) best = &w;
    return *best;
}

std::map<Word, Rational> specialize_to_char(const ShuffleElement& x)
{
    std::map<Word, Rational> out;
    for (const auto& [w, c] : x.terms()) {
        Rational v = c.at_one();
        if (!v.is_zero()) out[w] = v;
    }
    return out;
}

} // namespace hcaff
