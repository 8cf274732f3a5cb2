#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hcaff/combinatorics.hpp"
#include "hcaff/laurent.hpp"

namespace hcaff {

struct NotLyndon : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotGoodLyndon : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Gram matrix of type B_r with the short simple root at 0:
// (b0,b0) = 2, (bi,bi) = 4 for i >= 1, (bi,bi+1) = -2.
class CartanB {
public:
    explicit CartanB(int r);
    int rank() const { return r_; }
    int form(int i, int j) const;
    int form(const std::vector<int>& a, const std::vector<int>& b) const; // degree vectors
    std::vector<int> degree(const Word& w) const;
    int di(int i) const { return form(i, i) / 2; }

private:
    int r_;
};

// Element of the free algebra on letters 0..r-1 over Q[q, q^-1].
class ShuffleElement {
public:
    ShuffleElement() = default;
    static ShuffleElement word(const Word& w, Laurent c = Laurent(1));

    const std::map<Word, Laurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Laurent coeff(const Word& w) const;
    std::string str() const;

    ShuffleElement& add(const Word& w, const Laurent& c);
    ShuffleElement& operator+=(const ShuffleElement& o);
    friend ShuffleElement operator+(ShuffleElement a, const ShuffleElement& b) { return a += b; }
    friend ShuffleElement operator-(ShuffleElement a, const ShuffleElement& b) { return a += (-1) * b; }
    friend ShuffleElement operator*(const Laurent& k, const ShuffleElement& a);
    friend bool operator==(const ShuffleElement& a, const ShuffleElement& b) { return a.terms_ == b.terms_; }
    ShuffleElement bar_coefficients() const; // q -> q^-1 on coefficients only

private:
    std::map<Word, Laurent> terms_;
};

// right-to-left lexicographic order; a word is smaller than its right factors
int word_compare(const Word& u, const Word& v);
struct WordLess {
    bool operator()(const Word& u, const Word& v) const { return word_compare(u, v) < 0; }
};

ShuffleElement concat(const ShuffleElement& a, const ShuffleElement& b);
ShuffleElement qshuffle(const Word& a, const Word& b, const CartanB& cartan);
ShuffleElement qshuffle(const ShuffleElement& x, const ShuffleElement& y, const CartanB& cartan);
// shuffle built from q^-1 instead of q
ShuffleElement bar_qshuffle(const ShuffleElement& x, const ShuffleElement& y, const CartanB& cartan);
// bar involution: q -> q^-1 and [i1..ik] -> q^{-sum (b_is, b_it)} [ik..i1]
ShuffleElement bar_involution(const ShuffleElement& x, const CartanB& cartan);

bool is_lyndon(const Word& w);
std::vector<Word> lyndon_factorize(const Word& w);
std::pair<Word, Word> standard_factorization(const Word& l);

// <g> in the concatenation algebra
ShuffleElement bracketing(const Word& g, const CartanB& cartan);
// Xi: concatenation word -> iterated q-shuffle of its letters
ShuffleElement xi_map(const ShuffleElement& x, const CartanB& cartan);
ShuffleElement bracket_rg(const Word& g, const CartanB& cartan);

std::vector<Word> good_lyndon_words(int r);
bool is_double_segment_word(const Word& l);
// positive root of a good Lyndon word, as a coefficient vector on the simple roots
std::vector<int> root_of(const Word& l, int r);
ShuffleElement dual_canonical_lyndon(const Word& l, int r);
std::vector<Word> good_words(int d, int r);

Word min_monomial(const ShuffleElement& x);
std::map<Word, Rational> specialize_to_char(const ShuffleElement& x);

} // namespace hcaff
