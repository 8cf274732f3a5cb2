#include "hcaff/characters.hpp"

#include <algorithm>

namespace hcaff {

Character Character::word(const Word& w, long long mult)
{
    Character c;
    c.d = static_cast<int>(w.size());
    if (mult != 0) c.terms[w] = mult;
    return c;
}

long long Character::total() const
{
    long long t = 0;
    for (const auto& [w, k] : terms) t += k;
    return t;
}

Character Character::reversed() const
{
    Character c;
    c.d = d;
    for (const auto& [w, k] : terms) c.terms[Word(w.rbegin(), w.rend())] += k;
    return c;
}

std::string Character::str() const
{
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [w, k] : terms) {
        if (!s.empty()) s += " + ";
        if (k != 1) s += std::to_string(k);
        s += "[";
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
        s += "]";
    }
    return s;
}

Character& Character::operator+=(const Character& o)
{
    if (terms.empty()) d = o.d;
    else if (!o.terms.empty() && o.d != d) throw std::invalid_argument("adding characters of different degree");
    for (const auto& [w, k] : o.terms) {
        long long& t = terms[w];
        t += k;
        if (t == 0) terms.erase(w);
    }
    return *this;
}

Character operator*(long long k, Character a)
{
    if (k == 0) a.terms.clear();
    for (auto& [w, m] : a.terms) m *= k;
    return a;
}

long long clifford_block_dim(const Word& a)
{
    int zeros = static_cast<int>(std::count(a.begin(), a.end(), 0));
    return 1LL << (static_cast<int>(a.size()) - zeros / 2);
}

Character character(const WeightTable& table, int d)
{
    Character c;
    c.d = d;
    for (const auto& [w, space] : table.entries) {
        long long block = clifford_block_dim(w);
        if (space.gen_dim % block != 0)
            throw NonDivisibleDimension("generalized weight space of dimension " + std::to_string(space.gen_dim) +
                                        " is not a multiple of " + std::to_string(block));
        if (space.gen_dim) c.terms[w] = space.gen_dim / block;
    }
    return c;
}

Character character(const SuperModule& m)
{
    Character c;
    c.d = m.rank;
    for (const auto& [w, dim] : weight_multiplicities(m)) {
        long long block = clifford_block_dim(w);
        if (dim % block != 0)
            throw NonDivisibleDimension("generalized weight space of dimension " + std::to_string(dim) +
                                        " is not a multiple of " + std::to_string(block));
        c.terms[w] = dim / block;
    }
    return c;
}

Character shuffle_q1(const Word& a, const Word& b)
{
    Character c;
    c.d = static_cast<int>(a.size() + b.size());
    Word w(a.size() + b.size());
    // positions taken by a, chosen as an increasing subset
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == a.size() && j == b.size()) {
            ++c.terms[w];
            return;
        }
        if (i < a.size()) {
            w[i + j] = a[i];
            self(self, i + 1, j);
        }
        if (j < b.size()) {
            w[i + j] = b[j];
            self(self, i, j + 1);
        }
    };
    rec(rec, 0, 0);
    return c;
}

Character char_product(const Character& a, const Character& b)
{
    Character c;
    c.d = a.d + b.d;
    for (const auto& [u, k] : a.terms)
        for (const auto& [v, l] : b.terms) c += (k * l) * shuffle_q1(u, v);
    return c;
}

Character calibrated_character(const ShiftedSkewShape& shape)
{
    shape.validate();
    Character c;
    c.d = shape.size();
    for (const auto& f : standard_fillings(shape)) ++c.terms[content_reading(f)];
    return c;
}

nlohmann::json to_json(const Character& c)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, k] : c.terms) terms.push_back({{"word", w}, {"mult", k}});
    return {{"d", c.d}, {"terms", terms}};
}

Character character_from_json(const nlohmann::json& j)
{
    Character c;
    c.d = j.at("d").get<int>();
    for (const auto& t : j.at("terms")) {
        Word w = t.at("word").get<Word>();
        if (static_cast<int>(w.size()) != c.d) throw std::invalid_argument("character word of the wrong length");
        c.terms[w] += t.at("mult").get<long long>();
    }
    return c;
}

} // namespace hcaff
