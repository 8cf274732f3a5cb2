#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hcaff/supermodule.hpp"

namespace hcaff {

struct NonDivisibleDimension : std::domain_error {
    using std::domain_error::domain_error;
};

// Formal character: word -> multiplicity of the simple A(d)-module [a_1..a_d].
struct Character {
    int d = 0;
    std::map<Word, long long> terms;

    static Character word(const Word& w, long long mult = 1);
    static Character unit() { return word({}); }
    long long total() const; // sum of multiplicities
    Character reversed() const;
    std::string str() const;

    Character& operator+=(const Character& o);
    friend Character operator+(Character a, const Character& b) { return a += b; }
    friend Character operator*(long long k, Character a);
    friend bool operator==(const Character& a, const Character& b) { return a.d == b.d && a.terms == b.terms; }
    friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }
};

// dim of the simple A(d)-module [a]: 2^{d - floor(gamma_0/2)}
long long clifford_block_dim(const Word& a);

Character character(const SuperModule& m);
Character character(const WeightTable& table, int d);
Character shuffle_q1(const Word& a, const Word& b);
Character char_product(const Character& a, const Character& b);
Character calibrated_character(const ShiftedSkewShape& shape);

nlohmann::json to_json(const Character& c);
Character character_from_json(const nlohmann::json& j);

} // namespace hcaff
