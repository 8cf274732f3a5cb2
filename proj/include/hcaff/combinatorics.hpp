#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hcaff {

// One-line notation on {1..d}; (u*v)(k) = u(v(k)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int d);
    static Permutation simple(int i, int d);        // s_i = (i, i+1)
    static Permutation transposition(int i, int j, int d);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_[k - 1]; }
    const std::vector<int>& images() const { return img_; }
    Permutation inverse() const;
    int length() const;
    bool is_identity() const;
    // i_1..i_l with w = s_{i_1} ... s_{i_l}, l = length
    std::vector<int> reduced_word() const;
    std::string str() const;

    friend Permutation operator*(const Permutation& u, const Permutation& v);
    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

std::vector<Permutation> all_permutations(int d);

using Composition = std::vector<int>;

// first position (1-based) of each block
std::vector<int> block_starts(const Composition& mu);
// block index (0-based) of each position 1..d
std::vector<int> block_of(const Composition& mu);

// D_mu: permutations increasing on every block, in lexicographic order
std::vector<Permutation> min_coset_reps(const Composition& mu);
// u = u1 * u2 with u1 in D_mu and u2 in S_mu
std::pair<Permutation, Permutation> coset_factor(const Permutation& u, const Composition& mu);

struct Box {
    int row, col;
    friend bool operator==(const Box& a, const Box& b) { return a.row == b.row && a.col == b.col; }
    friend bool operator<(const Box& a, const Box& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; }
};

// lambda / mu with lambda strict; row i occupies columns i .. i+lambda_i-1 with
// the leftmost mu_i boxes removed
struct ShiftedSkewShape {
    std::vector<int> lambda, mu;

    static ShiftedSkewShape parse(const std::string& s); // "5,2,1/3,1,0"
    void validate() const;                               // throws std::invalid_argument
    std::vector<Box> boxes() const;                      // row-major
    int size() const;
    bool contains(Box b) const;
    static int content(Box b) { return b.col - b.row; }
    std::string str() const;
};

struct StandardFilling {
    std::vector<Box> boxes;   // boxes[k] holds the entry k+1
};

std::vector<StandardFilling> standard_fillings(const ShiftedSkewShape& shape);
std::vector<int> content_reading(const StandardFilling& f);
// all valid shapes with lambda_1 <= max_row and 1 <= |boxes| <= max_boxes
std::vector<ShiftedSkewShape> enumerate_shapes(int max_row, int max_boxes);

struct Multisegment {
    std::vector<int> lambda, mu;

    static Multisegment parse(const std::string& s); // "3,2/-1,1"
    void validate() const;
    int degree() const;
    int parts() const { return static_cast<int>(lambda.size()); }
    Composition block_sizes() const; // lambda_i - mu_i, zero blocks kept
    int zero_count() const;          // gamma_0: segments [0, lambda_i - 1] with lambda_i > 0
    std::string str() const;
    friend bool operator==(const Multisegment& a, const Multisegment& b) { return a.lambda == b.lambda && a.mu == b.mu; }
    friend bool operator<(const Multisegment& a, const Multisegment& b)
    {
        return a.lambda != b.lambda ? a.lambda < b.lambda : a.mu < b.mu;
    }
};

bool is_dominant(const std::vector<int>& lambda);
bool is_dominant_typical(const std::vector<int>& lambda);
bool is_dominant_for(const std::vector<int>& mu, const std::vector<int>& lambda); // mu in P^+[lambda]

// (lambda, mu) with lambda in P^{++}, all parts positive and at most max_lambda,
// mu in P^+[lambda], lambda - mu a composition of d with |mu_i| < lambda_i
std::vector<Multisegment> enumerate_Bd(int d, int n, int max_lambda);
std::vector<Multisegment> enumerate_Bd(int d, int n);

using Word = std::vector<int>;

// concatenation of the runs mu_i .. lambda_i - 1
std::vector<int> multisegment_to_word(const Multisegment& m);
// a -> max(a, -a-1)
int fold(int a);
std::vector<int> fold(const std::vector<int>& word);

std::vector<int> parse_int_list(const std::string& s, char sep = ',');
long long factorial(int n);

} // namespace hcaff
