#include "hcaff/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hcaff {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images))
{
    std::vector<int> sorted = img_;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < size(); ++k)
        if (sorted[k] != k + 1) throw std::invalid_argument("not a permutation: " + str());
}

Permutation Permutation::identity(int d)
{
    std::vector<int> v(d);
    std::iota(v.begin(), v.end(), 1);
    Permutation p;
    p.img_ = std::move(v);
    return p;
}

Permutation Permutation::simple(int i, int d) { return transposition(i, i + 1, d); }

Permutation Permutation::transposition(int i, int j, int d)
{
    if (i < 1 || j < 1 || i > d || j > d) throw std::out_of_range("transposition index");
    Permutation p = identity(d);
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
}

Permutation Permutation::inverse() const
{
    Permutation p;
    p.img_.resize(img_.size());
    for (int k = 0; k < size(); ++k) p.img_[img_[k] - 1] = k + 1;
    return p;
}

int Permutation::length() const
{
    int inv = 0;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (img_[a] > img_[b]) ++inv;
    return inv;
}

bool Permutation::is_identity() const
{
    for (int k = 0; k < size(); ++k)
        if (img_[k] != k + 1) return false;
    return true;
}

std::vector<int> Permutation::reduced_word() const
{
    // peel descents on the right: w = w' s_i whenever w(i) > w(i+1)
    std::vector<int> word;
    std::vector<int> v = img_;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < int(v.size()); ++i) {
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                word.push_back(i + 1);
                changed = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::string Permutation::str() const
{
    std::string s = "[";
    for (int k = 0; k < size(); ++k) s += (k ? "," : "") + std::to_string(img_[k]);
    return s + "]";
}

Permutation operator*(const Permutation& u, const Permutation& v)
{
    if (u.size() != v.size()) throw std::invalid_argument("permutation size mismatch");
    Permutation p;
    p.img_.resize(u.img_.size());
    for (int k = 0; k < u.size(); ++k) p.img_[k] = u.img_[v.img_[k] - 1];
    return p;
}

std::vector<Permutation> all_permutations(int d)
{
    std::vector<Permutation> out;
    std::vector<int> v(d);
    std::iota(v.begin(), v.end(), 1);
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<int> block_starts(const Composition& mu)
{
    std::vector<int> s;
    int pos = 1;
    for (int m : mu) {
        s.push_back(pos);
        pos += m;
    }
    return s;
}

std::vector<int> block_of(const Composition& mu)
{
    std::vector<int> b;
    for (int k = 0; k < int(mu.size()); ++k)
        for (int j = 0; j < mu[k]; ++j) b.push_back(k);
    return b;
}

std::vector<Permutation> min_coset_reps(const Composition& mu)
{
    int d = std::accumulate(mu.begin(), mu.end(), 0);
    std::vector<int> blocks = block_of(mu);
    // assign each value 1..d to a block; inside a block values increase
    std::vector<int> labels = blocks;
    std::sort(labels.begin(), labels.end());
    std::vector<Permutation> out;
    std::vector<int> starts = block_starts(mu);
    do {
        // labels[v-1] = block receiving value v
        std::vector<int> img(d);
        std::vector<int> next = starts;
        for (int v = 1; v <= d; ++v) img[next[labels[v - 1]]++ - 1] = v;
        out.emplace_back(img);
    } while (std::next_permutation(labels.begin(), labels.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Permutation, Permutation> coset_factor(const Permutation& u, const Composition& mu)
{
    std::vector<int> img = u.images();
    int pos = 0;
    for (int m : mu) {
        std::sort(img.begin() + pos, img.begin() + pos + m);
        pos += m;
    }
    Permutation u1(img);
    return {u1, u1.inverse() * u};
}

ShiftedSkewShape ShiftedSkewShape::parse(const std::string& s)
{
    auto slash = s.find('/');
    ShiftedSkewShape sh;
    sh.lambda = parse_int_list(s.substr(0, slash));
    if (slash != std::string::npos) sh.mu = parse_int_list(s.substr(slash + 1));
    sh.mu.resize(sh.lambda.size(), 0);
    sh.validate();
    return sh;
}

void ShiftedSkewShape::validate() const
{
    if (lambda.empty()) throw std::invalid_argument("empty shape");
    if (mu.size() != lambda.size()) throw std::invalid_argument("lambda and mu lengths differ");
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] <= 0) throw std::invalid_argument("lambda parts must be positive");
        if (i + 1 < lambda.size() && lambda[i] <= lambda[i + 1]) throw std::invalid_argument("lambda must be strictly decreasing");
        if (mu[i] < 0 || mu[i] > lambda[i]) throw std::invalid_argument("need 0 <= mu_i <= lambda_i");
        if (i + 1 < mu.size() && (mu[i] < mu[i + 1] || (mu[i] == mu[i + 1] && mu[i] != 0)))
            throw std::invalid_argument("mu must be strictly decreasing until it reaches zero");
    }
}

std::vector<Box> ShiftedSkewShape::boxes() const
{
    std::vector<Box> out;
    for (int i = 1; i <= int(lambda.size()); ++i)
        for (int j = i + mu[i - 1]; j <= i + lambda[i - 1] - 1; ++j) out.push_back({i, j});
    return out;
}

int ShiftedSkewShape::size() const
{
    int n = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) n += lambda[i] - mu[i];
    return n;
}

bool ShiftedSkewShape::contains(Box b) const
{
    if (b.row < 1 || b.row > int(lambda.size())) return false;
    return b.col >= b.row + mu[b.row - 1] && b.col <= b.row + lambda[b.row - 1] - 1;
}

std::string ShiftedSkewShape::str() const
{
    std::string s;
    for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? "," : "") + std::to_string(lambda[i]);
    s += "/";
    for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
    return s;
}

std::vector<StandardFilling> standard_fillings(const ShiftedSkewShape& shape)
{
    std::vector<Box> bx = shape.boxes();
    int d = int(bx.size());
    std::set<Box> filled;
    std::vector<Box> order;
    std::vector<StandardFilling> out;
    std::function<void()> rec = [&]() {
        if (int(order.size()) == d) {
            out.push_back({order});
            return;
        }
        for (const Box& b : bx) {
            if (filled.count(b)) continue;
            Box left{b.row, b.col - 1}, up{b.row - 1, b.col};
            if (shape.contains(left) && !filled.count(left)) continue;
            if (shape.contains(up) && !filled.count(up)) continue;
            filled.insert(b);
            order.push_back(b);
            rec();
            order.pop_back();
            filled.erase(b);
        }
    };
    rec();
    return out;
}

std::vector<int> content_reading(const StandardFilling& f)
{
    std::vector<int> c;
    for (const Box& b : f.boxes) c.push_back(ShiftedSkewShape::content(b));
    return c;
}

std::vector<ShiftedSkewShape> enumerate_shapes(int max_row, int max_boxes)
{
    std::vector<ShiftedSkewShape> out;
    // strict partitions with parts <= max_row
    std::vector<std::vector<int>> stricts;
    for (int mask = 1; mask < (1 << max_row); ++mask) {
        std::vector<int> p;
        for (int k = max_row; k >= 1; --k)
            if (mask & (1 << (k - 1))) p.push_back(k);
        stricts.push_back(p);
    }
    for (const auto& lam : stricts) {
        std::vector<int> mu(lam.size(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == lam.size()) {
                ShiftedSkewShape sh{lam, mu};
                int n = sh.size();
                if (n < 1 || n > max_boxes) return;
                try {
                    sh.validate();
                } catch (const std::invalid_argument&) {
                    return;
                }
                out.push_back(sh);
                return;
            }
            for (int m = 0; m <= lam[i]; ++m) {
                mu[i] = m;
                rec(i + 1);
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end(), [](const ShiftedSkewShape& a, const ShiftedSkewShape& b) {
        return std::make_pair(a.size(), std::make_pair(a.lambda, a.mu)) < std::make_pair(b.size(), std::make_pair(b.lambda, b.mu));
    });
    return out;
}

Multisegment Multisegment::parse(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("multisegment needs lambda/mu: " + s);
    Multisegment m{parse_int_list(s.substr(0, slash)), parse_int_list(s.substr(slash + 1))};
    m.validate();
    return m;
}

void Multisegment::validate() const
{
    if (lambda.size() != mu.size()) throw std::invalid_argument("lambda and mu lengths differ");
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] < mu[i]) throw std::invalid_argument("need lambda_i >= mu_i");
}

int Multisegment::degree() const
{
    int d = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) d += lambda[i] - mu[i];
    return d;
}

Composition Multisegment::block_sizes() const
{
    Composition c;
    for (std::size_t i = 0; i < lambda.size(); ++i) c.push_back(lambda[i] - mu[i]);
    return c;
}

int Multisegment::zero_count() const
{
    int g = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (mu[i] == 0 && lambda[i] > 0) ++g;
    return g;
}

std::string Multisegment::str() const
{
    std::string s;
    for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? "," : "") + std::to_string(lambda[i]);
    s += "/";
    for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
    return s;
}

bool is_dominant(const std::vector<int>& lambda)
{
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] < lambda[i + 1]) return false;
    return true;
}

bool is_dominant_typical(const std::vector<int>& lambda)
{
    if (!is_dominant(lambda)) return false;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (std::size_t j = 0; j < lambda.size(); ++j)
            if (lambda[i] + lambda[j] == 0) return false;
    return true;
}

bool is_dominant_for(const std::vector<int>& mu, const std::vector<int>& lambda)
{
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (std::size_t j = i + 1; j < lambda.size(); ++j)
            if (lambda[i] == lambda[j] && mu[i] < mu[j]) return false;
    return true;
}

std::vector<Multisegment> enumerate_Bd(int d, int n, int max_lambda)
{
    std::vector<Multisegment> out;
    std::vector<int> lam(n), len(n);
    // lambda nonincreasing in [1, max_lambda]; block lengths in [1, d]
    std::function<void(int)> rec_len;
    std::function<void(int, int)> rec_lam = [&](int i, int hi) {
        if (i == n) {
            rec_len(0);
            return;
        }
        for (int v = hi; v >= 1; --v) {
            lam[i] = v;
            rec_lam(i + 1, v);
        }
    };
    rec_len = [&](int i) {
        if (i == n) {
            if (std::accumulate(len.begin(), len.end(), 0) != d) return;
            Multisegment m;
            m.lambda = lam;
            for (int k = 0; k < n; ++k) m.mu.push_back(lam[k] - len[k]);
            for (int k = 0; k < n; ++k)
                if (std::abs(m.mu[k]) >= m.lambda[k]) return;
            if (!is_dominant_typical(m.lambda) || !is_dominant_for(m.mu, m.lambda)) return;
            out.push_back(m);
            return;
        }
        for (int v = 1; v <= d; ++v) {
            len[i] = v;
            rec_len(i + 1);
        }
    };
    rec_lam(0, max_lambda);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Multisegment> enumerate_Bd(int d, int n) { return enumerate_Bd(d, n, d); }

std::vector<int> multisegment_to_word(const Multisegment& m)
{
    std::vector<int> w;
    for (std::size_t i = 0; i < m.lambda.size(); ++i)
        for (int a = m.mu[i]; a < m.lambda[i]; ++a) w.push_back(a);
    return w;
}

int fold(int a) { return a >= 0 ? a : -a - 1; }

std::vector<int> fold(const std::vector<int>& word)
{
    std::vector<int> w;
    for (int a : word) w.push_back(fold(a));
    return w;
}

std::vector<int> parse_int_list(const std::string& s, char sep)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        if (tok.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad integer: " + tok);
        out.push_back(v);
    }
    return out;
}

long long factorial(int n)
{
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace hcaff
