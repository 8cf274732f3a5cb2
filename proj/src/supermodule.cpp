#include "hcaff/supermodule.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace hcaff {

SuperModule SuperModule::unit()
{
    SuperModule m;
    m.dim = 1;
    m.parity = {0};
    return m;
}

Composition SuperModule::effective_blocks() const
{
    if (!blocks.empty()) return blocks;
    if (rank == 0) return {};
    return {rank};
}

int SuperModule::even_dim() const { return static_cast<int>(std::count(parity.begin(), parity.end(), 0)); }

std::vector<Generator> module_generators(const SuperModule& m)
{
    std::vector<Generator> g;
    for (int i = 1; i < m.rank; ++i)
        if (m.has_s(i)) g.push_back({"s" + std::to_string(i), &m.S(i), 0});
    for (int i = 1; i <= m.rank; ++i) g.push_back({"c" + std::to_string(i), &m.C(i), 1});
    for (int i = 1; i <= m.rank; ++i) g.push_back({"x" + std::to_string(i), &m.X(i), 0});
    return g;
}

int q_value(int a) { return a * (a + 1); }

std::optional<int> weight_label(const Rational& v)
{
    if (!v.is_integer() || v.sign() < 0) return std::nullopt;
    long long n = v.numerator().get_si();
    long long a = 0;
    while (a * (a + 1) < n) ++a;
    if (a * (a + 1) != n) return std::nullopt;
    return static_cast<int>(a);
}

CheckReport verify_module(const SuperModule& m)
{
    CheckReport rep;
    int d = m.rank, n = m.dim;
    auto I = Matrix::identity(n);
    auto num = [](int i) { return std::to_string(i); };
    auto pair = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
    auto expect = [&](const std::string& name, const Matrix& a, const Matrix& b) { rep.add(name, a == b); };

    bool shapes = static_cast<int>(m.parity.size()) == n && static_cast<int>(m.c.size()) == d &&
                  static_cast<int>(m.x.size()) == d && static_cast<int>(m.s.size()) == std::max(d - 1, 0);
    rep.add("generator count and sizes", shapes);
    if (!shapes) return rep;
    for (const auto& g : module_generators(m)) {
        if (g.matrix->rows() != n || g.matrix->cols() != n) {
            rep.add("size of " + g.name, false);
            return rep;
        }
        bool ok = true;
        for (int r = 0; r < n && ok; ++r)
            for (const auto& [c, v] : g.matrix->row(r))
                if ((m.parity[r] ^ m.parity[c]) != g.parity) ok = false;
        rep.add("parity of " + g.name, ok);
    }
    if (!m.blocks.empty()) {
        int sum = 0;
        for (int b : m.blocks) sum += b;
        bool ok = sum == d;
        std::vector<int> starts = block_starts(m.blocks);
        for (int i = 1; i < d; ++i) {
            bool boundary = std::find(starts.begin(), starts.end(), i + 1) != starts.end();
            if (boundary == m.has_s(i)) ok = false;
        }
        rep.add("parabolic block structure", ok);
    }

    for (int i = 1; i <= d; ++i) {
        expect("(c) c" + num(i) + "^2 = -1", m.C(i) * m.C(i), -I);
        for (int j = i + 1; j <= d; ++j) expect("(c) c_i c_j = -c_j c_i at " + pair(i, j), m.C(i) * m.C(j), -(m.C(j) * m.C(i)));
        for (int j = 1; j <= d; ++j) {
            if (i == j) expect("(c&x) c_i x_i = -x_i c_i at " + num(i), m.C(i) * m.X(i), -(m.X(i) * m.C(i)));
            else expect("(c&x) c_j x_i = x_i c_j at " + pair(i, j), m.C(j) * m.X(i), m.X(i) * m.C(j));
        }
        for (int j = i + 1; j <= d; ++j) expect("x_i x_j = x_j x_i at " + pair(i, j), m.X(i) * m.X(j), m.X(j) * m.X(i));
    }
    for (int i = 1; i < d; ++i) {
        if (!m.has_s(i)) continue;
        const Matrix& S = m.S(i);
        expect("(s) s" + num(i) + "^2 = 1", S * S, I);
        if (i + 1 < d && m.has_s(i + 1))
            expect("(s) braid at " + num(i), S * m.S(i + 1) * S, m.S(i + 1) * S * m.S(i + 1));
        for (int j = i + 2; j < d; ++j)
            if (m.has_s(j)) expect("(s) s_i s_j = s_j s_i at " + pair(i, j), S * m.S(j), m.S(j) * S);
        expect("(c&s) s_i c_i = c_{i+1} s_i at " + num(i), S * m.C(i), m.C(i + 1) * S);
        expect("(c&s) s_i c_{i+1} = c_i s_i at " + num(i), S * m.C(i + 1), m.C(i) * S);
        for (int j = 1; j <= d; ++j) {
            if (j == i || j == i + 1) continue;
            expect("(c&s) s_i c_j = c_j s_i at " + pair(i, j), S * m.C(j), m.C(j) * S);
            expect("(s&x) s_i x_j = x_j s_i at " + pair(i, j), S * m.X(j), m.X(j) * S);
        }
        expect("(s&x) s_i x_i = x_{i+1} s_i - 1 + c_i c_{i+1} at " + num(i), S * m.X(i),
               m.X(i + 1) * S - I + m.C(i) * m.C(i + 1));
    }
    return rep;
}

SuperModule outer_tensor(const SuperModule& a, const SuperModule& b)
{
    SuperModule t;
    t.rank = a.rank + b.rank;
    t.dim = a.dim * b.dim;
    t.parity.resize(t.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j) t.parity[i * b.dim + j] = (a.parity[i] + b.parity[j]) % 2;
    // (g (x) 1)(m (x) n) = gm (x) n
    auto left = [&](const Matrix& g) {
        Matrix r(t.dim, t.dim);
        for (int i = 0; i < a.dim; ++i) {
            Matrix::Row src = g.row(i);
            for (int j = 0; j < b.dim; ++j) {
                Matrix::Row row;
                for (const auto& [c, v] : src) row.push_back({c * b.dim + j, v});
                std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                r.set_row(i * b.dim + j, std::move(row));
            }
        }
        return r;
    };
    // (1 (x) h)(m (x) n) = (-1)^{p(h)p(m)} m (x) hn
    auto right = [&](const Matrix& h, int ph) {
        Matrix r(t.dim, t.dim);
        for (int i = 0; i < a.dim; ++i) {
            bool flip = ph && a.parity[i];
            for (int j = 0; j < b.dim; ++j) {
                Matrix::Row row;
                for (const auto& [c, v] : h.row(j)) row.push_back({i * b.dim + c, flip ? -v : v});
                r.set_row(i * b.dim + j, std::move(row));
            }
        }
        return r;
    };
    for (int i = 1; i < t.rank; ++i) {
        if (i < a.rank) t.s.push_back(a.has_s(i) ? left(a.S(i)) : Matrix());
        else if (i == a.rank) t.s.push_back(Matrix());
        else t.s.push_back(b.has_s(i - a.rank) ? right(b.S(i - a.rank), 0) : Matrix());
    }
    for (int i = 1; i <= a.rank; ++i) {
        t.c.push_back(left(a.C(i)));
        t.x.push_back(left(a.X(i)));
    }
    for (int i = 1; i <= b.rank; ++i) {
        t.c.push_back(right(b.C(i), 1));
        t.x.push_back(right(b.X(i), 0));
    }
    Composition ba = a.effective_blocks(), bb = b.effective_blocks();
    t.blocks = ba;
    t.blocks.insert(t.blocks.end(), bb.begin(), bb.end());
    return t;
}

SuperModule induce(const SuperModule& m)
{
    Composition mu = m.effective_blocks();
    int d = m.rank;
    if (d == 0) return m;
    for (int b : mu)
        if (b <= 0) throw BlockMismatch("parabolic blocks must be positive");
    std::vector<Permutation> reps = min_coset_reps(mu);
    std::sort(reps.begin(), reps.end(), [](const Permutation& u, const Permutation& v) {
        return u.length() != v.length() ? u.length() < v.length() : u < v;
    });
    std::map<Permutation, int> index;
    for (std::size_t k = 0; k < reps.size(); ++k) index[reps[k]] = static_cast<int>(k);
    int nm = m.dim, nw = static_cast<int>(reps.size()), n = nm * nw;

    SuperModule r;
    r.rank = d;
    r.dim = n;
    r.parity.resize(n);
    for (int w = 0; w < nw; ++w)
        for (int j = 0; j < nm; ++j) r.parity[w * nm + j] = m.parity[j];

    auto place = [&](Matrix& target, int wrow, int wcol, const Matrix& block) {
        for (int j = 0; j < nm; ++j)
            for (const auto& [c, v] : block.row(j)) target.add(wrow * nm + j, wcol * nm + c, v);
    };
    for (int i = 1; i < d; ++i) {
        Matrix S(n, n);
        Permutation si = Permutation::simple(i, d);
        for (int w = 0; w < nw; ++w) {
            Permutation u = si * reps[w];
            auto it = index.find(u);
            if (it != index.end()) {
                place(S, it->second, w, Matrix::identity(nm));
            } else {
                // s_i w = w s_k with s_k inside a block
                Permutation winv = reps[w].inverse();
                int k = winv(i);
                if (winv(i + 1) != k + 1 || !m.has_s(k)) throw BlockMismatch("coset factorization left the parabolic subgroup");
                place(S, w, w, m.S(k));
            }
        }
        r.s.push_back(std::move(S));
    }
    for (int i = 1; i <= d; ++i) {
        Matrix C(n, n);
        for (int w = 0; w < nw; ++w) place(C, w, w, m.C(reps[w].inverse()(i)));
        r.c.push_back(std::move(C));
    }
    // x_i (s_j w' (x) m) = s_j x_{s_j(i)} (w' (x) m) + correction, by increasing length of w
    std::vector<std::vector<Vec>> cols(d, std::vector<Vec>(n));
    for (int w = 0; w < nw; ++w) {
        if (reps[w].is_identity()) {
            for (int i = 1; i <= d; ++i)
                for (int j = 0; j < nm; ++j) {
                    Vec v(n);
                    for (int k = 0; k < nm; ++k) v[w * nm + k] = m.X(i).at(k, j);
                    cols[i - 1][w * nm + j] = std::move(v);
                }
            continue;
        }
        int sj = reps[w].reduced_word().front();
        int wp = index.at(Permutation::simple(sj, d) * reps[w]);
        for (int i = 1; i <= d; ++i) {
            int ip = i == sj ? sj + 1 : (i == sj + 1 ? sj : i);
            for (int j = 0; j < nm; ++j) {
                Vec v = r.S(sj).apply(cols[ip - 1][wp * nm + j]);
                if (i == sj || i == sj + 1) {
                    Vec e(n);
                    e[wp * nm + j] = Surd(1);
                    Vec cc = r.C(sj).apply(r.C(sj + 1).apply(e));
                    axpy(v, Surd(i == sj ? -1 : 1), e);
                    axpy(v, Surd(-1), cc);
                }
                cols[i - 1][w * nm + j] = std::move(v);
            }
        }
    }
    for (int i = 1; i <= d; ++i) r.x.push_back(Matrix::from_columns(cols[i - 1], n));
    return r;
}

SuperModule sigma_module_twist(const SuperModule& m)
{
    if (!m.blocks.empty() && m.blocks.size() > 1) throw BlockMismatch("sigma twist needs the full algebra action");
    int d = m.rank;
    SuperModule t = m;
    t.blocks.clear();
    for (int i = 1; i < d; ++i) t.s[i - 1] = -m.S(d - i);
    for (int i = 1; i <= d; ++i) {
        t.c[i - 1] = m.C(d + 1 - i);
        t.x[i - 1] = m.X(d + 1 - i);
    }
    return t;
}

SuperModule tau_dual(const SuperModule& m)
{
    SuperModule t = m;
    for (auto& s : t.s)
        if (!s.empty()) s = s.transpose();
    for (auto& c : t.c) c = -c.transpose();
    for (auto& x : t.x) x = x.transpose();
    return t;
}

SuperModule restrict_to(const SuperModule& m, const Echelon& sub)
{
    SuperModule r;
    r.rank = m.rank;
    r.dim = sub.dim();
    r.blocks = m.blocks;
    for (int p : sub.pivots()) r.parity.push_back(m.parity[p]);
    auto restrict = [&](const Matrix& g) {
        std::vector<Vec> cols;
        for (const auto& b : sub.basis()) cols.push_back(sub.coords(g.apply(b)));
        return Matrix::from_columns(cols, r.dim);
    };
    for (int i = 1; i < m.rank; ++i) r.s.push_back(m.has_s(i) ? restrict(m.S(i)) : Matrix());
    for (int i = 1; i <= m.rank; ++i) {
        r.c.push_back(restrict(m.C(i)));
        r.x.push_back(restrict(m.X(i)));
    }
    return r;
}

bool is_invariant(const SuperModule& m, const Echelon& sub)
{
    for (const auto& g : module_generators(m))
        for (const auto& b : sub.basis())
            if (!sub.contains(g.matrix->apply(b))) return false;
    return true;
}

// The span of Cl(d) applied to a set T of heads is Clifford-stable, and since
// s_j c^e = c^{s_j e} s_j and x_i c^e = +-c^e x_i it is a submodule as soon as
// every s_j t and x_i t lies in it. Assumes m satisfies the relations.
Submodule spin_up(const SuperModule& m, const std::vector<Vec>& seeds)
{
    Echelon e(m.dim);
    std::vector<const Matrix*> odd, even;
    for (const auto& g : module_generators(m)) (g.parity ? odd : even).push_back(g.matrix);
    std::deque<Vec> heads;
    auto offer = [&](Vec t) {
        if (!e.insert(t)) return;
        std::vector<Vec> orbit{t};
        for (const Matrix* c : odd) {
            std::size_t n = orbit.size();
            for (std::size_t k = 0; k < n && e.dim() < m.dim; ++k) {
                orbit.push_back(c->apply(orbit[k]));
                e.insert(orbit.back());
            }
        }
        heads.push_back(std::move(t));
    };
    for (const auto& s : seeds)
        for (int p = 0; p < 2; ++p) offer(parity_part(s, m.parity, p));
    while (!heads.empty() && e.dim() < m.dim) {
        Vec t = std::move(heads.front());
        heads.pop_front();
        for (const Matrix* g : even) offer(g->apply(t));
    }
    Submodule sub;
    sub.module = restrict_to(m, e);
    sub.basis = e.basis();
    return sub;
}

} // namespace hcaff
