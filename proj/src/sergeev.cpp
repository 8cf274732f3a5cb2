#include "hcaff/sergeev.hpp"

#include <algorithm>
#include <map>

namespace hcaff {

namespace {

int sgn(int i) { return i > 0 ? 1 : -1; }
int index_parity(int i) { return i > 0 ? 0 : 1; }

GradedMatrix combine(const GradedMatrix& a, const GradedMatrix& b, int sign)
{
    return {sign > 0 ? a.m + b.m : a.m - b.m, a.parity};
}

GradedMatrix identity_on(int dim) { return {Matrix::identity(dim), 0}; }

bool supercommutes(const Matrix& a, int pa, const Matrix& b, int pb)
{
    Matrix ab = a * b, ba = b * a;
    return (pa & pb) ? (ab + ba).is_zero() : ab == ba;
}

// coordinates of a Q(V) element on qn_generators(n), or nothing if outside Q(V)
std::optional<std::vector<Surd>> q_coordinates(int n, const GradedMatrix& x, const std::vector<QGenerator>& gens)
{
    std::vector<Surd> coef;
    Matrix back(2 * n, 2 * n);
    for (const auto& g : gens) {
        Surd k = g.odd ? x.m.at(index_of(n, -g.i), index_of(n, g.j)) : x.m.at(index_of(n, g.i), index_of(n, g.j));
        coef.push_back(k);
        if (!k.is_zero()) back = back + k * g.matrix.m;
    }
    if (back != x.m) return std::nullopt;
    return coef;
}

} // namespace

int index_of(int n, int i) { return i < 0 ? i + n : i + n - 1; }

std::vector<int> natural_parity(int n)
{
    std::vector<int> p(2 * n);
    for (int k = 0; k < 2 * n; ++k) p[k] = k < n ? 1 : 0;
    return p;
}

GradedMatrix unit_matrix(int n, int i, int j)
{
    GradedMatrix e{Matrix(2 * n, 2 * n), index_parity(i) ^ index_parity(j)};
    e.m.add(index_of(n, i), index_of(n, j), Surd(1));
    return e;
}

GradedMatrix qn_e(int n, int i, int j) { return combine(unit_matrix(n, i, j), unit_matrix(n, -i, -j), 1); }
GradedMatrix qn_f(int n, int i, int j) { return combine(unit_matrix(n, -i, j), unit_matrix(n, i, -j), 1); }
GradedMatrix qn_ebar(int n, int i, int j) { return combine(unit_matrix(n, i, j), unit_matrix(n, -i, -j), -1); }
GradedMatrix qn_fbar(int n, int i, int j) { return combine(unit_matrix(n, -i, j), unit_matrix(n, i, -j), -1); }

GradedMatrix clifford_c(int n)
{
    GradedMatrix c{Matrix(2 * n, 2 * n), 1};
    for (int i = 1; i <= n; ++i) c.m = c.m + qn_fbar(n, i, i).m;
    return c;
}

std::vector<QGenerator> qn_generators(int n)
{
    std::vector<QGenerator> out;
    for (int odd = 0; odd < 2; ++odd)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                std::string name = std::string(odd ? "f" : "e") + std::to_string(i) + std::to_string(j);
                out.push_back({name, i, j, odd == 1, odd ? qn_f(n, i, j) : qn_e(n, i, j)});
            }
    return out;
}

GradedMatrix superbracket(const GradedMatrix& x, const GradedMatrix& y)
{
    Matrix xy = x.m * y.m, yx = y.m * x.m;
    return {(x.parity & y.parity) ? xy + yx : xy - yx, x.parity ^ y.parity};
}

GradedMatrix graded_kron(const GradedMatrix& a, const std::vector<int>& pa, const GradedMatrix& b)
{
    int nb = b.m.rows();
    GradedMatrix out{Matrix(a.m.rows() * nb, a.m.cols() * b.m.cols()), a.parity ^ b.parity};
    for (int r = 0; r < a.m.rows(); ++r)
        for (int rb = 0; rb < nb; ++rb) {
            Matrix::Row row;
            for (const auto& [ca, va] : a.m.row(r))
                for (const auto& [cb, vb] : b.m.row(rb)) {
                    Surd v = va * vb;
                    row.emplace_back(ca * b.m.cols() + cb, (b.parity & pa[ca]) ? -v : v);
                }
            out.m.set_row(r * nb + rb, std::move(row));
        }
    return out;
}

std::vector<int> tensor_parity(const std::vector<int>& pa, const std::vector<int>& pb)
{
    std::vector<int> out;
    out.reserve(pa.size() * pb.size());
    for (int x : pa)
        for (int y : pb) out.push_back(x ^ y);
    return out;
}

TwoTensor omega(int n)
{
    TwoTensor t;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) t.terms.emplace_back(qn_e(n, i, j), qn_ebar(n, j, i));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            GradedMatrix f = qn_f(n, i, j);
            f.m = -f.m;
            t.terms.emplace_back(f, qn_fbar(n, j, i));
        }
    return t;
}

TwoTensor superpermutation(int n)
{
    TwoTensor t;
    std::vector<int> idx;
    for (int i = -n; i <= n; ++i)
        if (i != 0) idx.push_back(i);
    for (int i : idx)
        for (int j : idx) {
            GradedMatrix a = unit_matrix(n, i, j);
            if (sgn(j) < 0) a.m = -a.m;
            t.terms.emplace_back(a, unit_matrix(n, j, i));
        }
    return t;
}

Matrix assemble(const TwoTensor& t, const std::vector<int>& pa, const std::vector<int>& pb)
{
    Matrix out(static_cast<int>(pa.size() * pb.size()), static_cast<int>(pa.size() * pb.size()));
    for (const auto& [x, y] : t.terms) out = out + graded_kron(x, pa, y).m;
    return out;
}

QModule trivial_qmodule(int n)
{
    QModule m{n, {0}, {}};
    for (std::size_t k = 0; k < qn_generators(n).size(); ++k) m.action.emplace_back(1, 1);
    return m;
}

QModule natural_qmodule(int n)
{
    QModule m{n, natural_parity(n), {}};
    for (const auto& g : qn_generators(n)) m.action.push_back(g.matrix.m);
    return m;
}

CheckReport verify_qmodule(const QModule& m)
{
    CheckReport rep;
    auto gens = qn_generators(m.n);
    int dim = static_cast<int>(m.parity.size());
    bool shapes = m.action.size() == gens.size();
    for (const auto& a : m.action)
        if (a.rows() != dim || a.cols() != dim) shapes = false;
    rep.add("generator count and sizes", shapes);
    if (!shapes) return rep;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        bool ok = true;
        for (int r = 0; r < dim; ++r)
            for (const auto& [c, v] : m.action[k].row(r))
                if ((m.parity[r] ^ m.parity[c]) != (gens[k].odd ? 1 : 0)) ok = false;
        rep.add("parity of " + gens[k].name, ok);
    }
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a; b < gens.size(); ++b) {
            GradedMatrix br = superbracket(gens[a].matrix, gens[b].matrix);
            auto coef = q_coordinates(m.n, br, gens);
            std::string name = "[" + gens[a].name + "," + gens[b].name + "]";
            if (!coef) {
                rep.add(name + " stays in q(n)", false);
                continue;
            }
            Matrix expect(dim, dim);
            for (std::size_t k = 0; k < gens.size(); ++k)
                if (!(*coef)[k].is_zero()) expect = expect + (*coef)[k] * m.action[k];
            GradedMatrix got = superbracket({m.action[a], gens[a].odd}, {m.action[b], gens[b].odd});
            rep.add(name, got.m == expect);
        }
    return rep;
}

TensorSpace::TensorSpace(const QModule& m, int d) : m_(m), n_(m.n), d_(d)
{
    slot_parity_.push_back(m.parity);
    for (int k = 0; k < d; ++k) slot_parity_.push_back(natural_parity(n_));
    parity_ = slot_parity_[0];
    for (int k = 1; k <= d; ++k) parity_ = tensor_parity(parity_, slot_parity_[k]);
}

Matrix TensorSpace::place_pure(const std::vector<GradedMatrix>& factors) const
{
    GradedMatrix acc = factors[0];
    std::vector<int> p = slot_parity_[0];
    for (int k = 1; k <= d_; ++k) {
        acc = graded_kron(acc, p, factors[k]);
        p = tensor_parity(p, slot_parity_[k]);
    }
    return acc.m;
}

Matrix TensorSpace::place(int slot, const GradedMatrix& x) const
{
    std::vector<GradedMatrix> f;
    for (int k = 0; k <= d_; ++k) f.push_back(k == slot ? x : identity_on(static_cast<int>(slot_parity_[k].size())));
    return place_pure(f);
}

Matrix TensorSpace::place(int i, int j, const TwoTensor& t) const
{
    if (i < 1 || j <= i || j > d_) throw std::out_of_range("tensor slots out of range");
    Matrix out(dim(), dim());
    for (const auto& [x, y] : t.terms) {
        std::vector<GradedMatrix> f;
        for (int k = 0; k <= d_; ++k) f.push_back(k == i ? x : k == j ? y : identity_on(static_cast<int>(slot_parity_[k].size())));
        out = out + place_pure(f);
    }
    return out;
}

Matrix TensorSpace::omega_0(int i) const
{
    auto gens = qn_generators(n_);
    Matrix out(dim(), dim());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto& g = gens[k];
        if (m_.action[k].is_zero()) continue;
        GradedMatrix second = g.odd ? qn_fbar(n_, g.j, g.i) : qn_ebar(n_, g.j, g.i);
        std::vector<GradedMatrix> f;
        for (int s = 0; s <= d_; ++s)
            f.push_back(s == 0   ? GradedMatrix{m_.action[k], g.odd ? 1 : 0}
                        : s == i ? second
                                 : identity_on(static_cast<int>(slot_parity_[s].size())));
        Matrix term = place_pure(f);
        out = g.odd ? out - term : out + term;
    }
    return out;
}

Matrix TensorSpace::diagonal(int generator) const
{
    auto g = qn_generators(n_)[generator];
    Matrix out = place(0, GradedMatrix{m_.action[generator], g.odd ? 1 : 0});
    for (int k = 1; k <= d_; ++k) out = out + place(k, g.matrix);
    return out;
}

SuperModule duality_operators(int n, int d, const QModule& m)
{
    if (m.n != n) throw NotAModule("module is for q(" + std::to_string(m.n) + "), expected q(" + std::to_string(n) + ")");
    auto rep = verify_qmodule(m);
    if (!rep.ok()) throw NotAModule("q(n) relations fail: " + rep.first_failure()->name);

    TensorSpace space(m, d);
    SuperModule out;
    out.rank = d;
    out.dim = space.dim();
    out.parity = space.parity();
    GradedMatrix c = clifford_c(n);
    TwoTensor sp = superpermutation(n);
    for (int i = 1; i <= d; ++i) out.c.push_back(space.place(i, c));
    for (int i = 1; i < d; ++i) out.s.push_back(space.place(i, i + 1, sp));
    Matrix one = Matrix::identity(out.dim);
    for (int i = 1; i <= d; ++i) {
        Matrix x = space.omega_0(i);
        for (int j = 1; j < i; ++j) x = x + (one - out.C(j) * out.C(i)) * space.place(j, i, sp);
        out.x.push_back(std::move(x));
    }
    return out;
}

CheckReport check_qn_commutation(const SuperModule& op, const TensorSpace& space, int n_generators)
{
    CheckReport rep;
    auto gens = module_generators(op);
    for (int k = 0; k < n_generators; ++k) {
        Matrix g = space.diagonal(k);
        int pg = 0;
        for (int r = 0; r < g.rows() && !pg; ++r)
            for (const auto& [c, v] : g.row(r))
                if (space.parity()[r] != space.parity()[c]) pg = 1;
        bool ok = true;
        std::string bad;
        for (const auto& t : gens)
            if (!supercommutes(*t.matrix, t.parity, g, pg)) {
                ok = false;
                bad = t.name;
                break;
            }
        rep.add("q(n) generator " + std::to_string(k) + " supercommutes", ok, bad.empty() ? "" : "fails on " + bad);
    }
    return rep;
}

CheckReport check_tau_compatibility(const SuperModule& op)
{
    CheckReport rep;
    for (int i = 1; i <= op.rank; ++i) {
        rep.add("tau(C" + std::to_string(i) + ") = -C" + std::to_string(i), op.C(i).transpose() == -op.C(i));
        rep.add("tau(X" + std::to_string(i) + ") = X" + std::to_string(i), op.X(i).transpose() == op.X(i));
    }
    for (int i = 1; i < op.rank; ++i)
        rep.add("tau(S" + std::to_string(i) + ") = S" + std::to_string(i), op.S(i).transpose() == op.S(i));
    return rep;
}

CheckReport check_omega(int n)
{
    CheckReport rep;
    auto p = natural_parity(n);
    int dim = 2 * n;
    Matrix om = assemble(omega(n), p, p);
    Matrix one_c = graded_kron(identity_on(dim), p, clifford_c(n)).m;
    rep.add("Omega (1 (x) C) = -(1 (x) C) Omega", om * one_c == -(one_c * om));

    GradedMatrix c = clifford_c(n);
    rep.add("C^2 = -1", c.m * c.m == -Matrix::identity(dim));
    bool ok = true;
    for (const auto& g : qn_generators(n)) {
        GradedMatrix delta{graded_kron(identity_on(dim), p, g.matrix).m + graded_kron(g.matrix, p, identity_on(dim)).m,
                           g.odd ? 1 : 0};
        if (!supercommutes(delta.m, delta.parity, om, 0)) {
            ok = false;
            rep.add("[1 (x) " + g.name + " + " + g.name + " (x) 1, Omega] = 0", false);
        }
        if (!supercommutes(c.m, 1, g.matrix.m, g.odd ? 1 : 0)) {
            ok = false;
            rep.add("C supercommutes with " + g.name, false);
        }
    }
    if (ok) rep.add("Omega and C supercommute with q(n)", true);

    // S Omega_{01} S = Omega_{02} on V^{(x)3}
    QModule nat = natural_qmodule(n);
    TensorSpace space(nat, 2);
    Matrix s = space.place(1, 2, superpermutation(n));
    rep.add("S_1 Omega_01 S_1 = Omega_02", s * space.omega_0(1) * s == space.omega_0(2));
    return rep;
}

SergeevReport verify_sergeev(int n, int d)
{
    SergeevReport out;
    SuperModule op = duality_operators(n, d, trivial_qmodule(n));
    TensorSpace space(trivial_qmodule(n), d);
    CheckReport& rep = out.checks;
    Matrix one = Matrix::identity(op.dim);
    auto num = [](int i) { return std::to_string(i); };
    for (int i = 1; i <= d; ++i) {
        rep.add("(c) C" + num(i) + "^2 = -1", op.C(i) * op.C(i) == -one);
        for (int j = i + 1; j <= d; ++j)
            rep.add("(c) C" + num(i) + " C" + num(j) + " = -C" + num(j) + " C" + num(i), op.C(i) * op.C(j) == -(op.C(j) * op.C(i)));
    }
    for (int i = 1; i < d; ++i) {
        const Matrix& s = op.S(i);
        rep.add("(s) S" + num(i) + "^2 = 1", s * s == one);
        if (i + 1 < d) rep.add("(s) braid at " + num(i), s * op.S(i + 1) * s == op.S(i + 1) * s * op.S(i + 1));
        for (int j = i + 2; j < d; ++j) rep.add("(s) S" + num(i) + " S" + num(j) + " commute", s * op.S(j) == op.S(j) * s);
        for (int j = 1; j <= d; ++j) {
            Matrix target = j == i ? op.C(i + 1) : j == i + 1 ? op.C(i) : op.C(j);
            rep.add("(c&s) S" + num(i) + " C" + num(j), s * op.C(j) == target * s);
        }
    }
    SuperModule finite = op;
    finite.x.clear();
    for (int i = 1; i <= d; ++i) finite.x.emplace_back(op.dim, op.dim);
    rep.append(check_qn_commutation(finite, space, static_cast<int>(qn_generators(n).size())));

    if (n >= d) {
        out.injectivity_tested = true;
        // permutation operators by breadth-first search over s_i
        std::map<std::vector<int>, Matrix> perms;
        std::vector<int> id(d);
        for (int k = 0; k < d; ++k) id[k] = k;
        perms.emplace(id, one);
        std::vector<std::vector<int>> frontier{id};
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& w : frontier)
                for (int i = 1; i < d; ++i) {
                    auto v = w;
                    std::swap(v[i - 1], v[i]);
                    if (perms.count(v)) continue;
                    perms.emplace(v, op.S(i) * perms.at(w));
                    next.push_back(v);
                }
            frontier = std::move(next);
        }
        std::vector<Matrix> images;
        for (const auto& [w, pm] : perms)
            for (int eps = 0; eps < (1 << d); ++eps) {
                Matrix m = pm;
                for (int i = d; i >= 1; --i)
                    if (eps >> (i - 1) & 1) m = op.C(i) * m;
                images.push_back(std::move(m));
            }
        std::map<long long, int> column;
        for (const auto& m : images)
            for (int r = 0; r < m.rows(); ++r)
                for (const auto& [c, v] : m.row(r)) column.emplace(static_cast<long long>(r) * op.dim + c, 0);
        int k = 0;
        for (auto& [pos, idx] : column) idx = k++;
        Echelon span(k);
        for (const auto& m : images) {
            Vec v(k);
            for (int r = 0; r < m.rows(); ++r)
                for (const auto& [c, val] : m.row(r)) v[column.at(static_cast<long long>(r) * op.dim + c)] = val;
            span.insert(std::move(v));
        }
        out.image_rank = span.dim();
        out.basis_size = static_cast<long long>(images.size());
        rep.add("injective on the 2^d d! basis", out.image_rank == out.basis_size,
                "rank " + std::to_string(out.image_rank) + " of " + std::to_string(out.basis_size));
    }
    return out;
}

} // namespace hcaff
