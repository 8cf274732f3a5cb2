#include "hcaff/constructions.hpp"

#include <algorithm>
#include <map>

#include "hcaff/clifford.hpp"

namespace hcaff {

namespace {

// c^eps * c_j = sign * c^{eps'}
std::pair<int, std::uint32_t> clifford_right(std::uint32_t eps, int j)
{
    std::uint32_t bit = 1u << (j - 1);
    int sign = (__builtin_popcount(eps & ~((bit << 1) - 1)) % 2) ? -1 : 1;
    if (eps & bit) return {-sign, eps & ~bit};
    return {sign, eps | bit};
}

Vec coordinates(const std::vector<Vec>& basis, const Vec& v)
{
    Echelon e(static_cast<int>(v.size()));
    for (const auto& b : basis) e.insert(b);
    if (!e.contains(v)) throw std::logic_error("vector outside the submodule");
    Vec c = e.coords(v);
    Matrix change(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Vec ck = e.coords(basis[k]);
        for (std::size_t r = 0; r < ck.size(); ++r) change.add(static_cast<int>(r), static_cast<int>(k), ck[r]);
    }
    auto inv = inverse(change);
    if (!inv) throw std::logic_error("dependent submodule basis");
    return inv->apply(c);
}

} // namespace

std::vector<Surd> segment_kappas(int a, int d)
{
    std::vector<Surd> k;
    for (int i = 1; i <= d; ++i) k.push_back(Surd::sqrt(Rational(q_value(a + i - 1))));
    return k;
}

Vec x_selector_apply(const SuperModule& m, const std::vector<int>& S, const std::vector<Surd>& kappas, Vec v)
{
    for (int i = m.rank; i >= 1; --i) {
        if (std::find(S.begin(), S.end(), i) != S.end()) continue;
        Vec w = m.X(i).apply(v);
        axpy(w, kappas[i - 1], v);
        v = std::move(w);
    }
    return v;
}

SuperModule big_segment(int a, int b)
{
    int d = b - a + 1;
    if (d <= 0) return SuperModule::unit();
    int cl = 1 << d, phis = a == 0 ? 1 : 2, n = phis * cl;
    SuperModule m;
    m.rank = d;
    m.dim = n;
    for (int delta = 0; delta < phis; ++delta)
        for (int eps = 0; eps < cl; ++eps) m.parity.push_back((delta + __builtin_popcount(eps)) % 2);
    auto idx = [&](int delta, std::uint32_t eps) { return delta * cl + static_cast<int>(eps); };
    for (int i = 1; i < d; ++i) {
        Matrix s(n, n);
        Permutation si = Permutation::simple(i, d);
        for (int delta = 0; delta < phis; ++delta)
            for (int eps = 0; eps < cl; ++eps) {
                auto [sg, e2] = clifford_permute(si, eps);
                s.add(idx(delta, e2), idx(delta, eps), Surd(sg));
            }
        m.s.push_back(std::move(s));
    }
    for (int i = 1; i <= d; ++i) {
        Matrix c(n, n), x(n, n);
        for (int delta = 0; delta < phis; ++delta) {
            int koszul = delta ? -1 : 1;
            for (int eps = 0; eps < cl; ++eps) {
                int col = idx(delta, eps);
                auto [sg, e2] = clifford_left(i, eps);
                c.add(idx(delta, e2), col, Surd(koszul * sg));
                // a * epsilon_i
                if (a != 0) x.add(col, col, Surd((eps >> (i - 1) & 1) ? -a : a));
                // L_i = sum_{k<i} (1 - c_k c_i) s_{ki}
                for (int k = 1; k < i; ++k) {
                    auto [s1, e1] = clifford_permute(Permutation::transposition(k, i, d), eps);
                    x.add(idx(delta, e1), col, Surd(s1));
                    auto [s2, e3] = clifford_left(i, e1);
                    auto [s3, e4] = clifford_left(k, e3);
                    x.add(idx(delta, e4), col, Surd(-s1 * s2 * s3));
                }
                // -phi (x) c_i, with phi^2 = a
                if (a != 0) {
                    int to = 1 - delta;
                    int coef = -koszul * sg * (delta == 0 ? 1 : a);
                    x.add(idx(to, e2), col, Surd(coef));
                }
            }
        }
        m.c.push_back(std::move(c));
        m.x.push_back(std::move(x));
    }
    return m;
}

SegmentModule segment_with_generator(int a, int b)
{
    int d = b - a + 1;
    SegmentModule out;
    SuperModule big = big_segment(a, b);
    if (d <= 0) {
        out.module = big;
        out.generator = Vec{Surd(1)};
        out.embedding = {Vec{Surd(1)}};
        return out;
    }
    Vec one(big.dim);
    one[0] = Surd(1);
    auto kappas = segment_kappas(a, d);
    if (a == 0) {
        out.module = big;
        out.generator = x_selector_apply(big, {1}, kappas, one);
        for (int j = 0; j < big.dim; ++j) {
            Vec e(big.dim);
            e[j] = Surd(1);
            out.embedding.push_back(std::move(e));
        }
        return out;
    }
    std::vector<Vec> seeds;
    Vec w;
    if (a > 0) {
        w = x_selector_apply(big, {}, kappas, one);
        seeds = {w};
    } else {
        int k = -a;
        Vec xs = x_selector_apply(big, {k + 1}, kappas, one);
        Vec cc = big.C(k).apply(big.C(k + 1).apply(xs));
        w = scaled(Surd(-1), xs);
        axpy(w, -Surd::i(), cc);
        seeds = {w, big.S(k).apply(w)};
    }
    Submodule sub = spin_up(big, seeds);
    out.module = sub.module;
    out.embedding = sub.basis;
    out.generator = coordinates(sub.basis, w);
    return out;
}

SuperModule segment(int a, int b) { return segment_with_generator(a, b).module; }

std::vector<int> cyclic_weight(const Multisegment& m) { return fold(multisegment_to_word(m)); }

long long standard_dimension(const Multisegment& m)
{
    long long dim = factorial(m.degree());
    for (int b : m.block_sizes()) dim /= factorial(b);
    return dim << (m.degree() - m.zero_count() / 2);
}

StandardModule standard_module_with_generator(const Multisegment& ms)
{
    ms.validate();
    SuperModule p = SuperModule::unit();
    Vec v{Surd(1)};
    std::vector<int> zero_starts;
    int pos = 1;
    for (std::size_t i = 0; i < ms.lambda.size(); ++i) {
        int a = ms.mu[i], b = ms.lambda[i] - 1;
        if (b < a) continue;
        SegmentModule seg = segment_with_generator(a, b);
        if (a == 0) zero_starts.push_back(pos);
        pos += b - a + 1;
        Vec nv(v.size() * seg.generator.size());
        for (std::size_t x = 0; x < v.size(); ++x)
            for (std::size_t y = 0; y < seg.generator.size(); ++y)
                if (!v[x].is_zero() && !seg.generator[y].is_zero()) nv[x * seg.generator.size() + y] = v[x] * seg.generator[y];
        v = std::move(nv);
        p = outer_tensor(p, seg.module);
    }
    for (std::size_t j = 0; j + 1 < zero_starts.size(); j += 2) {
        Vec cc = p.C(zero_starts[j]).apply(p.C(zero_starts[j + 1]).apply(v));
        axpy(v, -Surd::i(), cc);
    }
    Submodule little = spin_up(p, {v});
    StandardModule out;
    out.parabolic = little.module;
    out.module = induce(little.module);
    // the induced basis starts with the identity coset, so the generator keeps its coordinates
    out.generator = Vec(out.module.dim);
    Vec c = coordinates(little.basis, v);
    for (std::size_t k = 0; k < c.size(); ++k) out.generator[k] = c[k];
    return out;
}

SuperModule standard_module(const Multisegment& m) { return standard_module_with_generator(m).module; }

Multisegment kato_multisegment(int a, int d)
{
    return Multisegment{std::vector<int>(d, a + 1), std::vector<int>(d, a)};
}

SuperModule kato_module(int a, int d) { return standard_module(kato_multisegment(a, d)); }

SuperModule calibrated_module_full(const ShiftedSkewShape& shape)
{
    shape.validate();
    auto fillings = standard_fillings(shape);
    int d = shape.size();
    if (d == 0) return SuperModule::unit();
    int cl = 1 << d, nf = static_cast<int>(fillings.size()), n = nf * cl;
    std::map<std::vector<Box>, int> index;
    for (int l = 0; l < nf; ++l) index[fillings[l].boxes] = l;
    // entry of each box in the reference filling
    std::map<Box, int> ref;
    for (int k = 0; k < d; ++k) ref[fillings[0].boxes[k]] = k;

    std::vector<std::vector<Surd>> kappa(nf);
    for (int l = 0; l < nf; ++l)
        for (const Box& b : fillings[l].boxes) {
            int c = ShiftedSkewShape::content(b);
            kappa[l].push_back(Surd::sqrt(Rational(q_value(c))));
        }

    SuperModule m;
    m.rank = d;
    m.dim = n;
    for (int l = 0; l < nf; ++l)
        for (int eps = 0; eps < cl; ++eps) m.parity.push_back(__builtin_popcount(eps) % 2);
    auto idx = [&](int l, std::uint32_t eps) { return l * cl + static_cast<int>(eps); };

    for (int i = 1; i <= d; ++i) {
        Matrix c(n, n), x(n, n);
        for (int l = 0; l < nf; ++l)
            for (int eps = 0; eps < cl; ++eps) {
                auto [sg, e2] = clifford_left(i, eps);
                c.add(idx(l, e2), idx(l, eps), Surd(sg));
                Surd k = kappa[l][i - 1];
                x.add(idx(l, eps), idx(l, eps), (eps >> (i - 1) & 1) ? -k : k);
            }
        m.c.push_back(std::move(c));
        m.x.push_back(std::move(x));
    }
    // Rescaled basis v'_L = v_L / prod of Y over inverted box pairs: the v_{s_i L}
    // coefficient becomes Y^2 when s_i L gains an inversion and 1 when it loses one.
    for (int i = 1; i < d; ++i) {
        Matrix s(n, n);
        Permutation si = Permutation::simple(i, d);
        for (int l = 0; l < nf; ++l) {
            const Surd& ki = kappa[l][i - 1];
            const Surd& kj = kappa[l][i];
            Surd diff = kj - ki, sum = kj + ki;
            if (diff.is_zero() || sum.is_zero()) throw DegenerateContents("consecutive entries with equal |kappa| in a standard filling");
            Surd alpha = diff.inverse(), beta = sum.inverse();
            Surd y2 = Surd(1) - alpha * alpha - beta * beta;
            std::vector<Box> swapped = fillings[l].boxes;
            std::swap(swapped[i - 1], swapped[i]);
            auto it = index.find(swapped);
            int target = it == index.end() ? -1 : it->second;
            Surd gamma;
            if (target < 0) {
                if (!y2.is_zero()) throw DegenerateContents("nonstandard s_i L with nonzero Y");
            } else {
                if (y2.is_zero()) throw DegenerateContents("standard s_i L with vanishing Y");
                bool up = ref[fillings[l].boxes[i - 1]] < ref[fillings[l].boxes[i]];
                gamma = up ? y2 : Surd(1);
            }
            for (int eps = 0; eps < cl; ++eps) {
                // s_i c^eps v_L = sign c^{s_i eps} s_i v_L
                auto [sg, e2] = clifford_permute(si, eps);
                int col = idx(l, eps);
                s.add(idx(l, e2), col, Surd(sg) * alpha);
                auto [s1, e3] = clifford_right(e2, i);
                auto [s2, e4] = clifford_right(e3, i + 1);
                s.add(idx(l, e4), col, Surd(sg * s1 * s2) * beta);
                if (target >= 0) s.add(idx(target, e2), col, Surd(sg) * gamma);
            }
        }
        m.s.push_back(std::move(s));
    }
    return m;
}

SuperModule calibrated_module(const ShiftedSkewShape& shape)
{
    SuperModule full = calibrated_module_full(shape);
    if (full.rank == 0) return full;
    auto f = standard_fillings(shape).front();
    std::vector<int> zeros;
    for (int k = 0; k < full.rank; ++k)
        if (ShiftedSkewShape::content(f.boxes[k]) == 0) zeros.push_back(k + 1);
    Vec v(full.dim);
    v[0] = Surd(1);
    for (std::size_t j = 0; j + 1 < zeros.size(); j += 2) {
        Vec cc = full.C(zeros[j]).apply(full.C(zeros[j + 1]).apply(v));
        axpy(v, -Surd::i(), cc);
    }
    return spin_up(full, {v}).module;
}

SuperModule simple_module(const Multisegment& m)
{
    StandardModule sm = standard_module_with_generator(m);
    return simple_quotient(sm.module, cyclic_weight(m)).module;
}

} // namespace hcaff
