#include "hcaff/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcaff {

namespace {

// cheap pivots first: rationals, then gaussians, then wider surds
int pivot_cost(const Surd& s)
{
    if (s.is_rational()) return 0;
    if (s.is_gaussian()) return 1;
    return 1 + static_cast<int>(s.size());
}

} // namespace

bool is_zero(const Vec& v)
{
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

void axpy(Vec& y, const Surd& k, const Vec& x)
{
    if (k.is_zero()) return;
    Surd neg = -k;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i].sub_mul(neg, x[i]);
}

Vec scaled(const Surd& k, const Vec& x)
{
    Vec r(x.size());
    if (k.is_zero()) return r;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) r[i] = k * x[i];
    return r;
}

Vec parity_part(const Vec& v, const std::vector<int>& parity, int p)
{
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (parity[i] == p) r[i] = v[i];
    return r;
}

Matrix Matrix::identity(int n, const Surd& k)
{
    Matrix m(n, n);
    if (!k.is_zero())
        for (int i = 0; i < n; ++i) m.data_[i].push_back({i, k});
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols)
{
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r)
        for (int c = 0; c < cols; ++c)
            if (!rows[r][c].is_zero()) m.data_[r].push_back({c, rows[r][c]});
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows)
{
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols_; ++c)
        for (int r = 0; r < rows; ++r)
            if (!cols[c][r].is_zero()) m.data_[r].push_back({c, cols[c][r]});
    return m;
}

Surd Matrix::at(int r, int c) const
{
    const Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int k) { return e.first < k; });
    return (it != row.end() && it->first == c) ? it->second : Surd();
}

void Matrix::add(int r, int c, const Surd& v)
{
    if (v.is_zero()) return;
    Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int k) { return e.first < k; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

std::size_t Matrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

Vec Matrix::apply(const Vec& v) const
{
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    Vec out(rows_);
    for (int r = 0; r < rows_; ++r) {
        Surd acc;
        for (const auto& [c, a] : data_[r])
            if (!v[c].is_zero()) acc.sub_mul(-a, v[c]);
        out[r] = std::move(acc);
    }
    return out;
}

Vec Matrix::apply_left(const Vec& v) const
{
    if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("matrix/vector size mismatch");
    Vec out(cols_);
    for (int r = 0; r < rows_; ++r) {
        if (v[r].is_zero()) continue;
        Surd neg = -v[r];
        for (const auto& [c, a] : data_[r]) out[c].sub_mul(neg, a);
    }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, a] : data_[r]) t.data_[c].push_back({r, a});
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& r : data_)
        if (!r.empty()) return false;
    return true;
}

std::vector<Vec> Matrix::dense_rows() const
{
    std::vector<Vec> out(rows_, Vec(cols_));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, a] : data_[r]) out[r][c] = a;
    return out;
}

Vec Matrix::column(int c) const
{
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Matrix Matrix::select_columns(const std::vector<int>& cols) const
{
    std::vector<int> where(cols_, -1);
    for (std::size_t k = 0; k < cols.size(); ++k) where[cols[k]] = static_cast<int>(k);
    Matrix m(rows_, static_cast<int>(cols.size()));
    for (int r = 0; r < rows_; ++r) {
        for (const auto& [c, a] : data_[r])
            if (where[c] >= 0) m.data_[r].push_back({where[c], a});
        std::sort(m.data_[r].begin(), m.data_[r].end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    return m;
}

Matrix Matrix::operator-() const
{
    Matrix m = *this;
    for (auto& r : m.data_)
        for (auto& e : r) e.second = -e.second;
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
    Matrix m(a.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        const auto& x = a.data_[r];
        const auto& y = b.data_[r];
        auto& out = m.data_[r];
        std::size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
                out.push_back(x[i++]);
            } else if (i == x.size() || y[j].first < x[i].first) {
                out.push_back(y[j++]);
            } else {
                Surd s = x[i].second + y[j].second;
                if (!s.is_zero()) out.push_back({x[i].first, std::move(s)});
                ++i;
                ++j;
            }
        }
    }
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
    Matrix m(a.rows_, b.cols_);
    Vec acc(b.cols_);
    std::vector<char> touched(b.cols_, 0);
    std::vector<int> list;
    for (int r = 0; r < a.rows_; ++r) {
        list.clear();
        for (const auto& [k, x] : a.data_[r]) {
            Surd neg = -x;
            for (const auto& [c, y] : b.data_[k]) {
                acc[c].sub_mul(neg, y);
                if (!touched[c]) {
                    touched[c] = 1;
                    list.push_back(c);
                }
            }
        }
        std::sort(list.begin(), list.end());
        for (int c : list) {
            if (!acc[c].is_zero()) m.data_[r].push_back({c, std::move(acc[c])});
            acc[c] = Surd();
            touched[c] = 0;
        }
    }
    return m;
}

Matrix operator*(const Surd& k, const Matrix& a)
{
    Matrix m(a.rows_, a.cols_);
    if (k.is_zero()) return m;
    for (int r = 0; r < a.rows_; ++r)
        for (const auto& [c, x] : a.data_[r]) m.data_[r].push_back({c, k * x});
    return m;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (int r = 0; r < a.rows_; ++r) {
        const auto& x = a.data_[r];
        const auto& y = b.data_[r];
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].first != y[i].first || x[i].second != y[i].second) return false;
    }
    return true;
}

RowEchelon rref(std::vector<Vec> rows, int cols)
{
    RowEchelon out;
    std::size_t top = 0;
    for (int c = 0; c < cols && top < rows.size(); ++c) {
        std::size_t best = rows.size();
        int best_cost = 1 << 30;
        for (std::size_t r = top; r < rows.size(); ++r) {
            if (rows[r][c].is_zero()) continue;
            int k = pivot_cost(rows[r][c]);
            if (k < best_cost) {
                best_cost = k;
                best = r;
                if (k == 0) break;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[top], rows[best]);
        Surd inv = rows[top][c].inverse();
        for (int j = c; j < cols; ++j)
            if (!rows[top][j].is_zero()) rows[top][j] = inv * rows[top][j];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == top || rows[r][c].is_zero()) continue;
            Surd k = rows[r][c];
            for (int j = c; j < cols; ++j)
                if (!rows[top][j].is_zero()) rows[r][j].sub_mul(k, rows[top][j]);
        }
        out.pivots.push_back(c);
        ++top;
    }
    rows.resize(top);
    out.rows = std::move(rows);
    return out;
}

std::vector<Vec> kernel(const std::vector<Vec>& rows, int cols)
{
    RowEchelon e = rref(rows, cols);
    std::vector<char> is_pivot(cols, 0);
    for (int p : e.pivots) is_pivot[p] = 1;
    std::vector<Vec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols);
        v[f] = Surd(1);
        for (std::size_t k = 0; k < e.rows.size(); ++k)
            if (!e.rows[k][f].is_zero()) v[e.pivots[k]] = -e.rows[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> kernel(const Matrix& a) { return kernel(a.dense_rows(), a.cols()); }

int rank(const std::vector<Vec>& rows, int cols) { return static_cast<int>(rref(rows, cols).pivots.size()); }

int rank(const Matrix& a) { return rank(a.dense_rows(), a.cols()); }

std::optional<Matrix> inverse(const Matrix& a)
{
    int n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    std::vector<Vec> aug = a.dense_rows();
    for (int r = 0; r < n; ++r) {
        aug[r].resize(2 * n);
        aug[r][n + r] = Surd(1);
    }
    RowEchelon e = rref(std::move(aug), 2 * n);
    if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] >= n) return std::nullopt;
    std::vector<Vec> inv(n);
    for (int r = 0; r < n; ++r) inv[r] = Vec(e.rows[r].begin() + n, e.rows[r].end());
    return Matrix::from_rows(inv, n);
}

Vec Echelon::reduce(Vec v) const
{
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Surd& lead = v[pivots_[k]];
        if (lead.is_zero()) continue;
        Surd f = lead;
        axpy(v, -f, rows_[k]);
    }
    return v;
}

bool Echelon::insert(Vec v)
{
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("echelon size mismatch");
    v = reduce(std::move(v));
    int p = -1, best = 1 << 30;
    for (int i = 0; i < n_; ++i) {
        if (v[i].is_zero()) continue;
        int k = pivot_cost(v[i]);
        if (k < best) {
            best = k;
            p = i;
            if (k == 0) break;
        }
    }
    if (p < 0) return false;
    Surd inv = v[p].inverse();
    for (auto& e : v)
        if (!e.is_zero()) e = inv * e;
    for (auto& row : rows_) {
        if (row[p].is_zero()) continue;
        Surd f = row[p];
        axpy(row, -f, v);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

Vec Echelon::coords(const Vec& v) const
{
    Vec c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
}

} // namespace hcaff
