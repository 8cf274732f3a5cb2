#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hcaff/surd.hpp"

namespace hcaff {

using Vec = std::vector<Surd>;

bool is_zero(const Vec& v);
// y += k * x
void axpy(Vec& y, const Surd& k, const Vec& x);
Vec scaled(const Surd& k, const Vec& x);
// entries of one parity kept, the rest zeroed
Vec parity_part(const Vec& v, const std::vector<int>& parity, int p);

// Row-sparse matrix; each row holds (column, value) pairs sorted by column.
class Matrix {
public:
    using Row = std::vector<std::pair<int, Surd>>;

    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}
    static Matrix identity(int n, const Surd& k = Surd(1));
    static Matrix from_rows(const std::vector<Vec>& rows, int cols);
    static Matrix from_columns(const std::vector<Vec>& cols, int rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 && cols_ == 0; }
    const Row& row(int r) const { return data_[r]; }
    Surd at(int r, int c) const;
    void add(int r, int c, const Surd& v);
    void set_row(int r, Row row) { data_[r] = std::move(row); }
    std::size_t nonzeros() const;

    Vec apply(const Vec& v) const;
    // v^T * M, returned as a vector of length cols()
    Vec apply_left(const Vec& v) const;
    Matrix transpose() const;
    bool is_zero() const;
    std::vector<Vec> dense_rows() const;
    Vec column(int c) const;
    // sub-matrix on the given columns, rows kept
    Matrix select_columns(const std::vector<int>& cols) const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Surd& k, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Row> data_;
};

struct RowEchelon {
    std::vector<Vec> rows;   // reduced, pivot entries 1
    std::vector<int> pivots; // pivot column of each row
};

// reduced row echelon form of the row space
RowEchelon rref(std::vector<Vec> rows, int cols);
// basis of {v : A v = 0}
std::vector<Vec> kernel(const Matrix& a);
std::vector<Vec> kernel(const std::vector<Vec>& rows, int cols);
int rank(const Matrix& a);
int rank(const std::vector<Vec>& rows, int cols);
std::optional<Matrix> inverse(const Matrix& a);

// Incrementally grown subspace kept in reduced echelon form.
class Echelon {
public:
    explicit Echelon(int ambient = 0) : n_(ambient) {}
    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    bool insert(Vec v); // true if the span grew
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const { return is_zero(reduce(v)); }
    // coefficients of v (assumed in the span) against basis()
    Vec coords(const Vec& v) const;
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int n_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

} // namespace hcaff
