#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace wsa {

// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == cols, ErrorCode::DimensionMismatch, "ragged row list");
            std::copy(rows[i].begin(), rows[i].end(), m.row_ptr(i));
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    F* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
    const F* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<F> row(std::size_t i) const { return {row_ptr(i), row_ptr(i) + cols_}; }

    void set_row(std::size_t i, const std::vector<F>& v) {
        require(v.size() == cols_, ErrorCode::DimensionMismatch, "row length");
        std::copy(v.begin(), v.end(), row_ptr(i));
    }

    void append_row(const std::vector<F>& v) {
        if (rows_ == 0 && cols_ == 0) cols_ = v.size();
        require(v.size() == cols_, ErrorCode::DimensionMismatch, "row length");
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const F& x) { return x.is_zero(); });
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorCode::DimensionMismatch, "block out of range");
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, ErrorCode::DimensionMismatch,
                "block out of range");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    Matrix select_rows(const std::vector<int>& idx) const {
        Matrix m(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i) std::copy(row_ptr(idx[i]), row_ptr(idx[i]) + cols_, m.row_ptr(i));
        return m;
    }

    Matrix select_cols(const std::vector<int>& idx) const {
        Matrix m(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.cols_ == b.rows_, ErrorCode::DimensionMismatch,
                "product of " + a.shape() + " and " + b.shape());
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            F* out = c.row_ptr(i);
            const F* ar = a.row_ptr(i);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (ar[k].is_zero()) continue;
                const F& x = ar[k];
                const F* br = b.row_ptr(k);
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!br[j].is_zero()) out[j] += x * br[j];
            }
        }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::DimensionMismatch, "sum shape");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::DimensionMismatch, "difference shape");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    friend Matrix operator*(const F& s, const Matrix& a) {
        Matrix c = a;
        for (auto& x : c.data_) x *= s;
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            os << "[";
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).to_string();
            os << "]\n";
        }
        return os.str();
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

template <class F>
std::vector<F> row_times(const std::vector<F>& v, const Matrix<F>& m) {
    require(v.size() == m.rows(), ErrorCode::DimensionMismatch, "vector times matrix");
    std::vector<F> out(m.cols(), F(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        const F* r = m.row_ptr(k);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!r[j].is_zero()) out[j] += v[k] * r[j];
    }
    return out;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() == 0 && a.cols() == 0) return b;
    if (b.rows() == 0 && b.cols() == 0) return a;
    require(a.cols() == b.cols(), ErrorCode::DimensionMismatch, "vstack");
    Matrix<F> m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    require(a.rows() == b.rows(), ErrorCode::DimensionMismatch, "hstack");
    Matrix<F> m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

template <class F>
Matrix<F> block_diagonal(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

template <class F>
struct Echelon {
    Matrix<F> rows;          // reduced nonzero rows
    std::vector<int> pivots; // pivot column of each row
    std::size_t rank() const noexcept { return pivots.size(); }
};

// Gaussian elimination in place. With `full` the result is the reduced row
// echelon form, otherwise rows are only cleared below each pivot.
template <class F>
Echelon<F> echelon(Matrix<F> a, bool full = true) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<int> pivots;
    std::vector<std::size_t> nz;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a(p, c).is_zero()) ++p;
        if (p == m) continue;
        if (p != r)
            for (std::size_t j = c; j < n; ++j) std::swap(a(p, j), a(r, j));
        F* pr = a.row_ptr(r);
        if (!pr[c].is_one()) {
            F inv = pr[c].inverse();
            for (std::size_t j = c; j < n; ++j)
                if (!pr[j].is_zero()) pr[j] *= inv;
        }
        nz.clear();
        for (std::size_t j = c + 1; j < n; ++j)
            if (!pr[j].is_zero()) nz.push_back(j);
        for (std::size_t i = full ? 0 : r + 1; i < m; ++i) {
            if (i == r) continue;
            F* ri = a.row_ptr(i);
            if (ri[c].is_zero()) continue;
            F factor = ri[c];
            ri[c] = F(0);
            for (std::size_t j : nz) ri[j] -= factor * pr[j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    Echelon<F> e;
    e.rows = a.block(0, 0, r, n);
    e.pivots = std::move(pivots);
    return e;
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
    if (a.empty()) return 0;
    // Eliminate along the shorter side.
    if (a.rows() > a.cols()) return echelon(a.transpose(), false).rank();
    return echelon(a, false).rank();
}

// Rows form a basis of {x : A x = 0}.
template <class F>
Matrix<F> null_space(const Matrix<F>& a) {
    const std::size_t n = a.cols();
    Echelon<F> e = echelon(a, true);
    std::vector<char> is_pivot(n, 0);
    for (int p : e.pivots) is_pivot[p] = 1;
    Matrix<F> basis(n - e.rank(), n);
    std::size_t k = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis(k, f) = F(1);
        for (std::size_t r = 0; r < e.rank(); ++r) {
            const F& x = e.rows(r, f);
            if (!x.is_zero()) basis(k, e.pivots[r]) = -x;
        }
        ++k;
    }
    return basis;
}

// Rows form a basis of {v : v A = 0}.
template <class F>
Matrix<F> left_null_space(const Matrix<F>& a) {
    return null_space(a.transpose());
}

// Some x with A x = b, if one exists.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
    require(b.size() == a.rows(), ErrorCode::DimensionMismatch, "solve right-hand side");
    Matrix<F> aug(a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
    Echelon<F> e = echelon(aug, true);
    std::vector<F> x(a.cols(), F(0));
    for (std::size_t r = 0; r < e.rank(); ++r) {
        if (static_cast<std::size_t>(e.pivots[r]) == a.cols()) return std::nullopt;
        x[e.pivots[r]] = e.rows(r, a.cols());
    }
    return x;
}

// Row space of a matrix, kept in reduced row echelon form.
template <class F>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(const Matrix<F>& rows) {
        Subspace s(rows.cols());
        Echelon<F> e = echelon(rows, true);
        s.basis_ = std::move(e.rows);
        s.pivots_ = std::move(e.pivots);
        return s;
    }

    static Subspace whole(std::size_t n) { return span(Matrix<F>::identity(n)); }

    std::size_t dim() const noexcept { return pivots_.size(); }
    std::size_t ambient() const noexcept { return ambient_; }
    const Matrix<F>& basis() const noexcept { return basis_; }
    const std::vector<int>& pivots() const noexcept { return pivots_; }

    // v minus its projection along the pivot coordinates.
    std::vector<F> reduce(std::vector<F> v) const {
        require(v.size() == ambient_, ErrorCode::DimensionMismatch, "subspace ambient");
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            F c = v[pivots_[r]];
            if (c.is_zero()) continue;
            const F* br = basis_.row_ptr(r);
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!br[j].is_zero()) v[j] -= c * br[j];
        }
        return v;
    }

    bool contains(const std::vector<F>& v) const {
        auto w = reduce(v);
        return std::all_of(w.begin(), w.end(), [](const F& x) { return x.is_zero(); });
    }

    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    // Coefficients of v in the stored basis; v must lie in the subspace.
    std::vector<F> coordinates(const std::vector<F>& v) const {
        std::vector<F> c(dim(), F(0));
        for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
        return c;
    }

    // Returns true when v enlarged the subspace.
    bool add(const std::vector<F>& v) {
        auto w = reduce(v);
        std::size_t p = 0;
        while (p < ambient_ && w[p].is_zero()) ++p;
        if (p == ambient_) return false;
        F inv = w[p].inverse();
        for (auto& x : w) x *= inv;
        for (std::size_t r = 0; r < dim(); ++r) {
            F* br = basis_.row_ptr(r);
            F c = br[p];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!w[j].is_zero()) br[j] -= c * w[j];
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), static_cast<int>(p));
        std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, static_cast<int>(p));
        Matrix<F> nb(dim(), ambient_);
        for (std::size_t r = 0, src = 0; r < dim(); ++r) {
            if (r == idx) nb.set_row(r, w);
            else nb.set_row(r, basis_.row(src++));
        }
        basis_ = std::move(nb);
        return true;
    }

    // Columns that are not pivots; coordinates there parametrise the quotient.
    std::vector<int> complement_columns() const {
        std::vector<int> out;
        std::size_t k = 0;
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (k < pivots_.size() && pivots_[k] == static_cast<int>(j)) {
                ++k;
                continue;
            }
            out.push_back(static_cast<int>(j));
        }
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Matrix<F> basis_;
    std::vector<int> pivots_;
};

template <class F>
Subspace<F> sum_subspaces(const Subspace<F>& a, const Subspace<F>& b) {
    require(a.ambient() == b.ambient(), ErrorCode::DimensionMismatch, "sum of subspaces");
    if (a.dim() == 0) return b;
    if (b.dim() == 0) return a;
    return Subspace<F>::span(vstack(a.basis(), b.basis()));
}

template <class F>
Subspace<F> intersect_subspaces(const Subspace<F>& a, const Subspace<F>& b) {
    require(a.ambient() == b.ambient(), ErrorCode::DimensionMismatch, "intersection of subspaces");
    if (a.dim() == 0 || b.dim() == 0) return Subspace<F>(a.ambient());
    // (x, y) with x A = y B.
    Matrix<F> stacked = vstack(a.basis(), F(-1) * b.basis());
    Matrix<F> rel = left_null_space(stacked);
    if (rel.rows() == 0) return Subspace<F>(a.ambient());
    Matrix<F> xs = rel.block(0, 0, rel.rows(), a.dim());
    return Subspace<F>::span(xs * a.basis());
}

// Quotient F^n / W: the columns kept and the n x (n - dim W) projection.
template <class F>
struct QuotientBasis {
    std::vector<int> columns;
    Matrix<F> projection;
};

template <class F>
QuotientBasis<F> quotient_basis(const Subspace<F>& w) {
    const std::size_t n = w.ambient();
    QuotientBasis<F> q;
    q.columns = w.complement_columns();
    std::vector<int> where(n, -1);
    for (std::size_t k = 0; k < q.columns.size(); ++k) where[q.columns[k]] = static_cast<int>(k);
    q.projection = Matrix<F>(n, q.columns.size());
    for (std::size_t k = 0; k < q.columns.size(); ++k) q.projection(q.columns[k], k) = F(1);
    for (std::size_t r = 0; r < w.dim(); ++r) {
        const int p = w.pivots()[r];
        for (std::size_t k = 0; k < q.columns.size(); ++k) {
            const F& x = w.basis()(r, q.columns[k]);
            if (!x.is_zero()) q.projection(p, k) = -x;
        }
    }
    return q;
}

// Sparse vector: strictly increasing column indices with nonzero values.
template <class F>
using SparseVec = std::vector<std::pair<int, F>>;

template <class F>
SparseVec<F> sparse_axpy(const SparseVec<F>& x, const F& a, const SparseVec<F>& y) {
    // x + a*y
    SparseVec<F> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, a * y[j].second);
            ++j;
        } else {
            F v = x[i].second + a * y[j].second;
            if (!v.is_zero()) out.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

// Incremental echelon form over sparse rows. Smaller column index means
// higher priority for becoming a pivot.
template <class F>
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t columns) : pivot_row_(columns, -1) {}

    std::size_t columns() const noexcept { return pivot_row_.size(); }
    std::size_t rank() const noexcept { return rows_.size(); }

    // Returns true when the vector was independent of the rows so far.
    bool insert(SparseVec<F> v) {
        finalized_ = false;
        while (!v.empty()) {
            int lead = v.front().first;
            int r = pivot_row_[lead];
            if (r < 0) break;
            v = sparse_axpy(v, -v.front().second, rows_[r]);
        }
        if (v.empty()) return false;
        F inv = v.front().second.inverse();
        for (auto& e : v) e.second *= inv;
        pivot_row_[v.front().first] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    // Back substitution; afterwards every row is zero at all other pivots.
    void finalize() {
        if (finalized_) return;
        std::vector<int> order(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return rows_[a].front().first > rows_[b].front().first; });
        for (int r : order) {
            SparseVec<F>& row = rows_[r];
            std::size_t k = 1;
            while (k < row.size()) {
                int c = row[k].first;
                int pr = pivot_row_[c];
                if (pr < 0) {
                    ++k;
                    continue;
                }
                F coeff = row[k].second;
                row = sparse_axpy(row, -coeff, rows_[pr]);
                // rows_[pr] is already reduced and leads at c, so entries before k are unchanged
            }
        }
        finalized_ = true;
    }

    bool is_pivot(int column) const { return pivot_row_[column] >= 0; }
    const SparseVec<F>& pivot_row(int column) const { return rows_[pivot_row_[column]]; }

    // Reduce an arbitrary vector to normal form (requires finalize()).
    SparseVec<F> reduce(SparseVec<F> v) const {
        std::size_t k = 0;
        while (k < v.size()) {
            int r = pivot_row_[v[k].first];
            if (r < 0) {
                ++k;
                continue;
            }
            v = sparse_axpy(v, -v[k].second, rows_[r]);
        }
        return v;
    }

private:
    std::vector<SparseVec<F>> rows_;
    std::vector<int> pivot_row_;
    bool finalized_ = true;
};

} // namespace wsa
