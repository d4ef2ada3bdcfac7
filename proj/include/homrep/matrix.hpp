#ifndef HOMREP_MATRIX_HPP
#define HOMREP_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homrep/field.hpp"

namespace homrep {

/// Dense matrix over one field, row-major. Vectors are rows throughout the
/// project and maps act by right multiplication.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), f_(Field::rationals()) {}

    Matrix(std::size_t rows, std::size_t cols, const Field& f)
        : rows_(rows), cols_(cols), f_(f), a_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(std::size_t n, const Field& f) {
        Matrix m(n, n, f);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    static Matrix from_rows(const Field& f, const std::vector<std::vector<long>>& rows) {
        std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        Matrix m(r, c, f);
        for (std::size_t i = 0; i < r; ++i) {
            ensure(rows[i].size() == c, "ragged row list");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(f, rows[i][j]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return f_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Scalar> row(std::size_t i) const {
        return std::vector<Scalar>(a_.begin() + static_cast<long>(i * cols_),
                                   a_.begin() + static_cast<long>((i + 1) * cols_));
    }

    void set_row(std::size_t i, const std::vector<Scalar>& r) {
        ensure(r.size() == cols_, "row length");
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix t(cols_, rows_, f_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        require_same_field(f_, o.f_, "matrix mul");
        if (cols_ != o.rows_) fail(Errc::bad_argument, "matrix mul: shape mismatch");
        Matrix r(rows_, o.cols_, f_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& x = at(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Scalar& y = o.at(k, j);
                    if (!y.is_zero()) r.at(i, j) += x * y;
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_field(f_, o.f_, "matrix add");
        if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::bad_argument, "matrix add: shape");
        Matrix r(*this);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_field(f_, o.f_, "matrix sub");
        if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::bad_argument, "matrix sub: shape");
        Matrix r(*this);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    Matrix operator*(const Scalar& s) const {
        Matrix r(*this);
        for (auto& x : r.a_) x *= s;
        return r;
    }

    Scalar trace() const {
        ensure(rows_ == cols_, "trace of square matrix");
        Scalar t = Scalar::zero(f_);
        for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    /// Kronecker product; block (i,j) of the result is at(i,j) * o.
    Matrix kron(const Matrix& o) const {
        require_same_field(f_, o.f_, "kron");
        Matrix r(rows_ * o.rows_, cols_ * o.cols_, f_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const Scalar& x = at(i, j);
                if (x.is_zero()) continue;
                for (std::size_t u = 0; u < o.rows_; ++u)
                    for (std::size_t v = 0; v < o.cols_; ++v) {
                        const Scalar& y = o.at(u, v);
                        if (!y.is_zero()) r.at(i * o.rows_ + u, j * o.cols_ + v) = x * y;
                    }
            }
        return r;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        require_same_field(a.f_, b.f_, "vstack");
        if (a.cols_ != b.cols_ && a.rows_ != 0 && b.rows_ != 0)
            fail(Errc::bad_argument, "vstack: column mismatch");
        std::size_t cols = a.rows_ ? a.cols_ : b.cols_;
        Matrix r(a.rows_ + b.rows_, cols, a.f_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < cols; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < cols; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
        return r;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        require_same_field(a.f_, b.f_, "hstack");
        if (a.rows_ != b.rows_) fail(Errc::bad_argument, "hstack: row mismatch");
        Matrix r(a.rows_, a.cols_ + b.cols_, a.f_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

private:
    std::size_t rows_, cols_;
    Field f_;
    std::vector<Scalar> a_;
};

inline std::vector<Scalar> row_times(const std::vector<Scalar>& v, const Matrix& m) {
    ensure(v.size() == m.rows(), "row_times shape");
    std::vector<Scalar> r(m.cols(), Scalar::zero(m.field()));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& y = m.at(k, j);
            if (!y.is_zero()) r[j] += v[k] * y;
        }
    }
    return r;
}

struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form by Gauss-Jordan elimination, exact.
inline RrefResult rref(Matrix m) {
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        if (!inv.is_one())
            for (std::size_t j = c; j < cols; ++j)
                if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Scalar f = m.at(i, c);
            if (f.is_zero()) continue;
            for (std::size_t j = c; j < cols; ++j) {
                const Scalar& x = m.at(r, j);
                if (!x.is_zero()) m.at(i, j) -= f * x;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

/// Basis of the right null space {x : m x^T = 0}, one basis vector per row.
inline Matrix kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    Matrix k(n - rr.rank(), n, m.field());
    std::size_t row = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        k.at(row, c) = Scalar::one(m.field());
        for (std::size_t i = 0; i < rr.rank(); ++i)
            k.at(row, rr.pivots[i]) = -rr.mat.at(i, c);
        ++row;
    }
    return k;
}

/// Nonzero rows of the rref: a canonical basis of the row space.
inline Matrix row_space_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    Matrix b(rr.rank(), m.cols(), m.field());
    for (std::size_t i = 0; i < rr.rank(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) b.at(i, j) = rr.mat.at(i, j);
    return b;
}

/// Inverse of a square matrix (fails on singular input).
inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) fail(Errc::bad_argument, "inverse of non-square matrix");
    RrefResult rr = rref(Matrix::hstack(m, Matrix::identity(m.rows(), m.field())));
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (i >= rr.pivots.size() || rr.pivots[i] != i)
            fail(Errc::bad_argument, "matrix is singular");
    Matrix inv(m.rows(), m.rows(), m.field());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) inv.at(i, j) = rr.mat.at(i, m.cols() + j);
    return inv;
}

/// Solve c * basis = target for c, or report that target lies outside the
/// row span. Basis rows are expected to be linearly independent.
inline std::optional<std::vector<Scalar>> solve_in_span(const Matrix& basis,
                                                        const std::vector<Scalar>& target) {
    if (target.size() != basis.cols()) fail(Errc::bad_argument, "solve_in_span: dimension mismatch");
    const std::size_t n = basis.cols(), k = basis.rows();
    Matrix aug(n, k + 1, basis.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug.at(i, j) = basis.at(j, i);
        aug.at(i, k) = target[i];
    }
    RrefResult rr = rref(std::move(aug));
    std::vector<Scalar> c(k, Scalar::zero(basis.field()));
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == k) return std::nullopt; // inconsistent
        c[rr.pivots[i]] = rr.mat.at(i, k);
    }
    return c;
}

/// Precomputed eliminator for many solves against one fixed row basis.
class SpanSolver {
public:
    explicit SpanSolver(const Matrix& basis)
        : k_(basis.rows()), n_(basis.cols()), f_(basis.field()) {
        Matrix aug = Matrix::hstack(basis.transpose(), Matrix::identity(n_, f_));
        RrefResult rr = rref(std::move(aug));
        red_ = std::move(rr.mat);
        // Pivots inside the first k columns correspond to coordinates; all
        // later rows pivot in the identity block and act as constraints.
        for (std::size_t i = 0; i < rr.pivots.size() && rr.pivots[i] < k_; ++i)
            pivots_.push_back(rr.pivots[i]);
        ensure(pivots_.size() == k_, "SpanSolver: basis rows independent");
    }

    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& target) const {
        ensure(target.size() == n_, "SpanSolver: target length");
        std::vector<Scalar> c(k_, Scalar::zero(f_));
        for (std::size_t i = 0; i < n_; ++i) {
            Scalar y = Scalar::zero(f_);
            for (std::size_t j = 0; j < n_; ++j) {
                const Scalar& e = red_.at(i, k_ + j);
                if (!e.is_zero() && !target[j].is_zero()) y += e * target[j];
            }
            if (i < k_) {
                c[pivots_[i]] = y;
            } else if (!y.is_zero()) {
                return std::nullopt;
            }
        }
        return c;
    }

private:
    std::size_t k_, n_;
    Field f_;
    Matrix red_;
    std::vector<std::size_t> pivots_;
};

} // namespace homrep

#endif
