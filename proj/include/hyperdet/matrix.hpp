#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hyperdet {

// Dense matrix over an exact field scalar F. Row-major.
template <class F>
class Matrix {
public:
    Matrix(int rows, int cols, const F& fill)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {
        assert(rows >= 0 && cols >= 0);
    }

    static Matrix identity(int n, const F& one) {
        Matrix m(n, n, one.zero());
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const F& at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    void row_swap(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void row_scale(int i, const F& s) {
        for (int c = 0; c < cols_; ++c) at(i, c) *= s;
    }
    // row_i += s * row_j
    void row_addmul(int i, int j, const F& s) {
        for (int c = 0; c < cols_; ++c) at(i, c) += s * at(j, c);
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
        F z = a.a_.empty() ? (b.a_.empty() ? F() : b.a_[0].zero()) : a.a_[0].zero();
        Matrix r(a.rows_, b.cols_, z);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const F& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<F> a_;
};

// Exact determinant by Gaussian elimination with first-nonzero pivoting.
template <class F>
F matrix_det(Matrix<F> m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) throw DimensionMismatch("determinant of empty matrix");
    F det = m.at(0, 0).one();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!m.at(r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return det.zero();
        if (piv != c) {
            m.row_swap(piv, c);
            det = -det;
        }
        det *= m.at(c, c);
        F pinv = m.at(c, c).inv();
        for (int r = c + 1; r < n; ++r) {
            if (m.at(r, c).is_zero()) continue;
            F f = -(m.at(r, c) * pinv);
            m.row_addmul(r, c, f);
        }
    }
    return det;
}

template <class F>
int matrix_rank(Matrix<F> m) {
    int rank = 0;
    int r0 = 0;
    for (int c = 0; c < m.cols() && r0 < m.rows(); ++c) {
        int piv = -1;
        for (int r = r0; r < m.rows(); ++r)
            if (!m.at(r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != r0) m.row_swap(piv, r0);
        F pinv = m.at(r0, c).inv();
        for (int r = r0 + 1; r < m.rows(); ++r) {
            if (m.at(r, c).is_zero()) continue;
            m.row_addmul(r, r0, -(m.at(r, c) * pinv));
        }
        ++rank;
        ++r0;
    }
    return rank;
}

// Gauss-Jordan inverse; throws SingularMatrix.
template <class F>
Matrix<F> matrix_inverse(Matrix<F> m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    int n = m.rows();
    assert(n > 0);
    Matrix<F> inv = Matrix<F>::identity(n, m.at(0, 0).one());
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!m.at(r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularMatrix();
        if (piv != c) {
            m.row_swap(piv, c);
            inv.row_swap(piv, c);
        }
        F pinv = m.at(c, c).inv();
        m.row_scale(c, pinv);
        inv.row_scale(c, pinv);
        for (int r = 0; r < n; ++r) {
            if (r == c || m.at(r, c).is_zero()) continue;
            F f = -m.at(r, c);
            m.row_addmul(r, c, f);
            inv.row_addmul(r, c, f);
        }
    }
    return inv;
}

template <class F>
bool matrix_invertible(const Matrix<F>& m) {
    return m.rows() == m.cols() && m.rows() > 0 && !matrix_det(m).is_zero();
}

}  // namespace hyperdet
