#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace hyperdet {

// 2 x k x (k+1) hypermatrix. Entries at(s, r, c) with slice s in {0,1},
// row r in 0..k, column c in 0..k-1; each slice is displayed as a (k+1) x k
// matrix. Row operations act on both slices through GL_{k+1}, column
// operations through GL_k.
template <class F>
class Hypermatrix {
public:
    Hypermatrix(int k, const F& fill)
        : k_(k), a_(static_cast<std::size_t>(2) * (k + 1) * k, fill) {
        assert(k >= 1);
    }

    // Slice 0 is the identity stacked over a zero row, slice 1 the zero row
    // stacked over the identity.
    static Hypermatrix identity(int k, const F& one) {
        Hypermatrix m(k, one.zero());
        for (int i = 0; i < k; ++i) {
            m.at(0, i, i) = one;
            m.at(1, i + 1, i) = one;
        }
        return m;
    }

    int k() const { return k_; }

    F& at(int s, int r, int c) {
        assert(s >= 0 && s < 2 && r >= 0 && r <= k_ && c >= 0 && c < k_);
        return a_[(static_cast<std::size_t>(s) * (k_ + 1) + r) * k_ + c];
    }
    const F& at(int s, int r, int c) const {
        return const_cast<Hypermatrix*>(this)->at(s, r, c);
    }

    void check_row(int i) const {
        if (i < 0 || i > k_) throw IndexOutOfRange("row " + std::to_string(i));
    }
    void check_col(int i) const {
        if (i < 0 || i >= k_) throw IndexOutOfRange("column " + std::to_string(i));
    }

    void row_swap(int i, int j) {
        check_row(i);
        check_row(j);
        for (int s = 0; s < 2; ++s)
            for (int c = 0; c < k_; ++c) std::swap(at(s, i, c), at(s, j, c));
    }
    void row_scale(int i, const F& f) {
        check_row(i);
        if (f.is_zero()) throw ZeroScale();
        for (int s = 0; s < 2; ++s)
            for (int c = 0; c < k_; ++c) at(s, i, c) *= f;
    }
    // row_i += f * row_j
    void row_addmul(int i, int j, const F& f) {
        check_row(i);
        check_row(j);
        assert(i != j);
        for (int s = 0; s < 2; ++s)
            for (int c = 0; c < k_; ++c) at(s, i, c) += f * at(s, j, c);
    }
    void col_swap(int i, int j) {
        check_col(i);
        check_col(j);
        for (int s = 0; s < 2; ++s)
            for (int r = 0; r <= k_; ++r) std::swap(at(s, r, i), at(s, r, j));
    }
    void col_scale(int i, const F& f) {
        check_col(i);
        if (f.is_zero()) throw ZeroScale();
        for (int s = 0; s < 2; ++s)
            for (int r = 0; r <= k_; ++r) at(s, r, i) *= f;
    }
    // col_i += f * col_j
    void col_addmul(int i, int j, const F& f) {
        check_col(i);
        check_col(j);
        assert(i != j);
        for (int s = 0; s < 2; ++s)
            for (int r = 0; r <= k_; ++r) at(s, r, i) += f * at(s, r, j);
    }

    // c0 * M0 + c1 * M1 in the k x (k+1) pencil orientation (transposed from
    // the display orientation).
    Matrix<F> pencil(const F& c0, const F& c1) const {
        Matrix<F> p(k_, k_ + 1, c0.zero());
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j <= k_; ++j) p.at(i, j) = c0 * at(0, j, i) + c1 * at(1, j, i);
        return p;
    }

    // f(u, v, w) = sum a[s][r][c] u_s v_c w_r.
    F multilinear_eval(const std::vector<F>& u, const std::vector<F>& v,
                       const std::vector<F>& w) const {
        if (u.size() != 2 || static_cast<int>(v.size()) != k_ ||
            static_cast<int>(w.size()) != k_ + 1)
            throw DimensionMismatch("multilinear form arguments");
        F acc = u[0].zero();
        for (int s = 0; s < 2; ++s)
            for (int r = 0; r <= k_; ++r)
                for (int c = 0; c < k_; ++c) acc += at(s, r, c) * u[s] * v[c] * w[r];
        return acc;
    }

    friend bool operator==(const Hypermatrix& x, const Hypermatrix& y) {
        return x.k_ == y.k_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Hypermatrix& x, const Hypermatrix& y) { return !(x == y); }

private:
    int k_;
    std::vector<F> a_;
};

// Element of G = (GL_k x GL_{k+1}) / N: A acts on the column axis, B on the
// row axis. Invertibility is verified on construction.
template <class F>
class GroupElement {
public:
    GroupElement(Matrix<F> a, Matrix<F> b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.rows() != a_.cols() || b_.rows() != b_.cols() || b_.rows() != a_.rows() + 1)
            throw DimensionMismatch("group element must be (k x k, (k+1) x (k+1))");
        if (matrix_det(a_).is_zero() || matrix_det(b_).is_zero()) throw SingularMatrix();
    }

    static GroupElement identity(int k, const F& one) {
        return GroupElement(Matrix<F>::identity(k, one), Matrix<F>::identity(k + 1, one));
    }

    int k() const { return a_.rows(); }
    const Matrix<F>& A() const { return a_; }
    const Matrix<F>& B() const { return b_; }

    GroupElement compose(const GroupElement& inner) const {
        return GroupElement(a_ * inner.a_, b_ * inner.b_);
    }
    GroupElement inverse() const {
        return GroupElement(matrix_inverse(a_), matrix_inverse(b_));
    }

    // Representative mod N with the first nonzero entry of A (row-major)
    // equal to 1.
    GroupElement canonical() const {
        F c = a_.at(0, 0).zero();
        for (int r = 0; r < a_.rows() && c.is_zero(); ++r)
            for (int col = 0; col < a_.cols(); ++col)
                if (!a_.at(r, col).is_zero()) {
                    c = a_.at(r, col);
                    break;
                }
        assert(!c.is_zero());
        Matrix<F> a2 = a_, b2 = b_;
        F cinv = c.inv();
        for (int r = 0; r < a2.rows(); ++r) a2.row_scale(r, cinv);
        for (int r = 0; r < b2.rows(); ++r) b2.row_scale(r, c);
        return GroupElement(std::move(a2), std::move(b2));
    }

    bool equal_mod_N(const GroupElement& o) const {
        GroupElement x = canonical(), y = o.canonical();
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    Matrix<F> a_, b_;
};

// a'[s][r][c] = sum_{r',c'} B[r][r'] A[c][c'] a[s][r'][c'] : each slice S
// (display orientation) maps to B * S * A^T.
template <class F>
Hypermatrix<F> apply_group(const GroupElement<F>& g, const Hypermatrix<F>& m) {
    int k = m.k();
    if (g.k() != k) throw DimensionMismatch("group element vs hypermatrix");
    Hypermatrix<F> out(k, m.at(0, 0, 0).zero());
    for (int s = 0; s < 2; ++s) {
        // tmp = S * A^T
        Matrix<F> tmp(k + 1, k, m.at(0, 0, 0).zero());
        for (int r = 0; r <= k; ++r)
            for (int c = 0; c < k; ++c)
                for (int c2 = 0; c2 < k; ++c2) tmp.at(r, c) += g.A().at(c, c2) * m.at(s, r, c2);
        for (int r = 0; r <= k; ++r)
            for (int c = 0; c < k; ++c)
                for (int r2 = 0; r2 <= k; ++r2)
                    out.at(s, r, c) += g.B().at(r, r2) * tmp.at(r2, c);
    }
    return out;
}

// True iff A = c I_k and B = c^-1 I_{k+1} for some nonzero scalar c.
template <class F>
bool is_trivial_in_G(const GroupElement<F>& g) {
    const F& c = g.A().at(0, 0);
    if (c.is_zero()) return false;
    F cinv = c.inv();
    for (int r = 0; r < g.A().rows(); ++r)
        for (int col = 0; col < g.A().cols(); ++col) {
            const F& want = r == col ? c : c.zero();
            if (g.A().at(r, col) != want) return false;
        }
    for (int r = 0; r < g.B().rows(); ++r)
        for (int col = 0; col < g.B().cols(); ++col) {
            const F& want = r == col ? cinv : c.zero();
            if (g.B().at(r, col) != want) return false;
        }
    return true;
}

}  // namespace hyperdet
