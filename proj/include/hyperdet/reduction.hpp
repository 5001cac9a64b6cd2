#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypermatrix.hpp"

namespace hyperdet {

enum class Side { Row, Column };
enum class OpKind { Swap, Scale, AddMul };

// One elementary simultaneous slice operation. Scale: row/column i scaled by
// scalar (j unused). AddMul: row/column i += scalar * row/column j.
template <class F>
struct OperationRecord {
    Side side;
    OpKind kind;
    int i = 0;
    int j = 0;
    std::optional<F> scalar;
};

enum class ReductionStatus { Reduced, Degenerate };
enum class DegeneracyReason { None, FirstSliceRankDeficient, AlgorithmPivotZero };

template <class F>
struct ReductionOutcome {
    ReductionStatus status = ReductionStatus::Reduced;
    DegeneracyReason reason = DegeneracyReason::None;
    std::vector<OperationRecord<F>> log;
    std::optional<F> det_a;  // product of determinants of the column-side elementary matrices
    std::optional<F> det_b;  // row-side product
    std::optional<GroupElement<F>> group;  // apply_group(group, input) == I_{k,k+1}
    std::uint64_t scalar_ops = 0;  // multiplications + additions on hypermatrix entries
    std::uint64_t elem_ops = 0;

    bool reduced() const { return status == ReductionStatus::Reduced; }
};

template <class F>
void apply_record(Hypermatrix<F>& m, const OperationRecord<F>& op) {
    if (op.side == Side::Row) {
        switch (op.kind) {
            case OpKind::Swap: m.row_swap(op.i, op.j); break;
            case OpKind::Scale: m.row_scale(op.i, *op.scalar); break;
            case OpKind::AddMul: m.row_addmul(op.i, op.j, *op.scalar); break;
        }
    } else {
        switch (op.kind) {
            case OpKind::Swap: m.col_swap(op.i, op.j); break;
            case OpKind::Scale: m.col_scale(op.i, *op.scalar); break;
            case OpKind::AddMul: m.col_addmul(op.i, op.j, *op.scalar); break;
        }
    }
}

template <class F>
Hypermatrix<F> replay(const std::vector<OperationRecord<F>>& log, Hypermatrix<F> m) {
    for (const auto& op : log) apply_record(m, op);
    return m;
}

namespace detail {

// Mutable elimination state: the hypermatrix plus the accumulated group
// element, determinant factors, log, and operation counters. Row operations
// multiply B_acc by the elementary matrix on the left; column operations on
// the slices correspond to the same row operation on A_acc.
template <class F>
class Reducer {
public:
    Reducer(const Hypermatrix<F>& m, bool track_group)
        : m_(m),
          one_(m.at(0, 0, 0).one()),
          track_group_(track_group),
          a_acc_(Matrix<F>::identity(m.k(), one_)),
          b_acc_(Matrix<F>::identity(m.k() + 1, one_)),
          det_a_(one_),
          det_b_(one_) {}

    Hypermatrix<F>& m() { return m_; }
    const F& one() const { return one_; }

    void row_swap(int i, int j) {
        if (i == j) return;
        m_.row_swap(i, j);
        if (track_group_) b_acc_.row_swap(i, j);
        det_b_ = -det_b_;
        push({Side::Row, OpKind::Swap, i, j, std::nullopt});
    }
    void row_scale(int i, const F& f) {
        if (f.is_one()) return;
        m_.row_scale(i, f);
        if (track_group_) b_acc_.row_scale(i, f);
        det_b_ *= f;
        count_ += 2 * static_cast<std::uint64_t>(m_.k());
        push({Side::Row, OpKind::Scale, i, i, f});
    }
    void row_addmul(int i, int j, const F& f) {
        if (f.is_zero()) return;
        m_.row_addmul(i, j, f);
        if (track_group_) b_acc_.row_addmul(i, j, f);
        count_ += 4 * static_cast<std::uint64_t>(m_.k());
        push({Side::Row, OpKind::AddMul, i, j, f});
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        m_.col_swap(i, j);
        if (track_group_) a_acc_.row_swap(i, j);
        det_a_ = -det_a_;
        push({Side::Column, OpKind::Swap, i, j, std::nullopt});
    }
    void col_scale(int i, const F& f) {
        if (f.is_one()) return;
        m_.col_scale(i, f);
        if (track_group_) a_acc_.row_scale(i, f);
        det_a_ *= f;
        count_ += 2 * static_cast<std::uint64_t>(m_.k() + 1);
        push({Side::Column, OpKind::Scale, i, i, f});
    }
    void col_addmul(int i, int j, const F& f) {
        if (f.is_zero()) return;
        m_.col_addmul(i, j, f);
        if (track_group_) a_acc_.row_addmul(i, j, f);
        count_ += 4 * static_cast<std::uint64_t>(m_.k() + 1);
        push({Side::Column, OpKind::AddMul, i, j, f});
    }

    ReductionOutcome<F> take(ReductionStatus status, DegeneracyReason reason) {
        ReductionOutcome<F> out;
        out.status = status;
        out.reason = reason;
        out.log = std::move(log_);
        out.scalar_ops = count_;
        out.elem_ops = elem_count_;
        if (status == ReductionStatus::Reduced) {
            out.det_a = det_a_;
            out.det_b = det_b_;
            if (track_group_) out.group = GroupElement<F>(a_acc_, b_acc_);
        }
        return out;
    }

private:
    // Operation logs are only kept when the caller wants the group element.
    // Degeneracy checks and determinant evaluation skip them; for symbolic
    // coefficients the addmul scalars would otherwise pin every intermediate
    // rational function in memory for the whole run.
    void push(OperationRecord<F> op) {
        ++elem_count_;
        if (track_group_) log_.push_back(std::move(op));
    }

    Hypermatrix<F> m_;
    F one_;
    bool track_group_;
    Matrix<F> a_acc_, b_acc_;
    F det_a_, det_b_;
    std::vector<OperationRecord<F>> log_;
    std::uint64_t count_ = 0;
    std::uint64_t elem_count_ = 0;
};

// Gauss-Jordan on slice 0 with row operations only, targeting [I_k; 0].
// Returns false when slice 0 has rank < k.
template <class F>
bool reduce_first_slice_in(Reducer<F>& red) {
    Hypermatrix<F>& m = red.m();
    int k = m.k();
    for (int c = 0; c < k; ++c) {
        int piv = -1;
        for (int r = c; r <= k; ++r)
            if (!m.at(0, r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        red.row_swap(piv, c);
        red.row_scale(c, m.at(0, c, c).inv());
        for (int r = 0; r <= k; ++r) {
            if (r == c || m.at(0, r, c).is_zero()) continue;
            red.row_addmul(r, c, -m.at(0, r, c));
        }
    }
    return true;
}

// Algorithm "double Gaussian elimination": reduces slice 1 to the shifted
// identity, assuming slice 0 is already [I_k; 0]. Returns false at the
// degeneracy condition (pivot row zero at and left of the diagonal).
template <class F>
bool double_gaussian_in(Reducer<F>& red) {
    Hypermatrix<F>& m = red.m();
    int k = m.k();
    for (int j = k - 1; j >= 0; --j) {
        if (m.at(1, j + 1, j).is_zero()) {
            // Make diagonal elements nonzero.
            for (int l = 0; l < j; ++l) {
                if (!m.at(1, j + 1, l).is_zero()) {
                    red.col_swap(l, j);
                    red.row_swap(l, j);
                    break;
                }
            }
            if (m.at(1, j + 1, j).is_zero()) return false;
        }
        // Make diagonal elements 1.
        F c = m.at(1, j + 1, j);
        F cinv = c.inv();
        for (int r = j + 1; r <= k; ++r) red.row_scale(r, cinv);
        for (int col = j + 1; col <= k - 1; ++col) red.col_scale(col, c);
        // Clear the rest of the row.
        for (int l = 0; l < j; ++l) {
            F e = m.at(1, j + 1, l);
            red.col_addmul(l, j, -e);
            red.row_addmul(j, l, e);
        }
        // Clear the rest of the column, chasing entries down and right.
        for (int mm = j + 1; mm <= k; ++mm) {
            for (int l = 0; l < mm; ++l) {
                F e = m.at(1, l, mm - 1);
                red.row_addmul(l, mm, -e);
                if (mm < k) red.col_addmul(mm, l, e);
            }
        }
    }
    return true;
}

}  // namespace detail

// Row operations bringing slice 0 to [I_k; 0]; Degenerate when slice 0 has
// rank < k (the pencil is rank-deficient at (1, 0)).
template <class F>
ReductionOutcome<F> reduce_first_slice(const Hypermatrix<F>& m, bool track_group = true) {
    detail::Reducer<F> red(m, track_group);
    bool ok = detail::reduce_first_slice_in(red);
    return red.take(ok ? ReductionStatus::Reduced : ReductionStatus::Degenerate,
                    ok ? DegeneracyReason::None : DegeneracyReason::FirstSliceRankDeficient);
}

// Algorithm 1 alone; requires slice 0 == [I_k; 0].
template <class F>
ReductionOutcome<F> double_gaussian(const Hypermatrix<F>& m, bool track_group = true) {
    const F one = m.at(0, 0, 0).one();
    Hypermatrix<F> want = Hypermatrix<F>::identity(m.k(), one);
    for (int r = 0; r <= m.k(); ++r)
        for (int c = 0; c < m.k(); ++c)
            if (m.at(0, r, c) != want.at(0, r, c))
                throw DimensionMismatch("double_gaussian requires a reduced first slice");
    detail::Reducer<F> red(m, track_group);
    bool ok = detail::double_gaussian_in(red);
    return red.take(ok ? ReductionStatus::Reduced : ReductionStatus::Degenerate,
                    ok ? DegeneracyReason::None : DegeneracyReason::AlgorithmPivotZero);
}

// Full canonicalization: first-slice reduction followed by Algorithm 1.
template <class F>
ReductionOutcome<F> canonicalize(const Hypermatrix<F>& m, bool track_group = true) {
    detail::Reducer<F> red(m, track_group);
    if (!detail::reduce_first_slice_in(red))
        return red.take(ReductionStatus::Degenerate, DegeneracyReason::FirstSliceRankDeficient);
    if (!detail::double_gaussian_in(red))
        return red.take(ReductionStatus::Degenerate, DegeneracyReason::AlgorithmPivotZero);
    return red.take(ReductionStatus::Reduced, DegeneracyReason::None);
}

// g with apply_group(g, m1) == m2, via g2^-1 . g1 for the canonicalizing
// elements g_i. Throws DegenerateInput if either input is degenerate.
template <class F>
GroupElement<F> transporter(const Hypermatrix<F>& m1, const Hypermatrix<F>& m2) {
    if (m1.k() != m2.k()) throw DimensionMismatch("transporter inputs");
    auto o1 = canonicalize(m1);
    if (!o1.reduced()) throw DegenerateInput("first transporter argument");
    auto o2 = canonicalize(m2);
    if (!o2.reduced()) throw DegenerateInput("second transporter argument");
    return o2.group->inverse().compose(*o1.group);
}

}  // namespace hyperdet
