#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "binary_form.hpp"
#include "fp.hpp"
#include "reduction.hpp"

namespace hyperdet {

// [n]_q = 1 + q + ... + q^(n-1)
inline mpz_class q_int(int n, const mpz_class& q) {
    mpz_class acc = 0, pw = 1;
    for (int i = 0; i < n; ++i) {
        acc += pw;
        pw *= q;
    }
    return acc;
}

// [n]!_q = [1]_q [2]_q ... [n]_q
inline mpz_class q_factorial(int n, const mpz_class& q) {
    mpz_class acc = 1;
    for (int i = 1; i <= n; ++i) acc *= q_int(i, q);
    return acc;
}

// |GL_n(F_q)| = q^binom(n,2) (q-1)^n [n]!_q
inline mpz_class gl_order(int n, const mpz_class& q) {
    mpz_class acc = q_factorial(n, q);
    mpz_class qp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n) * (n - 1) / 2);
    acc *= qp;
    mpz_class qm1 = q - 1;
    mpz_pow_ui(qp.get_mpz_t(), qm1.get_mpz_t(), static_cast<unsigned long>(n));
    acc *= qp;
    return acc;
}

// Number of nondegenerate 2 x k x (k+1) hypermatrices over F_q:
// q^(k^2) (q-1)^(2k) [k]!_q [k+1]!_q = |GL_k| |GL_{k+1}| / (q-1).
inline mpz_class count_formula(int k, const mpz_class& q) {
    mpz_class acc = q_factorial(k, q) * q_factorial(k + 1, q);
    mpz_class qp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k) * k);
    acc *= qp;
    mpz_class qm1 = q - 1;
    mpz_pow_ui(qp.get_mpz_t(), qm1.get_mpz_t(), 2 * static_cast<unsigned long>(k));
    acc *= qp;
    return acc;
}

// Lemma-based degeneracy oracle, independent of the reduction algorithm:
// forms the pencil x*M0 + y*M1, takes its k+1 maximal minors as binary forms
// of degree k, and reports degenerate iff they share a projective root over
// the closure.
template <class F>
bool degenerate_pencil_oracle(const Hypermatrix<F>& m);

namespace detail {

// Determinant of a square matrix of binary forms by cofactor expansion along
// the first row. Adequate at oracle scale (k <= 6 or so).
template <class F>
BinaryForm<F> form_det(const std::vector<std::vector<BinaryForm<F>>>& a, std::vector<int> cols) {
    std::size_t row = a.size() - cols.size();
    const F zero = a[0][0][0].zero();
    if (cols.size() == 1) return a[row][cols[0]];
    BinaryForm<F> acc(0, zero);
    bool first = true;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        std::vector<int> sub;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != i) sub.push_back(cols[j]);
        BinaryForm<F> term = a[row][cols[i]] * form_det(a, sub);
        if (i % 2 == 1) term = -term;
        if (first) {
            acc = term;
            first = false;
        } else {
            acc = acc + term;
        }
    }
    return acc;
}

// Maximal minors by evaluation at k+1 distinct pencil parameters and Lagrange
// interpolation; used when the field has enough elements. minor_j(1, t) is a
// polynomial of degree <= k in t.
template <class F>
std::optional<std::vector<BinaryForm<F>>> minors_by_interpolation(
    const Hypermatrix<F>& m, const std::vector<F>& points) {
    int k = m.k();
    if (static_cast<int>(points.size()) < k + 1) return std::nullopt;
    const F zero = points[0].zero(), one = points[0].one();
    // values[j][i] = minor_j evaluated at (1, t_i)
    std::vector<std::vector<F>> values(k + 1, std::vector<F>(k + 1, zero));
    for (int i = 0; i <= k; ++i) {
        Matrix<F> pm = m.pencil(one, points[i]);
        for (int j = 0; j <= k; ++j) {
            Matrix<F> sq(k, k, zero);
            for (int r = 0; r < k; ++r)
                for (int c = 0, cc = 0; c <= k; ++c) {
                    if (c == j) continue;
                    sq.at(r, cc++) = pm.at(r, c);
                }
            values[j][i] = matrix_det(sq);
        }
    }
    std::vector<BinaryForm<F>> minors;
    for (int j = 0; j <= k; ++j) {
        // Lagrange interpolation of p(t) = sum c_i t^i, degree <= k.
        std::vector<F> coeffs(k + 1, zero);
        for (int i = 0; i <= k; ++i) {
            std::vector<F> basis{one};  // product over l != i of (t - t_l)
            F denom = one;
            for (int l = 0; l <= k; ++l) {
                if (l == i) continue;
                denom *= points[i] - points[l];
                std::vector<F> nb(basis.size() + 1, zero);
                for (std::size_t d = 0; d < basis.size(); ++d) {
                    nb[d + 1] += basis[d];
                    nb[d] -= basis[d] * points[l];
                }
                basis = std::move(nb);
            }
            F w = values[j][i] * denom.inv();
            for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += basis[d] * w;
        }
        // p(t) = minor(1, t): coefficient of t^i is the form coefficient c_i.
        BinaryForm<F> f(k, zero);
        for (int i = 0; i <= k; ++i) f[i] = coeffs[i];
        minors.push_back(f);
    }
    return minors;
}

}  // namespace detail

template <class F>
bool degenerate_pencil_oracle(const Hypermatrix<F>& m) {
    int k = m.k();
    const F zero = m.at(0, 0, 0).zero();
    const F one = zero.one();
    std::vector<BinaryForm<F>> minors;
    if (k > 6) {
        // Try the interpolation route with points 0, 1, 2, ...
        std::vector<F> pts;
        F v = zero;
        for (int i = 0; i <= k; ++i) {
            pts.push_back(v);
            v += one;
        }
        bool distinct = true;
        for (std::size_t i = 0; i + 1 < pts.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (pts[i] == pts[j]) {
                    distinct = false;
                    break;
                }
        if (distinct)
            if (auto mi = detail::minors_by_interpolation(m, pts)) minors = std::move(*mi);
    }
    if (minors.empty()) {
        // Laplace route: pencil entries as degree-1 forms x*slice0 + y*slice1.
        std::vector<std::vector<BinaryForm<F>>> pencil(
            k, std::vector<BinaryForm<F>>(k + 1, BinaryForm<F>(1, zero)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j <= k; ++j) {
                pencil[i][j][0] = m.at(0, j, i);
                pencil[i][j][1] = m.at(1, j, i);
            }
        for (int j = 0; j <= k; ++j) {
            std::vector<int> cols;
            for (int c = 0; c <= k; ++c)
                if (c != j) cols.push_back(c);
            minors.push_back(detail::form_det(pencil, cols));
        }
    }
    return binary_forms_common_root(minors);
}

enum class CountMethod { Algorithm, Oracle };

struct CountReport {
    int k = 0;
    std::uint64_t q = 0;
    mpz_class formula;
    std::optional<mpz_class> enumerated;
    bool agree = true;
};

// Iterates every 2(k+1)k-entry hypermatrix over F_q (q prime) and counts the
// nondegenerate ones. The state space q^(2k(k+1)) must fit in the budget.
inline mpz_class count_enumerate(int k, std::uint64_t q, CountMethod method,
                                 std::uint64_t budget = (1ULL << 24), int threads = 0) {
    int cells = 2 * (k + 1) * k;
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(cells));
    if (total > budget)
        throw BudgetExceeded("enumeration needs " + total.get_str() + " states, budget " +
                             std::to_string(budget));
    std::uint64_t n = total.get_ui();
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (static_cast<std::uint64_t>(threads) > n) threads = 1;

    auto count_range = [&](std::uint64_t lo, std::uint64_t hi) {
        const Fp zero(0, q);
        std::uint64_t found = 0;
        Hypermatrix<Fp> m(k, zero);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::uint64_t x = idx;
            for (int s = 0; s < 2; ++s)
                for (int r = 0; r <= k; ++r)
                    for (int c = 0; c < k; ++c) {
                        m.at(s, r, c) = Fp(static_cast<std::int64_t>(x % q), q);
                        x /= q;
                    }
            bool degen = method == CountMethod::Algorithm
                             ? !canonicalize(m, /*track_group=*/false).reduced()
                             : degenerate_pencil_oracle(m);
            if (!degen) ++found;
        }
        return found;
    };

    if (threads == 1) return mpz_class(static_cast<unsigned long>(count_range(0, n)));
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    std::uint64_t chunk = n / threads + 1;
    for (int t = 0; t < threads; ++t) {
        std::uint64_t lo = chunk * t, hi = std::min(n, chunk * (t + 1));
        if (lo >= hi) break;
        pool.emplace_back([&, t, lo, hi] { partial[t] = count_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    std::uint64_t sum = 0;
    for (std::uint64_t p : partial) sum += p;
    return mpz_class(static_cast<unsigned long>(sum));
}

// Formula count plus, when requested, the exhaustive cross-check.
inline CountReport make_count_report(int k, std::uint64_t q, bool enumerate,
                                     CountMethod method = CountMethod::Algorithm,
                                     std::uint64_t budget = (1ULL << 24), int threads = 0) {
    CountReport rep;
    rep.k = k;
    rep.q = q;
    rep.formula = count_formula(k, q);
    if (enumerate) {
        rep.enumerated = count_enumerate(k, q, method, budget, threads);
        rep.agree = *rep.enumerated == rep.formula;
    }
    return rep;
}

}  // namespace hyperdet
