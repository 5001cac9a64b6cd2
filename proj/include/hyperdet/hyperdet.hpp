#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fp.hpp"
#include "rational.hpp"
#include "rational_function.hpp"
#include "reduction.hpp"

namespace hyperdet {

template <class F>
struct DetResult {
    F value;
    std::uint64_t op_count = 0;
    bool degenerate = false;
};

// Det normalized by Det(I_{k,k+1}) = 1. If apply_group((A,B), M) = I then
// Det(I) = det(A)^{k+1} det(B)^k Det(M), so Det(M) = detA^-(k+1) detB^-k.
// Degenerate inputs map to value 0.
template <class F>
DetResult<F> hyperdeterminant(const Hypermatrix<F>& m) {
    auto out = canonicalize(m, /*track_group=*/false);
    if (!out.reduced())
        return {m.at(0, 0, 0).zero(), out.scalar_ops, true};
    int k = m.k();
    F value = scalar_pow(*out.det_a, -(k + 1LL)) * scalar_pow(*out.det_b, -static_cast<long long>(k));
    return {value, out.scalar_ops, false};
}

// Variable names b_{rc} (and a_{rc} for the slice-0 indeterminates of the
// general case), row-major, matching the index layout of symbolic_hyperdet.
inline std::vector<std::string> symbolic_variable_names(int k, bool reduced = true) {
    std::vector<std::string> names;
    auto emit = [&](char letter) {
        for (int r = 0; r <= k; ++r)
            for (int c = 0; c < k; ++c)
                names.push_back(std::string(1, letter) + "_{" + std::to_string(r) +
                                std::to_string(c) + "}");
    };
    if (!reduced) emit('a');
    emit('b');
    return names;
}

// Det of the hypermatrix of indeterminates, computed by running the numeric
// algorithm over the rational function field. With reduced=true slice 0 is
// [I_k; 0] and slice 1 holds the (k+1)k variables b_{rc} (variable index
// r*k + c); otherwise both slices are indeterminate (a_{rc} first). The
// result is always a polynomial.
template <class F>
Poly<F> symbolic_hyperdet_core(int k, bool reduced, const F& one) {
    const int slice_vars = (k + 1) * k;
    const int nvars = reduced ? slice_vars : 2 * slice_vars;
    using RF = RatFunc<F>;
    RF zero = RF::constant(nvars, one.zero());
    Hypermatrix<RF> m(k, zero);
    for (int r = 0; r <= k; ++r)
        for (int c = 0; c < k; ++c) {
            int idx = r * k + c;
            if (reduced) {
                if (r < k && r == c) m.at(0, r, c) = RF::constant(nvars, one);
                m.at(1, r, c) = RF::variable(nvars, idx, one);
            } else {
                m.at(0, r, c) = RF::variable(nvars, idx, one);
                m.at(1, r, c) = RF::variable(nvars, slice_vars + idx, one);
            }
        }
    auto det = hyperdeterminant(m);
    if (det.degenerate)
        throw Infeasible("generic symbolic hypermatrix reported degenerate");
    RF value = det.value;
    value.reduce();
    if (!value.den().is_constant())
        throw Infeasible("symbolic hyperdeterminant did not normalize to a polynomial");
    F d = value.den().constant_value(one);
    return value.num().scaled(d.inv());
}

inline Poly<Rat> symbolic_hyperdet(int k, bool reduced = true) {
    if (k <= 3) return symbolic_hyperdet_core<Rat>(k, reduced, Rat(1));

    // For larger k the intermediate rational functions over Q exhaust
    // memory, so the elimination runs over a 61-bit prime field where
    // coefficients are machine words. The integer coefficients of the
    // result are recovered by symmetric lift (they are far smaller than
    // M/2) and the lift is certified below by exact rational evaluation
    // against the numeric determinant at random points.
    const std::uint64_t M = 2305843009213693951ull;  // 2^61 - 1
    Poly<Fp> modp = symbolic_hyperdet_core<Fp>(k, reduced, Fp(1, M));
    Poly<Rat> lifted(modp.nvars());
    for (const auto& [mono, c] : modp.terms()) {
        std::uint64_t r = c.residue();
        bool neg = r > M / 2;
        mpz_class z(static_cast<unsigned long>(neg ? M - r : r));
        lifted.add_term(mono, Rat(neg ? mpz_class(-z) : z));
    }

    std::uint64_t state = 0xda7a5eedULL + static_cast<std::uint64_t>(k);
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 8; ++trial) {
        Hypermatrix<Rat> m = reduced ? Hypermatrix<Rat>::identity(k, Rat(1))
                                     : Hypermatrix<Rat>(k, Rat(0));
        std::vector<Rat> point;
        auto draw = [&]() { return Rat(static_cast<long>(next() % 19) - 9); };
        if (!reduced)
            for (int r = 0; r <= k; ++r)
                for (int c = 0; c < k; ++c) {
                    Rat v = draw();
                    m.at(0, r, c) = v;
                    point.push_back(v);
                }
        for (int r = 0; r <= k; ++r)
            for (int c = 0; c < k; ++c) {
                Rat v = draw();
                m.at(1, r, c) = v;
                point.push_back(v);
            }
        Rat via_poly = lifted.eval(point, [](const Rat& r) { return r; });
        if (via_poly != hyperdeterminant(m).value)
            throw Infeasible("modular symbolic image failed exact verification");
    }
    return lifted;
}

struct ConsistencyReport {
    int trials = 0;
    int mismatches = 0;
};

// Reduce a rational coefficient mod p.
inline Fp rat_mod_p(const Rat& r, std::uint64_t p) {
    mpz_class num = r.numerator() % static_cast<long>(p);
    mpz_class den = r.denominator() % static_cast<long>(p);
    Fp n(num.get_si(), p), d(den.get_si(), p);
    return n * d.inv();
}

// Evaluates the (reduced) symbolic polynomial at random reduced hypermatrices
// over F_p and compares with the numeric Det.
inline ConsistencyReport eval_consistency_check(int k, const Poly<Rat>& poly, int trials,
                                                std::uint64_t p, std::uint64_t seed) {
    ConsistencyReport rep;
    std::uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ULL;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    const Fp one(1, p);
    for (int t = 0; t < trials; ++t) {
        // Reduced input: slice 0 = [I_k; 0], slice 1 random.
        Hypermatrix<Fp> m = Hypermatrix<Fp>::identity(k, one);
        std::vector<Fp> point;
        for (int r = 0; r <= k; ++r)
            for (int c = 0; c < k; ++c) {
                Fp v(static_cast<std::int64_t>(next() % p), p);
                m.at(1, r, c) = v;
                point.push_back(v);
            }
        Fp via_poly = poly.eval(point, [p](const Rat& r) { return rat_mod_p(r, p); });
        Fp via_alg = hyperdeterminant(m).value;
        ++rep.trials;
        if (via_poly != via_alg) ++rep.mismatches;
    }
    return rep;
}

}  // namespace hyperdet
