#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperdet/fp.hpp"
#include "hyperdet/rational.hpp"
#include "hyperdet/reduction.hpp"

using namespace hyperdet;

namespace {

const std::uint64_t P = 10007;

Fp fp(std::int64_t v) { return Fp(v, P); }
Fp random_fp(std::mt19937_64& rng) { return fp(static_cast<std::int64_t>(rng() % P)); }

Matrix<Fp> random_invertible(std::mt19937_64& rng, int n) {
    while (true) {
        Matrix<Fp> m(n, n, fp(0));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.at(r, c) = random_fp(rng);
        if (!matrix_det(m).is_zero()) return m;
    }
}

GroupElement<Fp> random_group(std::mt19937_64& rng, int k) {
    return GroupElement<Fp>(random_invertible(rng, k), random_invertible(rng, k + 1));
}

template <class F>
Hypermatrix<F> from_slices(int k, const std::vector<std::vector<int>>& s0,
                           const std::vector<std::vector<int>>& s1, const F& one) {
    Hypermatrix<F> m(k, one.zero());
    for (int r = 0; r <= k; ++r)
        for (int c = 0; c < k; ++c) {
            m.at(0, r, c) = one.zero() + F(s0[r][c]) * one;
            m.at(1, r, c) = one.zero() + F(s1[r][c]) * one;
        }
    return m;
}

Hypermatrix<Rat> worked_example() {
    return from_slices<Rat>(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
                            {{1, 0, 0}, {1, 0, 0}, {-3, 3, 0}, {1, 2, 1}}, Rat(1));
}

}  // namespace

TEST_CASE("worked 2x3x4 example reduces to the canonical form") {
    auto out = double_gaussian(worked_example());
    REQUIRE(out.reduced());
    CHECK(replay(out.log, worked_example()) == Hypermatrix<Rat>::identity(3, Rat(1)));
    // Determinant bookkeeping matches the accumulated group element.
    CHECK(*out.det_a == matrix_det(out.group->A()));
    CHECK(*out.det_b == matrix_det(out.group->B()));
    CHECK(apply_group(*out.group, worked_example()) == Hypermatrix<Rat>::identity(3, Rat(1)));
}

TEST_CASE("reduce_first_slice: already reduced input yields an empty log") {
    auto m = Hypermatrix<Rat>::identity(3, Rat(1));
    auto out = reduce_first_slice(m);
    REQUIRE(out.reduced());
    CHECK(out.log.empty());
    CHECK(*out.det_b == Rat(1));
}

TEST_CASE("reduce_first_slice: permuted rows give a sign determinant") {
    // Cycle rows (0 1 2) of both slices: an even permutation, det +1.
    auto m = Hypermatrix<Rat>::identity(3, Rat(1));
    m.row_swap(0, 1);
    m.row_swap(1, 2);
    auto out = reduce_first_slice(m);
    REQUIRE(out.reduced());
    CHECK(*out.det_b == Rat(1));
    for (const auto& op : out.log) CHECK(op.kind == OpKind::Swap);

    auto m2 = Hypermatrix<Rat>::identity(3, Rat(1));
    m2.row_swap(0, 1);
    auto out2 = reduce_first_slice(m2);
    REQUIRE(out2.reduced());
    CHECK(*out2.det_b == Rat(-1));
}

TEST_CASE("reduce_first_slice: rank-deficient slice 0 is degenerate") {
    auto m = from_slices<Rat>(2, {{1, 1}, {1, 1}, {0, 0}}, {{1, 0}, {0, 1}, {0, 0}}, Rat(1));
    auto out = reduce_first_slice(m);
    CHECK(!out.reduced());
    CHECK(out.reason == DegeneracyReason::FirstSliceRankDeficient);
    CHECK(!out.det_a.has_value());
    CHECK(!out.det_b.has_value());
    CHECK(!out.group.has_value());
}

TEST_CASE("double_gaussian on the canonical form is a no-op") {
    for (int k = 1; k <= 5; ++k) {
        auto m = Hypermatrix<Rat>::identity(k, Rat(1));
        auto out = double_gaussian(m);
        REQUIRE(out.reduced());
        CHECK(*out.det_a == Rat(1));
        CHECK(*out.det_b == Rat(1));
        CHECK(out.log.empty());
    }
}

TEST_CASE("equal slices are degenerate via the algorithm error branch") {
    auto m = from_slices<Rat>(2, {{1, 0}, {0, 1}, {0, 0}}, {{1, 0}, {0, 1}, {0, 0}}, Rat(1));
    auto out = double_gaussian(m);
    CHECK(!out.reduced());
    CHECK(out.reason == DegeneracyReason::AlgorithmPivotZero);
}

TEST_CASE("double_gaussian rejects an unreduced first slice") {
    auto m = from_slices<Rat>(2, {{2, 0}, {0, 1}, {0, 0}}, {{0, 0}, {1, 0}, {0, 1}}, Rat(1));
    CHECK_THROWS_AS(double_gaussian(m), DimensionMismatch);
}

TEST_CASE("canonicalize of random orbit points, with replay soundness") {
    std::mt19937_64 rng(11);
    for (int k = 1; k <= 6; ++k) {
        for (int t = 0; t < 10; ++t) {
            auto m = apply_group(random_group(rng, k), Hypermatrix<Fp>::identity(k, fp(1)));
            auto out = canonicalize(m);
            REQUIRE(out.reduced());
            CHECK(replay(out.log, m) == Hypermatrix<Fp>::identity(k, fp(1)));
            CHECK(apply_group(*out.group, m) == Hypermatrix<Fp>::identity(k, fp(1)));
            CHECK(*out.det_a == matrix_det(out.group->A()));
            CHECK(*out.det_b == matrix_det(out.group->B()));
        }
    }
}

TEST_CASE("canonicalize: all zeros is degenerate") {
    Hypermatrix<Rat> m(3, Rat(0));
    CHECK(!canonicalize(m).reduced());
}

TEST_CASE("canonicalize k=1 over Q tracks the 2x2 determinant") {
    auto m = from_slices<Rat>(1, {{1}, {0}}, {{7}, {5}}, Rat(1));
    auto out = canonicalize(m);
    REQUIRE(out.reduced());
    // Det(M) = detA^-2 * detB^-1 should come out as 5.
    CHECK(scalar_pow(*out.det_a, -2) * scalar_pow(*out.det_b, -1) == Rat(5));
}

TEST_CASE("transporter maps M1 to M2 exactly") {
    std::mt19937_64 rng(13);
    auto ident = [&](int k) { return Hypermatrix<Fp>::identity(k, fp(1)); };
    for (int k = 1; k <= 4; ++k) {
        auto m1 = apply_group(random_group(rng, k), ident(k));
        auto m2 = apply_group(random_group(rng, k), ident(k));
        auto g = transporter(m1, m2);
        CHECK(apply_group(g, m1) == m2);
        CHECK(is_trivial_in_G(transporter(m1, m1).canonical()));
    }
}

TEST_CASE("transporter recovers the acting group element mod N") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        int k = 1 + static_cast<int>(rng() % 4);
        auto g = random_group(rng, k);
        auto i = Hypermatrix<Fp>::identity(k, fp(1));
        auto got = transporter(i, apply_group(g, i));
        CHECK(got.equal_mod_N(g));
    }
}

TEST_CASE("transporter rejects degenerate inputs") {
    Hypermatrix<Rat> zero(2, Rat(0));
    auto good = Hypermatrix<Rat>::identity(2, Rat(1));
    CHECK_THROWS_AS(transporter(zero, good), DegenerateInput);
    CHECK_THROWS_AS(transporter(good, zero), DegenerateInput);
}

TEST_CASE("freeness: stabilizer elements are trivial in G") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 50; ++t) {
        int k = 1 + static_cast<int>(rng() % 4);
        Fp c = fp(1 + static_cast<std::int64_t>(rng() % (P - 1)));
        Matrix<Fp> a = Matrix<Fp>::identity(k, fp(1));
        Matrix<Fp> b = Matrix<Fp>::identity(k + 1, fp(1));
        for (int i = 0; i < k; ++i) a.at(i, i) = c;
        for (int i = 0; i <= k; ++i) b.at(i, i) = c.inv();
        GroupElement<Fp> g(a, b);
        REQUIRE(apply_group(g, Hypermatrix<Fp>::identity(k, fp(1))) ==
                Hypermatrix<Fp>::identity(k, fp(1)));
        CHECK(is_trivial_in_G(g));
    }
}

TEST_CASE("elementary operation count grows quadratically at most") {
    std::mt19937_64 rng(23);
    for (int k : {4, 8, 16}) {
        auto m = apply_group(random_group(rng, k), Hypermatrix<Fp>::identity(k, fp(1)));
        auto out = canonicalize(m);
        REQUIRE(out.reduced());
        CHECK(out.elem_ops <= 16u * static_cast<std::uint64_t>(k) * k);
        CHECK(out.scalar_ops <= 40u * static_cast<std::uint64_t>(k) * k * k * k);
    }
}
