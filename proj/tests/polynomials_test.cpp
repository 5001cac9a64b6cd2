#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperdet/binary_form.hpp"
#include "hyperdet/fp.hpp"
#include "hyperdet/poly_gcd.hpp"
#include "hyperdet/polynomial.hpp"
#include "hyperdet/rational.hpp"

using namespace hyperdet;

namespace {

Poly<Rat> x2() { return Poly<Rat>::variable(2, 0, Rat(1)); }
Poly<Rat> y2() { return Poly<Rat>::variable(2, 1, Rat(1)); }

Poly<Rat> random_poly(std::mt19937_64& rng, int nvars, int terms, int maxdeg) {
    Poly<Rat> p(nvars);
    for (int t = 0; t < terms; ++t) {
        Mono m(nvars);
        for (int v = 0; v < nvars; ++v) m[v] = static_cast<std::uint16_t>(rng() % (maxdeg + 1));
        p.add_term(m, Rat(static_cast<long>(rng() % 19) - 9));
    }
    return p;
}

Poly<Fp> random_poly_fp(std::mt19937_64& rng, int nvars, int terms, int maxdeg, std::uint64_t p) {
    Poly<Fp> q(nvars);
    for (int t = 0; t < terms; ++t) {
        Mono m(nvars);
        for (int v = 0; v < nvars; ++v) m[v] = static_cast<std::uint16_t>(rng() % (maxdeg + 1));
        q.add_term(m, Fp(static_cast<std::int64_t>(rng() % p), p));
    }
    return q;
}

}  // namespace

TEST_CASE("basic ring arithmetic") {
    auto x = x2(), y = y2();
    CHECK((x + y) * (x - y) == x * x - y * y);
    Poly<Rat> p = x * x + y.scaled(Rat(3));
    CHECK((p - p).is_zero());
    auto xp1 = x + Poly<Rat>::constant(2, Rat(1));
    auto cube = xp1 * xp1 * xp1;
    Poly<Rat> want(2);
    want.add_term({3, 0}, Rat(1));
    want.add_term({2, 0}, Rat(3));
    want.add_term({1, 0}, Rat(3));
    want.add_term({0, 0}, Rat(1));
    CHECK(cube == want);
}

TEST_CASE("variable count mismatch is rejected") {
    Poly<Rat> a(2), b(3);
    CHECK_THROWS_AS(a + b, VariableCountMismatch);
    CHECK_THROWS_AS(a * b, VariableCountMismatch);
}

TEST_CASE("canonical ordering is graded lexicographic") {
    auto x = x2(), y = y2();
    Poly<Rat> p = x * y + x * x + y + Poly<Rat>::constant(2, Rat(5));
    std::vector<Mono> order;
    for (const auto& [m, c] : p.terms()) order.push_back(m);
    CHECK(order == std::vector<Mono>{{2, 0}, {1, 1}, {0, 1}, {0, 0}});
}

TEST_CASE("exact division") {
    auto x = x2(), y = y2();
    auto p = (x + y) * (x - y);
    CHECK(*try_divide(p, x + y) == x - y);
    CHECK(!try_divide(p, x + Poly<Rat>::constant(2, Rat(1))).has_value());
}

TEST_CASE("gcd: known factorizations") {
    Poly<Rat> x(1);
    x = Poly<Rat>::variable(1, 0, Rat(1));
    auto one1 = Poly<Rat>::constant(1, Rat(1));
    auto a = x * x - one1;            // (x-1)(x+1)
    auto b = x * x - x.scaled(Rat(2)) + one1;  // (x-1)^2
    CHECK(gcd(a, b) == x - one1);

    CHECK(gcd(x2(), y2()) == Poly<Rat>::constant(2, Rat(1)));
    CHECK(gcd(Poly<Rat>(2), Poly<Rat>(2)).is_zero());
}

TEST_CASE("gcd of constructed products recovers the common factor") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        int nvars = 3;
        Poly<Rat> r = random_poly(rng, nvars, 4, 2);
        Poly<Rat> s = random_poly(rng, nvars, 3, 2);
        Poly<Rat> t = random_poly(rng, nvars, 3, 2);
        if (r.is_zero() || s.is_zero() || t.is_zero()) continue;
        Poly<Rat> g = gcd(r * s, r * t);
        // gcd(rs, rt) is divisible by r; verify exact division both ways.
        CHECK(try_divide(g, r).has_value());
        CHECK(try_divide(r * s, g).has_value());
        CHECK(try_divide(r * t, g).has_value());
    }
}

TEST_CASE("gcd divides both inputs exactly on random structured pairs") {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int nvars = 1 + static_cast<int>(rng() % 3);
        Poly<Rat> common = random_poly(rng, nvars, 2, 2);
        Poly<Rat> a = random_poly(rng, nvars, 3, 2) * common;
        Poly<Rat> b = random_poly(rng, nvars, 3, 2) * common;
        Poly<Rat> g = gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            CHECK(g.is_zero());
            continue;
        }
        CHECK(try_divide(a, g).has_value());
        CHECK(try_divide(b, g).has_value());
        CHECK(g.leading_coeff() == Rat(1));
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("polynomial arithmetic over Fp agrees with Q reduced mod p") {
    std::mt19937_64 rng(7);
    const std::uint64_t p = 101;
    for (int trial = 0; trial < 50; ++trial) {
        Poly<Rat> a = random_poly(rng, 2, 4, 3);
        Poly<Rat> b = random_poly(rng, 2, 4, 3);
        auto mod = [p](const Poly<Rat>& q) {
            Poly<Fp> r(q.nvars());
            for (const auto& [m, c] : q.terms()) {
                long num = c.numerator().get_si();
                long den = c.denominator().get_si();
                r.add_term(m, Fp(num, p) * Fp(den, p).inv());
            }
            return r;
        };
        CHECK(mod(a * b) == mod(a) * mod(b));
        CHECK(mod(a + b) == mod(a) + mod(b));
    }
}

TEST_CASE("binary form common root: basic cases") {
    const Rat z(0), o(1);
    // x*y and x^2 share the root (0:1).
    BinaryForm<Rat> xy(2, z), x2f(2, z);
    xy[1] = o;
    x2f[0] = o;
    CHECK(binary_forms_common_root<Rat>({xy, x2f}));
    // x and y have no common projective zero.
    BinaryForm<Rat> fx(1, z), fy(1, z);
    fx[0] = o;
    fy[1] = o;
    CHECK(!binary_forms_common_root<Rat>({fx, fy}));
    // All-zero list has every point as a root.
    CHECK(binary_forms_common_root<Rat>({BinaryForm<Rat>(2, z)}));
    CHECK_THROWS_AS(binary_forms_common_root<Rat>({}), EmptyInput);
}

TEST_CASE("binary form common root survives invertible substitution") {
    std::mt19937_64 rng(2024);
    const std::uint64_t p = 10007;
    auto substitute = [&](const BinaryForm<Fp>& f, Fp a, Fp b, Fp c, Fp d) {
        // f(ax+by, cx+dy)
        int deg = f.degree();
        BinaryForm<Fp> acc(deg, Fp(0, p));
        for (int i = 0; i <= deg; ++i) {
            if (f[i].is_zero()) continue;
            // (a x + b y)^(deg-i) (c x + d y)^i
            BinaryForm<Fp> term(0, Fp(0, p));
            term[0] = f[i];
            BinaryForm<Fp> u(1, Fp(0, p)), v(1, Fp(0, p));
            u[0] = a;
            u[1] = b;
            v[0] = c;
            v[1] = d;
            for (int e = 0; e < deg - i; ++e) term = term * u;
            for (int e = 0; e < i; ++e) term = term * v;
            acc = acc + term;
        }
        return acc;
    };
    for (int trial = 0; trial < 20; ++trial) {
        // Random degree-3 forms with a planted common factor half the time.
        BinaryForm<Fp> lin(1, Fp(0, p));
        lin[0] = Fp(static_cast<std::int64_t>(rng() % p), p);
        lin[1] = Fp(static_cast<std::int64_t>(rng() % p), p);
        bool plant = trial % 2 == 0 && !lin.is_zero();
        std::vector<BinaryForm<Fp>> forms;
        for (int i = 0; i < 3; ++i) {
            BinaryForm<Fp> f(plant ? 2 : 3, Fp(0, p));
            for (int j = 0; j <= f.degree(); ++j)
                f[j] = Fp(static_cast<std::int64_t>(rng() % p), p);
            forms.push_back(plant ? f * lin : f);
        }
        bool before = binary_forms_common_root(forms);
        Fp a(static_cast<std::int64_t>(rng() % p), p), b(static_cast<std::int64_t>(rng() % p), p);
        Fp c(static_cast<std::int64_t>(rng() % p), p), d(static_cast<std::int64_t>(rng() % p), p);
        if ((a * d - b * c).is_zero()) continue;
        std::vector<BinaryForm<Fp>> subbed;
        for (const auto& f : forms) subbed.push_back(substitute(f, a, b, c, d));
        CHECK(binary_forms_common_root(subbed) == before);
        if (plant) CHECK(before);
    }
}

TEST_CASE("gcd over Fp") {
    const std::uint64_t p = 13;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Poly<Fp> r = random_poly_fp(rng, 2, 3, 2, p);
        Poly<Fp> s = random_poly_fp(rng, 2, 3, 2, p);
        if (r.is_zero() || s.is_zero()) continue;
        Poly<Fp> g = gcd(r * s, r);
        CHECK(try_divide(g, r).has_value());
        CHECK(try_divide(r, g).has_value());
    }
}
