#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <cassert>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace hyperdet {

template <class F>
int degree_in(const Poly<F>& p, int var) {
    int d = -1;
    for (const auto& [m, c] : p.terms()) d = std::max(d, static_cast<int>(m[var]));
    return d;  // -1 for the zero polynomial
}

// Coefficient of var^e, as a polynomial in the same variable set (var-degree 0).
template <class F>
Poly<F> coeff_in(const Poly<F>& p, int var, int e) {
    Poly<F> r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] != static_cast<std::uint16_t>(e)) continue;
        Mono m2 = m;
        m2[var] = 0;
        r.add_term(m2, c);
    }
    return r;
}

template <class F>
Poly<F> mul_var_pow(const Poly<F>& p, int var, int e) {
    Poly<F> r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Mono m2 = m;
        assert(m2[var] + e <= 0xFFFF);
        m2[var] = static_cast<std::uint16_t>(m2[var] + e);
        r.add_term(m2, c);
    }
    return r;
}

template <class F>
Poly<F> gcd(const Poly<F>& a, const Poly<F>& b);

// gcd of the var-coefficients of p.
template <class F>
Poly<F> content_in(const Poly<F>& p, int var) {
    Poly<F> c(p.nvars());
    for (int e = degree_in(p, var); e >= 0; --e) {
        Poly<F> ce = coeff_in(p, var, e);
        if (ce.is_zero()) continue;
        c = gcd(c, ce);
        if (c.is_constant() && !c.is_zero()) return c;  // content is a unit
    }
    return c;
}

// Pseudo-remainder of a by b with respect to var: lc(b)^(deg a - deg b + 1) * a mod b.
template <class F>
Poly<F> pseudo_rem(const Poly<F>& a, const Poly<F>& b, int var) {
    int db = degree_in(b, var);
    assert(db >= 0);
    Poly<F> d = coeff_in(b, var, db);
    Poly<F> r = a;
    int n = degree_in(a, var) - db + 1;
    while (!r.is_zero()) {
        int dr = degree_in(r, var);
        if (dr < db) break;
        Poly<F> lr = coeff_in(r, var, dr);
        r = r * d - mul_var_pow(lr, var, dr - db) * b;
        --n;
    }
    if (n > 0) {
        Poly<F> dn = Poly<F>::constant(a.nvars(), d.leading_coeff().one());
        for (int i = 0; i < n; ++i) dn *= d;
        r = r * dn;
    }
    return r;
}

namespace detail {

// Divide out the coefficient-wise monomial gcd; returns the extracted monomial.
template <class F>
Mono extract_mono_content(Poly<F>& p) {
    assert(!p.is_zero());
    Mono g = p.leading_mono();
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
    if (mono_degree(g) > 0) {
        Poly<F> q(p.nvars());
        for (const auto& [m, c] : p.terms()) {
            Mono m2 = m;
            for (std::size_t i = 0; i < g.size(); ++i)
                m2[i] = static_cast<std::uint16_t>(m2[i] - g[i]);
            q.add_term(m2, c);
        }
        p = q;
    }
    return g;
}

template <class F>
Poly<F> monic(const Poly<F>& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading_coeff().inv());
}

// Fast coprimality certificate for rational coefficients: specialize both
// polynomials along a random line x_i = a_i t + b_i over F_M (M = 2^61 - 1)
// and take a univariate gcd. Specialization can only enlarge the gcd, so a
// constant image proves the inputs coprime; any other outcome returns false
// and the caller falls through to the full computation.
inline constexpr std::uint64_t kM61 = 2305843009213693951ull;

inline std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kM61);
}

inline std::uint64_t powmod61(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod61(r, a);
        a = mulmod61(a, a);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod61(std::uint64_t a) { return powmod61(a, kM61 - 2); }

inline void trim61(std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline std::vector<std::uint64_t> uni_gcd61(std::vector<std::uint64_t> u,
                                            std::vector<std::uint64_t> v) {
    trim61(u);
    trim61(v);
    while (!v.empty()) {
        std::uint64_t lead = invmod61(v.back());
        for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = mulmod61(v[i], lead);
        v.back() = 1;
        while (u.size() >= v.size()) {
            std::uint64_t c = u.back();
            std::size_t off = u.size() - v.size();
            if (c != 0) {
                for (std::size_t i = 0; i + 1 < v.size(); ++i) {
                    std::uint64_t s = mulmod61(c, v[i]);
                    std::uint64_t& t = u[off + i];
                    t = t >= s ? t - s : t + kM61 - s;
                }
            }
            u.pop_back();
            trim61(u);
            if (u.size() < v.size()) break;
        }
        std::swap(u, v);
    }
    return u;
}

inline bool line_image61(const Poly<Rat>& p, const std::vector<std::uint64_t>& la,
                         const std::vector<std::uint64_t>& lb,
                         std::vector<std::uint64_t>& out) {
    out.assign(p.total_degree() + 1, 0);
    std::vector<std::uint64_t> t, nt;
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t cn = mpz_fdiv_ui(c.numerator().get_mpz_t(), kM61);
        std::uint64_t cd = mpz_fdiv_ui(c.denominator().get_mpz_t(), kM61);
        if (cd == 0) return false;
        t.assign(1, mulmod61(cn, invmod61(cd)));
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (int e = 0; e < m[i]; ++e) {
                nt.assign(t.size() + 1, 0);
                for (std::size_t j = 0; j < t.size(); ++j) {
                    nt[j + 1] = (nt[j + 1] + mulmod61(t[j], la[i])) % kM61;
                    nt[j] = (nt[j] + mulmod61(t[j], lb[i])) % kM61;
                }
                t.swap(nt);
            }
        }
        for (std::size_t j = 0; j < t.size(); ++j) out[j] = (out[j] + t[j]) % kM61;
    }
    trim61(out);
    return true;
}

template <class F>
bool certainly_coprime(const Poly<F>&, const Poly<F>&) {
    return false;
}

inline bool certainly_coprime(const Poly<Rat>& a, const Poly<Rat>& b) {
    thread_local std::mt19937_64 rng(0x5eedc0de1234ULL);
    const int n = a.nvars();
    std::vector<std::uint64_t> la(n), lb(n), ua, ub;
    for (int attempt = 0; attempt < 3; ++attempt) {
        for (int i = 0; i < n; ++i) {
            la[i] = 1 + rng() % (kM61 - 1);
            lb[i] = rng() % kM61;
        }
        if (!line_image61(a, la, lb, ua) || !line_image61(b, la, lb, ub)) return false;
        if (ua.empty() || ub.empty()) continue;
        if (uni_gcd61(ua, ub).size() == 1) return true;
    }
    return false;
}

}  // namespace detail

// Multivariate gcd over a field of coefficients, normalized so the leading
// coefficient in graded-lex order is 1. Recursive content/primitive-part
// reduction with a subresultant polynomial remainder sequence in the chosen
// main variable.
template <class F>
Poly<F> gcd(const Poly<F>& a_in, const Poly<F>& b_in) {
    if (a_in.nvars() != b_in.nvars()) throw VariableCountMismatch();
    if (a_in.is_zero()) return detail::monic(b_in);
    if (b_in.is_zero()) return detail::monic(a_in);

    Poly<F> a = a_in, b = b_in;
    Mono ga = detail::extract_mono_content(a);
    Mono gb = detail::extract_mono_content(b);
    Mono gm(ga.size());
    for (std::size_t i = 0; i < ga.size(); ++i) gm[i] = std::min(ga[i], gb[i]);
    const F one = a.leading_coeff().one();
    Poly<F> mono_part = Poly<F>::monomial(a.nvars(), gm, one);

    if (a.is_constant() || b.is_constant()) return mono_part;

    // Main variable: appears with positive degree in both, smallest max degree.
    int var = -1, best = 0;
    for (int v = 0; v < a.nvars(); ++v) {
        int da = degree_in(a, v), db = degree_in(b, v);
        if (da <= 0 || db <= 0) continue;
        int mx = std::max(da, db);
        if (var < 0 || mx < best) {
            var = v;
            best = mx;
        }
    }
    // No shared variable: common divisors are constants.
    if (var < 0) return mono_part;

    if (detail::certainly_coprime(a, b)) return mono_part;

    // Cheap exits: one input divides the other.
    if (try_divide(a, b)) return detail::monic(b) * mono_part;
    if (try_divide(b, a)) return detail::monic(a) * mono_part;

    Poly<F> ca = content_in(a, var);
    Poly<F> cb = content_in(b, var);
    Poly<F> c = gcd(ca, cb);
    a = exact_divide(a, ca);
    b = exact_divide(b, cb);

    if (degree_in(a, var) < degree_in(b, var)) std::swap(a, b);
    Poly<F> g = Poly<F>::constant(a.nvars(), one);
    Poly<F> h = g;
    while (true) {
        int delta = degree_in(a, var) - degree_in(b, var);
        assert(delta >= 0);
        Poly<F> r = pseudo_rem(a, b, var);
        if (r.is_zero()) break;
        if (degree_in(r, var) == 0) {
            b = Poly<F>::constant(a.nvars(), one);
            break;
        }
        a = std::move(b);
        Poly<F> divisor = g;
        for (int i = 0; i < delta; ++i) divisor *= h;
        b = exact_divide(r, divisor);
        g = coeff_in(a, var, degree_in(a, var));
        if (delta >= 1) {
            Poly<F> gd = g;
            for (int i = 1; i < delta; ++i) gd *= g;
            Poly<F> hd = Poly<F>::constant(a.nvars(), one);
            for (int i = 1; i < delta; ++i) hd *= h;
            h = exact_divide(gd, hd);
        }
    }
    Poly<F> pp = b.is_constant() ? b : exact_divide(b, content_in(b, var));
    return detail::monic(c * pp * mono_part);
}

}  // namespace hyperdet
