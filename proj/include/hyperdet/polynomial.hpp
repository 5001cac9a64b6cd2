#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hyperdet {

using Mono = std::vector<std::uint16_t>;

inline unsigned mono_degree(const Mono& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

// Graded lexicographic, descending, so that map iteration starts at the
// leading term.
struct GrlexDesc {
    bool operator()(const Mono& a, const Mono& b) const {
        unsigned da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

// Sparse multivariate polynomial over an exact field F. Terms are stored in
// descending graded-lex order; no stored coefficient is zero.
template <class F>
class Poly {
public:
    using TermMap = std::map<Mono, F, GrlexDesc>;

    explicit Poly(int nvars) : nvars_(nvars) { assert(nvars >= 0); }

    static Poly constant(int nvars, const F& c) {
        Poly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(Mono(nvars, 0), c);
        return p;
    }
    static Poly variable(int nvars, int i, const F& one) {
        assert(i >= 0 && i < nvars);
        Poly p(nvars);
        Mono m(nvars, 0);
        m[i] = 1;
        p.terms_.emplace(std::move(m), one);
        return p;
    }
    static Poly monomial(int nvars, Mono m, const F& c) {
        assert(static_cast<int>(m.size()) == nvars);
        Poly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
    }
    // Value of a constant polynomial (requires a sample for the zero case).
    F constant_value(const F& exemplar) const {
        assert(is_constant());
        return terms_.empty() ? exemplar.zero() : terms_.begin()->second;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
        return d;
    }
    const Mono& leading_mono() const {
        assert(!is_zero());
        return terms_.begin()->first;
    }
    const F& leading_coeff() const {
        assert(!is_zero());
        return terms_.begin()->second;
    }

    void add_term(const Mono& m, const F& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_compat(b);
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_compat(b);
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_compat(b);
        Poly r(a.nvars_);
        if (a.is_zero() || b.is_zero()) return r;
        // Iterate over the smaller factor's terms on the outside.
        const Poly& s = a.term_count() <= b.term_count() ? a : b;
        const Poly& l = a.term_count() <= b.term_count() ? b : a;
        Mono m(a.nvars_);
        for (const auto& [ms, cs] : s.terms_) {
            for (const auto& [ml, cl] : l.terms_) {
                for (int i = 0; i < a.nvars_; ++i) {
                    assert(ms[i] + ml[i] <= 0xFFFF);
                    m[i] = static_cast<std::uint16_t>(ms[i] + ml[i]);
                }
                r.add_term(m, cs * cl);
            }
        }
        return r;
    }
    Poly& operator+=(const Poly& o) {
        check_compat(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_compat(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const F& c) const {
        Poly r(nvars_);
        if (c.is_zero()) return r;
        for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Substitute point[i] for variable i, mapping coefficients through conv.
    template <class F2, class Conv>
    F2 eval(const std::vector<F2>& point, Conv conv) const {
        assert(static_cast<int>(point.size()) == nvars_ && nvars_ > 0);
        F2 acc = point[0].zero();
        for (const auto& [m, c] : terms_) {
            F2 t = conv(c);
            for (int i = 0; i < nvars_; ++i)
                for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
            acc += t;
        }
        return acc;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            first = false;
            std::string vars;
            for (int i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += names[i];
                if (m[i] > 1) vars += "^" + std::to_string(m[i]);
            }
            if (vars.empty()) {
                out += cs;
            } else {
                if (cs != "1") out += cs + "*";
                out += vars;
            }
        }
        return out;
    }

private:
    void check_compat(const Poly& o) const {
        if (nvars_ != o.nvars_) throw VariableCountMismatch();
    }

    int nvars_;
    TermMap terms_;
};

// Exact division: returns p / q when q divides p, nullopt otherwise.
template <class F>
std::optional<Poly<F>> try_divide(const Poly<F>& p, const Poly<F>& q) {
    if (p.nvars() != q.nvars()) throw VariableCountMismatch();
    if (q.is_zero()) return std::nullopt;
    Poly<F> quot(p.nvars());
    Poly<F> rem = p;
    const Mono& qm = q.leading_mono();
    F qinv = q.leading_coeff().inv();
    Mono f(p.nvars()), m(p.nvars());
    while (!rem.is_zero()) {
        const Mono& rm = rem.leading_mono();
        for (int i = 0; i < p.nvars(); ++i) {
            if (rm[i] < qm[i]) return std::nullopt;
            f[i] = static_cast<std::uint16_t>(rm[i] - qm[i]);
        }
        F c = rem.leading_coeff() * qinv;
        quot.add_term(f, c);
        for (const auto& [mq, cq] : q.terms()) {
            for (int i = 0; i < p.nvars(); ++i)
                m[i] = static_cast<std::uint16_t>(f[i] + mq[i]);
            rem.add_term(m, -(c * cq));
        }
    }
    return quot;
}

template <class F>
Poly<F> exact_divide(const Poly<F>& p, const Poly<F>& q) {
    auto r = try_divide(p, q);
    assert(r.has_value());
    return *r;
}

}  // namespace hyperdet
