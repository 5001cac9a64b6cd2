#pragma once

#include <cassert>
#include <vector>

#include "errors.hpp"

namespace hyperdet {

// Homogeneous binary form of degree d: sum c_i x^(d-i) y^i, i = 0..d.
// The zero form of any degree is representable.
template <class F>
class BinaryForm {
public:
    BinaryForm(int degree, const F& fill)
        : c_(static_cast<std::size_t>(degree) + 1, fill) {
        assert(degree >= 0);
    }
    explicit BinaryForm(std::vector<F> coeffs) : c_(std::move(coeffs)) { assert(!c_.empty()); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    F& operator[](int i) { return c_[i]; }
    const F& operator[](int i) const { return c_[i]; }

    bool is_zero() const {
        for (const F& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.degree() != b.degree()) throw DimensionMismatch("binary form degrees differ");
        BinaryForm r = a;
        for (int i = 0; i <= r.degree(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        F z = a.c_[0].zero();
        BinaryForm r(a.degree() + b.degree(), z);
        for (int i = 0; i <= a.degree(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j <= b.degree(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    BinaryForm operator-() const {
        BinaryForm r = *this;
        for (F& x : r.c_) x = -x;
        return r;
    }
    BinaryForm scaled(const F& s) const {
        BinaryForm r = *this;
        for (F& x : r.c_) x *= s;
        return r;
    }
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.c_ == b.c_; }

private:
    std::vector<F> c_;
};

// Univariate polynomial gcd over a field; inputs/outputs as ascending
// coefficient vectors with no trailing-zero guarantees required.
template <class F>
std::vector<F> univariate_gcd(std::vector<F> a, std::vector<F> b) {
    auto trim = [](std::vector<F>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size()) {
            F f = a.back() * b.back().inv();
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        F f = a.back().inv();
        for (F& x : a) x *= f;
    }
    return a;
}

// True iff the forms share a common projective root (x : y) over the
// algebraic closure. Dehomogenize at y = 1; the remaining point (1 : 0) is a
// common root exactly when every leading coefficient c_0 vanishes.
template <class F>
bool binary_forms_common_root(const std::vector<BinaryForm<F>>& forms) {
    if (forms.empty()) throw EmptyInput("binary form list");
    std::vector<const BinaryForm<F>*> nonzero;
    for (const auto& f : forms)
        if (!f.is_zero()) nonzero.push_back(&f);
    if (nonzero.empty()) return true;

    bool all_lead_zero = true;
    for (const auto* f : nonzero)
        if (!(*f)[0].is_zero()) {
            all_lead_zero = false;
            break;
        }
    if (all_lead_zero) return true;

    // p(x) = sum c_i x^(d-i): ascending coefficient vector is c reversed.
    std::vector<F> g;
    for (const auto* f : nonzero) {
        std::vector<F> p;
        for (int i = f->degree(); i >= 0; --i) p.push_back((*f)[i]);
        g = (f == nonzero.front()) ? std::move(p) : univariate_gcd(std::move(g), std::move(p));
        if (g.size() <= 1) return false;  // gcd is a nonzero constant
    }
    return g.size() > 1;
}

}  // namespace hyperdet
