#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "poly_gcd.hpp"
#include "polynomial.hpp"

namespace hyperdet {

// Resource knobs for symbolic runs. reduce_threshold: term count past which
// multiplications attempt cross-cancellation eagerly. term_budget: hard cap
// on the terms held by a single value; crossing it throws Infeasible.
struct SymbolicLimits {
    static inline std::size_t reduce_threshold = 500;
    static inline std::size_t term_budget = 1000000;
};

// Element of the fraction field of Poly<F>, stored as
//   scale * (prod numerator factors) / (prod denominator factors)
// with every factor monic, nonconstant and immutable (shared between
// values, so copying a fraction copies pointers, not term maps). Products
// are never expanded by multiplication or inversion, only by addition, so
// values built purely from products of pivots (the accumulated determinant
// factors of the elimination) stay factored and cancel pairwise instead of
// being multiplied out. Exact-division attempts do the routine
// cancellation; reduce() adds a per-factor gcd pass for partial
// cancellations.
template <class F>
class RatFunc {
    using FacPtr = std::shared_ptr<const Poly<F>>;

public:
    // The exemplar one() pins down the field for coefficient types whose
    // default construction carries extra state (like the prime-field
    // modulus); the zero polynomial has no coefficient to recover it from.
    RatFunc(Poly<F> p, const F& one) : nvars_(p.nvars()), scale_(one.one()) {
        absorb_num(std::move(p));
    }
    explicit RatFunc(Poly<F> p) : nvars_(p.nvars()), scale_(unit_of(p)) {
        absorb_num(std::move(p));
    }
    RatFunc(Poly<F> num, Poly<F> den) : nvars_(num.nvars()), scale_(unit_of(num, &den)) {
        if (den.is_zero()) throw DivisionByZero();
        absorb_num(std::move(num));
        absorb_den(std::move(den));
        cancel();
    }

    static RatFunc constant(int nvars, const F& c) {
        return RatFunc(Poly<F>::constant(nvars, c), c.one());
    }
    static RatFunc variable(int nvars, int i, const F& one) {
        return RatFunc(Poly<F>::variable(nvars, i, one), one.one());
    }

    // Expanded numerator and denominator. The denominator is monic; the
    // overall scalar sits in the numerator.
    Poly<F> num() const {
        Poly<F> p = Poly<F>::constant(nvars_, scale_);
        for (const auto& f : nfac_) p = p * *f;
        return p;
    }
    Poly<F> den() const {
        Poly<F> p = Poly<F>::constant(nvars_, scale_.one());
        for (const auto& f : dfac_) p = p * *f;
        return p;
    }
    int nvars() const { return nvars_; }

    bool is_zero() const { return scale_.is_zero(); }
    bool is_one() const {
        if (nfac_.empty() && dfac_.empty()) return scale_.is_one();
        if (scale_.is_one() && matched_lists()) return true;
        return num() == den();
    }
    RatFunc zero() const { return constant(nvars_, scale_.zero()); }
    RatFunc one() const { return constant(nvars_, scale_.one()); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return combine(a, b, false); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return combine(a, b, true); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return a.zero();
        RatFunc r = a;
        r.scale_ = r.scale_ * b.scale_;
        r.nfac_.insert(r.nfac_.end(), b.nfac_.begin(), b.nfac_.end());
        r.dfac_.insert(r.dfac_.end(), b.dfac_.begin(), b.dfac_.end());
        r.cancel();
        return r;
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.scale_ = -r.scale_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc inv() const {
        if (is_zero()) throw DivisionByZero();
        RatFunc r = *this;
        r.scale_ = r.scale_.inv();
        std::swap(r.nfac_, r.dfac_);
        return r;
    }

    // Equality by cross-multiplication; exact without requiring reduction.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b.is_zero();
        if (b.is_zero()) return false;
        return a.num() * b.den() == b.num() * a.den();
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // Reduction to lowest terms: pairwise and exact-division cancellation,
    // then a gcd of the expanded numerator against each remaining
    // denominator factor (small second operand, so the gcd stays cheap).
    void reduce() {
        cancel();
        if (dfac_.empty()) return;
        // Expand the numerator one factor at a time and divide out
        // denominator factors as soon as they divide exactly; the full
        // product can be far larger than the running reduced form.
        Poly<F> n = Poly<F>::constant(nvars_, scale_);
        std::vector<FacPtr> dens;
        std::swap(dens, dfac_);
        auto strip = [&]() {
            bool progress = true;
            while (progress) {
                progress = false;
                for (auto it = dens.begin(); it != dens.end();) {
                    if (n.total_degree() >= (*it)->total_degree()) {
                        if (auto q = try_divide(n, **it)) {
                            n = std::move(*q);
                            it = dens.erase(it);
                            progress = true;
                            continue;
                        }
                    }
                    ++it;
                }
            }
        };
        for (const auto& f : nfac_) {
            n = n * *f;
            strip();
        }
        nfac_.clear();
        dfac_ = std::move(dens);
        scale_ = scale_.one();
        if (dfac_.empty()) {
            absorb_num(std::move(n));
            check_budget();
            return;
        }
        for (std::size_t i = 0; i < dfac_.size();) {
            Poly<F> g = gcd(n, *dfac_[i]);
            if (g.is_constant()) {
                ++i;
                continue;
            }
            n = exact_divide(n, g);
            Poly<F> rest = exact_divide(*dfac_[i], g);
            dfac_.erase(dfac_.begin() + i);
            n = n.scaled(rest.leading_coeff().inv());
            if (!rest.is_constant())
                dfac_.push_back(std::make_shared<const Poly<F>>(
                    rest.scaled(rest.leading_coeff().inv())));
        }
        nfac_.clear();
        scale_ = scale_.one();
        absorb_num(std::move(n));
        check_budget();
    }

    std::string str(const std::vector<std::string>& names) const {
        if (dfac_.empty()) return num().str(names);
        return "(" + num().str(names) + ") / (" + den().str(names) + ")";
    }

private:
    static bool same(const FacPtr& a, const FacPtr& b) { return a == b || *a == *b; }

    static F unit_of(const Poly<F>& p, const Poly<F>* q = nullptr) {
        if (!p.is_zero()) return p.leading_coeff().one();
        if (q && !q->is_zero()) return q->leading_coeff().one();
        return F().one();
    }

    // Splits p into scalar * monic factor and appends to the numerator.
    void absorb_num(Poly<F> p) {
        if (p.is_zero()) {
            scale_ = scale_.zero();
            nfac_.clear();
            dfac_.clear();
            return;
        }
        F lc = p.leading_coeff();
        scale_ = scale_ * lc;
        if (!p.is_constant())
            nfac_.push_back(std::make_shared<const Poly<F>>(p.scaled(lc.inv())));
    }

    void absorb_den(Poly<F> p) {
        F lc = p.leading_coeff();
        scale_ = scale_ * lc.inv();
        if (!p.is_constant())
            dfac_.push_back(std::make_shared<const Poly<F>>(p.scaled(lc.inv())));
    }

    bool matched_lists() const {
        if (nfac_.size() != dfac_.size()) return false;
        std::vector<const FacPtr*> rest;
        for (const auto& d : dfac_) rest.push_back(&d);
        for (const auto& n : nfac_) {
            auto it = std::find_if(rest.begin(), rest.end(),
                                   [&](const FacPtr* d) { return same(*d, n); });
            if (it == rest.end()) return false;
            rest.erase(it);
        }
        return true;
    }

    // Removes identical numerator/denominator factors, then cancels
    // denominator factors dividing some numerator factor exactly.
    void cancel() {
        if (is_zero()) return;
        for (auto dit = dfac_.begin(); dit != dfac_.end();) {
            auto nit = std::find_if(nfac_.begin(), nfac_.end(),
                                    [&](const FacPtr& n) { return same(n, *dit); });
            if (nit != nfac_.end()) {
                nfac_.erase(nit);
                dit = dfac_.erase(dit);
            } else {
                ++dit;
            }
        }
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto dit = dfac_.begin(); dit != dfac_.end();) {
                bool hit = false;
                for (auto nit = nfac_.begin(); nit != nfac_.end(); ++nit) {
                    if ((*nit)->total_degree() < (*dit)->total_degree()) continue;
                    if (auto q = try_divide(**nit, **dit)) {
                        Poly<F> quot = std::move(*q);
                        nfac_.erase(nit);
                        dit = dfac_.erase(dit);
                        if (!quot.is_constant())
                            nfac_.push_back(std::make_shared<const Poly<F>>(std::move(quot)));
                        hit = true;
                        progress = true;
                        break;
                    }
                }
                if (!hit) ++dit;
            }
        }
        check_budget();
    }

    void check_budget() const {
        std::size_t sz = 0;
        for (const auto& f : nfac_) sz += f->term_count();
        for (const auto& f : dfac_) sz += f->term_count();
        if (sz > SymbolicLimits::term_budget)
            throw Infeasible("symbolic term budget exceeded (" + std::to_string(sz) + " terms)");
    }

    // Sum or difference over a common denominator; shared denominator
    // factors are matched up front so they are not squared into the result.
    static RatFunc combine(const RatFunc& a, const RatFunc& b, bool subtract) {
        if (a.is_zero()) return subtract ? -b : b;
        if (b.is_zero()) return a;
        std::vector<FacPtr> da = a.dfac_, db = b.dfac_, shared;
        for (auto it = da.begin(); it != da.end();) {
            auto jt = std::find_if(db.begin(), db.end(),
                                   [&](const FacPtr& d) { return same(d, *it); });
            if (jt != db.end()) {
                shared.push_back(*it);
                db.erase(jt);
                it = da.erase(it);
            } else {
                ++it;
            }
        }
        Poly<F> left = a.num();
        for (const auto& f : db) left = left * *f;
        Poly<F> right = b.num();
        for (const auto& f : da) right = right * *f;
        RatFunc r(subtract ? left - right : left + right, a.scale_.one());
        r.dfac_ = std::move(shared);
        r.dfac_.insert(r.dfac_.end(), da.begin(), da.end());
        r.dfac_.insert(r.dfac_.end(), db.begin(), db.end());
        r.cancel();
        return r;
    }

    int nvars_;
    F scale_;
    std::vector<FacPtr> nfac_, dfac_;
};

}  // namespace hyperdet
