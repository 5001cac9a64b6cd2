#pragma once

#include <cassert>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace hyperdet {

// Element of the prime field F_p for a word-sized prime p. The modulus is
// carried in the value so that generic code can produce zero/one constants
// of the right field from any existing element.
class Fp {
public:
    Fp() = default;
    Fp(std::int64_t value, std::uint64_t p) : p_(p) {
        assert(p >= 2);
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t residue() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        assert(a.p_ == b.p_);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp::raw(s, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        assert(a.p_ == b.p_);
        std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_;
        return Fp::raw(s, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        assert(a.p_ == b.p_);
        unsigned __int128 m = static_cast<unsigned __int128>(a.v_) * b.v_;
        return Fp::raw(static_cast<std::uint64_t>(m % a.p_), a.p_);
    }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    // Extended Euclid.
    Fp inv() const {
        if (v_ == 0) throw DivisionByZero();
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        assert(r == 1);
        return Fp(t, p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        assert(a.p_ == b.p_);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 2;
};

// a^n with signed n; requires a != 0 when n < 0.
template <class F>
F scalar_pow(const F& a, long long n) {
    F base = a;
    if (n < 0) {
        base = a.inv();
        n = -n;
    }
    F result = a.one();
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

}  // namespace hyperdet
