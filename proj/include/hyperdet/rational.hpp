#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace hyperdet {

// Arbitrary-precision rational, kept canonical (positive denominator,
// gcd(num, den) = 1) by GMP.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(long n, long d) : q_(n, d) {
        if (d == 0) throw DivisionByZero();
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rat(const mpz_class& z) : q_(z) {}

    static Rat parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
        q.canonicalize();
        return Rat(q);
    }

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    Rat zero() const { return Rat(); }
    Rat one() const { return Rat(1); }
    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat& operator+=(const Rat& o) {
        q_ += o.q_;
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        q_ -= o.q_;
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        q_ *= o.q_;
        return *this;
    }

    Rat inv() const {
        if (is_zero()) throw DivisionByZero();
        return Rat(mpq_class(1 / q_));
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }

    // "a/b", or "a" when the denominator is 1.
    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

}  // namespace hyperdet
