#pragma once

// Normalized rationals over BigInt: gcd(|num|, den) = 1, den > 0,
// zero is 0/1. The only scalar type used by the polynomial kernel.

#include <string>
#include <string_view>
#include <utility>

#include "pedcurve/bigint.hpp"
#include "pedcurve/error.hpp"

namespace pedcurve {

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}  // NOLINT
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT

    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    // Accepts "p", "-p", "p/q" (no spaces).
    static Rat from_string(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return Rat(BigInt::from_string(s));
        return Rat(BigInt::from_string(s.substr(0, slash)),
                   BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    bool is_negative() const { return num_.is_negative(); }
    int sign() const { return num_.sign(); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw error(errc::division_by_zero, "rational division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const {
        Rat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    Rat inverse() const {
        if (is_zero()) throw error(errc::division_by_zero, "inverse of zero");
        return Rat(den_, num_);
    }

    Rat abs() const { return is_negative() ? -*this : *this; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (a.num_ * b.den_) < (b.num_ * a.den_);
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // gcd(a/b, c/d) = gcd(ad, cb)/(bd): the largest rational dividing both
    // with integer quotients. Used for polynomial content.
    static Rat gcd(const Rat& a, const Rat& b) {
        if (a.is_zero()) return b.abs();
        if (b.is_zero()) return a.abs();
        return Rat(BigInt::gcd(a.num_ * b.den_, b.num_ * a.den_), a.den_ * b.den_);
    }

    Rat pow(std::uint64_t e) const {
        Rat r = 1;
        Rat base = *this;
        while (e != 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    // Canonical "p/q" text, "/q" omitted when q = 1, no spaces.
    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero())
            throw error(errc::division_by_zero, "rational with zero denominator");
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace pedcurve
