#pragma once

// Arbitrary-precision signed integers on 32-bit limbs.
//
// Magnitudes are little-endian vectors of uint32_t with no trailing zero
// limbs; the sign of zero is 0. Multiplication switches from schoolbook to
// Karatsuba above a limb threshold, division is Knuth algorithm D, gcd is
// the binary algorithm.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pedcurve/error.hpp"

namespace pedcurve {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {  // NOLINT: implicit by design, mirrors int literals
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (m != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }

    static BigInt from_string(std::string_view s) {
        std::size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        if (i == s.size()) throw error(errc::syntax_error, "empty integer literal");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw error(errc::syntax_error, "bad digit in integer literal");
            r.mul_small(10);
            r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
        }
        if (!r.is_zero()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_negative() const { return sign_ < 0; }
    bool is_even() const { return sign_ == 0 || (limbs_[0] & 1u) == 0; }
    int sign() const { return sign_; }

    // Value as long long; caller must know it fits.
    long long to_ll() const {
        unsigned long long m = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
        return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

    bool fits_ll() const {
        if (limbs_.size() > 2) return false;
        if (limbs_.size() < 2) return true;
        unsigned long long m =
            (static_cast<unsigned long long>(limbs_[1]) << 32) | limbs_[0];
        return sign_ < 0 ? m <= (1ULL << 63) : m < (1ULL << 63);
    }

    double to_double() const {
        double m = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            m = m * 4294967296.0 + static_cast<double>(limbs_[i]);
        return sign_ < 0 ? -m : m;
    }

    std::size_t bit_length() const {
        if (is_zero()) return 0;
        std::uint32_t top = limbs_.back();
        std::size_t b = (limbs_.size() - 1) * 32;
        while (top != 0) { ++b; top >>= 1; }
        return b;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c : -c;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_ = mul_mag(a.limbs_, b.limbs_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    // Truncated division: quotient rounds toward zero, remainder has the
    // sign of the dividend. |r| < |b| always.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.sign_ == 0) throw error(errc::division_by_zero, "integer division by zero");
        if (a.sign_ == 0) return {BigInt(), BigInt()};
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c < 0) return {BigInt(), a};
        BigInt q, r;
        divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
        if (!q.limbs_.empty()) q.sign_ = a.sign_ * b.sign_;
        if (!r.limbs_.empty()) r.sign_ = a.sign_;
        return {q, r};
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    // Nonnegative remainder in [0, |m|).
    BigInt mod_floor(const BigInt& m) const {
        BigInt r = *this % m;
        if (r.is_negative()) r = r + m.abs();
        return r;
    }

    BigInt shl(std::size_t bits) const {
        if (is_zero() || bits == 0) return *this;
        BigInt r;
        std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
        r.limbs_.assign(limb_shift, 0);
        if (bit_shift == 0) {
            r.limbs_.insert(r.limbs_.end(), limbs_.begin(), limbs_.end());
        } else {
            std::uint32_t carry = 0;
            for (std::uint32_t limb : limbs_) {
                r.limbs_.push_back((limb << bit_shift) | carry);
                carry = static_cast<std::uint32_t>(
                    static_cast<std::uint64_t>(limb) >> (32 - bit_shift));
            }
            if (carry) r.limbs_.push_back(carry);
        }
        r.sign_ = sign_;
        return r;
    }

    BigInt shr(std::size_t bits) const {
        if (is_zero()) return *this;
        std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
        if (limb_shift >= limbs_.size()) return BigInt();
        BigInt r;
        r.limbs_.assign(limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift),
                        limbs_.end());
        if (bit_shift != 0) {
            std::uint32_t carry = 0;
            for (std::size_t i = r.limbs_.size(); i-- > 0;) {
                std::uint32_t limb = r.limbs_[i];
                r.limbs_[i] = (limb >> bit_shift) | carry;
                carry = limb << (32 - bit_shift);
            }
        }
        trim(r.limbs_);
        if (!r.limbs_.empty()) r.sign_ = sign_;
        return r;
    }

    static BigInt gcd(const BigInt& a, const BigInt& b) {
        if (a.is_zero()) return b.abs();
        if (b.is_zero()) return a.abs();
        BigInt u = a.abs(), v = b.abs();
        std::size_t shift = 0;
        while (u.is_even() && v.is_even()) {
            u = u.shr(1);
            v = v.shr(1);
            ++shift;
        }
        while (u.is_even()) u = u.shr(1);
        while (!v.is_zero()) {
            while (v.is_even()) v = v.shr(1);
            if (cmp_mag(u.limbs_, v.limbs_) > 0) std::swap(u, v);
            v = v - u;
        }
        return u.shl(shift);
    }

    static BigInt lcm(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        return (a.abs() / gcd(a, b)) * b.abs();
    }

    BigInt pow(std::uint64_t e) const {
        BigInt base = *this, r = 1;
        while (e != 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> mag = limbs_;
        std::string digits;
        while (!mag.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = mag.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | mag[i];
                mag[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            trim(mag);
            std::string chunk = std::to_string(rem);
            if (!mag.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            digits.insert(0, chunk);
        }
        return sign_ < 0 ? "-" + digits : digits;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;

    static void trim(std::vector<std::uint32_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    void mul_small(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        if (!limbs_.empty()) sign_ = sign_ == 0 ? 1 : sign_;
        trim(limbs_);
        if (limbs_.empty()) sign_ = 0;
    }

    void add_small(std::uint32_t v) {
        if (v == 0) return;
        std::uint64_t carry = v;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            if (carry == 0) break;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        sign_ = 1;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r;
        r.reserve(big.size() + 1);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0);
            r.push_back(static_cast<std::uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r;
        r.reserve(a.size());
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += 1LL << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r.push_back(static_cast<std::uint32_t>(cur));
        }
        trim(r);
        return r;
    }

    static constexpr std::size_t kKaratsubaLimbs = 32;

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        if (a.size() < kKaratsubaLimbs || b.size() < kKaratsubaLimbs)
            return mul_school(a, b);
        return mul_karatsuba(a, b);
    }

    static std::vector<std::uint32_t> mul_school(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = r[i + j] + ai * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = r[k] + carry;
                r[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> mul_karatsuba(std::vector<std::uint32_t> a,
                                                    std::vector<std::uint32_t> b) {
        std::size_t n = std::max(a.size(), b.size());
        std::size_t half = (n + 1) / 2;
        auto lo = [&](const std::vector<std::uint32_t>& v) {
            std::vector<std::uint32_t> r(v.begin(),
                                         v.begin() + static_cast<std::ptrdiff_t>(
                                                         std::min(half, v.size())));
            trim(r);
            return r;
        };
        auto hi = [&](const std::vector<std::uint32_t>& v) {
            if (v.size() <= half) return std::vector<std::uint32_t>();
            std::vector<std::uint32_t> r(v.begin() + static_cast<std::ptrdiff_t>(half),
                                         v.end());
            return r;
        };
        std::vector<std::uint32_t> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
        std::vector<std::uint32_t> z0 = mul_mag(a0, b0);
        std::vector<std::uint32_t> z2 = mul_mag(a1, b1);
        std::vector<std::uint32_t> sa = add_mag(a0, a1), sb = add_mag(b0, b1);
        std::vector<std::uint32_t> z1 = mul_mag(sa, sb);
        z1 = sub_mag(z1, add_mag(z0, z2));  // exact: z1 >= z0+z2
        std::vector<std::uint32_t> r(2 * half + z2.size() + 1, 0);
        auto add_at = [&](const std::vector<std::uint32_t>& v, std::size_t off) {
            std::uint64_t carry = 0;
            std::size_t i = 0;
            for (; i < v.size(); ++i) {
                std::uint64_t cur = static_cast<std::uint64_t>(r[off + i]) + v[i] + carry;
                r[off + i] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            while (carry) {
                std::uint64_t cur = static_cast<std::uint64_t>(r[off + i]) + carry;
                r[off + i] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++i;
            }
        };
        if (r.size() < 2 * half + z2.size() + 2) r.resize(2 * half + z2.size() + 2, 0);
        add_at(z0, 0);
        add_at(z1, half);
        add_at(z2, 2 * half);
        trim(r);
        return r;
    }

    // Knuth algorithm D. Requires |a| >= |b| > 0; fills q, r magnitudes.
    static void divmod_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r) {
        if (b.size() == 1) {
            q.assign(a.size(), 0);
            std::uint64_t rem = 0;
            for (std::size_t i = a.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<std::uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            trim(q);
            r.clear();
            if (rem) r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }
        int s = 0;
        {
            std::uint32_t top = b.back();
            while ((top & 0x80000000u) == 0) { top <<= 1; ++s; }
        }
        std::vector<std::uint32_t> u = shl_mag(a, static_cast<std::size_t>(s));
        std::vector<std::uint32_t> v = shl_mag(b, static_cast<std::size_t>(s));
        std::size_t n = v.size();
        u.resize(std::max(u.size(), a.size() + 1), 0);
        if (u.size() < n + 1) u.resize(n + 1, 0);
        std::size_t m = u.size() - n;
        q.assign(m, 0);
        const std::uint64_t base = 1ULL << 32;
        for (std::size_t j = m; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = num / v[n - 1];
            std::uint64_t rhat = num % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply-subtract qhat*v from u[j..j+n]
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                                 static_cast<std::int64_t>(p & 0xffffffffULL) - borrow;
                if (t < 0) {
                    t += static_cast<std::int64_t>(base);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large: add back
                t += static_cast<std::int64_t>(base);
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(cur);
                    c2 = cur >> 32;
                }
                t += static_cast<std::int64_t>(c2);
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        trim(q);
        u.resize(n);
        r = shr_mag(u, static_cast<std::size_t>(s));
    }

    static std::vector<std::uint32_t> shl_mag(const std::vector<std::uint32_t>& v,
                                              std::size_t bits) {
        BigInt t;
        t.limbs_ = v;
        t.sign_ = v.empty() ? 0 : 1;
        return t.shl(bits).limbs_;
    }

    static std::vector<std::uint32_t> shr_mag(std::vector<std::uint32_t> v,
                                              std::size_t bits) {
        trim(v);
        BigInt t;
        t.limbs_ = std::move(v);
        t.sign_ = t.limbs_.empty() ? 0 : 1;
        return t.shr(bits).limbs_;
    }
};

inline BigInt operator"" _big(const char* s) { return BigInt::from_string(s); }

}  // namespace pedcurve
