#pragma once

// Reduced fractions of polynomials. The denominator is normalized
// (integer coprime coefficients, positive leading coefficient) and
// coprime to the numerator; zero is 0/1.

#include <map>
#include <string>
#include <utility>

#include "pedcurve/polygcd.hpp"
#include "pedcurve/polynomial.hpp"

namespace pedcurve {

class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT
    RationalFunction(const Rat& r) : num_(r), den_(1) {}       // NOLINT

    RationalFunction(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
        reduce();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    // Requires is_polynomial().
    Poly as_poly() const {
        if (!is_polynomial())
            throw error(errc::internal, "rational function is not polynomial");
        return num_.scaled(den_.constant_value().inverse());
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero())
            throw error(errc::division_by_zero, "division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RationalFunction pow(std::uint64_t e) const {
        RationalFunction r{Poly(1)};
        RationalFunction base = *this;
        while (e != 0) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    RationalFunction derivative(VarId v) const {
        return RationalFunction(
            num_.differentiate(v) * den_ - num_ * den_.differentiate(v), den_ * den_);
    }

    // Specializes one variable to a rational value; remaining symbols stay.
    RationalFunction at(VarId v, const Rat& value) const;

    // Exact value at a full rational point of both num and den.
    Rat evaluate(const std::map<VarId, Rat>& point) const {
        Rat d = den_.evaluate(point);
        if (d.is_zero()) throw error(errc::pole_at_t0, "evaluation at a pole");
        return num_.evaluate(point) / d;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    std::string to_string(const VarRegistry& reg) const {
        if (is_polynomial()) return poly_to_string(as_poly(), reg);
        return "(" + poly_to_string(num_, reg) + ") / (" + poly_to_string(den_, reg) + ")";
    }

private:
    Poly num_, den_;

    void reduce() {
        if (den_.is_zero())
            throw error(errc::division_by_zero, "zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = gcd_poly(num_, den_);
        if (!g.is_constant() || !g.constant_value().is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        auto nd = normalize_poly(den_);
        den_ = nd.poly;
        num_ = num_.scaled(nd.unit.inverse());
    }
};

// Exact composition: replaces bound variables of p by rational functions.
// Result over a single common denominator, reduced once at the end.
inline RationalFunction substitute(const Poly& p,
                                   const std::map<VarId, RationalFunction>& bindings) {
    if (p.is_zero()) return RationalFunction();
    std::map<VarId, int> maxdeg;
    for (const auto& [v, rf] : bindings) {
        if (rf.den().is_zero())
            throw error(errc::division_by_zero, "binding with zero denominator");
        int d = p.degree(v);
        if (d > 0) maxdeg[v] = d;
    }
    // cached powers of numerators and denominators
    std::map<VarId, std::vector<Poly>> npow, dpow;
    for (const auto& [v, d] : maxdeg) {
        const auto& rf = bindings.at(v);
        auto& np = npow[v];
        auto& dp = dpow[v];
        np.resize(static_cast<std::size_t>(d) + 1);
        dp.resize(static_cast<std::size_t>(d) + 1);
        np[0] = Poly(1);
        dp[0] = Poly(1);
        for (int k = 1; k <= d; ++k) {
            np[static_cast<std::size_t>(k)] = np[k - 1] * rf.num();
            dp[static_cast<std::size_t>(k)] = dp[k - 1] * rf.den();
        }
    }
    Poly numerator;
    for (const auto& [m, c] : p.terms()) {
        Poly t = Poly(c);
        Monomial rest = Monomial::one();
        for (const auto& [v, e] : m.exps)
            if (maxdeg.find(v) == maxdeg.end()) rest = rest.times(Monomial::var(v, e));
        for (const auto& [v, d] : maxdeg) {
            std::uint32_t e = m.exponent(v);
            if (e > 0) t *= npow[v][e];
            if (static_cast<int>(e) < d) t *= dpow[v][static_cast<std::size_t>(d) - e];
        }
        numerator += t.mul_term(Rat(1), rest);
    }
    Poly denominator = Poly(1);
    for (const auto& [v, d] : maxdeg)
        denominator *= dpow[v][static_cast<std::size_t>(d)];
    return RationalFunction(numerator, denominator);
}

inline RationalFunction substitute(const Poly& p, const std::map<VarId, Poly>& bindings) {
    std::map<VarId, RationalFunction> b;
    for (const auto& [v, q] : bindings) b.emplace(v, RationalFunction(q));
    return substitute(p, b);
}

inline RationalFunction RationalFunction::at(VarId v, const Rat& value) const {
    std::map<VarId, RationalFunction> b{{v, RationalFunction(Poly(value))}};
    RationalFunction n = substitute(num_, b);
    RationalFunction d = substitute(den_, b);
    if (d.is_zero()) throw error(errc::pole_at_t0, "specialization hits a pole");
    return n / d;
}

}  // namespace pedcurve
