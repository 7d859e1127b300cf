#pragma once

// Pseudo-division, multivariate gcd via the subresultant PRS, content and
// primitive parts, and square-free parts. Everything is exact over Rat;
// divisions asserted exact fail loudly rather than silently truncating.

#include <optional>
#include <utility>
#include <vector>

#include "pedcurve/polynomial.hpp"

namespace pedcurve {

struct PseudoDivision {
    Poly quotient;
    Poly remainder;
    unsigned power;  // lc_v(B)^power * A = quotient*B + remainder
};

inline PseudoDivision pseudo_division(const Poly& a, const Poly& b, VarId v) {
    int db = b.degree(v);
    if (db <= 0) throw error(errc::bad_divisor, "pseudo-division by v-free divisor");
    Poly lcb = b.leading_coeff(v);
    Poly q, r = a;
    unsigned power = 0;
    while (!r.is_zero()) {
        int dr = r.degree(v);
        if (dr < db) break;
        Poly lcr = r.leading_coeff(v);
        Monomial shift = Monomial::var(v, static_cast<std::uint32_t>(dr - db));
        Poly shifted = Poly::term(Rat(1), shift);
        q = lcb * q + lcr * shifted;
        r = lcb * r - lcr * shifted * b;
        ++power;
    }
    return {q, r, power};
}

// Pseudo-remainder scaled to the fixed power delta+1 used by the
// subresultant algorithm (delta = deg a - deg b >= 0).
inline Poly prem_fixed(const Poly& a, const Poly& b, VarId v) {
    int da = a.degree(v), db = b.degree(v);
    PseudoDivision pd = pseudo_division(a, b, v);
    unsigned target = static_cast<unsigned>(da - db + 1);
    if (pd.power < target) {
        Poly lcb = b.leading_coeff(v);
        for (unsigned i = pd.power; i < target; ++i) pd.remainder = lcb * pd.remainder;
    }
    return pd.remainder;
}

Poly gcd_poly(const Poly& p, const Poly& q);

namespace detail {

inline VarId pick_var(const Poly& p) {
    // lowest-id variable present
    VarId best = 0;
    bool found = false;
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.exps)
            if (!found || v < best) {
                best = v;
                found = true;
            }
    if (!found) throw error(errc::internal, "pick_var on constant");
    return best;
}

inline Poly content_wrt(const Poly& p, VarId v) {
    Poly c;
    int d = p.degree(v);
    for (int k = 0; k <= d; ++k) {
        Poly ck = p.coeff_of(v, static_cast<std::uint32_t>(k));
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck : gcd_poly(c, ck);
    }
    if (c.is_zero()) return Poly();
    if (c.leading_coefficient().is_negative()) c = -c;
    return c;
}

// gcd of v-primitive inputs w.r.t. v, via the subresultant PRS.
// Returns the v-part only (v-primitive, or 1 when coprime in v).
inline Poly prs_gcd(Poly a, Poly b, VarId v) {
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    Poly g = 1, h = 1;
    while (true) {
        int da = a.degree(v), db = b.degree(v);
        int delta = da - db;
        Poly r = prem_fixed(a, b, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) return Poly(1);
        a = b;
        b = exact_div(r, g * h.pow(static_cast<std::uint64_t>(delta)));
        g = a.leading_coeff(v);
        if (delta > 0)
            h = exact_div(g.pow(static_cast<std::uint64_t>(delta)),
                          h.pow(static_cast<std::uint64_t>(delta - 1)));
    }
    Poly cont = content_wrt(b, v);
    return normalized(exact_div(b, cont));
}

}  // namespace detail

struct ContentPrimitive {
    Poly content;    // free of v, positive-leading normalized scale
    Poly primitive;  // content 1 w.r.t. v
};

inline ContentPrimitive content_primitive(const Poly& p, VarId v) {
    if (p.is_zero()) throw error(errc::zero_polynomial, "content of zero polynomial");
    Poly c = detail::content_wrt(p, v);
    return {c, exact_div(p, c)};
}

// Multivariate gcd over Rat. The result is normalized (integer coprime
// coefficients, positive leading coefficient) and scaled by the rational
// content gcd, so gcd_poly(2y, 4y) = 2y. gcd(P, 0) = normalized(P).
inline Poly gcd_poly(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) return Poly();
    if (p.is_zero()) return normalized(q);
    if (q.is_zero()) return normalized(p);
    Rat rc = Rat::gcd(p.rational_content(), q.rational_content());
    Poly a = normalized(p), b = normalized(q);
    if (a.is_constant() || b.is_constant()) return Poly(rc);
    VarId v = std::min(detail::pick_var(a), detail::pick_var(b));
    Poly result;
    if (!a.depends_on(v)) {
        result = gcd_poly(detail::content_wrt(b, v), a);
    } else if (!b.depends_on(v)) {
        result = gcd_poly(detail::content_wrt(a, v), b);
    } else {
        auto [ca, pa] = content_primitive(a, v);
        auto [cb, pb] = content_primitive(b, v);
        Poly cg = gcd_poly(ca, cb);
        Poly vg = detail::prs_gcd(pa, pb, v);
        result = normalized(cg * vg);
    }
    return result.scaled(rc);
}

inline Poly gcd_poly(const Poly& p, const Poly& q, VarId /*v*/) {
    // main-variable hint retained for interface compatibility; the
    // recursion picks registry order which is equivalent up to units
    return gcd_poly(p, q);
}

// Product of the distinct irreducible factors, each to power one,
// normalized.
inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw error(errc::zero_polynomial, "squarefree part of zero");
    Poly a = normalized(p);
    if (a.is_constant()) return Poly(1);
    VarId v = detail::pick_var(a);
    auto [c, pp] = content_primitive(a, v);
    Poly d = pp.differentiate(v);
    Poly g = gcd_poly(pp, d);
    Poly part = exact_div(pp, g);
    Poly cpart = c.is_constant() ? Poly(1) : squarefree_part(c);
    return normalized(cpart * part);
}

}  // namespace pedcurve
