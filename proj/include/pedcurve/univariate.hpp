#pragma once

// Dense univariate helpers: coefficient vectors in one variable, used by
// the factor engine, Sturm counts, and minimal-polynomial arithmetic.
// QPoly is little-endian over Rat, ZPoly over BigInt.

#include <utility>
#include <vector>

#include "pedcurve/polynomial.hpp"

namespace pedcurve {

using QPoly = std::vector<Rat>;
using ZPoly = std::vector<BigInt>;

inline void qp_trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int qp_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }
inline bool qp_is_zero(const QPoly& p) { return p.empty(); }

inline QPoly qp_from_sparse(const Poly& p, VarId v) {
    QPoly r;
    int d = p.degree(v);
    if (d < 0) return r;
    r.assign(static_cast<std::size_t>(d) + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) {
        // requires p univariate in v
        if (!m.without(v).is_one())
            throw error(errc::internal, "qp_from_sparse: polynomial not univariate");
        r[m.exponent(v)] = c;
    }
    return r;
}

inline Poly qp_to_sparse(const QPoly& p, VarId v) {
    Poly r;
    for (std::size_t i = 0; i < p.size(); ++i)
        r.add_term(Monomial::var(v, static_cast<std::uint32_t>(i)), p[i]);
    return r;
}

inline QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    qp_trim(r);
    return r;
}

inline QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qp_trim(r);
    return r;
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qp_trim(r);
    return r;
}

inline QPoly qp_scale(const QPoly& a, const Rat& c) {
    if (c.is_zero()) return {};
    QPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw error(errc::division_by_zero, "univariate division by zero");
    QPoly r = a, q;
    if (a.size() < b.size()) return {q, r};
    q.assign(a.size() - b.size() + 1, Rat(0));
    Rat inv = b.back().inverse();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (r.size() <= i || r[i].is_zero()) {
            if (i + 1 == b.size()) break;
            continue;
        }
        Rat f = r[i] * inv;
        q[i - (b.size() - 1)] = f;
        for (std::size_t j = 0; j < b.size(); ++j) r[i - (b.size() - 1) + j] -= f * b[j];
        if (i + 1 == b.size()) break;
    }
    qp_trim(r);
    qp_trim(q);
    return {q, r};
}

inline QPoly qp_monic(const QPoly& a) {
    if (a.empty()) return a;
    return qp_scale(a, a.back().inverse());
}

inline QPoly qp_gcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        QPoly r = qp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return qp_monic(a);
}

// g = gcd, and s with s*a = g (mod m); enough to invert a modulo m.
inline QPoly qp_inverse_mod(const QPoly& a, const QPoly& m) {
    QPoly r0 = m, r1 = qp_divmod(a, m).second;
    QPoly s0 = {}, s1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r2] = qp_divmod(r0, r1);
        QPoly s2 = qp_sub(s0, qp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (qp_deg(r0) != 0)
        throw error(errc::internal, "qp_inverse_mod: arguments not coprime");
    return qp_scale(s0, r0[0].inverse());
}

inline QPoly qp_derivative(const QPoly& a) {
    QPoly r;
    for (std::size_t i = 1; i < a.size(); ++i)
        r.push_back(a[i] * Rat(static_cast<long long>(i)));
    qp_trim(r);
    return r;
}

inline Rat qp_eval(const QPoly& a, const Rat& x) {
    Rat r(0);
    for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

// Number of distinct real roots of a squarefree polynomial (Sturm).
inline int sturm_real_root_count(const QPoly& f) {
    if (qp_deg(f) <= 0) return 0;
    std::vector<QPoly> chain{f, qp_derivative(f)};
    while (qp_deg(chain.back()) > 0) {
        QPoly r = qp_divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    auto variations = [&](int at_inf) {  // +1 for +inf, -1 for -inf
        int prev = 0, var = 0;
        for (const auto& g : chain) {
            if (g.empty()) continue;
            int s = g.back().sign();
            if (at_inf < 0 && (qp_deg(g) % 2 == 1)) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++var;
            if (s != 0) prev = s;
        }
        return var;
    };
    return variations(-1) - variations(+1);
}

// --- integer-coefficient helpers ---

inline void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int zp_deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

inline BigInt zp_content(const ZPoly& p) {
    BigInt g(0);
    for (const auto& c : p) {
        g = BigInt::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

inline ZPoly zp_primitive(const ZPoly& p) {
    BigInt g = zp_content(p);
    if (g.is_zero() || g.is_one()) return p;
    ZPoly r = p;
    for (auto& c : r) c = c / g;
    return r;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    zp_trim(r);
    return r;
}

// Exact division over Z; false when b does not divide a.
inline bool zp_try_divide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.empty()) throw error(errc::division_by_zero, "zp division by zero");
    if (a.empty()) {
        q.clear();
        return true;
    }
    if (a.size() < b.size()) return false;
    ZPoly r = a;
    q.assign(a.size() - b.size() + 1, BigInt(0));
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (!(r.size() > i) || r[i].is_zero()) {
            if (i + 1 == b.size()) break;
            continue;
        }
        auto [f, rem] = BigInt::divmod(r[i], b.back());
        if (!rem.is_zero()) return false;
        q[i - (b.size() - 1)] = f;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i - (b.size() - 1) + j] -= f * b[j];
        if (i + 1 == b.size()) break;
    }
    zp_trim(r);
    if (!r.empty()) return false;
    zp_trim(q);
    return true;
}

// Clears denominators and integer content: p = unit * primitive ZPoly.
struct ZNormalized {
    Rat unit;
    ZPoly poly;
};

inline ZNormalized zp_from_qp(const QPoly& p) {
    if (p.empty()) return {Rat(1), {}};
    BigInt l(1);
    for (const auto& c : p) l = BigInt::lcm(l, c.den());
    ZPoly z;
    z.reserve(p.size());
    for (const auto& c : p) z.push_back(c.num() * (l / c.den()));
    BigInt g = zp_content(z);
    if (z.back().is_negative()) g = -g;
    for (auto& c : z) c = c / g;
    return {Rat(g, l), z};
}

inline QPoly qp_from_zp(const ZPoly& p) {
    QPoly r;
    r.reserve(p.size());
    for (const auto& c : p) r.emplace_back(c);
    return r;
}

}  // namespace pedcurve
