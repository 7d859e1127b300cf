#pragma once

// Resultant-based elimination: Sylvester matrices, a fraction-free Bareiss
// determinant, a subresultant-style PRS resultant, and implicitization of
// rational parametric curves. Both resultant paths equal the determinant
// of the Sylvester matrix with P's coefficient rows first.

#include <utility>
#include <vector>

#include "pedcurve/factor.hpp"
#include "pedcurve/polygcd.hpp"
#include "pedcurve/ratfunc.hpp"

namespace pedcurve {

struct PolyMatrix {
    std::size_t n = 0;
    std::vector<Poly> a;

    explicit PolyMatrix(std::size_t dim) : n(dim), a(dim * dim) {}
    Poly& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

inline PolyMatrix sylvester(const Poly& p, const Poly& q, VarId v) {
    int m = p.degree(v), n = q.degree(v);
    if (m <= 0 && n <= 0)
        throw error(errc::both_constant, "sylvester of two v-free polynomials");
    if (p.is_zero() || q.is_zero())
        throw error(errc::zero_polynomial, "sylvester with zero polynomial");
    std::size_t dim = static_cast<std::size_t>(m + n);
    PolyMatrix s(dim);
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k)
            s.at(static_cast<std::size_t>(row), static_cast<std::size_t>(row + k)) =
                p.coeff_of(v, static_cast<std::uint32_t>(m - k));
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k)
            s.at(static_cast<std::size_t>(n + row), static_cast<std::size_t>(row + k)) =
                q.coeff_of(v, static_cast<std::uint32_t>(n - k));
    return s;
}

// Fraction-free determinant (Bareiss). Exact over any integral domain.
inline Poly bareiss_determinant(PolyMatrix m) {
    std::size_t n = m.n;
    if (n == 0) return Poly(1);
    int sign = 1;
    Poly denom(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return Poly();
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) =
                    exact_div(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), denom);
            m.at(i, k) = Poly();
        }
        denom = m.at(k, k);
    }
    Poly det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

inline Poly resultant_bareiss(const Poly& p, const Poly& q, VarId v) {
    return bareiss_determinant(sylvester(p, q, v));
}

namespace detail {

// res(a, b) = lc(a)^deg(b) * prod b(alpha_i) over roots of a, computed by
// the pseudo-remainder recursion with exact power corrections.
inline Poly resultant_rec(const Poly& a, const Poly& b, VarId v) {
    if (a.is_zero() || b.is_zero()) return Poly();
    int da = a.degree(v), db = b.degree(v);
    if (da == 0 && db == 0) return Poly(1);
    if (da == 0) return a.pow(static_cast<std::uint64_t>(db));
    if (db == 0) return b.pow(static_cast<std::uint64_t>(da));
    if (da < db) {
        Poly r = resultant_rec(b, a, v);
        return (da & 1) && (db & 1) ? -r : r;
    }
    PseudoDivision pd = pseudo_division(a, b, v);
    if (pd.remainder.is_zero()) return Poly();
    int dr = pd.remainder.degree(v);
    Poly t = resultant_rec(b, pd.remainder, v);
    long long k = static_cast<long long>(da) - dr -
                  static_cast<long long>(pd.power) * db;
    Poly lcb = b.leading_coeff(v);
    Poly r0 = k >= 0 ? t * lcb.pow(static_cast<std::uint64_t>(k))
                     : exact_div(t, lcb.pow(static_cast<std::uint64_t>(-k)));
    return (da & 1) && (db & 1) ? -r0 : r0;
}

}  // namespace detail

inline Poly resultant_prs(const Poly& p, const Poly& q, VarId v) {
    if (p.degree(v) <= 0 && q.degree(v) <= 0)
        throw error(errc::both_constant, "resultant of two v-free polynomials");
    return detail::resultant_rec(p, q, v);
}

inline Poly resultant(const Poly& p, const Poly& q, VarId v) {
    return resultant_prs(p, q, v);
}

// --------------------------------------------------------------- filter ---

// A factor survives iff it vanishes at every sampled parametrization
// point (exactly; for symbolic poles "vanishes" means the zero
// polynomial in the remaining symbols).
struct FilterResult {
    std::vector<Poly> kept;
    std::vector<Poly> removed;
};

inline FilterResult filter_factors_by_vanishing(const std::vector<Poly>& factors,
                                                const RationalFunction& xr,
                                                const RationalFunction& yr, VarId vt,
                                                VarId vx, VarId vy,
                                                const std::vector<Rat>& samples) {
    FilterResult out;
    std::vector<std::pair<RationalFunction, RationalFunction>> points;
    points.reserve(samples.size());
    for (const Rat& s : samples) {
        RationalFunction xs = xr.at(vt, s);
        RationalFunction ys = yr.at(vt, s);
        points.emplace_back(std::move(xs), std::move(ys));
    }
    for (const Poly& f : factors) {
        bool vanishes = true;
        for (const auto& [xs, ys] : points) {
            std::map<VarId, RationalFunction> b{{vx, xs}, {vy, ys}};
            if (!substitute(f, b).is_zero()) {
                vanishes = false;
                break;
            }
        }
        (vanishes ? out.kept : out.removed).push_back(f);
    }
    return out;
}

// Default parameter samples; denominator zeros are skipped by callers.
inline std::vector<Rat> default_filter_samples() {
    return {Rat(1),  Rat(2),  Rat(3),     Rat(5),    Rat(7),
            Rat(11), Rat(-1), Rat(-2),    Rat(1, 2), Rat(1, 3)};
}

// ---------------------------------------------------------- implicitize ---

struct ImplicitizationResult {
    Poly curve;                // normalized, square-free, extraneous factors removed
    Poly raw;                  // the resultant as computed
    std::vector<Poly> removed; // stripped factors, normalized
};

inline ImplicitizationResult implicitize(const RationalFunction& xr,
                                         const RationalFunction& yr, VarId vt, VarId vx,
                                         VarId vy) {
    Poly cx = Poly::variable(vx) * xr.den() - xr.num();
    Poly cy = Poly::variable(vy) * yr.den() - yr.num();
    if (cx.degree(vt) <= 0 && cy.degree(vt) <= 0)
        throw error(errc::degenerate_parametrization,
                    "both cleared polynomials are parameter-free");
    Poly raw = cx.degree(vt) <= 0
                   ? cx.pow(static_cast<std::uint64_t>(cy.degree(vt)))
                   : (cy.degree(vt) <= 0
                          ? cy.pow(static_cast<std::uint64_t>(cx.degree(vt)))
                          : resultant(cx, cy, vt));
    if (raw.is_zero())
        throw error(errc::internal, "implicitize: resultant vanished identically");
    Poly sqf = squarefree_part(raw);
    // split into components when the square-free part is bivariate in the
    // output variables; with extra symbols it stays whole
    std::vector<Poly> factors;
    bool only_xy = true;
    for (VarId v : sqf.variables())
        if (v != vx && v != vy) only_xy = false;
    if (only_xy && !sqf.is_constant() && sqf.variables().size() >= 1) {
        Factorization f = factor_auto(sqf);
        for (const auto& [g, m] : f.factors) factors.push_back(g);
    } else {
        factors.push_back(sqf);
    }
    // keep samples clear of denominator zeros
    std::vector<Rat> samples;
    for (const Rat& s : default_filter_samples()) {
        std::map<VarId, Poly> at{{vt, Poly(s)}};
        if (substitute(xr.den(), at).is_zero() || substitute(yr.den(), at).is_zero())
            continue;
        samples.push_back(s);
        if (samples.size() >= 10) break;
    }
    if (samples.size() < 6)
        throw error(errc::sample_hits_pole, "fewer than 6 usable parameter samples");
    FilterResult fr =
        filter_factors_by_vanishing(factors, xr, yr, vt, vx, vy, samples);
    if (fr.kept.empty())
        throw error(errc::all_factors_rejected, "no factor vanishes on the curve");
    Poly curve(1);
    for (const Poly& f : fr.kept) curve *= f;
    ImplicitizationResult out;
    out.curve = normalized(curve);
    out.raw = raw;
    for (const Poly& f : fr.removed) out.removed.push_back(normalized(f));
    return out;
}

}  // namespace pedcurve
