#pragma once

// Exact conic primitives: classification, tangent (polar) lines,
// rational parametrizations, perpendicular feet, and the inside/on/outside
// position test.

#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "pedcurve/polygcd.hpp"
#include "pedcurve/ratfunc.hpp"
#include "pedcurve/vars.hpp"

namespace pedcurve {

struct Point2 {
    Rat x, y;
    friend bool operator==(const Point2& a, const Point2& b) {
        return a.x == b.x && a.y == b.y;
    }
};

// A pole for the pedal construction: either a numeric point or the
// symbolic point (xD, yD).
struct Pole {
    Poly x, y;
    bool symbolic = false;

    static Pole numeric(const Point2& p) { return {Poly(p.x), Poly(p.y), false}; }
    static Pole symbolic_point(const StandardVars& vars) {
        return {Poly::variable(vars.xD), Poly::variable(vars.yD), true};
    }

    Point2 as_point() const {
        if (symbolic) throw error(errc::internal, "symbolic pole has no numeric value");
        return {x.constant_value(), y.constant_value()};
    }
};

// Implicit line a*x + b*y + c = 0; coefficients may involve a parameter.
struct Line {
    Poly a, b, c;

    // divide out the common polynomial content and fix the sign
    Line normalized_line() const {
        Poly g = gcd_poly(gcd_poly(a, b), c);
        if (g.is_zero()) throw error(errc::degenerate_line, "zero line");
        Line l{exact_div(a, g), exact_div(b, g), exact_div(c, g)};
        const Poly* lead = !l.a.is_zero() ? &l.a : (!l.b.is_zero() ? &l.b : &l.c);
        if (lead->leading_coefficient().is_negative()) {
            l.a = -l.a;
            l.b = -l.b;
            l.c = -l.c;
        }
        return l;
    }
};

enum class ConicKind { ellipse, parabola, hyperbola, degenerate };

inline const char* conic_kind_name(ConicKind k) {
    switch (k) {
        case ConicKind::ellipse: return "ellipse";
        case ConicKind::parabola: return "parabola";
        case ConicKind::hyperbola: return "hyperbola";
        case ConicKind::degenerate: return "degenerate";
    }
    return "?";
}

inline ConicKind classify_conic(const Rat& A, const Rat& B, const Rat& C, const Rat& D,
                                const Rat& E, const Rat& F) {
    if (A.is_zero() && B.is_zero() && C.is_zero())
        throw error(errc::not_a_conic, "no quadratic part");
    // 4 * det of the symmetric matrix [[A,B/2,D/2],[B/2,C,E/2],[D/2,E/2,F]] * 2
    Rat det3 = A * (C * F * Rat(4) - E * E) - B * (B * F * Rat(2) - D * E) +
               D * (B * E - C * D * Rat(2));
    Rat disc = B * B - A * C * Rat(4);
    if (det3.is_zero()) return ConicKind::degenerate;
    if (disc.is_zero()) return ConicKind::parabola;
    return disc.is_negative() ? ConicKind::ellipse : ConicKind::hyperbola;
}

struct Conic {
    Rat A, B, C, D, E, F;
    ConicKind kind;

    static Conic from_coefficients(const Rat& A, const Rat& B, const Rat& C, const Rat& D,
                                   const Rat& E, const Rat& F) {
        return {A, B, C, D, E, F, classify_conic(A, B, C, D, E, F)};
    }

    static Conic from_poly(const Poly& p, const StandardVars& vars) {
        if (p.total_degree() != 2) throw error(errc::not_a_conic, "degree is not 2");
        for (VarId v : p.variables())
            if (v != vars.x && v != vars.y)
                throw error(errc::not_a_conic, "conic may involve only x and y");
        auto coeff = [&](std::uint32_t i, std::uint32_t j) {
            return p.coefficient(Monomial::var(vars.x, i).times(Monomial::var(vars.y, j)));
        };
        return from_coefficients(coeff(2, 0), coeff(1, 1), coeff(0, 2), coeff(1, 0),
                                 coeff(0, 1), coeff(0, 0));
    }

    Poly poly(const StandardVars& vars) const {
        Poly x = Poly::variable(vars.x), y = Poly::variable(vars.y);
        return x * x.scaled(A) + x * y.scaled(B) + y * y.scaled(C) + x.scaled(D) +
               y.scaled(E) + Poly(F);
    }

    Rat value_at(const Point2& p) const {
        return A * p.x * p.x + B * p.x * p.y + C * p.y * p.y + D * p.x + E * p.y + F;
    }

    bool contains(const Point2& p) const { return value_at(p).is_zero(); }

    // gradient (Qx, Qy) at a point
    std::pair<Rat, Rat> gradient(const Point2& p) const {
        return {A * p.x * Rat(2) + B * p.y + D, B * p.x + C * p.y * Rat(2) + E};
    }
};

// Polar line of p; for p on the conic this is the tangent there.
inline Line tangent_at(const Conic& c, const Point2& p) {
    if (!c.contains(p))
        throw error(errc::point_not_on_conic, "tangent point is not on the conic");
    Rat a = c.A * p.x * Rat(2) + c.B * p.y + c.D;
    Rat b = c.B * p.x + c.C * p.y * Rat(2) + c.E;
    Rat cc = c.D * p.x + c.E * p.y + c.F * Rat(2);
    Line l{Poly(a), Poly(b), Poly(cc)};
    if (l.a.is_zero() && l.b.is_zero())
        throw error(errc::degenerate_line, "polar line degenerates");
    return l.normalized_line();
}

// Tangent along a parametrized point (xr(t), yr(t)); coefficients are
// polynomials in the parameter.
inline Line tangent_at_param(const Conic& c, const RationalFunction& xr,
                             const RationalFunction& yr) {
    const Poly& xn = xr.num();
    const Poly& xd = xr.den();
    const Poly& yn = yr.num();
    const Poly& yd = yr.den();
    Poly a = xn.scaled(c.A * Rat(2)) * yd + yn.scaled(c.B) * xd + (xd * yd).scaled(c.D);
    Poly b = xn.scaled(c.B) * yd + yn.scaled(c.C * Rat(2)) * xd + (xd * yd).scaled(c.E);
    Poly cc = xn.scaled(c.D) * yd + yn.scaled(c.E) * xd + (xd * yd).scaled(c.F * Rat(2));
    Line l{a, b, cc};
    if (l.a.is_zero() && l.b.is_zero())
        throw error(errc::degenerate_line, "polar line degenerates");
    return l.normalized_line();
}

// Orthogonal projection of (px, py) onto the line, solved from the
// incidence + perpendicularity system in implicit form. Works for
// numeric points, symbolic poles and parameter-dependent lines alike.
inline std::pair<RationalFunction, RationalFunction> foot_of_perpendicular(
    const Line& l, const Poly& px, const Poly& py) {
    Poly den = l.a * l.a + l.b * l.b;
    if (den.is_zero()) throw error(errc::degenerate_line, "isotropic or zero line");
    Poly nx = l.b * l.b * px - l.a * l.b * py - l.a * l.c;
    Poly ny = l.a * l.a * py - l.a * l.b * px - l.b * l.c;
    return {RationalFunction(nx, den), RationalFunction(ny, den)};
}

inline Point2 foot_of_perpendicular(const Line& l, const Point2& d) {
    auto [fx, fy] = foot_of_perpendicular(l, Poly(d.x), Poly(d.y));
    return {fx.as_poly().constant_value(), fy.as_poly().constant_value()};
}

struct Parametrization {
    RationalFunction x, y;
    std::optional<Point2> missing;
};

namespace detail {

// rational square root: num and den both perfect squares
inline std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r.is_negative()) return std::nullopt;
    if (r.is_zero()) return Rat(0);
    auto isqrt = [](const BigInt& n) {
        if (n.is_zero()) return BigInt(0);
        BigInt x = BigInt(1).shl((n.bit_length() + 1) / 2);
        while (true) {
            BigInt y = (x + n / x).shr(1);
            if (y >= x) break;
            x = y;
        }
        return x;
    };
    BigInt sn = isqrt(r.num()), sd = isqrt(r.den());
    if (sn * sn == r.num() && sd * sd == r.den()) return Rat(sn, sd);
    return std::nullopt;
}

inline std::optional<Rat> solve_quadratic_rational(const Rat& a, const Rat& b,
                                                   const Rat& c) {
    // one rational root of a*z^2 + b*z + c, if any
    if (a.is_zero()) {
        if (b.is_zero()) return std::nullopt;
        return -c / b;
    }
    Rat disc = b * b - a * c * Rat(4);
    auto s = rat_sqrt(disc);
    if (!s) return std::nullopt;
    return (-b + *s) / (a * Rat(2));
}

inline std::optional<Point2> find_rational_point(const Conic& c) {
    // axis intersections first
    if (auto y0 = solve_quadratic_rational(c.C, c.E, c.F)) return Point2{Rat(0), *y0};
    if (auto x0 = solve_quadratic_rational(c.A, c.D, c.F)) return Point2{*x0, Rat(0)};
    // small-height abscissae: x = p/q, solve the y-quadratic
    for (long long q = 1; q <= 100; ++q)
        for (long long p = -100; p <= 100; ++p) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            Rat x(p, q);
            Rat qa = c.C;
            Rat qb = c.B * x + c.E;
            Rat qc = c.A * x * x + c.D * x + c.F;
            if (auto y0 = solve_quadratic_rational(qa, qb, qc)) return Point2{x, *y0};
        }
    return std::nullopt;
}

}  // namespace detail

// Rational parametrization covering all but at most one point.
inline Parametrization rational_parametrization(const Conic& c, const StandardVars& vars) {
    if (c.kind == ConicKind::degenerate)
        throw error(errc::not_a_conic, "cannot parametrize a degenerate conic");
    Poly t = Poly::variable(vars.t);
    // canonical central ellipse A x^2 + C y^2 + F = 0 with rational semi-axes
    if (c.kind == ConicKind::ellipse && c.B.is_zero() && c.D.is_zero() && c.E.is_zero()) {
        Rat a2 = -c.F / c.A, b2 = -c.F / c.C;
        auto a = detail::rat_sqrt(a2);
        auto b = detail::rat_sqrt(b2);
        if (a && b && !a->is_zero() && !b->is_zero()) {
            Poly one_mt2 = Poly(1) - t * t;
            Poly one_pt2 = Poly(1) + t * t;
            return {RationalFunction(one_mt2.scaled(*a), one_pt2),
                    RationalFunction(t.scaled(*b * Rat(2)), one_pt2),
                    Point2{-*a, Rat(0)}};
        }
    }
    // axis-aligned parabola solved for one coordinate, graph form
    if (c.kind == ConicKind::parabola && c.B.is_zero()) {
        if (!c.A.is_zero() && c.C.is_zero() && !c.E.is_zero()) {
            // y = -(A x^2 + D x + F)/E, x = lambda t with the smallest
            // positive integer lambda giving integral primitive coordinates
            for (long long lam = 1; lam <= 4096; ++lam) {
                Rat l(lam);
                Rat c2 = -c.A * l * l / c.E, c1 = -c.D * l / c.E, c0 = -c.F / c.E;
                if (!c2.is_integer() || !c1.is_integer() || !c0.is_integer()) continue;
                BigInt g = BigInt::gcd(BigInt::gcd(c2.num(), c1.num()),
                                       BigInt::gcd(c0.num(), BigInt(lam)));
                if (!(g.is_one())) continue;
                Poly xt = t.scaled(l);
                Poly yt = (t * t).scaled(c2) + t.scaled(c1) + Poly(c0);
                return {RationalFunction(xt), RationalFunction(yt), std::nullopt};
            }
        }
        if (!c.C.is_zero() && c.A.is_zero() && !c.D.is_zero()) {
            for (long long lam = 1; lam <= 4096; ++lam) {
                Rat l(lam);
                Rat c2 = -c.C * l * l / c.D, c1 = -c.E * l / c.D, c0 = -c.F / c.D;
                if (!c2.is_integer() || !c1.is_integer() || !c0.is_integer()) continue;
                BigInt g = BigInt::gcd(BigInt::gcd(c2.num(), c1.num()),
                                       BigInt::gcd(c0.num(), BigInt(lam)));
                if (!(g.is_one())) continue;
                Poly yt = t.scaled(l);
                Poly xt = (t * t).scaled(c2) + t.scaled(c1) + Poly(c0);
                return {RationalFunction(xt), RationalFunction(yt), std::nullopt};
            }
        }
    }
    // generic path: pencil of slope-t lines through a rational point
    auto p0 = detail::find_rational_point(c);
    if (!p0)
        throw error(errc::no_rational_point,
                    "no rational point found by the bounded search");
    auto [gx, gy] = c.gradient(*p0);
    // second intersection of (x0 + s, y0 + t s): alpha s^2 + beta s = 0
    Poly alpha = (t * t).scaled(c.C) + t.scaled(c.B) + Poly(c.A);
    Poly beta = t.scaled(gy) + Poly(gx);
    RationalFunction s(-beta, alpha);
    RationalFunction xr = RationalFunction(Poly(p0->x)) + s;
    RationalFunction yr =
        RationalFunction(Poly(p0->y)) + RationalFunction(t) * s;
    std::optional<Point2> missing;
    if (gy.is_zero()) {
        // vertical tangent at the base point: the base point is missed
        missing = p0;
    } else if (!c.C.is_zero()) {
        Rat y1 = -(c.B * p0->x + c.E) / c.C - p0->y;
        if (y1 != p0->y) missing = Point2{p0->x, y1};
        else missing = p0;  // unreachable given gy != 0, kept for safety
    }
    return {xr, yr, missing};
}

enum class PointPosition { inside, on, outside };

inline const char* point_position_name(PointPosition p) {
    switch (p) {
        case PointPosition::inside: return "inside";
        case PointPosition::on: return "on";
        case PointPosition::outside: return "outside";
    }
    return "?";
}

// Sign test of the defining form, oriented so the focus side is inside.
inline PointPosition point_position(const Conic& c, const Point2& p) {
    if (c.kind != ConicKind::ellipse && c.kind != ConicKind::parabola)
        throw error(errc::unsupported_kind, "position test needs an ellipse or parabola");
    Rat v = c.value_at(p);
    if (v.is_zero()) return PointPosition::on;
    Rat lead = !c.A.is_zero() ? c.A : c.C;
    if (lead.is_negative()) v = -v;
    return v.is_negative() ? PointPosition::inside : PointPosition::outside;
}

}  // namespace pedcurve
