#pragma once

// Singular points of plane curves: rational singular-point search via
// resultants, tangent cones, crunode/acnode/cusp classification, pencil
// parametrizations of singular cubics, derivative-vector cusp
// certificates, and self-intersection parameter pairs.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pedcurve/conic.hpp"
#include "pedcurve/factor.hpp"
#include "pedcurve/resultant.hpp"
#include "pedcurve/univariate.hpp"

namespace pedcurve {

enum class SingularKind { crunode, acnode, cusp, higher, undetermined };

inline const char* singular_kind_name(SingularKind k) {
    switch (k) {
        case SingularKind::crunode: return "crunode";
        case SingularKind::acnode: return "acnode";
        case SingularKind::cusp: return "cusp";
        case SingularKind::higher: return "higher";
        case SingularKind::undetermined: return "undetermined";
    }
    return "?";
}

struct PencilParametrization {
    RationalFunction x, y;
    Point2 base_point;
};

struct SelfIntersection {
    Poly minpoly;                 // squarefree minimal polynomial of the parameter values
    std::optional<Point2> point;  // common image when it is rational
    bool conjugate_pair;          // both roots of one irreducible quadratic
};

struct SingularityReport {
    Point2 point;
    int multiplicity = 0;
    Poly tangent_cone;  // homogeneous in u, v
    SingularKind kind = SingularKind::undetermined;
    Rat cone_discriminant;
    bool isolated_real_point = false;  // acnode: not on the visible real branch
    // cusp certificate data
    std::optional<Rat> t0;
    std::vector<std::pair<Rat, Rat>> derivative_vectors;  // V1..V3 at t0
    // crunode certificate data
    std::vector<SelfIntersection> pairs;
};

struct SingularPoints {
    std::vector<Point2> points;
    int residual = 0;  // real nonrational candidate abscissae left unresolved
};

namespace sdetail {

inline std::vector<Rat> rational_roots(const Poly& univ, VarId v) {
    std::vector<Rat> roots;
    if (univ.is_zero() || univ.degree(v) < 1) return roots;
    Factorization f = factor_univariate(univ);
    for (const auto& [fac, mult] : f.factors) {
        if (fac.degree(v) != 1) continue;
        Rat a = fac.coeff_of(v, 1).constant_value();
        Rat b = fac.coeff_of(v, 0).constant_value();
        roots.push_back(-b / a);
    }
    return roots;
}

inline Poly univariate_gcd3(const Poly& a, const Poly& b, const Poly& c) {
    return gcd_poly(gcd_poly(a, b), c);
}

}  // namespace sdetail

// All rational common zeros of {F, Fx, Fy}; residual counts the real
// nonrational candidate abscissae that exact search cannot resolve.
inline SingularPoints singular_points_rational(const Poly& f, const StandardVars& vars) {
    if (f.is_constant()) throw error(errc::constant_input, "constant curve");
    if (normalized(squarefree_part(f)) != normalized(f))
        throw error(errc::not_square_free, "curve polynomial is not square-free");
    Poly fx = f.differentiate(vars.x), fy = f.differentiate(vars.y);
    SingularPoints out;
    if (fx.is_zero() && fy.is_zero()) return out;
    // candidate abscissae: x-values where all three pairs can share a y-root
    auto res_y = [&](const Poly& a, const Poly& b) -> Poly {
        if (a.is_zero() || b.is_zero()) return Poly();
        if (a.degree(vars.y) <= 0 && b.degree(vars.y) <= 0) return gcd_poly(a, b);
        return resultant(a, b, vars.y);
    };
    Poly r1 = res_y(fx, fy), r2 = res_y(f, fx), r3 = res_y(f, fy);
    Poly g = sdetail::univariate_gcd3(r1, r2, r3);
    if (g.is_zero())
        throw error(errc::internal, "singular candidates degenerate");
    if (g.is_constant()) return out;
    if (g.degree(vars.x) < 1) return out;  // candidates off the x-line only
    Poly gs = squarefree_part(g);
    std::vector<Rat> xs = sdetail::rational_roots(gs, vars.x);
    for (const Rat& x0 : xs) {
        std::map<VarId, Poly> bind{{vars.x, Poly(x0)}};
        Poly fy0 = substitute(f, bind).as_poly();
        Poly fxy0 = substitute(fx, bind).as_poly();
        Poly fyy0 = substitute(fy, bind).as_poly();
        Poly gy = sdetail::univariate_gcd3(fy0, fxy0, fyy0);
        if (gy.is_zero() || gy.is_constant()) continue;
        for (const Rat& y0 : sdetail::rational_roots(squarefree_part(gy), vars.y)) {
            Point2 p{x0, y0};
            std::map<VarId, Rat> at{{vars.x, x0}, {vars.y, y0}};
            if (f.evaluate(at).is_zero() && fx.evaluate(at).is_zero() &&
                fy.evaluate(at).is_zero())
                out.points.push_back(p);
        }
    }
    int real_roots = sturm_real_root_count(qp_from_sparse(gs, vars.x));
    out.residual = real_roots - static_cast<int>(xs.size());
    if (out.residual < 0) out.residual = 0;
    return out;
}

// Multiplicity and tangent cone at a point of the curve: translate the
// point to the origin, take the lowest nonzero homogeneous part, and
// express it in the local variables u, v.
inline std::pair<int, Poly> tangent_cone(const Poly& f, const Point2& p,
                                         const StandardVars& vars) {
    std::map<VarId, Rat> at{{vars.x, p.x}, {vars.y, p.y}};
    if (!f.evaluate(at).is_zero())
        throw error(errc::point_not_on_curve, "tangent cone needs a curve point");
    Poly shifted = translate_affine(f, {{vars.x, p.x}, {vars.y, p.y}});
    unsigned total = shifted.total_degree();
    for (unsigned k = 0; k <= total; ++k) {
        Poly h = shifted.homogeneous_component(k);
        if (!h.is_zero()) {
            Poly cone = h.rename_var(vars.x, vars.u).rename_var(vars.y, vars.v);
            return {static_cast<int>(k), cone};
        }
    }
    throw error(errc::internal, "zero polynomial has no tangent cone");
}

// Rational parametrization of a singular cubic by the pencil of slope-t
// lines through a double point.
inline PencilParametrization pencil_parametrization(const Poly& f, const Point2& p,
                                                    const StandardVars& vars) {
    if (f.total_degree() != 3) throw error(errc::not_cubic, "pencil needs a cubic");
    // substitute x = px + u, y = py + t u and read off the third root
    std::map<VarId, Poly> bind{
        {vars.x, Poly(p.x) + Poly::variable(vars.u)},
        {vars.y, Poly(p.y) + Poly::variable(vars.t) * Poly::variable(vars.u)}};
    Poly g = substitute(f, bind).as_poly();
    if (!g.coeff_of(vars.u, 0).is_zero() || !g.coeff_of(vars.u, 1).is_zero())
        throw error(errc::not_double_point, "base point is not a double point");
    Poly c2 = g.coeff_of(vars.u, 2), c3 = g.coeff_of(vars.u, 3);
    if (c3.is_zero())
        throw error(errc::not_double_point, "pencil degenerates for generic slope");
    RationalFunction u_root(-c2, c3);
    RationalFunction xr = RationalFunction(Poly(p.x)) + u_root;
    RationalFunction yr = RationalFunction(Poly(p.y)) +
                          RationalFunction(Poly::variable(vars.t)) * u_root;
    return {xr, yr, p};
}

// V1..Vk: successive exact derivative vectors of the parametrization at t0.
inline std::vector<std::pair<Rat, Rat>> derivative_vectors(const PencilParametrization& p,
                                                           const Rat& t0, int k,
                                                           const StandardVars& vars) {
    std::map<VarId, Rat> at{{vars.t, t0}};
    if (p.x.den().evaluate(at).is_zero() || p.y.den().evaluate(at).is_zero())
        throw error(errc::pole_at_t0, "derivative vectors at a parametrization pole");
    std::vector<std::pair<Rat, Rat>> out;
    RationalFunction dx = p.x, dy = p.y;
    for (int i = 0; i < k; ++i) {
        dx = dx.derivative(vars.t);
        dy = dy.derivative(vars.t);
        out.emplace_back(dx.evaluate(at), dy.evaluate(at));
    }
    return out;
}

// V1(t0) = 0, V2(t0) != 0, and V2, V3 linearly independent.
inline bool cusp_certificate(const PencilParametrization& p, const Rat& t0,
                             const StandardVars& vars) {
    auto v = derivative_vectors(p, t0, 3, vars);
    const auto& [v1x, v1y] = v[0];
    const auto& [v2x, v2y] = v[1];
    const auto& [v3x, v3y] = v[2];
    if (!v1x.is_zero() || !v1y.is_zero()) return false;
    if (v2x.is_zero() && v2y.is_zero()) return false;
    return !(v2x * v3y - v2y * v3x).is_zero();
}

// Solves x(t1) = x(t2), y(t1) = y(t2), t1 != t2 exactly. Entries carry the
// squarefree minimal polynomial of the parameter values; for an
// irreducible quadratic with constant image modulo it, both conjugate
// roots map to the recorded rational point.
inline std::vector<SelfIntersection> self_intersection_pairs(
    const PencilParametrization& p, const StandardVars& vars) {
    VarId t1 = vars.u, t2 = vars.v;  // local names for the parameter pair
    auto cross = [&](const Poly& n, const Poly& d) {
        Poly n1 = n.rename_var(vars.t, t1), d1 = d.rename_var(vars.t, t1);
        Poly n2 = n.rename_var(vars.t, t2), d2 = d.rename_var(vars.t, t2);
        Poly c = n1 * d2 - n2 * d1;
        Poly diff = Poly::variable(t1) - Poly::variable(t2);
        return exact_div(c, diff);  // antisymmetric in (t1, t2)
    };
    Poly g1 = cross(p.x.num(), p.x.den());
    Poly g2 = cross(p.y.num(), p.y.den());
    std::vector<SelfIntersection> out;
    if (g1.is_zero() || g2.is_zero())
        throw error(errc::internal, "degenerate self-intersection system");
    Poly r = (g1.degree(t2) <= 0 && g2.degree(t2) <= 0) ? gcd_poly(g1, g2)
                                                        : resultant(g1, g2, t2);
    if (r.is_zero()) throw error(errc::internal, "self-intersection resultant vanished");
    if (r.is_constant() || r.degree(t1) < 1) return out;
    Poly rt = normalized(squarefree_part(r)).rename_var(t1, vars.t);
    Factorization f = factor_univariate(rt);
    for (const auto& [fac, mult] : f.factors) {
        if (fac.degree(vars.t) < 1) continue;
        QPoly m = qp_from_sparse(fac, vars.t);
        QPoly xd = qp_from_sparse(p.x.den(), vars.t), xn = qp_from_sparse(p.x.num(), vars.t);
        QPoly yd = qp_from_sparse(p.y.den(), vars.t), yn = qp_from_sparse(p.y.num(), vars.t);
        if (qp_deg(qp_gcd(m, xd)) != 0 || qp_deg(qp_gcd(m, yd)) != 0)
            continue;  // parameter values sit on a pole: no curve point
        if (fac.degree(vars.t) == 1) {
            Rat rroot = -fac.coeff_of(vars.t, 0).constant_value() /
                        fac.coeff_of(vars.t, 1).constant_value();
            std::map<VarId, Rat> at{{vars.t, rroot}};
            Rat xv = p.x.evaluate(at), yv = p.y.evaluate(at);
            // partner parameter with the same image, distinct from rroot
            QPoly hx = qp_sub(xn, qp_scale(xd, xv));
            QPoly hy = qp_sub(yn, qp_scale(yd, yv));
            QPoly h = qp_gcd(hx, hy);
            QPoly lin{-rroot, Rat(1)};
            while (!qp_is_zero(h) && qp_deg(h) > 0 &&
                   qp_is_zero(qp_divmod(h, lin).second))
                h = qp_divmod(h, lin).first;
            if (qp_deg(h) < 1) continue;  // no distinct partner
            Poly pair_min = normalized(qp_to_sparse(qp_mul(h, lin), vars.t));
            out.push_back({pair_min, Point2{xv, yv}, false});
        } else {
            // x and y must be constant modulo the minimal polynomial
            QPoly xr = qp_divmod(qp_mul(xn, qp_inverse_mod(xd, m)), m).second;
            QPoly yr = qp_divmod(qp_mul(yn, qp_inverse_mod(yd, m)), m).second;
            if (qp_deg(xr) > 0 || qp_deg(yr) > 0) continue;
            Rat xv = qp_deg(xr) == 0 ? xr[0] : Rat(0);
            Rat yv = qp_deg(yr) == 0 ? yr[0] : Rat(0);
            out.push_back({normalized(fac), Point2{xv, yv},
                           fac.degree(vars.t) == 2});
        }
    }
    return out;
}

// Full classification at a singular point, with certificates.
inline SingularityReport classify_singularity(const Poly& f, const Point2& p,
                                              const StandardVars& vars) {
    std::map<VarId, Rat> at{{vars.x, p.x}, {vars.y, p.y}};
    if (!f.evaluate(at).is_zero())
        throw error(errc::point_not_on_curve, "classification needs a curve point");
    if (!f.differentiate(vars.x).evaluate(at).is_zero() ||
        !f.differentiate(vars.y).evaluate(at).is_zero())
        throw error(errc::not_singular, "gradient does not vanish");
    auto [m, cone] = tangent_cone(f, p, vars);
    SingularityReport rep;
    rep.point = p;
    rep.multiplicity = m;
    rep.tangent_cone = cone;
    if (m >= 3) {
        rep.kind = SingularKind::higher;
        return rep;
    }
    Rat c20 = cone.coefficient(Monomial::var(vars.u, 2));
    Rat c11 = cone.coefficient(Monomial::var(vars.u, 1).times(Monomial::var(vars.v, 1)));
    Rat c02 = cone.coefficient(Monomial::var(vars.v, 2));
    Rat disc = c11 * c11 - Rat(4) * c20 * c02;
    rep.cone_discriminant = disc;
    if (disc.sign() > 0) {
        rep.kind = SingularKind::crunode;
        if (f.total_degree() == 3) {
            PencilParametrization par = pencil_parametrization(f, p, vars);
            for (auto& si : self_intersection_pairs(par, vars))
                if (si.point && *si.point == p) rep.pairs.push_back(si);
        }
        return rep;
    }
    if (disc.sign() < 0) {
        rep.kind = SingularKind::acnode;
        rep.isolated_real_point = true;
        return rep;
    }
    // repeated tangent: certificate-based cusp test for cubics
    if (f.total_degree() != 3) {
        rep.kind = SingularKind::undetermined;
        return rep;
    }
    if (c02.is_zero()) {
        // repeated tangent is vertical: the slope pencil cannot reach it
        rep.kind = SingularKind::undetermined;
        return rep;
    }
    Rat t0 = -c11 / (Rat(2) * c02);
    PencilParametrization par = pencil_parametrization(f, p, vars);
    rep.t0 = t0;
    for (auto& vpair : derivative_vectors(par, t0, 3, vars))
        rep.derivative_vectors.push_back(vpair);
    rep.kind = cusp_certificate(par, t0, vars) ? SingularKind::cusp
                                               : SingularKind::undetermined;
    return rep;
}

}  // namespace pedcurve
