#pragma once

// End-to-end pedal construction: foot parametrization, implicit pedal
// equation for numeric or symbolic poles, the independent closed-form
// oracle for central conics, extraneous-factor filtering, and the
// limacon coefficient matcher.

#include <optional>
#include <utility>
#include <vector>

#include "pedcurve/conic.hpp"
#include "pedcurve/factor.hpp"
#include "pedcurve/resultant.hpp"
#include "pedcurve/univariate.hpp"

namespace pedcurve {

struct PedalResult {
    RationalFunction foot_x, foot_y;
    Poly implicit;
    Poly raw;
    std::vector<Poly> removed;
    Pole pole;
    Conic conic;
};

// Foot of the perpendicular from the pole onto the moving tangent,
// as rational functions of the parameter.
inline std::pair<RationalFunction, RationalFunction> pedal_foot_param(
    const Conic& c, const Pole& pole, const StandardVars& vars) {
    Parametrization par = rational_parametrization(c, vars);
    Line tang = tangent_at_param(c, par.x, par.y);
    return foot_of_perpendicular(tang, pole.x, pole.y);
}

inline PedalResult pedal_implicit(const Conic& c, const Pole& pole,
                                  const StandardVars& vars) {
    auto [fx, fy] = pedal_foot_param(c, pole, vars);
    ImplicitizationResult impl = implicitize(fx, fy, vars.t, vars.x, vars.y);
    return {fx, fy, impl.curve, impl.raw, impl.removed, pole, c};
}

// Closed form for the pedal of x^2/a2 + y^2/b2 = 1 about (p, q):
// (x^2 + y^2 - p x - q y)^2 - a2 (x - p)^2 - b2 (y - q)^2, normalized.
inline Poly central_pedal_oracle(const Rat& a2, const Rat& b2, const Point2& pole,
                                 const StandardVars& vars) {
    if (a2.sign() <= 0 || b2.sign() <= 0)
        throw error(errc::internal, "central_pedal_oracle needs positive a2, b2");
    Poly x = Poly::variable(vars.x), y = Poly::variable(vars.y);
    Poly core = x * x + y * y - x.scaled(pole.x) - y.scaled(pole.y);
    Poly dx = x - Poly(pole.x), dy = y - Poly(pole.y);
    Poly f = core * core - (dx * dx).scaled(a2) - (dy * dy).scaled(b2);
    return normalized(f);
}

// A factor is kept iff it vanishes at every sampled parametrization point.
inline FilterResult filter_relevant_factors(
    const std::vector<Poly>& factors,
    const std::pair<RationalFunction, RationalFunction>& param,
    const std::vector<Rat>& samples, const StandardVars& vars) {
    for (const Rat& s : samples) {
        std::map<VarId, Poly> at{{vars.t, Poly(s)}};
        if (substitute(param.first.den(), at).is_zero() ||
            substitute(param.second.den(), at).is_zero())
            throw error(errc::sample_hits_pole, "sample " + s.to_string() +
                                                     " hits a parametrization pole");
    }
    FilterResult out = filter_factors_by_vanishing(factors, param.first, param.second,
                                                   vars.t, vars.x, vars.y, samples);
    if (out.kept.empty())
        throw error(errc::all_factors_rejected, "every factor was rejected");
    return out;
}

// ------------------------------------------------------------- limacon ---

// Translated canonical limacon (x^2+y^2+a e y)^2 = a^2 (x^2+y^2):
// exact solutions of the coefficient identification under x -> X + r1,
// y -> Y + r2.
struct LimaconMatch {
    Rat a, e, r1, r2;
};

inline Poly limacon_canonical(const Rat& a, const Rat& e, const StandardVars& vars) {
    Poly x = Poly::variable(vars.x), y = Poly::variable(vars.y);
    Poly core = x * x + y * y + y.scaled(a * e);
    return core * core - (x * x + y * y).scaled(a * a);
}

inline std::vector<LimaconMatch> limacon_match(const Poly& q, const StandardVars& vars) {
    if (q.is_zero() || q.total_degree() != 4)
        throw error(errc::not_quartic, "limacon matcher needs a quartic");
    for (VarId v : q.variables())
        if (v != vars.x && v != vars.y)
            throw error(errc::not_quartic, "quartic must be in x and y only");
    auto coeff = [&](std::uint32_t i, std::uint32_t j) {
        return q.coefficient(Monomial::var(vars.x, i).times(Monomial::var(vars.y, j)));
    };
    std::vector<LimaconMatch> out;
    Rat q40 = coeff(4, 0);
    if (q40.is_zero()) return out;
    Rat s40 = Rat(1) / q40;  // scale so the X^4 coefficient is 1
    // the top form must be (X^2+Y^2)^2
    if (!(coeff(3, 1).is_zero() && coeff(1, 3).is_zero() &&
          coeff(2, 2) * s40 == Rat(2) && coeff(0, 4) * s40 == Rat(1)))
        return out;
    Rat q30 = coeff(3, 0) * s40, q21 = coeff(2, 1) * s40, q12 = coeff(1, 2) * s40,
        q03 = coeff(0, 3) * s40, q20 = coeff(2, 0) * s40, q11 = coeff(1, 1) * s40,
        q02 = coeff(0, 2) * s40, q10 = coeff(1, 0) * s40, q01 = coeff(0, 1) * s40,
        q00 = coeff(0, 0) * s40;
    if (q30 != q12 || q21 != q03) return out;
    Rat c1 = q30 / Rat(2), c2 = q21 / Rat(2);
    if (q11 != Rat(2) * c1 * c2) return out;
    if (q20 - q02 != c1 * c1 - c2 * c2) return out;
    Rat r1 = c1 / Rat(2);
    // univariate system in r2: with s = c2 - 2 r2,
    //   c0(r2) = r1^2 - r2^2 + c2 r2,       A(r2) = c1^2 + 2 c0 - q20,
    //   E2: 2 c1 c0 - 2 A r1 - q10 = 0
    //   E3: 2 c2 c0 - 2 A r2 - q01 = 0
    //   E4: c0^2 - A (r1^2 + r2^2) - q00 = 0
    QPoly r2v{Rat(0), Rat(1)};
    QPoly c0{r1 * r1, c2, Rat(-1)};
    QPoly A = qp_add(qp_scale(c0, Rat(2)), QPoly{c1 * c1 - q20});
    QPoly e2 = qp_sub(qp_scale(c0, Rat(2) * c1), qp_add(qp_scale(A, Rat(2) * r1), QPoly{q10}));
    QPoly e3 = qp_sub(qp_scale(c0, Rat(2) * c2),
                      qp_add(qp_mul(qp_scale(A, Rat(2)), r2v), QPoly{q01}));
    QPoly e4 = qp_sub(qp_mul(c0, c0),
                      qp_add(qp_mul(A, qp_add(qp_mul(r2v, r2v), QPoly{r1 * r1})), QPoly{q00}));
    QPoly g = qp_gcd(qp_gcd(e4, e3), e2);
    if (qp_is_zero(g)) return out;
    // rational roots of g via univariate factorization
    std::vector<Rat> roots;
    if (qp_deg(g) >= 1) {
        Factorization f = factor_univariate(qp_to_sparse(g, vars.t));
        for (const auto& [fac, mult] : f.factors) {
            if (fac.degree(vars.t) != 1) continue;
            Rat lin_a = fac.coeff_of(vars.t, 1).constant_value();
            Rat lin_b = fac.coeff_of(vars.t, 0).constant_value();
            roots.push_back(-lin_b / lin_a);
        }
    }
    for (const Rat& r2 : roots) {
        Rat c0v = r1 * r1 - r2 * r2 + c2 * r2;
        Rat Av = c1 * c1 + Rat(2) * c0v - q20;
        Rat sv = c2 - Rat(2) * r2;
        auto av = detail::rat_sqrt(Av);
        if (!av || av->is_zero()) continue;
        for (int sign : {1, -1}) {
            Rat a = sign > 0 ? *av : -*av;
            Rat e = sv / a;
            LimaconMatch m{a, e, r1, r2};
            // exact round trip: the translated limacon must reproduce q
            Poly built = translate_affine(limacon_canonical(a, e, vars),
                                          {{vars.x, r1}, {vars.y, r2}});
            if (normalized(built) == normalized(q)) out.push_back(m);
        }
    }
    return out;
}

}  // namespace pedcurve
