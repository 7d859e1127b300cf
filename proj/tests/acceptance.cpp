// Acceptance suite: runs every criterion at its stated tolerance and
// prints one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pedcurve/cli.hpp"
#include "pedcurve/pedcurve.hpp"
#include "test_util.hpp"

using namespace pedcurve;
using testutil::Rng;
using testutil::Session;

namespace {

struct Check {
    std::vector<std::string> failures;
    void operator()(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

struct Criterion {
    std::string id;
    std::string description;
    double limit_seconds;
    std::function<void(Check&)> run;
};

// the degree-10 ellipse eliminant for pole (1, 7), as printed
const char* kP10 =
    "16*x^10 + 25*y^10 + 116*x^2*y^8 + 214*x^4*y^6 + 196*x^6*y^4 + 89*x^8*y^2"
    " - 96*x^9 - 1050*y^9 - 132*x*y^8 - 3948*x^2*y^7 - 492*x^3*y^6 - 5544*x^4*y^5"
    " - 684*x^5*y^4 - 3444*x^6*y^3 - 420*x^7*y^2 - 798*x^8*y"
    " + 1065*x^8 + 17991*y^8 + 4396*x*y^7 + 52284*x^2*y^6 + 12432*x^3*y^5"
    " + 51660*x^4*y^4 + 11676*x^5*y^3 + 18432*x^6*y^2 + 3640*x^7*y"
    " - 2820*x^7 - 155148*y^7 - 55748*x*y^6 - 318248*x^2*y^5 - 108736*x^3*y^4"
    " - 184912*x^4*y^3 - 55808*x^5*y^2 - 21812*x^6*y"
    " - 45548*x^6 + 610117*y^6 + 306376*x*y^5 + 629232*x^2*y^4 + 318920*x^3*y^3"
    " + 1044*x^4*y^2 + 26908*x^5*y + 191556*x^5"
    " + 227934*y^5 - 328152*x*y^4 + 2239888*x^2*y^3 + 411952*x^3*y^2 + 1211700*x^4*y"
    " - 1148762*x^4 - 11708291*y^4 - 3671304*x*y^3 - 12244380*x^2*y^2 - 3039120*x^3*y"
    " + 1714852*x^3 + 41625976*y^3 + 13815404*x*y^2 + 14067452*x^2*y + 2699108*x^2"
    " - 49005913*y^2 - 10441508*x*y - 6620292*x - 1806462*y + 3210921";

// coefficient groups of the generic parabola pedal cubic; the x^2 group is
// the sign-corrected one forced by the (-2, 6) specialization
Poly symbolic_cubic_golden(Session& s) {
    Poly x = Poly::variable(s.vars.x), y = Poly::variable(s.vars.y);
    Poly lead = s("xD^2 + yD^2 - 2*yD + 1");
    Poly cx2 = s("xD^2*yD + yD^3 - xD^2 - 3*yD^2 + 3*yD - 1");
    Poly cxy = s("xD^3 + xD*yD^2 - 2*xD*yD + xD");
    Poly cy2 = s("2*xD^2*yD + 2*yD^3 - 4*yD^2 + 2*yD");
    Poly cy = s("xD^2*yD^2 + yD^4 - 2*yD^3 + yD^2");
    Poly cx = s("xD^3*yD + xD*yD^3 - 2*xD^3 - 4*xD*yD^2 + 5*xD*yD - 2*xD");
    Poly c0 = s("xD^4 + xD^2*yD^2 - 2*xD^2*yD + xD^2");
    return lead * y.pow(3) + lead * x.pow(2) * y - cx2 * x.pow(2) - cxy * x * y -
           cy2 * y.pow(2) + cy * y + cx * x + c0;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"C01", "symbolic parabola pedal reproduces the generic cubic", 5.0,
                        [](Check& check) {
        Session s;
        Conic parab = Conic::from_poly(s(testutil::kParabola), s.vars);
        PedalResult pr = pedal_implicit(parab, Pole::symbolic_point(s.vars), s.vars);
        Poly golden = symbolic_cubic_golden(s);
        check(pr.implicit == normalized(golden), "generic cubic differs from the golden value");
        Poly lead = s("xD^2 + yD^2 - 2*yD + 1");
        check(pr.implicit.coeff_of(s.vars.y, 3) == lead, "y^3 coefficient group");
        Poly x2y = pr.implicit.coeff_of(s.vars.y, 1).coeff_of(s.vars.x, 2);
        check(x2y == lead, "x^2 y coefficient group");
    }});

    criteria.push_back({"C02", "numeric poles match the three printed cubics and the specialization",
                        6.0, [](Check& check) {
        Session s;
        Conic parab = Conic::from_poly(s(testutil::kParabola), s.vars);
        PedalResult sym = pedal_implicit(parab, Pole::symbolic_point(s.vars), s.vars);
        struct Case { long long px, py; const char* text; };
        for (Case c : {Case{-2, 6, testutil::kEq5}, Case{4, 4, testutil::kEq6},
                       Case{-6, 2, testutil::kEq8}}) {
            auto t0 = std::chrono::steady_clock::now();
            PedalResult pr =
                pedal_implicit(parab, Pole::numeric({Rat(c.px), Rat(c.py)}), s.vars);
            check(pr.implicit == s(c.text),
                  "pedal at (" + std::to_string(c.px) + "," + std::to_string(c.py) + ")");
            Poly spec = substitute(sym.implicit,
                                   std::map<VarId, Poly>{{s.vars.xD, Poly(c.px)},
                                                         {s.vars.yD, Poly(c.py)}})
                            .as_poly();
            check(normalized(spec) == pr.implicit, "specialization agrees with direct run");
            check(seconds_since(t0) < 2.0, "single-pole runtime under 2 s");
        }
    }});

    criteria.push_back({"C03", "the three pedal cubics are irreducible", 15.0,
                        [](Check& check) {
        Session s;
        for (const char* text : {testutil::kEq5, testutil::kEq6, testutil::kEq8}) {
            auto t0 = std::chrono::steady_clock::now();
            Factorization f = factor_bivariate(s(text));
            check(f.factors.size() == 1 && f.factors[0].second == 1,
                  std::string("irreducibility of ") + text);
            check(verify_product(s(text), f), "factorization reconstructs the cubic");
            check(seconds_since(t0) < 5.0, "irreducibility runtime under 5 s");
        }
    }});

    criteria.push_back({"C04", "cusp certificate at (4,4): pencil, V1..V3, certificate", 1.0,
                        [](Check& check) {
        Session s;
        PencilParametrization p =
            pencil_parametrization(s(testutil::kEq6), {Rat(4), Rat(4)}, s.vars);
        check(p.x == RationalFunction(s("4*t^3 - 4*t^2 - 1"), s("t*(t^2 + 1)")),
              "x_1(t) equals the printed parametrization");
        check(p.y == RationalFunction(-s("4*t - 3"), s("t^2 + 1")),
              "y_1(t) equals the printed parametrization");
        auto v = derivative_vectors(p, Rat(-1, 2), 3, s.vars);
        check(v[0] == std::pair<Rat, Rat>{Rat(0), Rat(0)}, "V1(-1/2) = 0");
        check(v[1].first == Rat(32, 5) * Rat(2) && v[1].second == Rat(32, 5) * Rat(-1),
              "V2(-1/2) = 32/5 (2,-1)");
        check(v[2].first == Rat(384, 25) * Rat(7) && v[2].second == Rat(384, 25) * Rat(-1),
              "V3(-1/2) = 384/25 (7,-1)");
        check(cusp_certificate(p, Rat(-1, 2), s.vars), "certificate accepts");
        SingularityReport rep =
            classify_singularity(s(testutil::kEq6), {Rat(4), Rat(4)}, s.vars);
        check(rep.kind == SingularKind::cusp, "classification is cusp");
    }});

    criteria.push_back({"C05", "crunode at (-6,2): minimal polynomial 2t^2-6t+1", 2.0,
                        [](Check& check) {
        Session s;
        PencilParametrization p =
            pencil_parametrization(s(testutil::kEq8), {Rat(-6), Rat(2)}, s.vars);
        auto pairs = self_intersection_pairs(p, s.vars);
        check(pairs.size() == 1, "exactly one self-intersection pair");
        if (pairs.size() == 1) {
            Poly m = pairs[0].minpoly;
            check(m == s("2*t^2 - 6*t + 1"), "minimal polynomial value");
            check(squarefree_part(m) == m, "minimal polynomial is square-free");
            check(normalized(m) == normalized(s("(t - 3/2)^2 - 7/4")),
                  "roots are 3/2 +- sqrt(7)/2");
            check(divides(m, p.x.num() + p.x.den().scaled(Rat(6))),
                  "x(t) = -6 modulo the minimal polynomial");
            check(divides(m, p.y.num() - p.y.den().scaled(Rat(2))),
                  "y(t) = 2 modulo the minimal polynomial");
            check(pairs[0].point && *pairs[0].point == Point2{Rat(-6), Rat(2)},
                  "common image is (-6, 2)");
        }
    }});

    criteria.push_back({"C06", "acnode at (-2,6): cone u^2-2uv+6v^2, discriminant -20", 2.0,
                        [](Check& check) {
        Session s;
        SingularPoints sp = singular_points_rational(s(testutil::kEq5), s.vars);
        check(sp.points.size() == 1 && sp.points[0] == Point2{Rat(-2), Rat(6)},
              "singular set is exactly {(-2, 6)}");
        check(sp.residual == 0, "no unresolved candidates");
        SingularityReport rep =
            classify_singularity(s(testutil::kEq5), {Rat(-2), Rat(6)}, s.vars);
        check(rep.tangent_cone == s("u^2 - 2*u*v + 6*v^2"), "tangent cone");
        check(rep.cone_discriminant == Rat(-20), "cone discriminant");
        check(rep.kind == SingularKind::acnode, "classified as acnode");
        check(rep.isolated_real_point, "flagged as an isolated real point off the branch");
    }});

    criteria.push_back({"C07", "trichotomy: inside/on/outside maps to acnode/cusp/crunode",
                        60.0, [](Check& check) {
        Session s;
        Conic parab = Conic::from_poly(s(testutil::kParabola), s.vars);
        Rng rng(777);
        std::vector<std::pair<Point2, PointPosition>> poles;
        // on-parabola poles (2t, t^2) of coordinate height <= 10, t != 0
        for (Rat t : {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1, 2), Rat(-3, 2)})
            poles.push_back({Point2{Rat(2) * t, t * t}, PointPosition::on});
        // random off-conic poles of height <= 10
        int inside = 0, outside = 0;
        while (inside < 7 || outside < 7) {
            Point2 p{rng.rat(10, 10), rng.rat(10, 10)};
            PointPosition pos = point_position(parab, p);
            if (pos == PointPosition::inside && inside < 7) {
                if (p == Point2{Rat(0), Rat(1)}) continue;  // focus: pedal degenerates
                poles.push_back({p, pos});
                ++inside;
            } else if (pos == PointPosition::outside && outside < 7) {
                poles.push_back({p, pos});
                ++outside;
            }
        }
        check(poles.size() == 20, "twenty poles sampled");
        for (const auto& [pole, pos] : poles) {
            PedalResult pr = pedal_implicit(parab, Pole::numeric(pole), s.vars);
            if (pr.implicit.total_degree() != 3) {
                check(false, "degenerate pedal not rejected for (" + pole.x.to_string() +
                                 "," + pole.y.to_string() + ")");
                continue;
            }
            SingularityReport rep = classify_singularity(pr.implicit, pole, s.vars);
            SingularKind want = pos == PointPosition::inside
                                    ? SingularKind::acnode
                                    : (pos == PointPosition::on ? SingularKind::cusp
                                                                : SingularKind::crunode);
            check(rep.kind == want, "pole (" + pole.x.to_string() + "," +
                                        pole.y.to_string() + ") classified as " +
                                        singular_kind_name(rep.kind));
        }
    }});

    criteria.push_back({"C08", "ellipse pole (1,7): eliminant = printed quartic x recomputed sextic",
                        30.0, [](Check& check) {
        Session s;
        Poly P = s(kP10);
        Poly P1 = s(testutil::kP1Pole17);
        check(P.total_degree() == 10, "eliminant has degree 10");
        Factorization f = factor_bivariate(P);
        check(f.factors.size() == 2, "two irreducible factors");
        if (f.factors.size() == 2) {
            const Poly& quartic = f.factors[0].first;
            const Poly& sextic = f.factors[1].first;
            check(quartic.total_degree() == 4 && sextic.total_degree() == 6,
                  "degrees are 4 and 6");
            check(quartic == P1, "quartic equals the printed factor");
            check(quartic ==
                      central_pedal_oracle(Rat(25), Rat(16), {Rat(1), Rat(7)}, s.vars),
                  "quartic equals the central-pedal closed form");
            auto cofactor = try_divide(P, P1);
            check(cofactor.has_value() && normalized(*cofactor) == sextic,
                  "sextic equals the exact cofactor P / P1");
            check(verify_product(P, f), "product reconstructs the eliminant");
            // exact sampling replaces dragging the point: the sextic is extraneous
            Conic ell = Conic::from_poly(s(testutil::kEllipse), s.vars);
            auto param = pedal_foot_param(ell, Pole::numeric({Rat(1), Rat(7)}), s.vars);
            FilterResult fr = filter_relevant_factors(
                {quartic, sextic}, param,
                {Rat(1), Rat(2), Rat(3), Rat(5), Rat(7), Rat(11)}, s.vars);
            check(fr.kept.size() == 1 && fr.kept[0] == quartic, "filter keeps the quartic");
            check(fr.removed.size() == 1 && fr.removed[0] == sextic,
                  "filter removes the sextic");
            // the direct resultant pipeline lands on the quartic alone; the
            // degree-10 eliminant carries the construction-method extras
            PedalResult pr = pedal_implicit(ell, Pole::numeric({Rat(1), Rat(7)}), s.vars);
            check(pr.implicit == quartic, "pipeline implicit equals the quartic");
        }
    }});

    criteria.push_back({"C09", "ellipse pole (0,6): printed quartic reproduced exactly", 10.0,
                        [](Check& check) {
        Session s;
        Conic ell = Conic::from_poly(s(testutil::kEllipse), s.vars);
        PedalResult pr = pedal_implicit(ell, Pole::numeric({Rat(0), Rat(6)}), s.vars);
        check(pr.implicit == s(testutil::kQuarticPole06), "quartic matches");
    }});

    criteria.push_back({"C10", "ellipse pole at the focus: auxiliary circle and point-circle",
                        10.0, [](Check& check) {
        Session s;
        Conic ell = Conic::from_poly(s(testutil::kEllipse), s.vars);
        PedalResult pr = pedal_implicit(ell, Pole::numeric({Rat(3), Rat(0)}), s.vars);
        check(divides(s("x^2 + y^2 - 25"), pr.implicit),
              "implicit contains the auxiliary circle");
        Poly quartic = central_pedal_oracle(Rat(25), Rat(16), {Rat(3), Rat(0)}, s.vars);
        Factorization f = factor_bivariate(quartic);
        check(f.factors.size() == 2, "pedal quartic splits in two");
        if (f.factors.size() == 2) {
            check(f.factors[0].first == s("x^2 + y^2 - 25"), "first factor is the circle");
            check(f.factors[1].first == s("(x - 3)^2 + y^2"),
                  "cofactor is the point-circle at the focus");
        }
    }});

    criteria.push_back({"C11", "ellipse pole (0,0): irreducible quartic, nothing filtered",
                        10.0, [](Check& check) {
        Session s;
        Conic ell = Conic::from_poly(s(testutil::kEllipse), s.vars);
        PedalResult pr = pedal_implicit(ell, Pole::numeric({Rat(0), Rat(0)}), s.vars);
        check(pr.implicit == s(testutil::kQuarticOrigin),
              "implicit equals (x^2+y^2)^2 - 25x^2 - 16y^2");
        check(is_irreducible(pr.implicit), "quartic is irreducible");
        check(pr.removed.empty(), "nothing was filtered away");
        // injected spurious factors are removed by the exact sampling filter
        auto param = pedal_foot_param(ell, Pole::numeric({Rat(0), Rat(0)}), s.vars);
        FilterResult fr = filter_relevant_factors(
            {pr.implicit, s("x^2 + 4"), s("x^2 + y^2 + 1")}, param,
            {Rat(1), Rat(2), Rat(3), Rat(5), Rat(7), Rat(11)}, s.vars);
        check(fr.kept.size() == 1 && fr.kept[0] == pr.implicit, "genuine component survives");
        check(fr.removed.size() == 2, "both injected spurious factors are removed");
    }});

    criteria.push_back({"C12", "limacon matcher: round trip and deterministic outputs", 30.0,
                        [](Check& check) {
        Session s;
        auto t0 = std::chrono::steady_clock::now();
        Poly q = translate_affine(limacon_canonical(Rat(2), Rat(1, 2), s.vars),
                                  {{s.vars.x, Rat(1)}, {s.vars.y, Rat(3)}});
        std::vector<LimaconMatch> ms = limacon_match(q, s.vars);
        bool exact = false;
        for (const auto& m : ms) {
            Poly built = translate_affine(limacon_canonical(m.a, m.e, s.vars),
                                          {{s.vars.x, m.r1}, {s.vars.y, m.r2}});
            if (normalized(built) != normalized(q))
                check(false, "a returned match fails the round trip");
            if (m.a == Rat(2) && m.e == Rat(1, 2) && m.r1 == Rat(1) && m.r2 == Rat(3))
                exact = true;
        }
        check(!ms.empty(), "constructed limacon is recovered");
        check(exact, "original parameters among the matches");
        check(seconds_since(t0) < 10.0, "round trip under 10 s");

        for (const char* text : {testutil::kQuarticPole06, testutil::kQuarticOrigin}) {
            auto t1 = std::chrono::steady_clock::now();
            auto first = limacon_match(s(text), s.vars);
            auto second = limacon_match(s(text), s.vars);
            check(first.size() == second.size(), "deterministic match count");
            for (std::size_t i = 0; i < first.size(); ++i) {
                check(first[i].a == second[i].a && first[i].e == second[i].e &&
                          first[i].r1 == second[i].r1 && first[i].r2 == second[i].r2,
                      "deterministic match values");
                Poly built = translate_affine(
                    limacon_canonical(first[i].a, first[i].e, s.vars),
                    {{s.vars.x, first[i].r1}, {s.vars.y, first[i].r2}});
                check(normalized(built) == normalized(s(text)), "round trip when nonempty");
            }
            check(seconds_since(t1) < 10.0, "matcher under 10 s per quartic");
        }
    }});

    criteria.push_back({"C13", "kernel property suites", 120.0, [](Check& check) {
        Session s;
        Rng rng(13131);
        // resultant symmetry and multiplicativity
        std::vector<VarId> tv{s.vars.t, s.vars.x, s.vars.y};
        int sym_done = 0, mult_done = 0;
        while (sym_done < 30) {
            Poly p = rng.nonzero_poly(tv, 3, 4, 3), q = rng.nonzero_poly(tv, 3, 4, 3);
            if (p.degree(s.vars.t) < 1 || q.degree(s.vars.t) < 1) continue;
            Poly lhs = resultant(p, q, s.vars.t);
            Poly rhs = resultant(q, p, s.vars.t);
            if ((p.degree(s.vars.t) * q.degree(s.vars.t)) % 2 == 1) rhs = -rhs;
            if (lhs != rhs) check(false, "resultant symmetry");
            ++sym_done;
        }
        while (mult_done < 30) {
            Poly p = rng.nonzero_poly(tv, 2, 3, 3), q = rng.nonzero_poly(tv, 2, 3, 3),
                 r = rng.nonzero_poly(tv, 2, 3, 3);
            if (p.degree(s.vars.t) < 1 || q.degree(s.vars.t) < 1 || r.degree(s.vars.t) < 1)
                continue;
            if (resultant(p, q * r, s.vars.t) !=
                resultant(p, q, s.vars.t) * resultant(p, r, s.vars.t))
                check(false, "resultant multiplicativity");
            ++mult_done;
        }
        // Bareiss and subresultant-PRS agreement: 100 instances, deg <= 4, 2-3 vars
        std::vector<VarId> two{s.vars.t, s.vars.x};
        int prs_done = 0;
        while (prs_done < 100) {
            const auto& xs = (prs_done % 2 == 0) ? two : tv;
            Poly p = rng.nonzero_poly(xs, 4, 4, 3), q = rng.nonzero_poly(xs, 4, 4, 3);
            if (p.degree(s.vars.t) < 1 && q.degree(s.vars.t) < 1) continue;
            if (resultant_prs(p, q, s.vars.t) != resultant_bareiss(p, q, s.vars.t))
                check(false, "bareiss/prs disagreement");
            ++prs_done;
        }
        // factorization round trips; every Factorization passes verify_product
        std::vector<VarId> xy{s.vars.x, s.vars.y};
        int rt_done = 0;
        while (rt_done < 8) {
            Poly a = rng.nonzero_poly(xy, 2, 3, 3) + Poly(1);
            Poly b = rng.nonzero_poly(xy, 2, 3, 3) + Poly::variable(s.vars.x);
            if (a.is_constant() || b.is_constant()) continue;
            try {
                if (!is_irreducible(a) || !is_irreducible(b)) continue;
            } catch (const error&) {
                continue;
            }
            Poly na = normalized(a), nb = normalized(b);
            if (na == nb) continue;
            Poly prod = na * nb;
            Factorization f = factor_bivariate(prod);
            if (!verify_product(prod, f)) check(false, "verify_product failed");
            if (f.factors.size() != 2) check(false, "round trip factor count");
            bool match = (f.factors[0].first == na && f.factors[1].first == nb) ||
                         (f.factors[0].first == nb && f.factors[1].first == na);
            if (!match) check(false, "round trip factors differ");
            ++rt_done;
        }
        // parse/print identity on 200 random polynomials
        for (int i = 0; i < 200; ++i) {
            Poly p = rng.poly(tv, 5, 6, 20);
            if (parse_poly(poly_to_string(p, s.reg), s.reg) != p)
                check(false, "parse/print round trip");
        }
        // finite-difference derivative agreement at 1e-6 relative tolerance
        PencilParametrization pen =
            pencil_parametrization(s(testutil::kEq6), {Rat(4), Rat(4)}, s.vars);
        auto dbl = [&](const RationalFunction& f, double t) {
            return f.num().evaluate_double({{s.vars.t, t}}) /
                   f.den().evaluate_double({{s.vars.t, t}});
        };
        int fd_done = 0;
        while (fd_done < 10) {
            Rat t0 = rng.rat(3, 4);
            if (t0.is_zero()) continue;
            std::map<VarId, Rat> at{{s.vars.t, t0}};
            if (pen.x.den().evaluate(at).is_zero()) continue;
            auto v = derivative_vectors(pen, t0, 1, s.vars);
            double h = 1e-5, tc = t0.to_double();
            double fdx = (dbl(pen.x, tc + h) - dbl(pen.x, tc - h)) / (2 * h);
            double fdy = (dbl(pen.y, tc + h) - dbl(pen.y, tc - h)) / (2 * h);
            double vx = v[0].first.to_double(), vy = v[0].second.to_double();
            if (std::fabs(fdx - vx) > 1e-6 * std::max(1.0, std::fabs(vx)))
                check(false, "finite-difference x derivative");
            if (std::fabs(fdy - vy) > 1e-6 * std::max(1.0, std::fabs(vy)))
                check(false, "finite-difference y derivative");
            ++fd_done;
        }
        // implicitization output vanishes at 20 random parameter values
        Conic ell = Conic::from_poly(s(testutil::kEllipse), s.vars);
        auto param = pedal_foot_param(ell, Pole::numeric({Rat(2), Rat(1)}), s.vars);
        auto impl = implicitize(param.first, param.second, s.vars.t, s.vars.x, s.vars.y);
        int ev_done = 0;
        while (ev_done < 20) {
            Rat t0 = rng.rat(25, 9);
            std::map<VarId, Rat> at{{s.vars.t, t0}};
            if (param.first.den().evaluate(at).is_zero()) continue;
            Rat xv = param.first.evaluate(at), yv = param.second.evaluate(at);
            if (!impl.curve.evaluate({{s.vars.x, xv}, {s.vars.y, yv}}).is_zero())
                check(false, "implicit curve does not vanish on the parametrization");
            ++ev_done;
        }
    }});

    int failed = 0;
    for (const auto& c : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(check);
        } catch (const std::exception& e) {
            check(false, std::string("exception: ") + e.what());
        }
        double elapsed = seconds_since(start);
        if (elapsed >= c.limit_seconds)
            check.failures.push_back("runtime " + std::to_string(elapsed) +
                                     "s exceeds " + std::to_string(c.limit_seconds) + "s");
        bool ok = check.failures.empty();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << c.id << " " << (ok ? "PASS" : "FAIL") << " (" << elapsed << "s) - "
             << c.description;
        std::cout << line.str() << "\n";
        if (!ok) {
            ++failed;
            for (const auto& f : check.failures) std::cout << "      " << f << "\n";
        }
    }
    if (failed == 0)
        std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
    else
        std::cout << failed << " acceptance criteria FAILED\n";
    return failed == 0 ? 0 : 1;
}
