#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace pedcurve;
using testutil::Rng;
using testutil::Session;

TEST_CASE("classification") {
    Session s;
    CHECK(Conic::from_poly(s(testutil::kParabola), s.vars).kind == ConicKind::parabola);
    CHECK(Conic::from_poly(s(testutil::kEllipse), s.vars).kind == ConicKind::ellipse);
    CHECK(Conic::from_poly(s("x^2 - y^2"), s.vars).kind == ConicKind::degenerate);
    CHECK(Conic::from_poly(s("x^2 - y^2 - 1"), s.vars).kind == ConicKind::hyperbola);
    CHECK_THROWS_AS(Conic::from_poly(s("x + y"), s.vars), error);
    CHECK_THROWS_AS(Conic::from_coefficients(Rat(0), Rat(0), Rat(0), Rat(1), Rat(1), Rat(0)),
                    error);
}

TEST_CASE("tangent lines") {
    Session s;
    Conic parab = Conic::from_poly(s(testutil::kParabola), s.vars);
    // parametric tangent: t*x - y - t^2 = 0
    Line l = tangent_at_param(parab, RationalFunction(s("2*t")), RationalFunction(s("t^2")));
    CHECK(l.a == s("t"));
    CHECK(l.b == Poly(-1));
    CHECK(l.c == -s("t^2"));
    Conic ell = Conic::from_poly(s(testutil::kEllipse), s.vars);
    Line v = tangent_at(ell, {Rat(5), Rat(0)});
    CHECK(v.b.is_zero());
    CHECK(exact_div(v.c, v.a) == Poly(-5));  // x = 5
    Line h = tangent_at(ell, {Rat(0), Rat(4)});
    CHECK(h.a.is_zero());
    CHECK(exact_div(h.c, h.b) == Poly(-4));  // y = 4
    CHECK_THROWS_AS(tangent_at(ell, {Rat(1), Rat(1)}), error);
}

TEST_CASE("tangent incidence on random on-conic points") {
    Session s;
    Rng rng(21);
    for (const char* text : {testutil::kParabola, testutil::kEllipse}) {
        Conic c = Conic::from_poly(s(text), s.vars);
        Parametrization par = rational_parametrization(c, s.vars);
        for (int i = 0; i < 25; ++i) {
            Rat t0 = rng.rat(20, 9);
            if (par.x.den().evaluate({{s.vars.t, t0}}).is_zero()) continue;
            Point2 p{par.x.evaluate({{s.vars.t, t0}}), par.y.evaluate({{s.vars.t, t0}})};
            REQUIRE(c.contains(p));
            Line l = tangent_at(c, p);
            Rat incid = l.a.constant_value() * p.x + l.b.constant_value() * p.y +
                        l.c.constant_value();
            CHECK(incid.is_zero());
        }
    }
}

TEST_CASE("foot of perpendicular") {
    Session s;
    Line xaxis{Poly(), Poly(1), Poly()};  // y = 0
    Point2 f = foot_of_perpendicular(xaxis, Point2{Rat(0), Rat(1)});
    CHECK(f == Point2{Rat(0), Rat(0)});
    Line vert{Poly(1), Poly(), Poly(-5)};  // x = 5
    CHECK(foot_of_perpendicular(vert, Point2{Rat(1), Rat(7)}) == Point2{Rat(5), Rat(7)});
    CHECK_THROWS_AS(foot_of_perpendicular(Line{Poly(), Poly(), Poly(1)},
                                          Point2{Rat(0), Rat(0)}),
                    error);

    // symbolic foot on the moving tangent equals the reduced closed form
    Conic parab = Conic::from_poly(s(testutil::kParabola), s.vars);
    Line tang = tangent_at_param(parab, RationalFunction(s("2*t")), RationalFunction(s("t^2")));
    auto [fx, fy] = foot_of_perpendicular(tang, Poly::variable(s.vars.xD),
                                          Poly::variable(s.vars.yD));
    CHECK(fx == RationalFunction(s("8*t^3 + 8*t*yD + 8*xD"), s("8*t^2 + 8")));
    CHECK(fy == RationalFunction(s("2*t*(2*t*yD - 2*t + 2*xD)"), s("4*t^2 + 4")));
}

TEST_CASE("foot identities hold exactly, including symbolic poles") {
    Session s;
    Rng rng(22);
    for (int i = 0; i < 20; ++i) {
        Rat a = rng.rat(), b = rng.rat(), c = rng.rat();
        if (a.is_zero() && b.is_zero()) continue;
        Line l{Poly(a), Poly(b), Poly(c)};
        Poly dx = Poly::variable(s.vars.xD), dy = Poly::variable(s.vars.yD);
        auto [fx, fy] = foot_of_perpendicular(l, dx, dy);
        // on the line: a fx + b fy + c = 0
        RationalFunction on = RationalFunction(l.a) * fx + RationalFunction(l.b) * fy +
                              RationalFunction(l.c);
        CHECK(on.is_zero());
        // perpendicular: (f - d) . (-b, a) = 0
        RationalFunction perp =
            (fx - RationalFunction(dx)) * RationalFunction(-l.b) +
            (fy - RationalFunction(dy)) * RationalFunction(l.a);
        CHECK(perp.is_zero());
    }
}

TEST_CASE("rational parametrizations") {
    Session s;
    Conic parab = Conic::from_poly(s(testutil::kParabola), s.vars);
    Parametrization pp = rational_parametrization(parab, s.vars);
    CHECK(pp.x == RationalFunction(s("2*t")));
    CHECK(pp.y == RationalFunction(s("t^2")));
    CHECK(!pp.missing);

    Conic ell = Conic::from_poly(s(testutil::kEllipse), s.vars);
    Parametrization pe = rational_parametrization(ell, s.vars);
    CHECK(pe.x == RationalFunction(s("5*(1 - t^2)"), s("1 + t^2")));
    CHECK(pe.y == RationalFunction(s("8*t"), s("1 + t^2")));
    REQUIRE(pe.missing.has_value());
    CHECK(*pe.missing == Point2{Rat(-5), Rat(0)});
    // x(t) = -5 has no solution: 5(1-t^2) + 5(1+t^2) = 10
    Poly never = pe.x.num() + pe.x.den().scaled(Rat(5));
    CHECK(never == Poly(10));

    Conic circ = Conic::from_poly(s("x^2 + y^2 - 1"), s.vars);
    Parametrization pc = rational_parametrization(circ, s.vars);
    CHECK(pc.x == RationalFunction(s("1 - t^2"), s("1 + t^2")));
    CHECK(pc.y == RationalFunction(s("2*t"), s("1 + t^2")));
    REQUIRE(pc.missing.has_value());
    CHECK(*pc.missing == Point2{Rat(-1), Rat(0)});

    // substitution into the conic is identically zero
    for (const char* text : {testutil::kParabola, testutil::kEllipse, "x^2 + y^2 - 1"}) {
        Conic c = Conic::from_poly(s(text), s.vars);
        Parametrization par = rational_parametrization(c, s.vars);
        std::map<VarId, RationalFunction> bind{{s.vars.x, par.x}, {s.vars.y, par.y}};
        CHECK(substitute(c.poly(s.vars), bind).is_zero());
    }

    // hyperbola with a rational point goes through the pencil path
    Conic hyp = Conic::from_poly(s("x^2 - y^2 - 1"), s.vars);
    Parametrization ph = rational_parametrization(hyp, s.vars);
    std::map<VarId, RationalFunction> bind{{s.vars.x, ph.x}, {s.vars.y, ph.y}};
    CHECK(substitute(hyp.poly(s.vars), bind).is_zero());

    // x^2 + y^2 = 3 has no rational points at all
    Conic pointless = Conic::from_poly(s("x^2 + y^2 - 3"), s.vars);
    CHECK_THROWS_AS(rational_parametrization(pointless, s.vars), error);
}

TEST_CASE("point position") {
    Session s;
    Conic parab = Conic::from_poly(s(testutil::kParabola), s.vars);
    CHECK(point_position(parab, {Rat(-2), Rat(6)}) == PointPosition::inside);
    CHECK(point_position(parab, {Rat(4), Rat(4)}) == PointPosition::on);
    CHECK(point_position(parab, {Rat(-6), Rat(2)}) == PointPosition::outside);
    CHECK(point_position(parab, {Rat(0), Rat(1)}) == PointPosition::inside);  // focus
    Conic ell = Conic::from_poly(s(testutil::kEllipse), s.vars);
    CHECK(point_position(ell, {Rat(3), Rat(0)}) == PointPosition::inside);
    CHECK(point_position(ell, {Rat(-3), Rat(0)}) == PointPosition::inside);
    Conic hyp = Conic::from_poly(s("x^2 - y^2 - 1"), s.vars);
    CHECK_THROWS_AS(point_position(hyp, {Rat(0), Rat(0)}), error);
}
