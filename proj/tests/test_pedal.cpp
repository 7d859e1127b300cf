#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace pedcurve;
using testutil::Rng;
using testutil::Session;

TEST_CASE("foot parametrization of the parabola") {
    Session s;
    Conic parab = Conic::from_poly(s(testutil::kParabola), s.vars);
    auto [fx, fy] = pedal_foot_param(parab, Pole::symbolic_point(s.vars), s.vars);
    CHECK(fx == RationalFunction(s("8*t^3 + 8*t*yD + 8*xD"), s("2*(4*t^2 + 4)")));
    CHECK(fy == RationalFunction(s("2*t*(2*t*yD - 2*t + 2*xD)"), s("4*t^2 + 4")));

    auto [gx, gy] = pedal_foot_param(parab, Pole::numeric({Rat(4), Rat(4)}), s.vars);
    CHECK(gx.evaluate({{s.vars.t, Rat(2)}}) == Rat(4));
    CHECK(gy.evaluate({{s.vars.t, Rat(2)}}) == Rat(4));

    Conic ell = Conic::from_poly(s(testutil::kEllipse), s.vars);
    auto [hx, hy] = pedal_foot_param(ell, Pole::numeric({Rat(0), Rat(0)}), s.vars);
    CHECK(hx.evaluate({{s.vars.t, Rat(0)}}) == Rat(5));
    CHECK(hy.evaluate({{s.vars.t, Rat(0)}}) == Rat(0));
}

TEST_CASE("numeric parabola pedals match the worked cubics") {
    Session s;
    Conic parab = Conic::from_poly(s(testutil::kParabola), s.vars);
    PedalResult a = pedal_implicit(parab, Pole::numeric({Rat(-2), Rat(6)}), s.vars);
    CHECK(a.implicit == s(testutil::kEq5));
    PedalResult b = pedal_implicit(parab, Pole::numeric({Rat(4), Rat(4)}), s.vars);
    CHECK(b.implicit == s(testutil::kEq6));
    PedalResult c = pedal_implicit(parab, Pole::numeric({Rat(-6), Rat(2)}), s.vars);
    CHECK(c.implicit == s(testutil::kEq8));
    // the implicit equation vanishes along the foot parametrization
    std::map<VarId, RationalFunction> bind{{s.vars.x, c.foot_x}, {s.vars.y, c.foot_y}};
    CHECK(substitute(c.implicit, bind).is_zero());
}

TEST_CASE("specialization commutes with elimination") {
    Session s;
    Conic parab = Conic::from_poly(s(testutil::kParabola), s.vars);
    PedalResult sym = pedal_implicit(parab, Pole::symbolic_point(s.vars), s.vars);
    for (auto [px, py] : {std::pair<long long, long long>{-2, 6}, {4, 4}, {-6, 2}}) {
        Poly spec = substitute(sym.implicit, std::map<VarId, Poly>{{s.vars.xD, Poly(px)},
                                                                   {s.vars.yD, Poly(py)}})
                        .as_poly();
        PedalResult direct =
            pedal_implicit(parab, Pole::numeric({Rat(px), Rat(py)}), s.vars);
        CHECK(normalized(spec) == direct.implicit);
    }
}

TEST_CASE("central pedal oracle") {
    Session s;
    CHECK(central_pedal_oracle(Rat(25), Rat(16), {Rat(1), Rat(7)}, s.vars) ==
          s(testutil::kP1Pole17));
    CHECK(central_pedal_oracle(Rat(25), Rat(16), {Rat(0), Rat(0)}, s.vars) ==
          s(testutil::kQuarticOrigin));
    // pole at the focus: division by the auxiliary circle leaves the point-circle
    Poly q = central_pedal_oracle(Rat(25), Rat(16), {Rat(3), Rat(0)}, s.vars);
    auto cof = try_divide(q, s("x^2 + y^2 - 25"));
    REQUIRE(cof.has_value());
    CHECK(normalized(*cof) == s("x^2 - 6*x + 9 + y^2"));
}

TEST_CASE("oracle and pipeline agree for random poles") {
    Session s;
    Conic ell = Conic::from_poly(s(testutil::kEllipse), s.vars);
    Rng rng(41);
    int done = 0;
    while (done < 10) {
        Rat px = rng.rat(6, 3), py = rng.rat(6, 3);
        Point2 pole{px, py};
        Poly oracle = central_pedal_oracle(Rat(25), Rat(16), pole, s.vars);
        if (!is_irreducible(oracle)) continue;  // avoid focus-like degenerate poles
        PedalResult pr = pedal_implicit(ell, Pole::numeric(pole), s.vars);
        CHECK(divides(pr.implicit, oracle));
        CHECK(divides(oracle, pr.implicit));
        CHECK(pr.implicit == oracle);
        ++done;
    }
}

TEST_CASE("focus pole keeps the auxiliary circle") {
    Session s;
    Conic ell = Conic::from_poly(s(testutil::kEllipse), s.vars);
    PedalResult pr = pedal_implicit(ell, Pole::numeric({Rat(3), Rat(0)}), s.vars);
    CHECK(divides(s("x^2 + y^2 - 25"), pr.implicit));
}

TEST_CASE("filter relevant factors") {
    Session s;
    Conic parab = Conic::from_poly(s(testutil::kParabola), s.vars);
    auto param = pedal_foot_param(parab, Pole::numeric({Rat(-2), Rat(6)}), s.vars);
    std::vector<Rat> samples{Rat(1), Rat(2), Rat(3), Rat(5), Rat(7), Rat(11)};
    FilterResult fr = filter_relevant_factors({s(testutil::kEq5), s("x^2 + 4")}, param,
                                              samples, s.vars);
    REQUIRE(fr.kept.size() == 1);
    CHECK(fr.kept[0] == s(testutil::kEq5));
    REQUIRE(fr.removed.size() == 1);
    CHECK(fr.removed[0] == s("x^2 + 4"));

    FilterResult single = filter_relevant_factors({s(testutil::kEq5)}, param, samples, s.vars);
    CHECK(single.kept.size() == 1);
    CHECK(single.removed.empty());

    // a sample on a pole of the parametrization is rejected up front:
    // the circle parametrization has poles nowhere real, so use a contrived one
    auto circle_param = std::pair<RationalFunction, RationalFunction>{
        RationalFunction(s("1"), s("t - 1")), RationalFunction(s("t"))};
    CHECK_THROWS_AS(
        filter_relevant_factors({s("x - 1")}, circle_param, {Rat(1)}, s.vars), error);
    CHECK_THROWS_AS(filter_relevant_factors({s("x^2 + 4")}, param, samples, s.vars), error);

    // ellipse about the origin: nothing to remove
    Conic ell = Conic::from_poly(s(testutil::kEllipse), s.vars);
    PedalResult e0 = pedal_implicit(ell, Pole::numeric({Rat(0), Rat(0)}), s.vars);
    CHECK(e0.implicit == s(testutil::kQuarticOrigin));
    CHECK(e0.removed.empty());
}

TEST_CASE("limacon matcher round trip") {
    Session s;
    Poly canon = limacon_canonical(Rat(2), Rat(1, 2), s.vars);
    Poly q = translate_affine(canon, {{s.vars.x, Rat(1)}, {s.vars.y, Rat(3)}});
    std::vector<LimaconMatch> ms = limacon_match(q, s.vars);
    REQUIRE(!ms.empty());
    bool found = false;
    for (const auto& m : ms) {
        if (m.a == Rat(2) && m.e == Rat(1, 2) && m.r1 == Rat(1) && m.r2 == Rat(3))
            found = true;
        Poly built =
            translate_affine(limacon_canonical(m.a, m.e, s.vars),
                             {{s.vars.x, m.r1}, {s.vars.y, m.r2}});
        CHECK(normalized(built) == normalized(q));
    }
    CHECK(found);
    // both sign pairs (a, e) and (-a, -e) describe the same curve
    CHECK(ms.size() == 2);
}

TEST_CASE("limacon matcher on the ellipse pedal quartics") {
    Session s;
    // pedal about the center is not a limacon
    CHECK(limacon_match(s(testutil::kQuarticOrigin), s.vars).empty());
    // pole (0, 6): the identification system has no rational solution
    CHECK(limacon_match(s(testutil::kQuarticPole06), s.vars).empty());
    // deterministic: two runs agree
    auto a = limacon_match(s(testutil::kQuarticPole06), s.vars);
    auto b = limacon_match(s(testutil::kQuarticPole06), s.vars);
    CHECK(a.size() == b.size());
    CHECK_THROWS_AS(limacon_match(s("x^3 + y"), s.vars), error);
}

TEST_CASE("symbolic pedal keeps the elimination generator whole") {
    Session s;
    Conic parab = Conic::from_poly(s(testutil::kParabola), s.vars);
    PedalResult sym = pedal_implicit(parab, Pole::symbolic_point(s.vars), s.vars);
    Poly multiplier = s("xD^2 + yD^2 - 2*yD + 1");
    CHECK(sym.implicit.coeff_of(s.vars.y, 3) == multiplier);
    CHECK(divides(multiplier, sym.implicit));
    CHECK(sym.removed.empty());
}
