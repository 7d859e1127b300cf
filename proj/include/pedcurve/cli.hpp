#pragma once

// The command-line surface. run_command executes one invocation and
// returns the exit code plus everything written to stdout, so tests can
// drive the tool in-process. Exit codes: 0 success, 2 input error,
// 3 internal invariant violation.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pedcurve/pedal.hpp"
#include "pedcurve/render.hpp"
#include "pedcurve/report.hpp"

namespace pedcurve {

struct CommandOutcome {
    int exit_code = 0;
    std::string out;
};

namespace cdetail {

inline bool input_error(errc c) {
    switch (c) {
        case errc::syntax_error:
        case errc::unknown_variable:
        case errc::not_a_conic:
        case errc::not_quartic:
        case errc::not_cubic:
        case errc::not_square_free:
        case errc::no_rational_point:
        case errc::unsupported_kind:
        case errc::point_not_on_conic:
        case errc::point_not_on_curve:
        case errc::not_singular:
        case errc::division_by_zero:
        case errc::empty_window:
        case errc::constant_input:
        case errc::zero_polynomial:
            return true;
        default:
            return false;
    }
}

inline Pole parse_pole(const std::string& text, const VarRegistry& reg,
                       const StandardVars& vars) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw error(errc::syntax_error, "pole must be 'x,y' or 'xD,yD'");
    std::string xs = text.substr(0, comma), ys = text.substr(comma + 1);
    auto strip = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
        return s;
    };
    xs = strip(xs);
    ys = strip(ys);
    if (xs == "xD" && ys == "yD") return Pole::symbolic_point(vars);
    (void)reg;
    return Pole::numeric({Rat::from_string(xs), Rat::from_string(ys)});
}

inline PlotSpec parse_window(const std::string& window, int resolution) {
    PlotSpec spec;
    spec.resolution = resolution;
    if (!window.empty()) {
        std::stringstream ss(window);
        std::string item;
        std::vector<double> vals;
        while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
        if (vals.size() != 4)
            throw error(errc::syntax_error, "window must be x0,x1,y0,y1");
        spec.xmin = vals[0];
        spec.xmax = vals[1];
        spec.ymin = vals[2];
        spec.ymax = vals[3];
    }
    spec.validate();
    return spec;
}

struct Session {
    VarRegistry reg;
    StandardVars vars;
    Session() : vars(StandardVars::install(reg)) {}
};

inline Report pedal_report(Session& s, const Conic& conic, const std::string& conic_text,
                           const Pole& pole) {
    Report r;
    auto start = std::chrono::steady_clock::now();
    r.conic_poly = conic_text;
    r.conic_kind = conic_kind_name(conic.kind);
    r.pole_x = poly_to_string(pole.x, s.reg);
    r.pole_y = poly_to_string(pole.y, s.reg);
    r.pole_symbolic = pole.symbolic;
    PedalResult pr = pedal_implicit(conic, pole, s.vars);
    r.param_x_num = poly_to_string(pr.foot_x.num(), s.reg);
    r.param_x_den = poly_to_string(pr.foot_x.den(), s.reg);
    r.param_y_num = poly_to_string(pr.foot_y.num(), s.reg);
    r.param_y_den = poly_to_string(pr.foot_y.den(), s.reg);
    r.implicit = poly_to_string(pr.implicit, s.reg);
    r.raw = poly_to_string(pr.raw, s.reg);
    for (const auto& f : pr.removed) r.removed.push_back(poly_to_string(f, s.reg));
    if (!pole.symbolic) {
        Factorization f = factor_auto(pr.implicit);
        r.factor_unit = f.unit;
        for (const auto& [g, m] : f.factors)
            r.factors.emplace_back(poly_to_string(g, s.reg), m);
        SingularPoints sp = singular_points_rational(pr.implicit, s.vars);
        for (const Point2& p : sp.points)
            r.singularities.push_back(classify_singularity(pr.implicit, p, s.vars));
    }
    r.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return r;
}

inline std::string human_summary(const Report& r) {
    std::ostringstream os;
    if (r.conic_poly)
        os << "conic: " << *r.conic_poly << " (" << r.conic_kind.value_or("?") << ")\n";
    if (r.pole_x) os << "pole: (" << *r.pole_x << ", " << *r.pole_y << ")\n";
    if (r.param_x_num)
        os << "foot: x(t) = (" << *r.param_x_num << ") / (" << *r.param_x_den
           << ")\n      y(t) = (" << *r.param_y_num << ") / (" << *r.param_y_den << ")\n";
    if (r.missing_point) os << "missing point: " << *r.missing_point << "\n";
    if (r.implicit) os << "implicit: " << *r.implicit << "\n";
    for (const auto& f : r.removed) os << "removed: " << f << "\n";
    if (r.factor_unit) {
        os << "factors: unit " << r.factor_unit->to_string();
        for (const auto& [g, m] : r.factors) {
            os << "  (" << g << ")";
            if (m > 1) os << "^" << m;
        }
        os << (r.factors.size() == 1 && r.factors[0].second == 1 ? "  [irreducible]" : "")
           << "\n";
    }
    for (const auto& s : r.singularities) {
        os << "singular point (" << s.point.x.to_string() << ", " << s.point.y.to_string()
           << "): " << singular_kind_name(s.kind) << ", multiplicity " << s.multiplicity;
        if (s.isolated_real_point) os << " (isolated real point, not on the visible branch)";
        os << "\n";
    }
    if (r.has_limacon_matches) {
        if (r.limacon_matches.empty()) os << "limacon matches: none\n";
        for (const auto& m : r.limacon_matches)
            os << "limacon match: a=" << m.a << " e=" << m.e << " r1=" << m.r1
               << " r2=" << m.r2 << "\n";
    }
    if (r.svg_path) os << "svg: " << *r.svg_path << "\n";
    return os.str();
}

}  // namespace cdetail

inline CommandOutcome run_command(const std::vector<std::string>& argv) {
    CommandOutcome outcome;
    std::ostringstream out;
    try {
        CLI::App app{"exact pedal-curve toolkit"};
        app.require_subcommand(1);

        std::string conic_text, pole_text, poly_text, svg_path, window, poles_file;
        std::string xnum, xden = "1", ynum, yden = "1";
        int resolution = 128;
        bool as_json = false;

        auto add_common = [&](CLI::App* cmd) {
            cmd->add_flag("--json", as_json, "emit the JSON report");
        };

        CLI::App* pedal = app.add_subcommand("pedal", "pedal curve of a conic");
        pedal->add_option("--conic", conic_text, "conic polynomial in x, y")->required();
        pedal->add_option("--pole", pole_text, "pole 'x,y' or symbolic 'xD,yD'");
        pedal->add_option("--poles-file", poles_file, "file with one pole per line");
        pedal->add_option("--svg", svg_path, "write an SVG plot of the pedal");
        pedal->add_option("--window", window, "plot window x0,x1,y0,y1");
        pedal->add_option("--resolution", resolution, "plot grid resolution");
        add_common(pedal);

        CLI::App* impl = app.add_subcommand("implicitize", "eliminate the parameter t");
        impl->add_option("--x-num", xnum, "numerator of x(t)")->required();
        impl->add_option("--x-den", xden, "denominator of x(t)");
        impl->add_option("--y-num", ynum, "numerator of y(t)")->required();
        impl->add_option("--y-den", yden, "denominator of y(t)");
        add_common(impl);

        CLI::App* fact = app.add_subcommand("factor", "factor a polynomial over Q");
        fact->add_option("--poly", poly_text, "polynomial in x, y")->required();
        add_common(fact);

        CLI::App* sing = app.add_subcommand("singular", "singular points of a plane curve");
        sing->add_option("--poly", poly_text, "curve polynomial in x, y")->required();
        add_common(sing);

        CLI::App* par = app.add_subcommand("param", "rational parametrization of a conic");
        par->add_option("--conic", conic_text, "conic polynomial in x, y")->required();
        add_common(par);

        CLI::App* lima = app.add_subcommand("match-limacon",
                                            "match a quartic to a translated limacon");
        lima->add_option("--poly", poly_text, "quartic polynomial in x, y")->required();
        add_common(lima);

        CLI::App* plot = app.add_subcommand("plot", "SVG contour of an implicit curve");
        plot->add_option("--poly", poly_text, "polynomial in x, y")->required();
        plot->add_option("--svg", svg_path, "output SVG path")->required();
        plot->add_option("--window", window, "plot window x0,x1,y0,y1");
        plot->add_option("--resolution", resolution, "plot grid resolution");
        add_common(plot);

        std::vector<std::string> args(argv.rbegin(), argv.rend());
        try {
            app.parse(args);
        } catch (const CLI::ParseError& e) {
            outcome.out = std::string("error: ") + e.what() + "\n";
            outcome.exit_code = 2;
            return outcome;
        }

        cdetail::Session s;
        auto start = std::chrono::steady_clock::now();
        auto finish_ms = [&]() {
            return std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                .count();
        };
        auto emit = [&](Report& r) {
            r.command = argv;
            if (r.timing_ms == 0) r.timing_ms = finish_ms();
            if (as_json) {
                nlohmann::json j = report_to_json(r, s.reg);
                validate_report_json(j);
                out << j.dump(2) << "\n";
            } else {
                out << cdetail::human_summary(r);
            }
        };

        if (pedal->parsed()) {
            Conic conic = Conic::from_poly(parse_poly(conic_text, s.reg), s.vars);
            std::string ctext = poly_to_string(conic.poly(s.vars), s.reg);
            if (!poles_file.empty()) {
                std::ifstream in(poles_file);
                if (!in) throw error(errc::syntax_error, "cannot open poles file");
                std::vector<std::string> lines;
                std::string line;
                while (std::getline(in, line))
                    if (!line.empty()) lines.push_back(line);
                // independent poles evaluated in parallel, reported in order
                std::vector<std::future<Report>> futures;
                futures.reserve(lines.size());
                for (const auto& l : lines)
                    futures.push_back(std::async(std::launch::async, [&, l] {
                        cdetail::Session local;
                        Conic c2 = Conic::from_poly(parse_poly(conic_text, local.reg),
                                                    local.vars);
                        Pole p = cdetail::parse_pole(l, local.reg, local.vars);
                        return cdetail::pedal_report(local, c2, conic_text, p);
                    }));
                nlohmann::json arr = nlohmann::json::array();
                for (auto& f : futures) {
                    Report r = f.get();
                    r.command = argv;
                    nlohmann::json j = report_to_json(r, s.reg);
                    validate_report_json(j);
                    arr.push_back(j);
                }
                if (as_json)
                    out << arr.dump(2) << "\n";
                else
                    for (const auto& j : arr) out << j["implicit"].get<std::string>() << "\n";
            } else {
                if (pole_text.empty())
                    throw error(errc::syntax_error, "pedal needs --pole or --poles-file");
                Pole pole = cdetail::parse_pole(pole_text, s.reg, s.vars);
                Report r = cdetail::pedal_report(s, conic, ctext, pole);
                if (!svg_path.empty()) {
                    if (pole.symbolic)
                        throw error(errc::unsupported_kind,
                                    "cannot plot a symbolic pedal");
                    PlotSpec spec = cdetail::parse_window(window, resolution);
                    Poly f = parse_poly(*r.implicit, s.reg);
                    std::ofstream svg(svg_path);
                    if (!svg) throw error(errc::syntax_error, "cannot open SVG output");
                    svg << render_svg(f, s.vars, spec);
                    r.svg_path = svg_path;
                }
                emit(r);
            }
        } else if (impl->parsed()) {
            RationalFunction xr(parse_poly(xnum, s.reg), parse_poly(xden, s.reg));
            RationalFunction yr(parse_poly(ynum, s.reg), parse_poly(yden, s.reg));
            ImplicitizationResult res = implicitize(xr, yr, s.vars.t, s.vars.x, s.vars.y);
            Report r;
            r.implicit = poly_to_string(res.curve, s.reg);
            r.raw = poly_to_string(res.raw, s.reg);
            for (const auto& f : res.removed) r.removed.push_back(poly_to_string(f, s.reg));
            emit(r);
        } else if (fact->parsed()) {
            Poly p = parse_poly(poly_text, s.reg);
            Factorization f = factor_auto(p);
            Report r;
            r.factor_unit = f.unit;
            for (const auto& [g, m] : f.factors)
                r.factors.emplace_back(poly_to_string(g, s.reg), m);
            emit(r);
        } else if (sing->parsed()) {
            Poly p = parse_poly(poly_text, s.reg);
            SingularPoints sp = singular_points_rational(p, s.vars);
            Report r;
            r.implicit = poly_to_string(normalized(p), s.reg);
            for (const Point2& pt : sp.points)
                r.singularities.push_back(classify_singularity(p, pt, s.vars));
            emit(r);
        } else if (par->parsed()) {
            Conic conic = Conic::from_poly(parse_poly(conic_text, s.reg), s.vars);
            Parametrization pr = rational_parametrization(conic, s.vars);
            Report r;
            r.conic_poly = poly_to_string(conic.poly(s.vars), s.reg);
            r.conic_kind = conic_kind_name(conic.kind);
            r.param_x_num = poly_to_string(pr.x.num(), s.reg);
            r.param_x_den = poly_to_string(pr.x.den(), s.reg);
            r.param_y_num = poly_to_string(pr.y.num(), s.reg);
            r.param_y_den = poly_to_string(pr.y.den(), s.reg);
            if (pr.missing)
                r.missing_point =
                    "(" + pr.missing->x.to_string() + "," + pr.missing->y.to_string() + ")";
            emit(r);
        } else if (lima->parsed()) {
            Poly p = parse_poly(poly_text, s.reg);
            std::vector<LimaconMatch> ms = limacon_match(p, s.vars);
            Report r;
            r.has_limacon_matches = true;
            for (const auto& m : ms)
                r.limacon_matches.push_back({m.a.to_string(), m.e.to_string(),
                                             m.r1.to_string(), m.r2.to_string()});
            emit(r);
        } else if (plot->parsed()) {
            Poly p = parse_poly(poly_text, s.reg);
            PlotSpec spec = cdetail::parse_window(window, resolution);
            std::ofstream svg(svg_path);
            if (!svg) throw error(errc::syntax_error, "cannot open SVG output");
            svg << render_svg(p, s.vars, spec);
            Report r;
            r.svg_path = svg_path;
            emit(r);
        }
        outcome.out = out.str();
        return outcome;
    } catch (const error& e) {
        outcome.out = out.str() + "error: " + e.what() + "\n";
        outcome.exit_code = cdetail::input_error(e.code()) ? 2 : 3;
        return outcome;
    } catch (const std::exception& e) {
        outcome.out = out.str() + "error: " + e.what() + "\n";
        outcome.exit_code = 3;
        return outcome;
    }
}

}  // namespace pedcurve
