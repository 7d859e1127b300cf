#pragma once

// Implicit-curve rendering: marching squares over float evaluation of the
// exact polynomial, one bisection-refined vertex per crossed cell edge,
// emitted as SVG polylines. Rendering is presentation only; nothing
// algebraic depends on it.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "pedcurve/polynomial.hpp"
#include "pedcurve/vars.hpp"

namespace pedcurve {

struct PlotSpec {
    double xmin = -10, xmax = 10, ymin = -10, ymax = 10;
    int resolution = 128;  // grid cells per axis
    double stroke = 1.25;

    void validate() const {
        if (!(xmin < xmax) || !(ymin < ymax))
            throw error(errc::empty_window, "window bounds must be increasing");
        if (resolution < 16) throw error(errc::empty_window, "resolution must be >= 16");
    }
};

struct RenderStats {
    std::size_t polylines = 0;
    std::size_t vertices = 0;
    bool empty = false;
    double max_residual_ratio = 0.0;  // max |F(v)| / max_grid|F|
};

namespace rdetail {

struct Pt {
    double x, y;
};

}  // namespace rdetail

inline std::string render_svg(const Poly& f, const StandardVars& vars, const PlotSpec& spec,
                              RenderStats* stats = nullptr) {
    spec.validate();
    for (VarId v : f.variables())
        if (v != vars.x && v != vars.y)
            throw error(errc::unsupported_kind, "plot needs a polynomial in x and y");
    const int n = spec.resolution;
    const double dx = (spec.xmax - spec.xmin) / n;
    const double dy = (spec.ymax - spec.ymin) / n;
    auto eval = [&](double x, double y) {
        return f.evaluate_double({{vars.x, x}, {vars.y, y}});
    };
    std::vector<double> grid(static_cast<std::size_t>(n + 1) * (n + 1));
    double maxabs = 0;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) {
            double v = eval(spec.xmin + i * dx, spec.ymin + j * dy);
            grid[static_cast<std::size_t>(j) * (n + 1) + i] = v;
            maxabs = std::max(maxabs, std::fabs(v));
        }
    if (maxabs == 0) maxabs = 1;
    const double tol = 1e-6 * maxabs;

    // one refined vertex per crossed edge, keyed by (node index, direction)
    std::map<long long, std::size_t> edge_vertex;
    std::vector<rdetail::Pt> verts;
    double worst = 0;
    auto vertex_on_edge = [&](int i0, int j0, int i1, int j1) -> std::size_t {
        long long key = ((static_cast<long long>(j0) * (n + 1) + i0) << 2) |
                        (i1 > i0 ? 1 : 2);
        auto it = edge_vertex.find(key);
        if (it != edge_vertex.end()) return it->second;
        double x0 = spec.xmin + i0 * dx, y0 = spec.ymin + j0 * dy;
        double x1 = spec.xmin + i1 * dx, y1 = spec.ymin + j1 * dy;
        double f0 = grid[static_cast<std::size_t>(j0) * (n + 1) + i0];
        double f1 = grid[static_cast<std::size_t>(j1) * (n + 1) + i1];
        // linear seed, then bisection until the residual bound holds
        double t = f0 / (f0 - f1);
        double px = x0 + t * (x1 - x0), py = y0 + t * (y1 - y0);
        double lo = 0, hi = 1, flo = f0;
        for (int iter = 0; iter < 80 && std::fabs(eval(px, py)) > tol; ++iter) {
            double mid = 0.5 * (lo + hi);
            double mx = x0 + mid * (x1 - x0), my = y0 + mid * (y1 - y0);
            double fm = eval(mx, my);
            if ((fm > 0) == (flo > 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
            px = x0 + 0.5 * (lo + hi) * (x1 - x0);
            py = y0 + 0.5 * (lo + hi) * (y1 - y0);
        }
        worst = std::max(worst, std::fabs(eval(px, py)) / maxabs);
        std::size_t id = verts.size();
        verts.push_back({px, py});
        edge_vertex.emplace(key, id);
        return id;
    };

    std::vector<std::pair<std::size_t, std::size_t>> segments;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            double f00 = grid[static_cast<std::size_t>(j) * (n + 1) + i];
            double f10 = grid[static_cast<std::size_t>(j) * (n + 1) + i + 1];
            double f01 = grid[static_cast<std::size_t>(j + 1) * (n + 1) + i];
            double f11 = grid[static_cast<std::size_t>(j + 1) * (n + 1) + i + 1];
            int code = (f00 > 0 ? 1 : 0) | (f10 > 0 ? 2 : 0) | (f11 > 0 ? 4 : 0) |
                       (f01 > 0 ? 8 : 0);
            if (code == 0 || code == 15) continue;
            auto bottom = [&] { return vertex_on_edge(i, j, i + 1, j); };
            auto top = [&] { return vertex_on_edge(i, j + 1, i + 1, j + 1); };
            auto left = [&] { return vertex_on_edge(i, j, i, j + 1); };
            auto right = [&] { return vertex_on_edge(i + 1, j, i + 1, j + 1); };
            switch (code) {
                case 1: case 14: segments.emplace_back(left(), bottom()); break;
                case 2: case 13: segments.emplace_back(bottom(), right()); break;
                case 3: case 12: segments.emplace_back(left(), right()); break;
                case 4: case 11: segments.emplace_back(right(), top()); break;
                case 6: case 9: segments.emplace_back(bottom(), top()); break;
                case 7: case 8: segments.emplace_back(left(), top()); break;
                case 5: case 10: {
                    double center = eval(spec.xmin + (i + 0.5) * dx,
                                         spec.ymin + (j + 0.5) * dy);
                    bool joined = (code == 5) == (center > 0);
                    if (joined) {
                        segments.emplace_back(left(), bottom());
                        segments.emplace_back(right(), top());
                    } else {
                        segments.emplace_back(left(), top());
                        segments.emplace_back(bottom(), right());
                    }
                    break;
                }
                default: break;
            }
        }

    // chain segments into polylines
    std::map<std::size_t, std::vector<std::size_t>> adj;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        adj[segments[s].first].push_back(s);
        adj[segments[s].second].push_back(s);
    }
    std::vector<bool> used(segments.size(), false);
    std::vector<std::vector<std::size_t>> polylines;
    for (std::size_t s0 = 0; s0 < segments.size(); ++s0) {
        if (used[s0]) continue;
        std::vector<std::size_t> line{segments[s0].first, segments[s0].second};
        used[s0] = true;
        for (int dir = 0; dir < 2; ++dir) {
            while (true) {
                std::size_t tail = dir == 0 ? line.back() : line.front();
                std::size_t next_seg = static_cast<std::size_t>(-1);
                for (std::size_t s : adj[tail])
                    if (!used[s]) {
                        next_seg = s;
                        break;
                    }
                if (next_seg == static_cast<std::size_t>(-1)) break;
                used[next_seg] = true;
                std::size_t other = segments[next_seg].first == tail
                                        ? segments[next_seg].second
                                        : segments[next_seg].first;
                if (dir == 0)
                    line.push_back(other);
                else
                    line.insert(line.begin(), other);
            }
        }
        polylines.push_back(std::move(line));
    }

    // world -> viewport
    const double W = 640, H = 640;
    auto sx = [&](double x) { return (x - spec.xmin) / (spec.xmax - spec.xmin) * W; };
    auto sy = [&](double y) { return H - (y - spec.ymin) / (spec.ymax - spec.ymin) * H; };
    std::string svg;
    char buf[160];
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                  "width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  W, H, W, H);
    svg += buf;
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (segments.empty()) {
        svg += "<!-- warning: no sign change in the window; empty plot -->\n";
        svg += "<text x=\"16\" y=\"32\" font-size=\"16\">no curve in window</text>\n";
    }
    for (const auto& line : polylines) {
        svg += "<path fill=\"none\" stroke=\"black\" stroke-width=\"";
        std::snprintf(buf, sizeof buf, "%.3g", spec.stroke);
        svg += buf;
        svg += "\" d=\"";
        for (std::size_t k = 0; k < line.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%c%.2f %.2f", k == 0 ? 'M' : 'L',
                          sx(verts[line[k]].x), sy(verts[line[k]].y));
            svg += buf;
        }
        svg += "\"/>\n";
    }
    svg += "</svg>\n";
    if (stats) {
        stats->polylines = polylines.size();
        stats->vertices = verts.size();
        stats->empty = segments.empty();
        stats->max_residual_ratio = worst;
    }
    return svg;
}

// Sign pattern of the four grid cells around a point, at the given
// resolution: true when the contour crosses next to the point.
inline bool sign_change_near(const Poly& f, const StandardVars& vars, const PlotSpec& spec,
                             double px, double py) {
    const int n = spec.resolution;
    const double dx = (spec.xmax - spec.xmin) / n;
    const double dy = (spec.ymax - spec.ymin) / n;
    int ci = static_cast<int>((px - spec.xmin) / dx);
    int cj = static_cast<int>((py - spec.ymin) / dy);
    bool pos = false, neg = false;
    for (int j = cj - 1; j <= cj + 1; ++j)
        for (int i = ci - 1; i <= ci + 1; ++i) {
            if (i < 0 || j < 0 || i > n || j > n) continue;
            double v = f.evaluate_double(
                {{vars.x, spec.xmin + i * dx}, {vars.y, spec.ymin + j * dy}});
            (v > 0 ? pos : neg) = true;
        }
    return pos && neg;
}

}  // namespace pedcurve
