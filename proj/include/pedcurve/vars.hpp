#pragma once

#include "pedcurve/polynomial.hpp"

namespace pedcurve {

// The session variable set used by the pipeline: curve variables x, y,
// the elimination parameter t, symbolic pole coordinates xD, yD, and the
// local variables u, v for tangent cones and parameter pairs.
struct StandardVars {
    VarId x, y, t, xD, yD, u, v;

    static StandardVars install(VarRegistry& reg) {
        StandardVars s{};
        s.x = reg.add("x");
        s.y = reg.add("y");
        s.t = reg.add("t");
        s.xD = reg.add("xD");
        s.yD = reg.add("yD");
        s.u = reg.add("u");
        s.v = reg.add("v");
        return s;
    }
};

}  // namespace pedcurve
