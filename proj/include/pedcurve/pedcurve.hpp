#pragma once

// Umbrella header for the exact pedal-curve toolkit.

#include "pedcurve/bigint.hpp"
#include "pedcurve/conic.hpp"
#include "pedcurve/error.hpp"
#include "pedcurve/factor.hpp"
#include "pedcurve/parser.hpp"
#include "pedcurve/pedal.hpp"
#include "pedcurve/polygcd.hpp"
#include "pedcurve/polynomial.hpp"
#include "pedcurve/ratfunc.hpp"
#include "pedcurve/rational.hpp"
#include "pedcurve/render.hpp"
#include "pedcurve/resultant.hpp"
#include "pedcurve/singular.hpp"
#include "pedcurve/univariate.hpp"
#include "pedcurve/vars.hpp"
