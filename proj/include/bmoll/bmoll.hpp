#pragma once

// Exact-arithmetic toolkit for Boros-Moll polynomials: four closed-form
// evaluation routes, the combinatorial structures behind them (reluctant
// functions, Meixner (bi-)endofunctions, colored permutations), the
// Foata-style bijections, and the weighted-enumeration identity they verify.

#include "bmoll/bijections.hpp"
#include "bmoll/boros_moll.hpp"
#include "bmoll/factorials.hpp"
#include "bmoll/meixner.hpp"
#include "bmoll/parallel.hpp"
#include "bmoll/polynomial.hpp"
#include "bmoll/quadrature.hpp"
#include "bmoll/rational.hpp"
#include "bmoll/reluctant.hpp"
#include "bmoll/serialize.hpp"
#include "bmoll/weights.hpp"
