#pragma once

#include <functional>

#include "normeuclid/evaluation.hpp"

namespace normeuclid::specfun {

using RealFunction = std::function<double(double)>;

struct QuadratureOptions {
  // Maximum number of Gauss-Kronrod panels before giving up.
  int max_panels = 2000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature on a finite
/// interval. Panels are refined in order of decreasing error estimate (ties
/// broken by left endpoint), so the subdivision sequence is a function of
/// the inputs only. Throws ConvergenceError when the panel budget runs out.
Evaluation integrate(const RealFunction& f, double lo, double hi, double tol,
                     QuadratureOptions options = {});

/// Root of f in [lo, hi] by bisection with secant acceleration. The
/// returned point lies in a sign-change bracket of width <= tol (or is an
/// exact zero). Requires f(lo) * f(hi) < 0, otherwise throws BracketError.
double find_root(const RealFunction& f, double lo, double hi, double tol);

}  // namespace normeuclid::specfun
