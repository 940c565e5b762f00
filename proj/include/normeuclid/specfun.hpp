#pragma once

#include <functional>

#include "normeuclid/evaluation.hpp"

namespace normeuclid::specfun {

/// Bernoulli number B_{2j} for 1 <= j <= 15, from hardcoded exact rationals.
double bernoulli_even(int j);

/// ln Gamma(x) for x > 0. Upward recurrence to x >= 15, then Stirling series.
Evaluation log_gamma(double x);

/// psi(x) = Gamma'(x)/Gamma(x). Negative non-integer arguments are allowed;
/// non-positive integers throw PoleError.
Evaluation digamma(double x);

/// Truncation parameters of the Euler-Maclaurin scheme: `n` terms are summed
/// directly and `j` Bernoulli pairs are used for the correction.
struct EulerMaclaurinCutoffs {
  int n = 20;
  int j = 10;
};

/// Default cutoffs: N = max(20, ceil(10 + |s|)), J = 10.
EulerMaclaurinCutoffs default_cutoffs(double s);

/// Hurwitz zeta zeta(s, a) = sum_{k>=0} (k + a)^{-s}, s > 1, 0 < a <= 1.
/// err_estimate is the first omitted Bernoulli term plus a rounding bound.
Evaluation hurwitz_zeta(double s, double a);
Evaluation hurwitz_zeta(double s, double a, EulerMaclaurinCutoffs cutoffs);

/// d/ds zeta(s, a), by differentiating the Euler-Maclaurin scheme term-wise.
Evaluation hurwitz_zeta_ds(double s, double a);
Evaluation hurwitz_zeta_ds(double s, double a, EulerMaclaurinCutoffs cutoffs);

/// Riemann zeta for real s > 1.
Evaluation riemann_zeta(double s);

}  // namespace normeuclid::specfun
