#pragma once

#include "normeuclid/evaluation.hpp"

namespace normeuclid::zimmert {

/// Default truncation length of the two digamma series.
inline constexpr long kSeriesTerms = 100'000;

/// The five pieces of Zimmert's F_{a,b} at one beta.
struct ZimmertTerms {
  double beta = 0.0;
  Evaluation f1_series;  // F_1
  double f1_point = 0.0;  // f_1
  Evaluation f2_series;  // F_2
  double f2_point = 0.0;  // f_2
  double f3 = 0.0;        // F_3

  /// a (F_1 + f_1) + b (F_2 + f_2) + F_3.
  double combined(long a, long b) const;
};

/// Requires 1e-4 <= beta < 1/4. Throws ConvergenceError if a series cannot
/// be certified to 1e-8.
ZimmertTerms f_terms(double beta, long terms = kSeriesTerms);

double f_ab(long a, long b, double beta);

/// gamma + ln 4 + 1 and gamma + ln 4 - 1, the beta -> 0 limits of F_1 + f_1
/// and F_2 + f_2.
double limit_f1();
double limit_f2();

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// F_{r+s,s}(beta)/2 <= zeta'/zeta(1 + beta) + ln sqrt|Delta| - (n/2) ln pi
/// for the cyclotomic field Q(zeta_m).
InequalityCheck satz4_check(long m, double beta);

/// ln(min N(I)) (1 - 1/zeta(1 + beta)) <= -F_{r+s,s}(beta)/2 + ln sqrt|Delta|
/// - (n/2) ln pi, for Q(zeta_m).
InequalityCheck min_norm_check(long m, double beta);

struct Threshold {
  double threshold = 0.0;
  double denominator = 0.0;
};

/// 2 ln 2 / (3 ln 2 + gamma - 1 - 2C). The denominator is returned as is so
/// the caller can inspect its sign.
Threshold zeta_lenstra_threshold(double c);

/// Packing exponent constants C in sigma_n <= 2^{-C' n}: Rogers' 1/2 ln 2 and
/// the Kabatjanskii-Levenshtein 0.5990 ln 2.
double rogers_exponent();
double kabatjanskii_levenshtein_exponent();

}  // namespace normeuclid::zimmert
