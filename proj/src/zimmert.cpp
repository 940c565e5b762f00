#include "normeuclid/zimmert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "normeuclid/constants.hpp"
#include "normeuclid/cyclozeta.hpp"
#include "normeuclid/specfun.hpp"

namespace normeuclid::zimmert {
namespace {

constexpr double kTarget = 1e-8;
constexpr long kTailFit = 100;

double psi(double x) { return specfun::digamma(x).value; }

void check_beta(double beta) {
  // Slack of a few ulps so the literal 1e-4 itself is accepted.
  if (!(beta >= 1e-4 * (1.0 - 1e-12) && beta < 0.25)) {
    throw DomainError("zimmert: beta must lie in [1e-4, 1/4)");
  }
}

// Sum of term(l) for l >= 1: the first `terms` exactly, the rest through the
// asymptotic c/l^2 with c fitted on the last kTailFit terms.
template <typename Term>
Evaluation series(Term term, long terms, const char* what) {
  if (terms < 2 * kTailFit) throw DomainError(std::string(what) + ": too few terms");
  KahanSum acc;
  KahanSum c_acc;
  double c_min = std::numeric_limits<double>::infinity();
  double c_max = -std::numeric_limits<double>::infinity();
  double biggest = 0.0;
  for (long l = 1; l <= terms; ++l) {
    const double t = term(static_cast<double>(l));
    acc.add(t);
    biggest = std::max(biggest, std::fabs(t));
    if (l > terms - kTailFit) {
      const double c = t * static_cast<double>(l) * static_cast<double>(l);
      c_acc.add(c);
      c_min = std::min(c_min, c);
      c_max = std::max(c_max, c);
    }
  }
  const double big_l = static_cast<double>(terms);
  const double c = c_acc.value() / static_cast<double>(kTailFit);
  acc.add(c / (big_l + 0.5));
  // Uncertainty in c, an allowance for the 1/l^3 order of the tail, and a
  // few ulps per term of the digamma values being differenced.
  const double spread = (c_max - c_min) / big_l;
  const double next_order = 10.0 * std::fabs(c) / (big_l * big_l);
  const double rounding = 16.0 * std::numeric_limits<double>::epsilon() * std::log(big_l) * big_l;
  const double err = spread + next_order + rounding + 1e-16 * biggest;
  if (!(err <= kTarget)) {
    throw ConvergenceError(std::string(what) + ": tail estimate cannot certify 1e-8");
  }
  return Evaluation::checked(acc.value(), err, terms, what);
}

}  // namespace

double ZimmertTerms::combined(long a, long b) const {
  return static_cast<double>(a) * (f1_series.value + f1_point) +
         static_cast<double>(b) * (f2_series.value + f2_point) + f3;
}

ZimmertTerms f_terms(double beta, long terms) {
  check_beta(beta);
  const double c = 2.0 / (1.0 + 2.0 * beta);
  const double d = 2.0 + 4.0 * beta;

  ZimmertTerms z;
  z.beta = beta;
  z.f1_series = series(
      [&](double l) {
        return c * (psi((2.0 * l + 3.0 * beta) / d) - psi((2.0 * l - 1.0 + beta) / d)) -
               1.0 / (2.0 * l - 2.0 - beta) - 1.0 / (2.0 * l - 1.0 + beta);
      },
      terms, "F1");
  z.f1_point = -0.5 * (psi(0.5 * (1.0 + beta)) + psi(-0.5 * beta));
  z.f2_series = series(
      [&](double l) {
        return c * (psi((2.0 * l + 1.0 + 3.0 * beta) / d) - psi((2.0 * l + beta) / d)) -
               1.0 / (2.0 * l - 1.0 - beta) - 1.0 / (2.0 * l + beta);
      },
      terms, "F2");
  z.f2_point = -0.5 * (psi(1.0 + 0.5 * beta) + psi(0.5 * (1.0 - beta)));
  z.f3 = -4.0 / beta + c * (psi((1.0 + beta) / d) - psi((1.0 + 3.0 * beta) / d) + psi((2.0 + 5.0 * beta) / d) -
                            psi((2.0 + 3.0 * beta) / d));
  return z;
}

double f_ab(long a, long b, double beta) {
  if (a < 0 || b < 0) throw DomainError("f_ab: requires a, b >= 0");
  return f_terms(beta).combined(a, b);
}

double limit_f1() { return kEulerGamma + 2.0 * kLog2 + 1.0; }
double limit_f2() { return kEulerGamma + 2.0 * kLog2 - 1.0; }

namespace {

struct FieldSide {
  double half_f;      // F_{r+s,s}(beta)/2
  double disc_terms;  // ln sqrt|Delta| - (n/2) ln pi
};

FieldSide field_side(long m, double beta) {
  const auto [r, s] = cyclo::cyclo_signature(m);
  const double n = static_cast<double>(r + 2 * s);
  return {0.5 * f_ab(r + s, s, beta), 0.5 * cyclo::cyclo_disc_log(m) - 0.5 * n * std::log(kPi)};
}

}  // namespace

InequalityCheck satz4_check(long m, double beta) {
  check_beta(beta);
  const FieldSide side = field_side(m, beta);
  InequalityCheck out;
  out.lhs = side.half_f;
  out.rhs = cyclo::zeta_cyclotomic_logderiv(m, 1.0 + beta).value + side.disc_terms;
  out.holds = out.lhs <= out.rhs;
  return out;
}

InequalityCheck min_norm_check(long m, double beta) {
  check_beta(beta);
  const FieldSide side = field_side(m, beta);
  const double zeta = cyclo::zeta_cyclotomic(m, 1.0 + beta).value;
  const double log_norm = std::log(static_cast<double>(cyclo::min_proper_ideal_norm(m)));
  InequalityCheck out;
  out.lhs = log_norm * (1.0 - 1.0 / zeta);
  out.rhs = -side.half_f + side.disc_terms;
  out.holds = out.lhs <= out.rhs;
  return out;
}

Threshold zeta_lenstra_threshold(double c) {
  const double denominator = 3.0 * kLog2 + kEulerGamma - 1.0 - 2.0 * c;
  if (denominator == 0.0 || !std::isfinite(denominator)) {
    throw DomainError("zeta_lenstra_threshold: vanishing denominator");
  }
  return {2.0 * kLog2 / denominator, denominator};
}

double rogers_exponent() { return 0.5 * kLog2; }
double kabatjanskii_levenshtein_exponent() { return 0.5990 * kLog2; }

}  // namespace normeuclid::zimmert
