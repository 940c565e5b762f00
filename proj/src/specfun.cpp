#include "normeuclid/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "normeuclid/constants.hpp"

namespace normeuclid::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_2 ... B_30 as exact rationals.
constexpr std::array<double, 16> kBernoulliEven = {
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

constexpr int kMaxBernoulliPairs = 15;

// Stirling series is used from this argument upward; 8 correction terms
// leave a remainder below 1e-20 there.
constexpr double kStirlingShift = 15.0;
constexpr int kStirlingTerms = 8;

// Digamma: recurrence up to this argument, then 6 asymptotic terms.
constexpr double kDigammaShift = 8.0;
constexpr int kDigammaTerms = 6;

void validate_hurwitz(double s, double a, EulerMaclaurinCutoffs cutoffs) {
  if (!std::isfinite(s) || !std::isfinite(a)) {
    throw DomainError("hurwitz_zeta: non-finite argument");
  }
  if (s <= 1.0) {
    throw PoleError("hurwitz_zeta: requires s > 1, got s = " + std::to_string(s));
  }
  if (!(a > 0.0 && a <= 1.0)) {
    throw DomainError("hurwitz_zeta: requires 0 < a <= 1, got a = " + std::to_string(a));
  }
  if (cutoffs.n < 1 || cutoffs.j < 1 || cutoffs.j >= kMaxBernoulliPairs) {
    throw DomainError("hurwitz_zeta: cutoffs out of range");
  }
}

}  // namespace

double bernoulli_even(int j) {
  if (j < 1 || j > kMaxBernoulliPairs) {
    throw DomainError("bernoulli_even: index out of range");
  }
  return kBernoulliEven[static_cast<std::size_t>(j)];
}

Evaluation log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: requires finite x > 0");
  }
  if (x == 1.0 || x == 2.0) {
    return Evaluation{0.0, 0.0, 0};
  }

  KahanSum shift;
  double shift_abs = 0.0;
  double y = x;
  std::int64_t steps = 0;
  while (y < kStirlingShift) {
    const double l = std::log(y);
    shift.add(l);
    shift_abs += std::fabs(l);
    y += 1.0;
    ++steps;
  }

  const double log_y = std::log(y);
  const double lead = (y - 0.5) * log_y - y;
  const double half_log_2pi = 0.5 * std::log(2.0 * kPi);

  const double inv = 1.0 / y;
  const double inv2 = inv * inv;
  double power = inv;  // y^{-(2k-1)}
  KahanSum series;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    series.add(bernoulli_even(k) / (2.0 * k * (2.0 * k - 1.0)) * power);
    power *= inv2;
  }
  const double omitted = std::fabs(bernoulli_even(kStirlingTerms + 1) /
                                   (2.0 * (kStirlingTerms + 1) * (2.0 * kStirlingTerms + 1)) * power);

  KahanSum total;
  total.add(lead);
  total.add(half_log_2pi);
  total.add(series.value());
  total.add(-shift.value());
  const double err =
      omitted + 4.0 * kEps * (std::fabs(lead) + half_log_2pi + shift_abs + std::fabs(series.value()));
  return Evaluation::checked(total.value(), err, steps + kStirlingTerms, "log_gamma");
}

Evaluation digamma(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("digamma: non-finite argument");
  }
  if (x <= 0.0 && x == std::floor(x)) {
    throw PoleError("digamma: pole at non-positive integer " + std::to_string(x));
  }

  // psi(x) = psi(x + k) - sum_{i<k} 1/(x + i)
  KahanSum shift;
  double shift_abs = 0.0;
  double y = x;
  std::int64_t steps = 0;
  while (y < kDigammaShift) {
    const double r = 1.0 / y;
    shift.add(r);
    shift_abs += std::fabs(r);
    y += 1.0;
    ++steps;
  }

  const double inv2 = 1.0 / (y * y);
  double power = inv2;
  KahanSum asym;
  asym.add(std::log(y));
  asym.add(-0.5 / y);
  for (int k = 1; k <= kDigammaTerms; ++k) {
    asym.add(-bernoulli_even(k) / (2.0 * k) * power);
    power *= inv2;
  }
  const double omitted = std::fabs(bernoulli_even(kDigammaTerms + 1) / (2.0 * (kDigammaTerms + 1)) * power);

  KahanSum total;
  total.add(asym.value());
  total.add(-shift.value());
  const double err = omitted + 4.0 * kEps * (std::fabs(std::log(y)) + shift_abs);
  return Evaluation::checked(total.value(), err, steps + kDigammaTerms, "digamma");
}

EulerMaclaurinCutoffs default_cutoffs(double s) {
  const int n = std::max(20, static_cast<int>(std::ceil(10.0 + std::fabs(s))));
  return EulerMaclaurinCutoffs{n, 10};
}

Evaluation hurwitz_zeta(double s, double a) { return hurwitz_zeta(s, a, default_cutoffs(s)); }

Evaluation hurwitz_zeta(double s, double a, EulerMaclaurinCutoffs cutoffs) {
  validate_hurwitz(s, a, cutoffs);
  const int n = cutoffs.n;
  const int j_max = cutoffs.j;

  // Direct part, smallest terms first.
  KahanSum direct;
  for (int k = n - 1; k >= 0; --k) {
    direct.add(std::pow(k + a, -s));
  }

  const double x = n + a;
  const double x_pow = std::pow(x, -s);
  const double tail = x * x_pow / (s - 1.0);
  const double half = 0.5 * x_pow;

  // c_j = (s)_{2j-1} / (2j)! * x^{-s-2j+1}
  KahanSum corr;
  double c = 0.5 * s * x_pow / x;
  const double inv_x2 = 1.0 / (x * x);
  for (int j = 1; j <= j_max; ++j) {
    corr.add(bernoulli_even(j) * c);
    c *= (s + 2.0 * j - 1.0) * (s + 2.0 * j) / ((2.0 * j + 1.0) * (2.0 * j + 2.0)) * inv_x2;
  }
  const double omitted = std::fabs(bernoulli_even(j_max + 1) * c);

  KahanSum total;
  total.add(direct.value());
  total.add(tail);
  total.add(half);
  total.add(corr.value());
  const double magnitude = std::fabs(direct.value()) + std::fabs(tail) + half + std::fabs(corr.value());
  return Evaluation::checked(total.value(), omitted + 4.0 * kEps * magnitude, n + j_max, "hurwitz_zeta");
}

Evaluation hurwitz_zeta_ds(double s, double a) { return hurwitz_zeta_ds(s, a, default_cutoffs(s)); }

Evaluation hurwitz_zeta_ds(double s, double a, EulerMaclaurinCutoffs cutoffs) {
  validate_hurwitz(s, a, cutoffs);
  const int n = cutoffs.n;
  const int j_max = cutoffs.j;

  KahanSum direct;
  double direct_abs = 0.0;
  for (int k = n - 1; k >= 0; --k) {
    const double base = k + a;
    const double t = -std::log(base) * std::pow(base, -s);
    direct.add(t);
    direct_abs += std::fabs(t);
  }

  const double x = n + a;
  const double log_x = std::log(x);
  const double x_pow = std::pow(x, -s);
  const double tail = x * x_pow / (s - 1.0);
  const double d_tail = -log_x * tail - tail / (s - 1.0);
  const double d_half = -0.5 * log_x * x_pow;

  // d/ds c_j = c_j * (sum_{i=0}^{2j-2} 1/(s+i) - ln x)
  KahanSum corr;
  double corr_abs = 0.0;
  double c = 0.5 * s * x_pow / x;
  double harmonic = 1.0 / s;
  const double inv_x2 = 1.0 / (x * x);
  for (int j = 1; j <= j_max; ++j) {
    const double t = bernoulli_even(j) * c * (harmonic - log_x);
    corr.add(t);
    corr_abs += std::fabs(t);
    c *= (s + 2.0 * j - 1.0) * (s + 2.0 * j) / ((2.0 * j + 1.0) * (2.0 * j + 2.0)) * inv_x2;
    harmonic += 1.0 / (s + 2.0 * j - 1.0) + 1.0 / (s + 2.0 * j);
  }
  const double omitted = std::fabs(bernoulli_even(j_max + 1) * c * (harmonic - log_x));

  KahanSum total;
  total.add(direct.value());
  total.add(d_tail);
  total.add(d_half);
  total.add(corr.value());
  const double magnitude = direct_abs + std::fabs(d_tail) + std::fabs(d_half) + corr_abs;
  return Evaluation::checked(total.value(), omitted + 4.0 * kEps * magnitude, n + j_max, "hurwitz_zeta_ds");
}

Evaluation riemann_zeta(double s) {
  if (!(s > 1.0)) {
    throw PoleError("riemann_zeta: requires s > 1");
  }
  return hurwitz_zeta(s, 1.0);
}

}  // namespace normeuclid::specfun
