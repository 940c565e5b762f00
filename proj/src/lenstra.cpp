#include "normeuclid/lenstra.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "normeuclid/constants.hpp"
#include "normeuclid/rogers.hpp"
#include "normeuclid/specfun.hpp"

namespace normeuclid::lenstra {
namespace {

constexpr long kMinGapDegree = 1152;

void check_signature(long n, long s) {
  if (n < 1 || s < 0 || 2 * s > n) {
    throw DomainError("lenstra: signature requires n >= 1 and 0 <= 2s <= n");
  }
}

void check_r(long n, long r) {
  if (r < 0 || r > n) throw DomainError("lenstra: requires 0 <= r <= n");
}

// 2 pi^2 / ln^2 n, the common factor of the Poitou correction terms.
double poitou_scale(double log_n) { return 2.0 * kPi * kPi / (log_n * log_n); }

// Nonnegative correction subtracted in the Poitou bound for r = 0.
double poitou_correction(double n) {
  const double log_n = std::log(n);
  const double ratio = kPi * kPi / (log_n * log_n);
  const double inner = (8.0 + 8.0 / n) / (log_n * (1.0 + ratio) * (1.0 + ratio));
  return poitou_scale(log_n) * (kLambda3 + inner);
}

void check_theta(double theta) {
  if (!(theta > 0.0 && theta < 1.0 / 3.0)) throw DomainError("lenstra: theta must lie in (0, 1/3)");
}

void check_range(double theta, long n_min, long n_max) {
  check_theta(theta);
  if (n_min < kMinGapDegree) throw DomainError("lenstra: crossing search requires n_min >= 1152");
  if (n_max < n_min) throw DomainError("lenstra: crossing search requires n_min <= n_max");
}

bool crossing_at(const std::vector<std::optional<double>>& table, long n_min, long n_max, long n) {
  const long checkpoints[] = {n, std::min(n + 1, n_max), std::min(n + 10, n_max), n_max};
  for (long m : checkpoints) {
    const auto& g = table[static_cast<std::size_t>(m - n_min)];
    if (!g || !(*g > 0.0)) return false;
  }
  return true;
}

long first_crossing(const std::vector<std::optional<double>>& table, long n_min, long n_max) {
  for (long n = n_min; n <= n_max; ++n) {
    if (crossing_at(table, n_min, n_max, n)) return n;
  }
  throw NotFoundError("find_crossing: no crossing in [" + std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
}

}  // namespace

FieldSignature FieldSignature::make(long n, long r, long s, std::optional<double> log_abs_disc) {
  if (n < 1 || r < 0 || s < 0 || r + 2 * s != n) {
    throw DomainError("FieldSignature: requires r + 2s = n with r, s >= 0");
  }
  if (log_abs_disc && (!std::isfinite(*log_abs_disc) || *log_abs_disc < 0.0)) {
    throw DomainError("FieldSignature: ln|Delta| must be finite and >= 0");
  }
  return FieldSignature{n, r, s, log_abs_disc};
}

CriterionInput CriterionInput::make(FieldSignature sig, double log_m) {
  const double lo = kLog2;
  const double hi = static_cast<double>(sig.n) * kLog2;
  // Allow a few ulps of slack so ln 2 and n ln 2 themselves are accepted.
  const double slack = 1e-12 * std::max(1.0, hi);
  if (!std::isfinite(log_m) || log_m < lo - slack || log_m > hi + slack) {
    throw DomainError("CriterionInput: ln M must lie in [ln 2, n ln 2]");
  }
  return CriterionInput{sig, log_m};
}

double delta1_star_log(long n, long s) {
  check_signature(n, s);
  const double x = static_cast<double>(n);
  return specfun::log_gamma(x + 1.0).value - x * std::log(x) + static_cast<double>(s) * std::log(4.0 / kPi);
}

std::optional<Evaluation> delta2_star_log(long n, double theta, SigmaBound mode) {
  if (n < 1) throw DomainError("delta2_star_log: requires n >= 1");
  const double x = static_cast<double>(n);
  const double rest = 0.5 * x * std::log(4.0 / (kPi * x)) + specfun::log_gamma(1.0 + 0.5 * x).value;
  if (mode == SigmaBound::upper) {
    return Evaluation::checked(rogers::sigma_upper_log(n) + rest, 0.0, 0, "delta2_star_log");
  }
  const auto lower = rogers::sigma_lower_log(n, theta);
  if (!lower) return std::nullopt;
  return Evaluation::checked(lower->value + rest, lower->err_estimate, lower->terms_used, "delta2_star_log");
}

double delta2_star_log_upper(long n) {
  if (n < 1) throw DomainError("delta2_star_log_upper: requires n >= 1");
  const double x = static_cast<double>(n);
  return 0.5 * x * (1.0 - std::log(kPi)) - x * std::log(x) + specfun::log_gamma(x + 2.0).value;
}

CriterionVerdict criterion_check(const CriterionInput& input, double theta) {
  check_theta(theta);
  const FieldSignature& sig = input.sig;
  if (!sig.log_abs_disc) throw DomainError("criterion_check: ln|Delta| is required");
  const double half_disc = 0.5 * *sig.log_abs_disc;

  const double d1 = delta1_star_log(sig.n, sig.s);
  const double d2 = delta2_star_log(sig.n, theta, SigmaBound::upper)->value;

  CriterionVerdict v;
  v.delta1_holds = input.log_m > d1 + half_disc;
  v.delta2_holds = input.log_m > d2 + half_disc;
  v.delta2_mode = SigmaBound::upper;
  v.max_log_disc_delta2 = 2.0 * (input.log_m - d2);
  return v;
}

double poitou_r_coefficient(long n) {
  if (n < 2) throw DomainError("poitou_r_coefficient: requires n >= 2");
  return 0.5 * kPi - poitou_scale(std::log(static_cast<double>(n))) * kBeta3;
}

double poitou_grh_lower(long n, long r) {
  if (n < 2) throw DomainError("poitou_grh_lower: requires n >= 2");
  check_r(n, r);
  const double x = static_cast<double>(n);
  return kEulerGamma + std::log(8.0 * kPi) + static_cast<double>(r) / x * poitou_r_coefficient(n) -
         poitou_correction(x);
}

double uncond_lower_main(long n, long r) {
  if (n < 1) throw DomainError("uncond_lower_main: requires n >= 1");
  check_r(n, r);
  return std::log(4.0 * kPi) + kEulerGamma + static_cast<double>(r) / static_cast<double>(n);
}

bool remark_condition(double r_over_n) { return r_over_n > 1.0 - kEulerGamma; }

double lenstra_disc_cap(long n) {
  if (n < 2) throw DomainError("lenstra_disc_cap: requires n >= 2");
  return 2.0 * kLog2 - 2.0 / static_cast<double>(n) * delta2_star_log_upper(n);
}

double disc_cap_limit() { return std::log(4.0 * kPi) + 1.0; }

double serre_limit() { return std::log(8.0 * kPi) + kEulerGamma; }

std::optional<Evaluation> main_gap(long n, long r, double theta, double tol) {
  if (n < kMinGapDegree) throw DomainError("main_gap: requires n >= 1152, got n = " + std::to_string(n));
  check_r(n, r);
  const Evaluation f = rogers::f_lower(rogers::RogersContext::from_degree(n, theta), tol);
  if (!(f.value > 0.0)) return std::nullopt;

  const double x = static_cast<double>(n);
  const double log_n = std::log(x);
  KahanSum g;
  g.add(poitou_correction(x));
  g.add(-static_cast<double>(r) / x * poitou_r_coefficient(n));
  g.add(-3.0 * log_n / x);
  g.add((2.0 - kLog2 - 2.0 * std::log(f.value)) / x);
  g.add(-2.0 / (x * (12.0 * x + 1.0)));

  const double target = kEulerGamma + kLog2 - 1.0;
  const double err = 2.0 * f.err_estimate / (f.value * x) + 1e-15;
  return Evaluation::checked(target - g.value(), err, f.terms_used, "main_gap");
}

std::optional<Evaluation> main_gap_all_r(long n, double theta, double tol) {
  if (n >= 33 && poitou_r_coefficient(n) >= 0.0) {
    return main_gap(n, 0, theta, tol);
  }
  // The gap is affine in r, so its minimum sits at an admissible endpoint.
  const auto at_min = main_gap(n, n % 2, theta, tol);
  const auto at_max = main_gap(n, n, theta, tol);
  if (!at_min || !at_max) return std::nullopt;
  return at_min->value <= at_max->value ? at_min : at_max;
}

std::vector<std::optional<double>> gap_table(double theta, long n_min, long n_max, int jobs) {
  check_range(theta, n_min, n_max);
  const long count = n_max - n_min + 1;
  std::vector<std::optional<double>> table(static_cast<std::size_t>(count));
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    try {
      const auto g = main_gap_all_r(n_min + i, theta);
      if (g) table[static_cast<std::size_t>(i)] = g->value;
    } catch (...) {
#pragma omp critical(normeuclid_gap_table)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

std::vector<std::optional<double>> gap_table_serial(double theta, long n_min, long n_max) {
  check_range(theta, n_min, n_max);
  std::vector<std::optional<double>> table;
  table.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (long n = n_min; n <= n_max; ++n) {
    const auto g = main_gap_all_r(n, theta);
    table.push_back(g ? std::optional<double>(g->value) : std::nullopt);
  }
  return table;
}

long find_crossing(double theta, long n_min, long n_max, int jobs) {
  return first_crossing(gap_table(theta, n_min, n_max, jobs), n_min, n_max);
}

long find_crossing_serial(double theta, long n_min, long n_max) {
  return first_crossing(gap_table_serial(theta, n_min, n_max), n_min, n_max);
}

}  // namespace normeuclid::lenstra
