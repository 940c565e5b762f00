#include "normeuclid/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "normeuclid/constants.hpp"
#include "normeuclid/cyclozeta.hpp"
#include "normeuclid/errors.hpp"
#include "normeuclid/format.hpp"
#include "normeuclid/lenstra.hpp"
#include "normeuclid/rogers.hpp"
#include "normeuclid/zimmert.hpp"

namespace normeuclid::reproduce {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects named sub-checks and renders them into the detail string.
class Checks {
 public:
  void add(bool ok, const std::string& text) {
    all_ &= ok;
    if (!out_.str().empty()) out_ << "; ";
    out_ << (ok ? "" : "FAILED ") << text;
  }
  bool ok() const { return all_; }
  std::string str() const { return out_.str(); }

 private:
  bool all_ = true;
  std::ostringstream out_;
};

CriterionResult crossing(const ReproduceOptions& opt) {
  const auto t0 = Clock::now();
  Checks c;
  const long lo = opt.fast ? 61500 : 55000;
  const long hi = opt.fast ? 63000 : 70000;
  const long n = lenstra::find_crossing(0.1, lo, hi, opt.jobs);
  c.add(n >= 62138 && n <= 62338, "crossing over [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                      "] = " + std::to_string(n) + " (window [62138, 62338])");
  const auto gap = [](long m) { return lenstra::main_gap(m, 0, 0.1).value().value; };
  const double g62238 = gap(62238);
  const double g61000 = gap(61000);
  const double g1e6 = gap(1'000'000);
  c.add(g62238 > 0.0, "gap(62238) = " + fmt(g62238, 6));
  c.add(g61000 < 0.0, "gap(61000) = " + fmt(g61000, 6));
  c.add(g1e6 > 0.0, "gap(1e6) = " + fmt(g1e6, 6));
  const double secs = seconds_since(t0);
  c.add(secs <= 60.0, "runtime " + fmt(secs, 3) + " s");
  return {1, "crossing reproduction", c.ok(), c.str(), secs};
}

CriterionResult f_value(const ReproduceOptions&) {
  const auto t0 = Clock::now();
  Checks c;
  const double f = rogers::f_lower(rogers::RogersContext::from_kappa(std::sqrt(62238.0 / 2.0), 0.1)).value;
  c.add(f >= 0.484 && f <= 0.60, "f(sqrt(31119), 0.1) = " + fmt(f, 10) + " in [0.484, 0.60]");
  const double secs = seconds_since(t0);
  c.add(secs <= 5.0, "runtime " + fmt(secs, 3) + " s");
  return {2, "f-value", c.ok(), c.str(), secs};
}

CriterionResult delta_comparison(const ReproduceOptions&) {
  const auto t0 = Clock::now();
  Checks c;
  long violations = 0;
  long first_bad = 0;
  for (long n = 56; n <= 2000; ++n) {
    const double d2 = lenstra::delta2_star_log_upper(n);
    for (long s = 0; 2 * s <= n; ++s) {
      if (d2 > lenstra::delta1_star_log(n, s)) {
        if (violations++ == 0) first_bad = n;
      }
    }
  }
  c.add(violations == 0, "delta2 <= delta1 for 56 <= n <= 2000, all s (" + std::to_string(violations) +
                             " violations" + (violations ? ", first n = " + std::to_string(first_bad) : "") +
                             ")");
  long first = -1;
  for (long n = 40; n <= 70; ++n) {
    const double log_aux = std::log(static_cast<double>(n + 1)) + 0.5 * static_cast<double>(n) * (1.0 - std::log(kPi));
    if (log_aux <= 0.0) {
      first = n;
      break;
    }
  }
  c.add(first == 56, "(n+1)(e/pi)^{n/2} <= 1 first at n = " + std::to_string(first));
  return {3, "delta* comparison", c.ok(), c.str(), seconds_since(t0)};
}

CriterionResult asymptotic_cap(const ReproduceOptions&) {
  const auto t0 = Clock::now();
  Checks c;
  const double cap = lenstra::lenstra_disc_cap(1'000'000);
  const double limit = lenstra::disc_cap_limit();
  c.add(std::fabs(cap - limit) <= 0.01, "cap(1e6) = " + fmt(cap, 10) + " vs ln(4 pi e) = " + fmt(limit, 10));
  const double identity = lenstra::serre_limit() - limit - (kEulerGamma + kLog2 - 1.0);
  c.add(std::fabs(identity) <= 1e-12, "ln(8 pi e^g) - ln(4 pi e) - (g + ln2 - 1) = " + fmt(identity, 3));
  const double ratio = 2.0 * std::exp(kEulerGamma - 1.0);
  c.add(ratio >= 1.31, "2 e^{g-1} = " + fmt(ratio, 10));
  return {4, "asymptotic cap", c.ok(), c.str(), seconds_since(t0)};
}

CriterionResult zimmert_limits(const ReproduceOptions&) {
  const auto t0 = Clock::now();
  Checks c;
  const auto z = zimmert::f_terms(1e-4);
  const double s1 = z.f1_series.value + z.f1_point;
  const double s2 = z.f2_series.value + z.f2_point;
  c.add(std::fabs(s1 - 2.96354) <= 1e-3, "(F1+f1)(1e-4) = " + fmt(s1, 10) + " vs 2.96354");
  c.add(std::fabs(s2 - 0.96354) <= 1e-3, "(F2+f2)(1e-4) = " + fmt(s2, 10) + " vs 0.96354");
  return {5, "Zimmert limits", c.ok(), c.str(), seconds_since(t0)};
}

// sum over odd k of k^{-3}, with an Euler-Maclaurin tail.
double lambda3_series(long terms) {
  KahanSum acc;
  for (long k = terms - 1; k >= 0; --k) {
    const double x = 2.0 * static_cast<double>(k) + 1.0;
    acc.add(1.0 / (x * x * x));
  }
  const double a = 2.0 * static_cast<double>(terms) + 1.0;
  acc.add(1.0 / (4.0 * a * a) + 0.5 / (a * a * a));
  return acc.value();
}

// sum (-1)^k (2k+1)^{-3}, grouped in pairs.
double beta3_series(long pairs) {
  KahanSum acc;
  for (long k = pairs - 1; k >= 0; --k) {
    const double x = 4.0 * static_cast<double>(k) + 1.0;
    const double y = x + 2.0;
    acc.add(1.0 / (x * x * x) - 1.0 / (y * y * y));
  }
  return acc.value();
}

CriterionResult theorem_constant(const ReproduceOptions&) {
  const auto t0 = Clock::now();
  Checks c;
  const double th = zimmert::zeta_lenstra_threshold(zimmert::rogers_exponent()).threshold;
  c.add(std::fabs(th - 1.43879) <= 1e-5, "threshold(ln2/2) = " + fmt(th, 10));
  const double l3 = lambda3_series(2'000'000);
  const double b3 = beta3_series(2'000'000);
  c.add(std::fabs(kLambda3 - l3) <= 1e-12, "lambda(3) = " + fmt(kLambda3, 17) + " vs series " + fmt(l3, 17));
  c.add(std::fabs(kBeta3 - b3) <= 1e-12, "beta(3) = " + fmt(kBeta3, 17) + " vs series " + fmt(b3, 17));
  return {6, "zeta-Lenstra threshold", c.ok(), c.str(), seconds_since(t0)};
}

CriterionResult zeta_engine(const ReproduceOptions& opt) {
  const auto t0 = Clock::now();
  Checks c;
  const long m_dual = opt.fast ? 12 : 60;
  for (double s : {1.1, 1.5, 2.0}) {
    double worst = 0.0;
    long worst_m = 1;
    for (long m = 1; m <= m_dual; ++m) {
      cyclo::ZetaOptions euler;
      euler.method = cyclo::ZetaMethod::euler;
      euler.jobs = opt.jobs;
      const double d = std::fabs(cyclo::zeta_cyclotomic(m, s).value - cyclo::zeta_cyclotomic(m, s, euler).value);
      if (d > worst) {
        worst = d;
        worst_m = m;
      }
    }
    c.add(worst <= 1e-8, "dual-method max |hurwitz - euler| at s = " + fmt(s, 3) + " over m <= " +
                             std::to_string(m_dual) + ": " + fmt(worst, 3) + " (m = " + std::to_string(worst_m) +
                             ")");
  }
  const double k4 = cyclo::zeta_cyclotomic(4, 2.0).value;
  const double oracle = kPi * kPi / 6.0 * catalan_series(10'000'000);
  c.add(std::fabs(k4 - oracle) <= 1e-9, "zeta_K4(2) = " + fmt(k4, 15) + " vs " + fmt(oracle, 15));

  const auto ts = Clock::now();
  const long m_max = opt.fast ? 120 : 350;
  cyclo::ScanOptions so;
  so.jobs = opt.jobs;
  const auto rows = cyclo::scan(m_max, 0.75, so);
  const double scan_secs = seconds_since(ts);
  long below = 0;
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& row : rows) {
    if (row.phi < 40) continue;
    lowest = std::min(lowest, row.zeta_value);
    if (!cyclo::threshold_check(row, 1.44)) ++below;
  }
  c.add(below == 0, "scan m <= " + std::to_string(m_max) + ", eps = 3/4: rows with phi >= 40 below 1.44: " +
                        std::to_string(below) + " (min " + fmt(lowest, 6) + ")");
  c.add(scan_secs <= 120.0, "scan runtime " + fmt(scan_secs, 3) + " s");
  return {7, "zeta engine correctness", c.ok(), c.str(), seconds_since(t0)};
}

CriterionResult inequality_theorems(const ReproduceOptions&) {
  const auto t0 = Clock::now();
  Checks c;
  long failures = 0;
  std::string first;
  for (double beta : {0.05, 0.1, 0.2}) {
    for (long m = 1; m <= 30; ++m) {
      const auto a = zimmert::satz4_check(m, beta);
      const auto b = zimmert::min_norm_check(m, beta);
      if (!(a.holds && b.holds)) {
        if (failures++ == 0) first = "m = " + std::to_string(m) + ", beta = " + fmt(beta, 3);
      }
    }
  }
  c.add(failures == 0, "log-derivative and min-norm inequalities for m <= 30, beta in {0.05, 0.1, 0.2}: " +
                           std::to_string(failures) + " failures" + (failures ? " (first " + first + ")" : ""));
  return {8, "inequality theorems", c.ok(), c.str(), seconds_since(t0)};
}

CriterionResult rogers_sanity(const ReproduceOptions&) {
  const auto t0 = Clock::now();
  Checks c;
  const double up1 = rogers::sigma_upper_log(1);
  c.add(up1 >= 0.0, "ln sigma_1 upper = " + fmt(up1, 10));
  const double kappas[] = {24, 50, 100, 176, 400, 1000};
  bool monotone = true;
  double worst_u = 0.0;
  for (double theta : {0.05, 0.1, 0.3}) {
    double prev = -std::numeric_limits<double>::infinity();
    for (double kappa : kappas) {
      const auto ctx = rogers::RogersContext::from_kappa(kappa, theta);
      const double f = rogers::f_lower(ctx).value;
      monotone &= f > prev;
      prev = f;
      const double u = rogers::u_threshold(ctx);
      worst_u = std::max(worst_u, u);
      monotone &= u >= 0.0 && u <= ctx.cutoff();
    }
  }
  c.add(monotone, "f increasing in kappa on the grid");
  c.add(worst_u <= 0.19, "max U on the grid = " + fmt(worst_u, 6));
  return {9, "Rogers bound sanity", c.ok(), c.str(), seconds_since(t0)};
}

CriterionResult min_norm(const ReproduceOptions&) {
  const auto t0 = Clock::now();
  Checks c;
  const auto n8 = cyclo::min_proper_ideal_norm(8);
  const auto n5 = cyclo::min_proper_ideal_norm(5);
  const auto n7 = cyclo::min_proper_ideal_norm(7);
  c.add(n8 == 2 && n5 == 5 && n7 == 7,
        "norms for m = 8, 5, 7: " + std::to_string(n8) + ", " + std::to_string(n5) + ", " + std::to_string(n7));
  long over = 0;
  for (long m = 1; m <= 350; ++m) {
    const long double bound = std::ldexp(1.0L, static_cast<int>(cyclo::cyclo_degree(m)));
    if (static_cast<long double>(cyclo::min_proper_ideal_norm(m)) > bound) ++over;
  }
  c.add(over == 0, "norm <= 2^phi for m <= 350 (" + std::to_string(over) + " exceed)");
  return {10, "min proper ideal norm", c.ok(), c.str(), seconds_since(t0)};
}

}  // namespace

double catalan_series(long terms) {
  KahanSum acc;
  for (long k = terms - 1; k >= 0; --k) {
    const double x = 2.0 * static_cast<double>(k) + 1.0;
    const double t = (k % 2 == 0 ? 1.0 : -1.0) / (x * x);
    acc.add(t);
  }
  // Averaging S_N and S_{N+1} cancels the leading alternating error.
  const double x = 2.0 * static_cast<double>(terms) + 1.0;
  const double last = (terms % 2 == 0 ? 1.0 : -1.0) / (x * x);
  acc.add(0.5 * last);
  return acc.value();
}

CriterionResult run_criterion(int id, const ReproduceOptions& options) {
  using Fn = CriterionResult (*)(const ReproduceOptions&);
  static constexpr Fn kTable[] = {crossing,         f_value,     delta_comparison,    asymptotic_cap,
                                  zimmert_limits,   theorem_constant, zeta_engine, inequality_theorems,
                                  rogers_sanity,    min_norm};
  if (id < 1 || id > 10) throw DomainError("run_criterion: id must lie in 1..10");
  const auto t0 = Clock::now();
  try {
    return kTable[id - 1](options);
  } catch (const std::exception& e) {
    return {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), seconds_since(t0)};
  }
}

std::vector<CriterionResult> run_all(const ReproduceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace normeuclid::reproduce
