#include <cmath>
#include <functional>

#include "doctest.h"
#include "normeuclid/constants.hpp"
#include "normeuclid/rogers.hpp"
#include "normeuclid/specfun.hpp"

using namespace normeuclid;
using namespace normeuclid::rogers;

namespace {

const double kKappas[] = {24, 50, 100, 176, 400, 1000};
const double kThetas[] = {0.05, 0.1, 0.3};

double simpson(const std::function<double(double)>& f, double lo, double hi, long panels) {
  const double h = (hi - lo) / static_cast<double>(panels);
  KahanSum acc;
  acc.add(f(lo) + f(hi));
  for (long i = 1; i < panels; ++i) acc.add((i % 2 ? 4.0 : 2.0) * f(lo + h * static_cast<double>(i)));
  return acc.value() * h / 3.0;
}

}  // namespace

TEST_CASE("RogersContext validation") {
  const auto ctx = RogersContext::from_degree(62238, 0.1);
  CHECK(std::fabs(ctx.degree() - 62238.0) <= 1e-12 * 62238.0);
  CHECK(ctx.kappa() == doctest::Approx(std::sqrt(31119.0)));
  CHECK_THROWS_AS(RogersContext::from_degree(100, 0.0), DomainError);
  CHECK_THROWS_AS(RogersContext::from_degree(100, 1.0 / 3.0), DomainError);
  CHECK_THROWS_AS(RogersContext::from_degree(0, 0.1), DomainError);
}

TEST_CASE("error constants") {
  // Reference values from an independent 30-digit evaluation.
  const auto c24 = error_constants(RogersContext::from_kappa(24, 0.1));
  CHECK(c24.c1 == doctest::Approx(0.20607148495688).epsilon(1e-11));
  CHECK(c24.c2 == doctest::Approx(3.72796434941896).epsilon(1e-11));
  CHECK(c24.c3 == doctest::Approx(1.00040967628722).epsilon(1e-11));
  CHECK(c24.c41 == doctest::Approx(1.01542327949374).epsilon(1e-11));
  CHECK(c24.c42 == doctest::Approx(3.72472826925453).epsilon(1e-11));
  const auto c176 = error_constants(RogersContext::from_kappa(176.4, 0.1));
  CHECK(c176.c42 == doctest::Approx(3.53595136095902).epsilon(1e-11));

  const auto far = error_constants(RogersContext::from_kappa(1e12, 0.1));
  CHECK(far.c1 == doctest::Approx(2.0 * std::sqrt(kPi) / std::exp(1.0) / 8.0).epsilon(1e-3));

  CHECK_THROWS_AS(error_constants(RogersContext::from_kappa(1.0, 0.1)), DomainError);

  for (double theta : kThetas) {
    RogersErrorConstants prev{};
    bool first = true;
    for (double kappa : kKappas) {
      const auto c = error_constants(RogersContext::from_kappa(kappa, theta));
      CHECK((c.c1 > 0 && c.c2 > 0 && c.c3 > 0 && c.c41 > 0 && c.c42 > 0));
      if (!first) {
        CHECK(c.c1 < prev.c1);
        CHECK(c.c2 < prev.c2);
        CHECK(c.c3 < prev.c3);
        CHECK(c.c41 < prev.c41);
        CHECK(c.c42 < prev.c42);
      }
      prev = c;
      first = false;
    }
  }
  for (double kappa : kKappas) {
    const auto lo = error_constants(RogersContext::from_kappa(kappa, 0.05));
    const auto mid = error_constants(RogersContext::from_kappa(kappa, 0.1));
    const auto hi = error_constants(RogersContext::from_kappa(kappa, 0.3));
    CHECK((lo.c1 < mid.c1 && mid.c1 < hi.c1));
    CHECK((lo.c2 < mid.c2 && mid.c2 < hi.c2));
    CHECK((lo.c3 < mid.c3 && mid.c3 < hi.c3));
    CHECK((lo.c41 < mid.c41 && mid.c41 < hi.c41));
    CHECK((lo.c42 < mid.c42 && mid.c42 < hi.c42));
  }
}

TEST_CASE("c_poly") {
  const auto ctx = RogersContext::from_kappa(176.4, 0.1);
  const auto c = error_constants(ctx);
  CHECK(c_poly(ctx, 0.0) == c.c1);
  CHECK(c_poly(ctx, 0.7) == c_poly(ctx, -0.7));
  const double u = 1.6775;
  CHECK(c_poly(ctx, u) == doctest::Approx(c.c1 + c.c41 * u + c.c42 * u * u * u));
  CHECK(c_poly(ctx, u) == doctest::Approx(18.5).epsilon(0.01));
}

TEST_CASE("u_threshold") {
  const auto ctx = RogersContext::from_kappa(176.4, 0.1);
  const double u = u_threshold(ctx);
  CHECK(u == doctest::Approx(0.0498582319319).epsilon(1e-9));
  CHECK(std::fabs(c_poly(ctx, u) - 0.5 * ctx.kappa() * u * u) <= 1e-10);

  // Sign-scan oracle on a 10^6-point grid.
  const double hi = ctx.cutoff();
  double prev = c_poly(ctx, 0.0);
  double bracket = -1.0;
  for (int i = 1; i <= 1'000'000; ++i) {
    const double x = hi * i / 1e6;
    const double v = c_poly(ctx, x) - 0.5 * ctx.kappa() * x * x;
    if (prev > 0 && v <= 0) {
      bracket = x;
      break;
    }
    prev = v;
  }
  CHECK(std::fabs(bracket - u) <= hi / 1e6);

  CHECK(u_threshold(RogersContext::from_kappa(24, 0.1)) == doctest::Approx(0.18722191529887).epsilon(1e-9));
  const double u3 = u_threshold(RogersContext::from_kappa(1e3, 0.1));
  const double u4 = u_threshold(RogersContext::from_kappa(1e4, 0.1));
  CHECK(u4 * std::sqrt(1e4) <= 1.5 * u3 * std::sqrt(1e3));
  CHECK(u4 * std::sqrt(1e4) >= u3 * std::sqrt(1e3) / 1.5);

  for (double theta : kThetas) {
    for (double kappa : kKappas) {
      const auto g = RogersContext::from_kappa(kappa, theta);
      const double v = u_threshold(g);
      CHECK(v >= 0.0);
      CHECK(v <= std::min(0.19, g.cutoff()));
      CHECK(std::fabs(c_poly(g, v) - 0.5 * kappa * v * v) <= 1e-10);
    }
  }
  CHECK_THROWS_AS(u_threshold(RogersContext::from_kappa(20, 0.1)), DomainError);
}

TEST_CASE("central integral") {
  const auto ctx = RogersContext::from_kappa(176.4, 0.1);
  const auto ci = central_integral(ctx);
  CHECK(ci.value == doctest::Approx(1.25).epsilon(0.01));
  CHECK(ci.value < std::sqrt(kPi));

  const auto g = RogersContext::from_kappa(24, 0.3);
  const double n = g.degree();
  const double k2 = 2.0 * g.kappa() * g.kappa();
  const auto integrand = [&](double u) { return std::exp(-u * u + n * std::log1p(-u * u / k2)); };
  const double oracle = 2.0 * simpson(integrand, 0.0, g.cutoff(), 1L << 16);
  CHECK(std::fabs(central_integral(g).value - oracle) <= 1e-11);
}

TEST_CASE("f_lower") {
  const auto at = f_lower_terms(RogersContext::from_kappa(std::sqrt(31119.0), 0.1));
  CHECK(at.value >= 0.484);
  CHECK(at.value == doctest::Approx(0.50579725926707).epsilon(1e-9));
  CHECK(at.integral.value == doctest::Approx(1.25231733225829).epsilon(1e-11));
  CHECK(at.u_threshold == doctest::Approx(0.0498572814833).epsilon(1e-9));

  const double f24 = f_lower(RogersContext::from_kappa(24, 0.1)).value;
  CHECK(f24 < 0.0);
  CHECK(f24 == doctest::Approx(-0.9384).epsilon(1e-3));
  const double f100 = f_lower(RogersContext::from_kappa(100, 0.1)).value;
  CHECK(f100 > 0.0);
  CHECK(f100 < std::sqrt(kPi));
  CHECK(f100 == doctest::Approx(0.27578).epsilon(1e-4));

  for (double theta : kThetas) {
    double prev = -1e300;
    for (double kappa : kKappas) {
      const double f = f_lower(RogersContext::from_kappa(kappa, theta)).value;
      CHECK(f > prev);
      CHECK(f <= std::sqrt(kPi));
      prev = f;
    }
  }
}

TEST_CASE("sigma bounds") {
  const double up1 = sigma_upper_log(1);
  CHECK(up1 == doctest::Approx(std::log(std::sqrt(std::exp(1.0) / 4.0) * 2.0 / std::tgamma(1.5))));
  CHECK(up1 == doctest::Approx(std::log(1.8605)).epsilon(1e-4));
  CHECK(up1 >= 0.0);

  // sigma_n ~ (n/e) 2^{-n/2}: the bound minus that shape settles to a constant.
  auto shape = [](long n) {
    const double x = static_cast<double>(n);
    return sigma_upper_log(n) + 0.5 * x * kLog2 - std::log(x);
  };
  CHECK(std::fabs(shape(1'000'000) - shape(100'000)) < std::fabs(shape(10'000) - shape(1'000)));
  CHECK(std::fabs(shape(1'000'000) - 0.346574506946) <= 1e-6);

  CHECK(sigma_lower_log(62238, 0.1).has_value());
  CHECK_FALSE(sigma_lower_log(1152, 0.1).has_value());
  CHECK_THROWS_AS(sigma_lower_log(1151, 0.1), DomainError);

  for (long n : {20000L, 62238L, 100000L, 1000000L}) {
    const auto lo = sigma_lower_log(n, 0.1);
    REQUIRE(lo.has_value());
    const double f = f_lower(RogersContext::from_degree(n, 0.1)).value;
    CHECK(lo->value <= sigma_upper_log(n));
    CHECK(sigma_upper_log(n) - lo->value == doctest::Approx(std::log(std::sqrt(kPi) / f)).epsilon(1e-8));
  }
}

TEST_CASE("Leech-Sloane gap") {
  // |actual - predicted| from a 30-digit factorial evaluation: 7.166e-5 at
  // n = 100 and 7.2e-9 at n = 10^4.
  const auto g100 = leech_gap(100);
  const auto g1e4 = leech_gap(10000);
  CHECK(std::fabs(g100.actual_gap - g100.predicted_gap) == doctest::Approx(7.16614e-5).epsilon(1e-3));
  CHECK(std::fabs(g1e4.actual_gap - g1e4.predicted_gap) <= std::fabs(g100.actual_gap - g100.predicted_gap));
  const auto g1 = leech_gap(1);
  CHECK(std::isfinite(g1.leech_log2));
  CHECK(std::isfinite(g1.predicted_gap));
  CHECK(std::isfinite(g1.actual_gap));
}
