#include <cmath>

#include "doctest.h"
#include "normeuclid/constants.hpp"
#include "normeuclid/quadrature.hpp"

using namespace normeuclid;
using namespace normeuclid::specfun;

namespace {

// Composite Simpson on 2^k panels, Richardson-extrapolated twice.
double simpson_richardson(const RealFunction& f, double lo, double hi, int k) {
  auto simpson = [&](long panels) {
    const double h = (hi - lo) / static_cast<double>(panels);
    KahanSum acc;
    acc.add(f(lo) + f(hi));
    for (long i = 1; i < panels; ++i) acc.add((i % 2 ? 4.0 : 2.0) * f(lo + h * static_cast<double>(i)));
    return acc.value() * h / 3.0;
  };
  const long n = 1L << k;
  const double s1 = simpson(n), s2 = simpson(2 * n), s3 = simpson(4 * n);
  const double r1 = (16.0 * s2 - s1) / 15.0;
  const double r2 = (16.0 * s3 - s2) / 15.0;
  return (64.0 * r2 - r1) / 63.0;
}

}  // namespace

TEST_CASE("integrate: anchors") {
  const auto g = integrate([](double u) { return std::exp(-u * u); }, -10.0, 10.0, 1e-12);
  CHECK(std::fabs(g.value - std::sqrt(kPi)) <= 1e-12);
  CHECK(g.err_estimate <= 1e-12);
  CHECK(std::fabs(integrate([](double) { return 1.0; }, 0.0, 1.0, 1e-13).value - 1.0) <= 1e-15);

  const RealFunction f = [](double u) { return std::exp(-2.0 * u * u); };
  const double oracle = simpson_richardson(f, -1.6775, 1.6775, 12);
  CHECK(std::fabs(oracle - std::sqrt(kPi / 2.0) * std::erf(1.6775 * std::sqrt(2.0))) <= 1e-13);
  CHECK(std::fabs(integrate(f, -1.6775, 1.6775, 1e-12).value - oracle) <= 1e-12);
}

TEST_CASE("integrate is exact on polynomials up to the Kronrod order") {
  for (int k = 0; k <= 21; ++k) {
    const auto r = integrate([k](double x) { return std::pow(x, k); }, 0.0, 1.0, 1e-13);
    CAPTURE(k);
    CHECK(std::fabs(r.value - 1.0 / (k + 1)) <= 1e-14);
  }
}

TEST_CASE("integrate is deterministic and reports budget exhaustion") {
  const RealFunction wiggle = [](double x) { return std::sin(1.0 / x); };
  const auto a = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-10);
  const auto b = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-10);
  CHECK(a.value == b.value);
  CHECK(a.terms_used == b.terms_used);
  CHECK_THROWS_AS(integrate(wiggle, 1e-9, 1.0, 1e-14, {20}), ConvergenceError);
  CHECK_THROWS_AS(integrate(wiggle, 1.0, 0.5, 1e-10), DomainError);
}

TEST_CASE("find_root") {
  CHECK(find_root([](double x) { return x - 0.5; }, 0.0, 1.0, 1e-14) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::fabs(find_root([](double x) { return x * x - 2.0; }, 1.0, 2.0, 1e-14) - std::sqrt(2.0)) <= 1e-14);
  CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-12), BracketError);
}
