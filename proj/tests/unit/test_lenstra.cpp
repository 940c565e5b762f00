#include <cmath>
#include <random>

#include "doctest.h"
#include "normeuclid/constants.hpp"
#include "normeuclid/lenstra.hpp"
#include "normeuclid/rogers.hpp"
#include "normeuclid/specfun.hpp"

using namespace normeuclid;
using namespace normeuclid::lenstra;

TEST_CASE("delta1 and delta2") {
  CHECK(delta1_star_log(1, 0) == doctest::Approx(0.0));
  CHECK(delta1_star_log(2, 0) == doctest::Approx(std::log(0.5)));
  CHECK(delta1_star_log(2, 1) == doctest::Approx(std::log(2.0 / kPi)));
  CHECK(delta1_star_log(2, 1) == doctest::Approx(-0.4516).epsilon(1e-4));
  CHECK_THROWS_AS(delta1_star_log(2, 2), DomainError);

  const double e = std::exp(1.0);
  const double direct2 = std::log(e / 8.0 * 6.0 * (4.0 / (2.0 * kPi)));
  CHECK(delta2_star_log(2, 0.1, SigmaBound::upper)->value == doctest::Approx(direct2));
  for (long n : {10L, 100L, 10000L}) {
    const double general = delta2_star_log(n, 0.1, SigmaBound::upper)->value;
    CHECK(std::fabs(general - delta2_star_log_upper(n)) <= 1e-10 * std::max(1.0, std::fabs(general)));
  }
  const auto lower = delta2_star_log(62238, 0.1, SigmaBound::lower);
  REQUIRE(lower.has_value());
  CHECK(std::isfinite(lower->value));
  CHECK(lower->value <= delta2_star_log_upper(62238));
}

TEST_CASE("ball criterion beats the parallelepiped from n = 56") {
  for (long n = 56; n <= 2000; ++n) {
    const double d2 = delta2_star_log_upper(n);
    for (long s = 0; 2 * s <= n; s += (s < 5 ? 1 : 7)) {
      if (d2 > delta1_star_log(n, s)) FAIL("delta2 > delta1 at n = " << n << ", s = " << s);
    }
  }
  long first = 0;
  for (long n = 40; n <= 70 && first == 0; ++n) {
    if (std::log(n + 1.0) + 0.5 * n * (1.0 - std::log(kPi)) <= 0.0) first = n;
  }
  CHECK(first == 56);
}

TEST_CASE("criterion_check") {
  const auto q = criterion_check(CriterionInput::make(FieldSignature::make(1, 1, 0, 0.0), kLog2));
  CHECK(q.delta1_holds);
  CHECK(q.delta2_mode == SigmaBound::upper);
  const auto qi = criterion_check(CriterionInput::make(FieldSignature::make(2, 0, 1, std::log(4.0)), kLog2));
  CHECK(qi.delta1_holds);
  const auto big = criterion_check(CriterionInput::make(FieldSignature::make(2, 2, 0, std::log(1e6)), std::log(4.0)));
  CHECK_FALSE(big.delta1_holds);
  CHECK(big.max_log_disc_delta2 == doctest::Approx(2.0 * (std::log(4.0) - delta2_star_log_upper(2))));

  CHECK_THROWS_AS(FieldSignature::make(3, 2, 1), DomainError);
  CHECK_THROWS_AS(FieldSignature::make(2, 0, 1, -1.0), DomainError);
  CHECK_THROWS_AS(CriterionInput::make(FieldSignature::make(2, 0, 1, 1.0), 0.1), DomainError);
  CHECK_THROWS_AS(CriterionInput::make(FieldSignature::make(2, 0, 1, 1.0), 3.0 * kLog2), DomainError);
  CHECK_THROWS_AS(criterion_check(CriterionInput::make(FieldSignature::make(2, 0, 1), kLog2)), DomainError);

  // The verdict depends only on ln M - ln|Delta|/2.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const long n = 2 + static_cast<long>(u(rng) * 20);
    const double log_m = kLog2 + u(rng) * (n - 2) * kLog2 * 0.5;
    const double log_disc = u(rng) * 3.0 * n;
    const double shift = u(rng) * 0.4 * kLog2;
    const auto a = criterion_check(CriterionInput::make(FieldSignature::make(n, n, 0, log_disc), log_m));
    const auto b =
        criterion_check(CriterionInput::make(FieldSignature::make(n, n, 0, log_disc + 2 * shift), log_m + shift));
    CHECK(a.delta1_holds == b.delta1_holds);
    CHECK(a.delta2_holds == b.delta2_holds);
  }
}

TEST_CASE("discriminant bounds") {
  CHECK(poitou_grh_lower(62238, 0) == doctest::Approx(3.5306).epsilon(1e-4));
  CHECK(poitou_grh_lower(1'000'000, 0) == doctest::Approx(3.63845).epsilon(1e-5));
  const double limit = kEulerGamma + std::log(8.0 * kPi) + kPi / 2.0;
  const double near = poitou_grh_lower(1'000'000'000'000'000L, 1'000'000'000'000'000L);
  const double nearer = poitou_grh_lower(4'000'000'000'000'000'000L, 4'000'000'000'000'000'000L);
  CHECK(near < limit);
  CHECK(limit - nearer < limit - near);
  for (long n : {33L, 100L, 62238L}) {
    for (long r = 1; r <= n; r += std::max(1L, n / 7)) CHECK(poitou_grh_lower(n, r) > poitou_grh_lower(n, r - 1));
  }
  CHECK_THROWS_AS(poitou_grh_lower(1, 1), DomainError);

  CHECK(uncond_lower_main(10, 10) == doctest::Approx(std::log(4.0 * kPi * std::exp(1.0 + kEulerGamma))));
  CHECK(uncond_lower_main(10, 0) == doctest::Approx(std::log(4.0 * kPi) + kEulerGamma));
  CHECK(remark_condition(0.5));
  CHECK_FALSE(remark_condition(0.4));
}

TEST_CASE("discriminant cap") {
  const double limit = disc_cap_limit();
  CHECK(limit == doctest::Approx(3.53102).epsilon(1e-5));
  CHECK(std::fabs(lenstra_disc_cap(1'000'000) - limit) <= 0.01);
  CHECK(lenstra_disc_cap(1'000'000) >= limit - 0.001);
  // Stirling: cap(n) = limit - (3 ln n + ln 2 pi)/n + O(1/n^2), so the
  // finite-n cap sits below the limit and climbs towards it.
  double prev = -1e300;
  for (long n : {100L, 1000L, 10000L, 100000L, 1000000L}) {
    const double x = static_cast<double>(n);
    const double stirling = limit - (3.0 * std::log(x) + std::log(2.0 * kPi)) / x;
    CHECK(std::fabs(lenstra_disc_cap(n) - stirling) <= 5.0 / (x * x));
    CHECK(lenstra_disc_cap(n) < limit);
    CHECK(lenstra_disc_cap(n) > prev);
    prev = lenstra_disc_cap(n);
  }
  CHECK(std::fabs(serre_limit() - limit - (kEulerGamma + kLog2 - 1.0)) <= 1e-12);
  CHECK(serre_limit() - limit == doctest::Approx(0.27037).epsilon(1e-5));
}

TEST_CASE("main gap") {
  // Reference values from an independent 30-digit evaluation of the chain.
  CHECK(main_gap(61000, 0, 0.1)->value == doctest::Approx(-0.0011059698).epsilon(1e-6));
  CHECK(main_gap(62236, 0, 0.1)->value == doctest::Approx(8.656e-7).epsilon(2e-3));
  CHECK(main_gap(1'000'000, 0, 0.1)->value == doctest::Approx(0.1074864).epsilon(1e-6));
  CHECK(main_gap(62238, 0, 0.1)->value > 0.0);
  CHECK(main_gap(61000, 0, 0.1)->value < 0.0);

  double prev = -1e300;
  for (long n : {61000L, 62000L, 62238L, 63000L, 100000L}) {
    const double g = main_gap(n, 0, 0.1)->value;
    CHECK(g > prev);
    prev = g;
  }
  for (long r : {1L, 100L, 31119L, 62238L}) CHECK(main_gap(62238, r, 0.1)->value >= main_gap(62238, 0, 0.1)->value);
  CHECK_FALSE(main_gap(1152, 0, 0.1).has_value());
  CHECK_THROWS_AS(main_gap(1000, 0, 0.1), DomainError);
  CHECK(main_gap_all_r(62238, 0.1)->value == main_gap(62238, 0, 0.1)->value);
}

TEST_CASE("crossing search") {
  const long n = find_crossing(0.1, 55000, 70000);
  CHECK(n >= 62138);
  CHECK(n <= 62338);
  CHECK(n == 62236);
  CHECK_THROWS_AS(find_crossing(0.1, 56000, 57000), NotFoundError);
  CHECK_THROWS_AS(find_crossing(0.1, 1000, 2000), DomainError);
  CHECK_THROWS_AS(find_crossing(0.1, 60000, 59000), DomainError);
  CHECK_THROWS_AS(find_crossing(0.5, 60000, 65000), DomainError);
}
