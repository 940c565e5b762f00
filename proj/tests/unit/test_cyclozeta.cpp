#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "normeuclid/arith.hpp"
#include "normeuclid/constants.hpp"
#include "normeuclid/cyclozeta.hpp"
#include "normeuclid/errors.hpp"
#include "normeuclid/specfun.hpp"

using namespace normeuclid;
using namespace normeuclid::cyclo;

namespace {

constexpr double kCatalan = 0.915965594177219015054603514932;

// sum_k (4k+1)^{-s} - (4k+3)^{-s} over whole periods. Each block behaves like
// 2s (4k+2)^{-s-1}, whose integral from K - 1/2 gives the tail (4K)^{-s}/2.
double chi4_series(double s, long blocks) {
  KahanSum acc;
  for (long k = blocks - 1; k >= 0; --k) {
    const double b = 4.0 * static_cast<double>(k);
    acc.add(std::pow(b + 1.0, -s) - std::pow(b + 3.0, -s));
  }
  acc.add(0.5 * std::pow(4.0 * static_cast<double>(blocks), -s));
  return acc.value();
}

const DirichletCharacter& nontrivial(const CharacterGroup& g) {
  return *std::find_if(g.characters().begin(), g.characters().end(), [](const auto& c) { return !c.is_trivial(); });
}

// Smallest p^f over primes p < 5000, with f the order of p modulo the
// p-free part of m.
double brute_min_norm_log(long m) {
  double best = 1e300;
  for (long p = 2; p < 5000; ++p) {
    if (!is_prime(p)) continue;
    long rest = m;
    while (rest % p == 0) rest /= p;
    long f = 1;
    for (long x = p % rest; rest > 1 && x != 1; x = x * p % rest) ++f;
    best = std::min(best, static_cast<double>(f) * std::log(static_cast<double>(p)));
  }
  return best;
}

}  // namespace

TEST_CASE("field invariants") {
  CHECK(canonical_modulus(6) == 3);
  CHECK(canonical_modulus(4) == 4);
  CHECK(cyclo_disc_log(1) == 0.0);
  CHECK(cyclo_signature(1) == std::pair<long, long>{1, 0});
  CHECK(cyclo_signature(2) == std::pair<long, long>{1, 0});
  CHECK(cyclo_signature(12) == std::pair<long, long>{0, 2});
  CHECK(cyclo_disc_log(4) == doctest::Approx(std::log(4.0)));
  CHECK(cyclo_disc_log(5) == doctest::Approx(std::log(125.0)));
  CHECK(cyclo_disc_log(6) == doctest::Approx(std::log(3.0)));
  CHECK(cyclo_disc_log(12) == doctest::Approx(std::log(144.0)));
  CHECK(cyclo_degree(350) == 120);
}

TEST_CASE("minimal ideal norms") {
  CHECK(min_proper_ideal_norm(8) == 2);
  CHECK(min_proper_ideal_norm(5) == 5);
  CHECK(min_proper_ideal_norm(7) == 7);
  CHECK(min_proper_ideal_norm(1) == 2);
  CHECK(min_proper_ideal_norm(6) == 3);
  for (long m = 1; m <= 120; ++m) {
    CAPTURE(m);
    const double got = std::log(static_cast<double>(min_proper_ideal_norm(m)));
    CHECK(got == doctest::Approx(brute_min_norm_log(canonical_modulus(m))).epsilon(1e-12));
  }
  for (long m = 1; m <= 350; ++m) {
    const long phi = cyclo_degree(m);
    if (phi < 64) CHECK(min_proper_ideal_norm(m) <= (std::uint64_t{1} << phi));
  }
}

TEST_CASE("Dirichlet L-functions") {
  const auto g1 = characters(1);
  CHECK(std::fabs(dirichlet_l(2.0, g1, g1.characters()[0]).value - kPi * kPi / 6.0) <= 1e-13);

  const auto g4 = characters(4);
  const auto& chi = nontrivial(g4);
  const auto l2 = dirichlet_l(2.0, g4, chi);
  CHECK(std::fabs(l2.value.real() - kCatalan) <= 1e-13);
  CHECK(std::fabs(l2.value.real() - chi4_series(2.0, 1'000'000)) <= 1e-12);
  CHECK(std::fabs(l2.value.imag()) <= 1e-14);

  const auto l101 = dirichlet_l(1.01, g4, chi);
  CHECK(std::isfinite(l101.value.real()));
  CHECK(std::fabs(l101.value.real() - chi4_series(1.01, 1'000'000)) <= 1e-9);

  const auto dl = dirichlet_l_ds(2.0, g4, chi);
  const double h = 1e-5;
  const double fd = (dirichlet_l(2.0 + h, g4, chi).value.real() - dirichlet_l(2.0 - h, g4, chi).value.real()) / (2 * h);
  CHECK(std::fabs(dl.value.real() - fd) <= 1e-8);
}

TEST_CASE("imprimitive L equals primitive L times the missing Euler factors") {
  for (long m = 1; m <= 60; ++m) {
    const auto g = characters(m);
    for (const auto& chi : g.characters()) {
      const auto full = dirichlet_l(2.0, g, chi, LMode::as_given).value;
      auto expect = dirichlet_l(2.0, g, chi, LMode::primitive).value;
      for (const auto& pp : factorize(m)) {
        if (chi.conductor % pp.prime == 0) continue;
        const double p = static_cast<double>(pp.prime);
        expect *= 1.0 - g.primitive_value(chi, pp.prime % chi.conductor) / (p * p);
      }
      CAPTURE(m);
      CHECK(std::abs(full - expect) <= 1e-10);
    }
  }
}

TEST_CASE("Dedekind zeta anchors") {
  CHECK(std::fabs(zeta_cyclotomic(1, 2.0).value - kPi * kPi / 6.0) <= 1e-13);
  CHECK(std::fabs(zeta_cyclotomic(4, 2.0).value - kPi * kPi / 6.0 * kCatalan) <= 1e-9);
  CHECK(zeta_cyclotomic(3, 2.0).value == doctest::Approx(1.28519095548415).epsilon(1e-12));
  CHECK(zeta_cyclotomic(5, 2.0).value == doctest::Approx(1.09234966173097).epsilon(1e-12));
  CHECK(zeta_cyclotomic(12, 2.0).value == doctest::Approx(1.11798168534774).epsilon(1e-12));

  for (long m : {3L, 5L, 7L, 9L, 15L, 21L, 175L}) {
    CHECK(zeta_cyclotomic(2 * m, 1.5).value == zeta_cyclotomic(m, 1.5).value);
  }
  for (long m = 1; m <= 40; ++m) {
    for (double s : {1.05, 2.0, 4.0}) CHECK(zeta_cyclotomic(m, s).value > 1.0);
  }
  CHECK_THROWS_AS(zeta_cyclotomic(5, 1.0), DomainError);
  CHECK_THROWS_AS(zeta_cyclotomic(0, 2.0), DomainError);
}

TEST_CASE("Hurwitz and Euler routes agree within the Euler error") {
  double worst_at_2 = 0.0;
  for (long m = 1; m <= 60; ++m) {
    for (double s : {1.1, 1.5, 2.0}) {
      const auto h = zeta_cyclotomic(m, s);
      const auto e = zeta_cyclotomic(m, s, {ZetaMethod::euler});
      CAPTURE(m);
      CAPTURE(s);
      CHECK(std::fabs(h.value - e.value) <= e.err_estimate + h.err_estimate);
      if (s == 2.0) worst_at_2 = std::max(worst_at_2, std::fabs(h.value - e.value));
    }
  }
  CHECK(worst_at_2 <= 1e-8);

  ZetaOptions strict{ZetaMethod::euler};
  strict.err_target = 1e-12;
  CHECK_THROWS_AS(zeta_cyclotomic(5, 1.1, strict), ConvergenceError);
}

TEST_CASE("logarithmic derivative") {
  const double z = specfun::riemann_zeta(2.0).value;
  CHECK(zeta_cyclotomic_logderiv(1, 2.0).value == doctest::Approx(-0.569961).epsilon(1e-5));
  CHECK(zeta_cyclotomic_logderiv(1, 2.0).value == doctest::Approx(-0.937548254315844 / z).epsilon(1e-12));

  const double h = 1e-5;
  for (long m : {3L, 4L, 7L, 12L, 15L}) {
    for (double s : {1.2, 2.0}) {
      const double fd =
          (std::log(zeta_cyclotomic(m, s + h).value) - std::log(zeta_cyclotomic(m, s - h).value)) / (2 * h);
      CHECK(std::fabs(zeta_cyclotomic_logderiv(m, s).value - fd) <= 1e-6 * std::max(1.0, std::fabs(fd)));
    }
  }
  for (long m = 1; m <= 20; ++m) {
    for (double s : {1.1, 2.0}) CHECK(zeta_cyclotomic_logderiv(m, s).value < 0.0);
  }
}

TEST_CASE("scan") {
  const auto rows = scan(350, 0.75);
  REQUIRE(rows.size() == 350);
  CHECK(rows[0].m == 1);
  CHECK(rows[0].s == 2.0);
  CHECK(std::fabs(rows[0].zeta_value - kPi * kPi / 6.0) <= 1e-13);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    CHECK(r.m == static_cast<long>(i) + 1);
    CHECK(r.phi == euler_phi(r.m));
    CHECK(r.s == doctest::Approx(1.0 + std::pow(static_cast<double>(r.phi), -0.75)));
    if (r.phi >= 40) CHECK(threshold_check(r, 1.44));
    if (r.m % 4 == 2) CHECK(r.zeta_value == rows[static_cast<std::size_t>(r.m / 2 - 1)].zeta_value);
  }
  CHECK(rows.back().zeta_value == doctest::Approx(4.09287).epsilon(1e-5));

  std::vector<ScanRow> large;
  for (const auto& r : rows) {
    if (r.phi >= 40) large.push_back(r);
  }
  const auto min_row = *std::min_element(large.begin(), large.end(), [](const auto& a, const auto& b) {
    return a.zeta_value < b.zeta_value;
  });
  CHECK(min_row.m == 132);
  CHECK(min_row.zeta_value == doctest::Approx(2.20567).epsilon(1e-5));

  const auto skipped = scan(100, 0.75, {false});
  for (const auto& r : skipped) CHECK(r.m % 4 != 2);
  CHECK(skipped.size() == 75);

  CHECK_THROWS_AS(scan(0, 0.75), DomainError);
  CHECK_THROWS_AS(scan(10, 0.0), DomainError);
}
