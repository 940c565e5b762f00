#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "normeuclid/characters.hpp"
#include "normeuclid/evaluation.hpp"

namespace normeuclid::cyclo {

/// m/2 when m = 2 (mod 4), otherwise m. Both give the same cyclotomic field.
long canonical_modulus(long m);

/// ln|Delta| of Q(zeta_m).
double cyclo_disc_log(long m);

/// (r, s) of Q(zeta_m): (1, 0) for m <= 2, else (0, phi/2).
std::pair<long, long> cyclo_signature(long m);

/// Degree [Q(zeta_m) : Q] = phi(canonical m).
long cyclo_degree(long m);

/// Smallest norm p^{f_p} of a prime ideal of Q(zeta_m), saturating at
/// UINT64_MAX.
std::uint64_t min_proper_ideal_norm(long m);

struct ComplexEvaluation {
  std::complex<double> value;
  double err_estimate = 0.0;
  std::int64_t terms_used = 0;
};

enum class LMode { as_given, primitive };

/// L(s, chi) = q^{-s} sum_{a=1}^{q} chi(a) zeta(s, a/q), with q the modulus
/// of chi or, in primitive mode, its conductor.
ComplexEvaluation dirichlet_l(double s, const CharacterGroup& group, const DirichletCharacter& chi,
                              LMode mode = LMode::primitive);

/// d/ds L(s, chi) through the differentiated Hurwitz identity.
ComplexEvaluation dirichlet_l_ds(double s, const CharacterGroup& group, const DirichletCharacter& chi,
                                 LMode mode = LMode::primitive);

enum class ZetaMethod { hurwitz, euler };

struct ZetaOptions {
  ZetaMethod method = ZetaMethod::hurwitz;
  std::uint64_t prime_limit = 1'000'000;
  // Euler method only: throw ConvergenceError when the tail error exceeds this.
  double err_target = std::numeric_limits<double>::infinity();
  int jobs = 0;
};

/// Dedekind zeta of Q(zeta_m) at real s > 1.
Evaluation zeta_cyclotomic(long m, double s, const ZetaOptions& options = {});

/// zeta'/zeta of Q(zeta_m) at real s > 1 (Hurwitz route).
Evaluation zeta_cyclotomic_logderiv(long m, double s);

/// sum over p <= P of -g_p ln(1 - p^{-f_p s}), summed in fixed blocks of
/// primes so the result does not depend on the thread count.
double euler_log_sum(long m, double s, std::uint64_t prime_limit, int jobs = 0);
double euler_log_sum_serial(long m, double s, std::uint64_t prime_limit);

struct ScanRow {
  long m = 1;
  long phi = 1;
  double epsilon = 0.0;
  double s = 2.0;
  double zeta_value = 0.0;
  double err_estimate = 0.0;
};

struct ScanOptions {
  bool keep_duplicates = true;  // rows for m = 2 (mod 4)
  int jobs = 0;
};

/// One row per m in [1, m_max] at s = 1 + phi(m)^{-epsilon}, ascending in m.
std::vector<ScanRow> scan(long m_max, double epsilon, const ScanOptions& options = {});
std::vector<ScanRow> scan_serial(long m_max, double epsilon, bool keep_duplicates = true);

bool threshold_check(const ScanRow& row, double bound);

}  // namespace normeuclid::cyclo
