#pragma once

#include <optional>
#include <vector>

#include "normeuclid/evaluation.hpp"

namespace normeuclid::lenstra {

/// Degree n and signature (r, s) of a number field, n = r + 2s, together
/// with ln|Delta| when known.
struct FieldSignature {
  long n = 1;
  long r = 1;
  long s = 0;
  std::optional<double> log_abs_disc;

  static FieldSignature make(long n, long r, long s, std::optional<double> log_abs_disc = std::nullopt);
};

/// Field data plus ln M, where M bounds the size of a set of integers whose
/// pairwise differences are units (2 <= M <= 2^n).
struct CriterionInput {
  FieldSignature sig;
  double log_m = 0.0;

  static CriterionInput make(FieldSignature sig, double log_m);
};

/// Which bound on the Rogers constant feeds the ball criterion.
enum class SigmaBound { upper, lower };

struct CriterionVerdict {
  bool delta1_holds = false;
  bool delta2_holds = false;
  SigmaBound delta2_mode = SigmaBound::upper;
  double max_log_disc_delta2 = 0.0;  // ln|Delta| cap implied by the ball criterion
};

/// ln of n!/n^n (4/pi)^s, the centre-density bound for the parallelepiped.
double delta1_star_log(long n, long s);

/// ln of sigma_n (4/(pi n))^{n/2} Gamma(1 + n/2). With SigmaBound::lower
/// the result is std::nullopt when the lower bound on sigma_n is vacuous.
std::optional<Evaluation> delta2_star_log(long n, double theta, SigmaBound mode);

/// Closed form of delta2_star_log with the upper bound:
/// (n/2)(1 - ln pi) - n ln n + ln Gamma(n + 2).
double delta2_star_log_upper(long n);

/// Evaluate both criteria M > delta*_i sqrt|Delta|. The ball criterion is
/// always evaluated with the sigma_n upper bound.
CriterionVerdict criterion_check(const CriterionInput& input, double theta = 0.1);

/// GRH lower bound for (1/n) ln|Delta| (Poitou). Requires n >= 2.
double poitou_grh_lower(long n, long r);

/// Coefficient of r/n in the Poitou bound: pi/2 - 2 pi^2 beta(3) / ln^2 n.
double poitou_r_coefficient(long n);

/// ln of the main term (4 pi e^{1+gamma})^{r/n} (4 pi e^gamma)^{2s/n} of the
/// unconditional discriminant bound: ln 4pi + gamma + r/n.
double uncond_lower_main(long n, long r);

/// Whether the unconditional bound beats ln(4 pi e): r/n > 1 - gamma.
bool remark_condition(double r_over_n);

/// Cap on (1/n) ln|Delta| implied by the ball criterion with M = 2^n.
double lenstra_disc_cap(long n);

/// ln(4 pi e), the limit of lenstra_disc_cap.
double disc_cap_limit();

/// ln(8 pi e^gamma), Serre's GRH constant.
double serre_limit();

/// (gamma + ln 2 - 1) - G(n, r, theta). A positive value means the ball
/// criterion is incompatible with the GRH discriminant bound at (n, r).
/// std::nullopt when f(kappa, theta) <= 0. Requires n >= 1152.
std::optional<Evaluation> main_gap(long n, long r, double theta, double tol = 1e-12);

/// Main gap with r minimised over the admissible signatures. For n >= 33
/// the r-coefficient is nonnegative and r = 0 is the worst case; below that
/// both parity-admissible extremes are evaluated.
std::optional<Evaluation> main_gap_all_r(long n, double theta, double tol = 1e-12);

/// Gap values for every n in [n_min, n_max] (r minimised); vacuous entries
/// are std::nullopt. OpenMP-parallel over n.
std::vector<std::optional<double>> gap_table(double theta, long n_min, long n_max, int jobs = 0);

/// Serial reference for gap_table.
std::vector<std::optional<double>> gap_table_serial(double theta, long n_min, long n_max);

/// Smallest n in [n_min, n_max] at which the gap is positive at n, n+1,
/// n+10 and n_max (checkpoints clipped to the range). Throws NotFoundError.
long find_crossing(double theta, long n_min, long n_max, int jobs = 0);

/// Serial reference for find_crossing.
long find_crossing_serial(double theta, long n_min, long n_max);

}  // namespace normeuclid::lenstra
