#pragma once

#include <optional>

#include "normeuclid/evaluation.hpp"

namespace normeuclid::rogers {

/// Parameters of the explicit lower bound for the Rogers constant sigma_n:
/// kappa = sqrt(n/2) and the cut-off exponent theta in (0, 1/3). The degree
/// is carried as a real number so that kappa can be set directly.
class RogersContext {
 public:
  static RogersContext from_degree(long n, double theta);
  static RogersContext from_kappa(double kappa, double theta);

  double kappa() const { return kappa_; }
  double theta() const { return theta_; }
  double degree() const { return 2.0 * kappa_ * kappa_; }
  double cutoff() const;  // kappa^theta

 private:
  RogersContext(double kappa, double theta) : kappa_(kappa), theta_(theta) {}
  double kappa_;
  double theta_;
};

struct RogersErrorConstants {
  double c1;
  double c2;
  double c3;
  double c41;
  double c42;
};

/// The five error constants of the small-|u| estimate. Requires kappa > 1.
RogersErrorConstants error_constants(const RogersContext& ctx);

/// C(u) = c1 + c41 |u| + c42 |u|^3.
double c_poly(const RogersErrorConstants& c, double u);
double c_poly(const RogersContext& ctx, double u);

/// Unique root U of C(u) = (kappa/2) u^2 on [0, kappa^theta]; needs kappa >= 24.
double u_threshold(const RogersContext& ctx);

/// 2 * int_0^{kappa^theta} exp(-u^2) (1 - u^2/(2 kappa^2))^n du.
Evaluation central_integral(const RogersContext& ctx, double tol = 1e-12);

/// The four pieces of f(kappa, theta), kept separately for reporting.
struct FLowerTerms {
  Evaluation integral;
  double edge_term;  // 2 sqrt(pi) C(kappa^theta) / kappa
  double core_term;  // 4 U C(U)/kappa * (1 + 4 C(U)/kappa)
  double tail_term;  // 2 exp(-kappa^theta)
  double u_threshold;
  double value;
};

FLowerTerms f_lower_terms(const RogersContext& ctx, double tol = 1e-12);

/// f(kappa, theta): lower bound for the normalised Rogers integral. May be
/// negative, in which case the lower bound on sigma_n is vacuous.
Evaluation f_lower(const RogersContext& ctx, double tol = 1e-12);

/// ln of the upper bound (e/(4n))^{n/2} (n+1)! / Gamma(1 + n/2) on sigma_n.
double sigma_upper_log(long n);

/// ln of the lower bound on sigma_n; std::nullopt when f(kappa, theta) <= 0.
/// Requires n >= 1152 (kappa >= 24).
std::optional<Evaluation> sigma_lower_log(long n, double theta, double tol = 1e-12);

struct LeechGap {
  double leech_log2;     // Leech-Sloane approximation of log2 sigma_n
  double predicted_gap;  // closed-form excess of the upper bound over it
  double actual_gap;     // sigma_upper_log(n)/ln 2 - leech_log2
};

LeechGap leech_gap(long n);

}  // namespace normeuclid::rogers
