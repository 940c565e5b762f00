#include "normeuclid/rogers.hpp"

#include <cmath>
#include <string>

#include "normeuclid/constants.hpp"
#include "normeuclid/quadrature.hpp"
#include "normeuclid/specfun.hpp"

namespace normeuclid::rogers {
namespace {

constexpr double kMinKappaForRoot = 24.0;
constexpr long kMinLowerDegree = 1152;  // 2 * 24^2

void check_theta(double theta) {
  if (!(theta > 0.0 && theta < 1.0 / 3.0)) {
    throw DomainError("rogers: theta must lie in (0, 1/3)");
  }
}

}  // namespace

RogersContext RogersContext::from_degree(long n, double theta) {
  if (n < 1) throw DomainError("rogers: degree must be >= 1");
  check_theta(theta);
  return RogersContext(std::sqrt(static_cast<double>(n) / 2.0), theta);
}

RogersContext RogersContext::from_kappa(double kappa, double theta) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("rogers: kappa must be positive");
  check_theta(theta);
  return RogersContext(kappa, theta);
}

double RogersContext::cutoff() const { return std::pow(kappa_, theta_); }

RogersErrorConstants error_constants(const RogersContext& ctx) {
  const double k = ctx.kappa();
  const double t = ctx.theta();
  if (!(k > 1.0)) throw DomainError("error_constants: requires kappa > 1");

  const double q = std::pow(k, t - 1.0);  // kappa^{theta-1}
  const double q2 = q * q;                // kappa^{2 theta - 2}
  const double root = std::sqrt(1.0 + q2);
  const double e = std::exp(1.0);

  RogersErrorConstants c{};
  c.c1 = (2.0 * std::sqrt(kPi) * root / e + 6.0 / k * (1.0 + root / e) + 3.0 / (k * k * k)) / 8.0;
  c.c2 = 1.0 / (1.0 - q) * (1.0 / (1.0 - q / 4.0) + 2.5);
  c.c3 = std::sqrt(1.0 + q2 / 4.0);
  c.c41 = c.c3 + q2 * q * c.c2 * c.c3 + q / 4.0;
  c.c42 = c.c2 * (1.0 - 1.0 / (2.0 * k * k));
  return c;
}

double c_poly(const RogersErrorConstants& c, double u) {
  const double a = std::fabs(u);
  return c.c1 + c.c41 * a + c.c42 * a * a * a;
}

double c_poly(const RogersContext& ctx, double u) { return c_poly(error_constants(ctx), u); }

double u_threshold(const RogersContext& ctx) {
  if (ctx.kappa() < kMinKappaForRoot) {
    throw DomainError("u_threshold: requires kappa >= 24");
  }
  const RogersErrorConstants c = error_constants(ctx);
  const double k = ctx.kappa();
  auto p = [&](double u) { return c_poly(c, u) - 0.5 * k * u * u; };
  // P(0) = c1 > 0; P(kappa^theta) < 0 is checked by find_root.
  return specfun::find_root(p, 0.0, ctx.cutoff(), 1e-15);
}

Evaluation central_integral(const RogersContext& ctx, double tol) {
  const double k = ctx.kappa();
  const double n = ctx.degree();
  const double upper = ctx.cutoff();
  const double scale = 1.0 / (2.0 * k * k);
  if (!(upper * upper * scale < 1.0)) {
    throw DomainError("central_integral: integrand base is not positive on the range");
  }
  auto integrand = [=](double u) {
    const double u2 = u * u;
    return std::exp(-u2 + n * std::log1p(-u2 * scale));
  };
  const Evaluation half = specfun::integrate(integrand, 0.0, upper, 0.5 * tol);
  return Evaluation::checked(2.0 * half.value, 2.0 * half.err_estimate, half.terms_used, "central_integral");
}

FLowerTerms f_lower_terms(const RogersContext& ctx, double tol) {
  if (ctx.kappa() < kMinKappaForRoot) {
    throw DomainError("f_lower: requires kappa >= 24");
  }
  const RogersErrorConstants c = error_constants(ctx);
  const double k = ctx.kappa();
  const double cut = ctx.cutoff();

  FLowerTerms terms{};
  terms.integral = central_integral(ctx, tol);
  terms.edge_term = 2.0 * std::sqrt(kPi) * c_poly(c, cut) / k;
  terms.u_threshold = u_threshold(ctx);
  const double c_at_u = c_poly(c, terms.u_threshold);
  terms.core_term = 4.0 * terms.u_threshold * c_at_u / k * (1.0 + 4.0 * c_at_u / k);
  terms.tail_term = 2.0 * std::exp(-cut);
  terms.value = terms.integral.value - terms.edge_term - terms.core_term - terms.tail_term;
  return terms;
}

Evaluation f_lower(const RogersContext& ctx, double tol) {
  const FLowerTerms t = f_lower_terms(ctx, tol);
  const double rounding = 8.0 * 2.220446049250313e-16 *
                          (std::fabs(t.integral.value) + t.edge_term + t.core_term + t.tail_term);
  return Evaluation::checked(t.value, t.integral.err_estimate + rounding, t.integral.terms_used, "f_lower");
}

double sigma_upper_log(long n) {
  if (n < 1) throw DomainError("sigma_upper_log: requires n >= 1");
  const double x = static_cast<double>(n);
  return 0.5 * x * std::log(std::exp(1.0) / (4.0 * x)) + specfun::log_gamma(x + 2.0).value -
         specfun::log_gamma(1.0 + 0.5 * x).value;
}

std::optional<Evaluation> sigma_lower_log(long n, double theta, double tol) {
  if (n < kMinLowerDegree) {
    throw DomainError("sigma_lower_log: requires n >= 1152, got n = " + std::to_string(n));
  }
  const RogersContext ctx = RogersContext::from_degree(n, theta);
  const Evaluation f = f_lower(ctx, tol);
  if (!(f.value > 0.0)) return std::nullopt;

  const double x = static_cast<double>(n);
  const Evaluation lg_n2 = specfun::log_gamma(x + 2.0);
  const Evaluation lg_half = specfun::log_gamma(1.0 + 0.5 * x);
  KahanSum sum;
  sum.add(std::log(f.value));
  sum.add(-x * kLog2);
  sum.add(-0.5 * x * std::log(x));
  sum.add(-0.5 * std::log(kPi));
  sum.add(0.5 * x);
  sum.add(lg_n2.value);
  sum.add(-lg_half.value);
  const double err = f.err_estimate / f.value + lg_n2.err_estimate + lg_half.err_estimate;
  return Evaluation::checked(sum.value(), err, f.terms_used, "sigma_lower_log");
}

LeechGap leech_gap(long n) {
  if (n < 1) throw DomainError("leech_gap: requires n >= 1");
  const double x = static_cast<double>(n);
  const double e = std::exp(1.0);
  const double log2e = 1.0 / kLog2;

  LeechGap g{};
  g.leech_log2 = 0.5 * x * std::log2(x / (4.0 * e)) + 1.5 * std::log2(e / std::sqrt(kPi)) + 5.25 / (x + 2.5) -
                 specfun::log_gamma(1.0 + 0.5 * x).value * log2e;
  g.predicted_gap = 1.5 * std::log2(x) + 0.5 - 1.5 * log2e + 1.25 * std::log2(kPi) + 13.0 * log2e / (12.0 * x) -
                    5.25 / (x + 2.5);
  g.actual_gap = sigma_upper_log(n) * log2e - g.leech_log2;
  return g;
}

}  // namespace normeuclid::rogers
