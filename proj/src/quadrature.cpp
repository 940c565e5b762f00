#include "normeuclid/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace normeuclid::specfun {
namespace {

// QUADPACK qk15 abscissae and weights. Odd indices of kKronrodNodes are the
// 7-point Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
};

struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.lo > y.lo;
  }
};

Panel gauss_kronrod(const RealFunction& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double f_center = f(center);
  double kronrod = kKronrodWeights[7] * f_center;
  double gauss = kGaussWeights[3] * f_center;
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  // The Kronrod rule is far more accurate than the embedded Gauss rule, so
  // |K - G| is a conservative bound for smooth integrands. Add a rounding
  // floor so exactly integrated panels still carry an honest estimate.
  const double rounding = 50.0 * std::numeric_limits<double>::epsilon() * std::fabs(kronrod);
  return Panel{lo, hi, kronrod, std::fabs(kronrod - gauss) + rounding};
}

}  // namespace

Evaluation integrate(const RealFunction& f, double lo, double hi, double tol, QuadratureOptions options) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("integrate: requires finite lo < hi");
  }
  if (!(tol > 0.0)) {
    throw DomainError("integrate: requires tol > 0");
  }

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> panels;
  panels.push(gauss_kronrod(f, lo, hi));
  double total_error = panels.top().error;
  int count = 1;

  while (total_error > tol) {
    if (count >= options.max_panels) {
      throw ConvergenceError("integrate: tolerance not reached within panel budget");
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi)) {
      throw ConvergenceError("integrate: interval cannot be subdivided further");
    }
    const Panel left = gauss_kronrod(f, worst.lo, mid);
    const Panel right = gauss_kronrod(f, mid, worst.hi);
    panels.push(left);
    panels.push(right);
    ++count;

    total_error += left.error + right.error - worst.error;
    if (total_error <= tol) {
      // Confirm with a fresh sum; the running total drifts by rounding.
      total_error = 0.0;
      auto copy = panels;
      while (!copy.empty()) {
        total_error += copy.top().error;
        copy.pop();
      }
    }
  }

  // Sum panel values left to right.
  std::vector<Panel> ordered;
  ordered.reserve(panels.size());
  while (!panels.empty()) {
    ordered.push_back(panels.top());
    panels.pop();
  }
  std::sort(ordered.begin(), ordered.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  KahanSum value;
  for (const Panel& p : ordered) value.add(p.value);

  return Evaluation::checked(value.value(), total_error, static_cast<std::int64_t>(count) * 15, "integrate");
}

double find_root(const RealFunction& f, double lo, double hi, double tol) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("find_root: requires finite lo < hi");
  }
  if (!(tol > 0.0)) {
    throw DomainError("find_root: requires tol > 0");
  }
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (!(f_lo * f_hi < 0.0)) {
    throw BracketError("find_root: f(lo) and f(hi) do not have opposite signs");
  }

  // Alternate a secant proposal with a bisection fallback; the bracket
  // always shrinks by at least half every two iterations.
  bool last_was_secant = false;
  for (int iter = 0; iter < 400 && (hi - lo) > tol; ++iter) {
    double x = 0.5 * (lo + hi);
    if (!last_was_secant) {
      const double secant = hi - f_hi * (hi - lo) / (f_hi - f_lo);
      const double margin = 0.01 * (hi - lo);
      if (std::isfinite(secant) && secant > lo + margin && secant < hi - margin) {
        x = secant;
      }
      last_was_secant = true;
    } else {
      last_was_secant = false;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (f_lo < 0.0)) {
      lo = x;
      f_lo = fx;
    } else {
      hi = x;
      f_hi = fx;
    }
  }
  return std::fabs(f_lo) < std::fabs(f_hi) ? lo : hi;
}

}  // namespace normeuclid::specfun
