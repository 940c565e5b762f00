#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "normeuclid/errors.hpp"

namespace normeuclid {

/// A scalar numeric result together with an a-posteriori absolute error
/// estimate and the number of terms (or function evaluations) it took.
///
/// Non-finite values are never returned: `checked` throws instead.
struct Evaluation {
  double value = 0.0;
  double err_estimate = 0.0;
  std::int64_t terms_used = 0;

  static Evaluation checked(double value, double err_estimate, std::int64_t terms_used,
                            const char* what = "evaluation") {
    if (!std::isfinite(value)) {
      throw ConvergenceError(std::string(what) + ": non-finite value");
    }
    if (!std::isfinite(err_estimate) || err_estimate < 0.0) {
      throw ConvergenceError(std::string(what) + ": invalid error estimate");
    }
    return Evaluation{value, err_estimate, terms_used};
  }
};

/// Compensated (Kahan-Babuska/Neumaier) accumulator.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  KahanSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace normeuclid
