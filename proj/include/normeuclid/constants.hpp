#pragma once

#include <numbers>

namespace normeuclid {

/// Mathematical constants used across the toolkit, stored to 17 significant
/// digits. The two Dirichlet beta/lambda values at 3 are derived from the
/// stored pi and zeta(3) so the identities hold bit-for-bit.
struct Constants {
  double euler_gamma;
  double pi;
  double log2;
  double zeta3;
  double lambda3;  // sum over odd k of 1/k^3 = (7/8) zeta(3)
  double beta3;    // sum (-1)^k/(2k+1)^3 = pi^3/32
};

inline constexpr double kEulerGamma = 0.57721566490153286;
inline constexpr double kPi = 3.1415926535897932;
inline constexpr double kLog2 = 0.69314718055994531;
inline constexpr double kZeta3 = 1.2020569031595943;
inline constexpr double kLambda3 = 0.875 * kZeta3;
inline constexpr double kBeta3 = kPi * kPi * kPi / 32.0;

inline constexpr Constants kConstants{kEulerGamma, kPi, kLog2, kZeta3, kLambda3, kBeta3};

static_assert(kEulerGamma == std::numbers::egamma);
static_assert(kPi == std::numbers::pi);
static_assert(kLog2 == std::numbers::ln2);

}  // namespace normeuclid
