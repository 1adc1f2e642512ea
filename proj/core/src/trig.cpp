#include "resonant/trig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace resonant {
namespace {

constexpr std::uint64_t kExtendedPhaseThreshold = std::uint64_t{1} << 40;
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr long double kTwoPiLong = 2.0L * std::numbers::pi_v<long double>;

// Quadrant index q if x lies within a few ulps of q * pi/2, otherwise -1.
int snapped_quadrant(double x) {
  const double q = std::nearbyint(x / kHalfPi);
  const double tol = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, x);
  if (std::abs(x - q * kHalfPi) <= tol) {
    return static_cast<int>(static_cast<long long>(q) % 4);
  }
  return -1;
}

}  // namespace

double reduce_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double multiple_phase(std::uint64_t j, double theta) {
  const double base = reduce_angle(theta);
  if (j < kExtendedPhaseThreshold) {
    return reduce_angle(static_cast<double>(j) * base);
  }
  long double x = std::fmod(static_cast<long double>(j) * static_cast<long double>(base), kTwoPiLong);
  if (x < 0.0L) x += kTwoPiLong;
  return reduce_angle(static_cast<double>(x));
}

double cos_multiple(std::uint64_t j, double theta) {
  const double x = multiple_phase(j, theta);
  switch (snapped_quadrant(x)) {
    case 0: return 1.0;
    case 1: return 0.0;
    case 2: return -1.0;
    case 3: return 0.0;
    default: return std::cos(x);
  }
}

double sin_multiple(std::uint64_t j, double theta) {
  const double x = multiple_phase(j, theta);
  switch (snapped_quadrant(x)) {
    case 0: return 0.0;
    case 1: return 1.0;
    case 2: return 0.0;
    case 3: return -1.0;
    default: return std::sin(x);
  }
}

}  // namespace resonant
