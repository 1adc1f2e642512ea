#pragma once

#include <cstdint>
#include <numbers>

namespace resonant {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reduce an angle into [0, 2pi).
double reduce_angle(double theta);

// Phase j*theta reduced into [0, 2pi). For j >= 2^40 the product and the
// reduction are carried out in long double.
double multiple_phase(std::uint64_t j, double theta);

// cos and sin of j*theta. Phases within a few ulps of a multiple of pi/2 are
// snapped to the exact quadrant values so that cos(pi/2) is exactly 0.
double cos_multiple(std::uint64_t j, double theta);
double sin_multiple(std::uint64_t j, double theta);

}  // namespace resonant
