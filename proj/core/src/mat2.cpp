#include "resonant/mat2.hpp"

#include <stdexcept>
#include <string>

#include "resonant/errors.hpp"
#include "resonant/trig.hpp"

namespace resonant {

Mat2 rotation_matrix(double theta) {
  const double c = cos_multiple(1, theta);
  const double s = sin_multiple(1, theta);
  return {c, -s, s, c};
}

Mat2 h_matrix(double lambda, std::uint64_t power) {
  if (!(lambda > 1.0)) throw std::invalid_argument("h_matrix: lambda must be > 1");
  if (power == 0) throw std::invalid_argument("h_matrix: power must be >= 1");
  const double v = std::pow(lambda, static_cast<double>(power));
  if (!std::isfinite(v)) {
    throw NumericGuardError("lambda^" + std::to_string(power) +
                            " overflows; use the log-domain closed form");
  }
  return {v, 0.0, 0.0, 0.0};
}

}  // namespace resonant
