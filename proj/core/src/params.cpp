#include "resonant/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace resonant {

Params::Params(double lambda, double delta, double epsilon)
    : lambda_(lambda), delta_(delta), epsilon_(epsilon) {
  if (!(lambda > 1.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be a finite real > 1, got " + std::to_string(lambda));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1), got " + std::to_string(delta));
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1), got " + std::to_string(epsilon));
  }
  log_lambda_ = std::log(lambda);
}

std::uint64_t Params::rotation_budget(std::uint64_t n) const {
  return robust_floor(epsilon_ * static_cast<double>(n));
}

double Params::log_threshold(std::uint64_t n) const {
  return delta_ * static_cast<double>(n) * log_lambda_;
}

std::uint64_t robust_floor(double x) {
  if (!(x >= 0.0)) return 0;
  // Decimal inputs rarely land exactly on the integer they denote.
  return static_cast<std::uint64_t>(std::floor(x + 1e-9 * std::max(1.0, x)));
}

}  // namespace resonant
