#include "resonant/closed_form.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "resonant/trig.hpp"

namespace resonant {

double log_abs_cos(std::uint64_t j, double theta) {
  const double c = std::abs(cos_multiple(j, theta));
  return c == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(c);
}

double log_boundary_factor(std::uint64_t j, double theta) {
  return std::log(std::abs(cos_multiple(j, theta)) + std::abs(sin_multiple(j, theta)));
}

LogMagnitude hh_norm(std::uint64_t n, std::span<const std::uint64_t> profile, double theta,
                     double lambda) {
  double acc = static_cast<double>(n) * std::log(lambda);
  for (std::uint64_t j : profile) acc += log_abs_cos(j, theta);
  return LogMagnitude::from_log(acc);
}

LogMagnitude closed_form_norm(const Word& word, double theta, double lambda) {
  if (word.empty()) return LogMagnitude::from_log(std::numbers::ln2);  // ||I|| = 2

  const std::vector<std::uint64_t> js = rotation_factor_profile(word);
  const std::size_t k = js.size();
  const double base = static_cast<double>(word.h_total()) * std::log(lambda);

  // Sum of log|cos(j_i theta)| for i in [first, last).
  auto interior = [&](std::size_t first, std::size_t last) {
    double s = 0.0;
    for (std::size_t i = first; i < last; ++i) s += log_abs_cos(js[i], theta);
    return s;
  };

  switch (classify(word)) {
    case WordShape::PureH:
      return LogMagnitude::from_log(base);
    case WordShape::PureR:
      // ||R^m||_1 = 2 (|cos m theta| + |sin m theta|)
      return LogMagnitude::from_log(std::numbers::ln2 + log_boundary_factor(js[0], theta));
    case WordShape::HH:
      return hh_norm(word.h_total(), js, theta, lambda);
    case WordShape::HR:
      return LogMagnitude::from_log(base + interior(0, k - 1) + log_boundary_factor(js[k - 1], theta));
    case WordShape::RH:
      return LogMagnitude::from_log(base + log_boundary_factor(js[0], theta) + interior(1, k));
    case WordShape::RR:
      return LogMagnitude::from_log(base + log_boundary_factor(js[0], theta) + interior(1, k - 1) +
                                    log_boundary_factor(js[k - 1], theta));
  }
  return LogMagnitude::zero();
}

}  // namespace resonant
