#pragma once

#include <cstdint>

namespace resonant {

// Growth factor lambda > 1, resonance exponent delta in (0,1), rotation
// budget fraction epsilon in (0,1). Validated on construction.
class Params {
 public:
  Params(double lambda, double delta, double epsilon);

  double lambda() const { return lambda_; }
  double delta() const { return delta_; }
  double epsilon() const { return epsilon_; }
  double log_lambda() const { return log_lambda_; }

  // floor(epsilon * n): the largest number of rotations allowed in a word
  // with n copies of h.
  std::uint64_t rotation_budget(std::uint64_t n) const;

  // log of the resonance threshold lambda^(delta n).
  double log_threshold(std::uint64_t n) const;

 private:
  double lambda_;
  double delta_;
  double epsilon_;
  double log_lambda_;
};

// floor(x) tolerant of the representation error in decimal inputs such as
// epsilon = 0.29, n = 100 (which evaluates to 28.999999999999996).
std::uint64_t robust_floor(double x);

}  // namespace resonant
