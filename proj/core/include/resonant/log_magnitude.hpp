#pragma once

#include <cassert>
#include <cmath>
#include <compare>
#include <limits>

namespace resonant {

// Logarithm of a nonnegative real. A log value of -inf encodes exactly zero,
// so products of magnitudes never overflow or underflow.
class LogMagnitude {
 public:
  // Default: zero.
  constexpr LogMagnitude() = default;

  static constexpr LogMagnitude zero() { return LogMagnitude(); }
  static constexpr LogMagnitude one() { return from_log(0.0); }
  static constexpr LogMagnitude from_log(double log_value) {
    LogMagnitude m;
    m.log_value_ = log_value;
    return m;
  }
  static LogMagnitude from_linear(double value) {
    assert(value >= 0.0);
    return from_log(value == 0.0 ? kNegInf : std::log(value));
  }

  constexpr double log() const { return log_value_; }
  double linear() const { return std::exp(log_value_); }
  constexpr bool is_zero() const { return log_value_ == kNegInf; }

  LogMagnitude& operator*=(LogMagnitude other) {
    log_value_ += other.log_value_;
    return *this;
  }
  friend LogMagnitude operator*(LogMagnitude lhs, LogMagnitude rhs) { return lhs *= rhs; }

  friend constexpr bool operator==(LogMagnitude, LogMagnitude) = default;
  friend constexpr auto operator<=>(LogMagnitude lhs, LogMagnitude rhs) {
    return lhs.log_value_ <=> rhs.log_value_;
  }

 private:
  static constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  double log_value_ = kNegInf;
};

}  // namespace resonant
