#pragma once

#include <cmath>
#include <cstdint>

namespace resonant {

// Row-major 2x2 real matrix (a b; c d).
struct Mat2 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 zero() { return {0.0, 0.0, 0.0, 0.0}; }

  constexpr double det() const { return a * d - b * c; }
  bool is_finite() const {
    return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d);
  }

  friend constexpr Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend constexpr Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 rotation_matrix(double theta);

// diag(lambda^power, 0). Throws NumericGuardError if lambda^power overflows.
Mat2 h_matrix(double lambda, std::uint64_t power);

// |a| + |b| + |c| + |d|
inline double l1_entry_norm(const Mat2& m) {
  return std::abs(m.a) + std::abs(m.b) + std::abs(m.c) + std::abs(m.d);
}

}  // namespace resonant
