#include "resonant/real_case.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "resonant/closed_form.hpp"
#include "resonant/errors.hpp"
#include "resonant/trig.hpp"

namespace resonant {

Mat2 real_H(double lambda, std::uint64_t power) {
  if (!(lambda > 1.0)) throw std::invalid_argument("real_H: lambda must be > 1");
  if (power == 0) throw std::invalid_argument("real_H: power must be >= 1");
  const double p = static_cast<double>(power);
  const double up = std::pow(lambda, p);
  const double down = std::pow(lambda, -p);
  if (!std::isfinite(up) || down == 0.0) {
    throw NumericGuardError("lambda^" + std::to_string(power) + " leaves double range");
  }
  return {up, 0.0, 0.0, down};
}

Mat2 evaluate_real_word(const Word& word, double theta, double lambda) {
  const Mat2 rot = rotation_matrix(theta);
  Mat2 acc = Mat2::identity();
  for (const Block& b : word.blocks()) {
    if (b.kind == BlockKind::H) {
      acc = acc * real_H(lambda, b.exponent);
    } else {
      for (std::uint64_t i = 0; i < b.exponent; ++i) acc = acc * rot;
    }
    if (!acc.is_finite()) throw NumericGuardError("real word product overflows double precision");
  }
  return acc;
}

double real_log_norm(const Word& word, double theta, double lambda) {
  return std::log(l1_entry_norm(evaluate_real_word(word, theta, lambda)));
}

std::vector<double> uniform_grid(std::size_t grid) {
  std::vector<double> out(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    out[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(grid);
  }
  return out;
}

std::vector<CurveSample> comparison_curves(const Word& word_model, const Word& word_real,
                                           double lambda, std::size_t grid) {
  if (grid < 2) throw std::invalid_argument("comparison_curves: grid must be >= 2");
  std::vector<CurveSample> out;
  out.reserve(grid);
  for (double theta : uniform_grid(grid)) {
    out.push_back({theta, closed_form_norm(word_model, theta, lambda),
                   real_log_norm(word_real, theta, lambda)});
  }
  return out;
}

std::vector<double> model_zero_angles(const Word& word) {
  if (word.empty()) return {};
  const std::vector<std::uint64_t> js = rotation_factor_profile(word);
  std::size_t first = 0;
  std::size_t last = js.size();
  switch (classify(word)) {
    case WordShape::HH: break;
    case WordShape::HR: last = js.size() - 1; break;
    case WordShape::RH: first = 1; break;
    case WordShape::RR: first = 1; last = js.size() - 1; break;
    case WordShape::PureH:
    case WordShape::PureR: return {};
  }
  std::vector<double> zeros;
  for (std::size_t i = first; i < last; ++i) {
    const double j = static_cast<double>(js[i]);
    for (std::uint64_t k = 0; k < 2 * js[i]; ++k) {
      zeros.push_back((2.0 * static_cast<double>(k) + 1.0) * std::numbers::pi / (2.0 * j));
    }
  }
  std::sort(zeros.begin(), zeros.end());
  zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
  return zeros;
}

double angular_distance(double a, double b) {
  const double d = std::abs(reduce_angle(a) - reduce_angle(b));
  return std::min(d, kTwoPi - d);
}

double max_log10_ratio(std::span<const CurveSample> samples, const Word& word_model,
                       double mask_radius) {
  const std::vector<double> zeros = model_zero_angles(word_model);
  double worst = 0.0;
  for (const CurveSample& s : samples) {
    const bool masked = std::any_of(zeros.begin(), zeros.end(), [&](double z) {
      return angular_distance(s.theta, z) < mask_radius;
    });
    if (masked) continue;
    if (s.log_norm_model.is_zero()) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::abs(s.log_norm_real - s.log_norm_model.log()) / std::numbers::ln10);
  }
  return worst;
}

CurveStats curve_stats(std::span<const double> thetas, std::span<const double> log_norms,
                       double log_threshold) {
  if (thetas.size() != log_norms.size() || thetas.empty()) {
    throw std::invalid_argument("curve_stats: need matching, nonempty theta and norm samples");
  }
  CurveStats stats{std::numeric_limits<double>::infinity(), thetas[0], 0.0};
  std::size_t below = 0;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (log_norms[i] < stats.min_log_norm) {
      stats.min_log_norm = log_norms[i];
      stats.argmin_theta = thetas[i];
    }
    if (log_norms[i] < log_threshold) ++below;
  }
  stats.sublevel_fraction = static_cast<double>(below) / static_cast<double>(thetas.size());
  return stats;
}

MinResult brute_force_real_f_n(double theta, std::uint64_t n, const Params& params) {
  if (n == 0) throw std::invalid_argument("brute_force_real_f_n: n must be >= 1");
  if (n > kRealOracleMaxN) {
    throw NumericGuardError("brute_force_real_f_n: n = " + std::to_string(n) +
                            " exceeds the supported scale " + std::to_string(kRealOracleMaxN));
  }
  double best = std::numeric_limits<double>::infinity();
  MinResult result;
  for_each_word(n, params.rotation_budget(n), [&](const Word& w) {
    const double v = l1_entry_norm(evaluate_real_word(w, theta, params.lambda()));
    if (v < best) {
      best = v;
      result.witness_profile = rotation_factor_profile(w);
      result.m_used = w.r_total();
    }
  });
  result.log_f_n = LogMagnitude::from_linear(best);
  return result;
}

}  // namespace resonant
