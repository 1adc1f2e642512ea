#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "resonant/log_magnitude.hpp"
#include "resonant/mat2.hpp"
#include "resonant/minimizer.hpp"
#include "resonant/params.hpp"
#include "resonant/word.hpp"

namespace resonant {

// diag(lambda^power, lambda^-power), the SL(2,R) hyperbolic matrix.
Mat2 real_H(double lambda, std::uint64_t power);

// Word product with H-blocks realized by real_H. Throws NumericGuardError
// when an entry overflows.
Mat2 evaluate_real_word(const Word& word, double theta, double lambda);

double real_log_norm(const Word& word, double theta, double lambda);

struct CurveSample {
  double theta;
  LogMagnitude log_norm_model;
  double log_norm_real;
};

// theta_i = 2 pi i / grid for i = 0..grid-1.
std::vector<double> uniform_grid(std::size_t grid);

// Model norm of `word_model` and real norm of `word_real` on the uniform grid.
std::vector<CurveSample> comparison_curves(const Word& word_model, const Word& word_real,
                                           double lambda, std::size_t grid);

// Angles where the model norm of `word` vanishes: zeros of the cos factors
// that are not absorbed into a boundary |cos| + |sin| term.
std::vector<double> model_zero_angles(const Word& word);

// Circular distance between two angles.
double angular_distance(double a, double b);

// Largest |log10(real / model)| over the samples whose theta is at least
// `mask_radius` away from every model zero of `word_model`.
double max_log10_ratio(std::span<const CurveSample> samples, const Word& word_model,
                       double mask_radius);

struct CurveStats {
  double min_log_norm;
  double argmin_theta;
  // Fraction of grid points whose log norm is below the supplied threshold.
  double sublevel_fraction;
};

CurveStats curve_stats(std::span<const double> thetas, std::span<const double> log_norms,
                       double log_threshold);

inline constexpr std::uint64_t kRealOracleMaxN = 10;

// min of the real norm over every word with n copies of H and at most
// floor(epsilon n) rotations. The real product does not factor, so there is
// no polynomial path; n is capped at kRealOracleMaxN.
MinResult brute_force_real_f_n(double theta, std::uint64_t n, const Params& params);

}  // namespace resonant
