#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "resonant/arc_set.hpp"
#include "resonant/log_magnitude.hpp"
#include "resonant/params.hpp"

namespace resonant {

// {theta : |cos(alpha theta)| < t}: 2 alpha arcs centred at the zeros
// (2k+1) pi / (2 alpha), each of half-width arcsin(t) / alpha.
// t >= 1 gives the full circle, t <= 0 the empty set.
CircularIntervalSet sublevel_set(std::uint64_t alpha, double t);

// Thresholds lambda^(-(1-delta) alpha / epsilon - 1) and
// lambda^(-(1-delta) alpha / epsilon).
double inner_threshold(std::uint64_t alpha, const Params& params);
double outer_threshold(std::uint64_t alpha, const Params& params);

CircularIntervalSet s_alpha(std::uint64_t alpha, const Params& params);
CircularIntervalSet s_tilde_alpha(std::uint64_t alpha, const Params& params);

enum class UnionSide { Inner, Outer };

// Union of s_alpha (Inner) or s_tilde_alpha (Outer) over alpha = 1..A.
CircularIntervalSet union_up_to(std::uint64_t max_alpha, UnionSide side, const Params& params);

struct MeasureBracket {
  double lower;
  double upper;
  // 4 t / (1 - t) and the first-order 4 t, with t = lambda^(-(1-delta)/epsilon).
  // Approximations only; neither is a bound.
  double geometric_sum;
  double first_order_estimate;
  double tail_bound;
};

inline constexpr std::uint64_t kDefaultTruncation = 50;

// lower = |union of S_alpha, alpha <= A|; upper = |union of S~_alpha,
// alpha <= A| + 2pi t^(A+1) / (1 - t), using arcsin x <= (pi/2) x for the
// tail. Throws std::invalid_argument if t >= 1.
MeasureBracket resonant_measure_bracket(const Params& params,
                                        std::uint64_t max_alpha = kDefaultTruncation);

struct Resonant {
  std::uint64_t n;
  std::vector<std::uint64_t> witness_profile;
  LogMagnitude witness_norm;
};
struct NonResonantUpTo {
  std::uint64_t horizon;
};
struct Unknown {};

using ResonanceCertificate = std::variant<Resonant, NonResonantUpTo, Unknown>;

// Default horizon ceil(10 / epsilon).
std::uint64_t default_horizon(const Params& params);

/**
 * Decide whether some n <= N has f_n(theta) < lambda^(delta n).
 *
 * Fast path: theta in S_alpha for alpha <= floor(epsilon N) yields the word
 * h R^alpha h with n = floor(alpha / epsilon) + 1, verified before returning.
 * If |cos(alpha theta)| >= lambda^(-(1-delta) alpha / epsilon) for every
 * such alpha, no word with n <= N can be resonant. Otherwise every n <= N is
 * scanned with the minimizer. Never returns Unknown.
 */
ResonanceCertificate certify(double theta, const Params& params, std::uint64_t horizon);

// Re-evaluates a Resonant certificate's witness word in closed form.
bool verify_certificate(const Resonant& certificate, double theta, const Params& params);

// The 2 alpha zeros (2k+1) pi / (2 alpha) of cos(alpha theta) in [0, 2pi).
std::vector<double> density_witnesses(std::uint64_t alpha);

}  // namespace resonant
