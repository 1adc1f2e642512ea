#include "resonant/resonance.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "resonant/closed_form.hpp"
#include "resonant/minimizer.hpp"
#include "resonant/trig.hpp"

namespace resonant {

CircularIntervalSet sublevel_set(std::uint64_t alpha, double t) {
  if (alpha == 0) throw std::invalid_argument("sublevel_set: alpha must be >= 1");
  if (!(t > 0.0)) return {};
  if (t >= 1.0) return CircularIntervalSet::full();

  const double a = static_cast<double>(alpha);
  const double half_width = std::asin(t) / a;
  std::vector<Arc> arcs;
  arcs.reserve(2 * alpha);
  for (std::uint64_t k = 0; k < 2 * alpha; ++k) {
    const double centre = (2.0 * static_cast<double>(k) + 1.0) * std::numbers::pi / (2.0 * a);
    arcs.push_back({centre - half_width, centre + half_width});
  }
  return CircularIntervalSet::from_arcs(std::move(arcs));
}

namespace {

double decay_exponent(std::uint64_t alpha, const Params& params) {
  return (1.0 - params.delta()) * static_cast<double>(alpha) / params.epsilon();
}

}  // namespace

double inner_threshold(std::uint64_t alpha, const Params& params) {
  return std::pow(params.lambda(), -(decay_exponent(alpha, params) + 1.0));
}

double outer_threshold(std::uint64_t alpha, const Params& params) {
  return std::pow(params.lambda(), -decay_exponent(alpha, params));
}

CircularIntervalSet s_alpha(std::uint64_t alpha, const Params& params) {
  return sublevel_set(alpha, inner_threshold(alpha, params));
}

CircularIntervalSet s_tilde_alpha(std::uint64_t alpha, const Params& params) {
  return sublevel_set(alpha, outer_threshold(alpha, params));
}

CircularIntervalSet union_up_to(std::uint64_t max_alpha, UnionSide side, const Params& params) {
  if (max_alpha == 0) throw std::invalid_argument("union_up_to: A must be >= 1");
  std::vector<Arc> arcs;
  for (std::uint64_t alpha = 1; alpha <= max_alpha; ++alpha) {
    const CircularIntervalSet s =
        side == UnionSide::Inner ? s_alpha(alpha, params) : s_tilde_alpha(alpha, params);
    arcs.insert(arcs.end(), s.arcs().begin(), s.arcs().end());
  }
  return CircularIntervalSet::from_arcs(std::move(arcs));
}

MeasureBracket resonant_measure_bracket(const Params& params, std::uint64_t max_alpha) {
  const double t = outer_threshold(1, params);
  if (!(t < 1.0)) throw std::invalid_argument("parameters give trivial bound 2pi");

  MeasureBracket out{};
  out.lower = union_up_to(max_alpha, UnionSide::Inner, params).measure();
  out.tail_bound = kTwoPi * std::pow(t, static_cast<double>(max_alpha + 1)) / (1.0 - t);
  out.upper = std::min(kTwoPi, union_up_to(max_alpha, UnionSide::Outer, params).measure() +
                                   out.tail_bound);
  out.geometric_sum = 4.0 * t / (1.0 - t);
  out.first_order_estimate = 4.0 * t;
  return out;
}

std::uint64_t default_horizon(const Params& params) {
  return static_cast<std::uint64_t>(std::ceil(10.0 / params.epsilon() - 1e-9));
}

bool verify_certificate(const Resonant& certificate, double theta, const Params& params) {
  std::uint64_t m = 0;
  for (std::uint64_t j : certificate.witness_profile) m += j;
  if (certificate.n == 0 || m > params.rotation_budget(certificate.n)) return false;
  const LogMagnitude norm =
      hh_norm(certificate.n, certificate.witness_profile, theta, params.lambda());
  return norm.log() < params.log_threshold(certificate.n);
}

ResonanceCertificate certify(double theta, const Params& params, std::uint64_t horizon) {
  if (horizon == 0) throw std::invalid_argument("certify: N must be >= 1");
  const std::uint64_t max_alpha = params.rotation_budget(horizon);

  bool outside_outer = true;
  for (std::uint64_t alpha = 1; alpha <= max_alpha; ++alpha) {
    const double c = std::abs(cos_multiple(alpha, theta));
    if (c < inner_threshold(alpha, params)) {
      // n - 1 <= alpha / epsilon < n, so alpha < epsilon n.
      Resonant witness;
      witness.n = robust_floor(static_cast<double>(alpha) / params.epsilon()) + 1;
      witness.witness_profile = {alpha};
      witness.witness_norm = hh_norm(witness.n, witness.witness_profile, theta, params.lambda());
      if (verify_certificate(witness, theta, params)) return witness;
    }
    if (c < outer_threshold(alpha, params)) outside_outer = false;
  }
  if (outside_outer) return NonResonantUpTo{horizon};

  const MinLogCosTable table(theta, max_alpha);
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    MinResult r = f_n_from_table(table, n, params, theta);
    if (r.log_f_n.log() < params.log_threshold(n)) {
      return Resonant{n, std::move(r.witness_profile), r.log_f_n};
    }
  }
  return NonResonantUpTo{horizon};
}

std::vector<double> density_witnesses(std::uint64_t alpha) {
  if (alpha == 0) throw std::invalid_argument("density_witnesses: alpha must be >= 1");
  std::vector<double> out;
  out.reserve(2 * alpha);
  const double a = static_cast<double>(alpha);
  for (std::uint64_t k = 0; k < 2 * alpha; ++k) {
    out.push_back((2.0 * static_cast<double>(k) + 1.0) * std::numbers::pi / (2.0 * a));
  }
  return out;
}

}  // namespace resonant
