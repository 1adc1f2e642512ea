// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed here and never tuned at runtime.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "resonant/closed_form.hpp"
#include "resonant/minimizer.hpp"
#include "resonant/real_case.hpp"
#include "resonant/resonance.hpp"
#include "resonant/trig.hpp"
#include "resonant/word.hpp"

using namespace resonant;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double relative_gap(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

// Linear-domain relative error of two log values; both -inf counts as equal.
double log_relative_gap(double log_a, double log_b) {
  if (std::isinf(log_a) || std::isinf(log_b)) {
    return log_a == log_b ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::abs(std::expm1(log_a - log_b));
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

Outcome formula_oracle() {
  constexpr double kTol = 1e-10;
  constexpr double kLambda = 2.0;
  constexpr double kBudgetSeconds = 30.0;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  double worst = 0.0;
  std::size_t cases = 0, failures = 0;
  for (std::uint64_t n = 1; n <= 6; ++n) {
    for (const Word& w : enumerate_words(n, 4)) {
      for (int i = 0; i < 100; ++i) {
        const double theta = angle(rng);
        const double closed = std::exp(closed_form_norm(w, theta, kLambda).log());
        const double brute = l1_entry_norm(evaluate_word(w, theta, kLambda));
        const double gap = relative_gap(closed, brute);
        worst = std::max(worst, gap);
        failures += gap > kTol;
        ++cases;
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {failures == 0 && secs < kBudgetSeconds,
          fmt("%.0f cases, worst rel err %.3g, %.2fs", static_cast<double>(cases), worst, secs) +
              (failures ? " failures=" + std::to_string(failures) : "")};
}

Outcome minimizer_oracle() {
  constexpr double kTol = 1e-10;
  constexpr double kBudgetSeconds = 60.0;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2002);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  double worst = 0.0;
  std::size_t cases = 0, failures = 0;
  for (double epsilon : {0.25, 0.5}) {
    for (double lambda : {1.5, 2.0}) {
      const Params params(lambda, 0.5, epsilon);
      for (std::uint64_t n = 1; n <= 8; ++n) {
        for (int i = 0; i < 25; ++i) {
          const double theta = angle(rng);
          const double gap = log_relative_gap(f_n(theta, n, params).log_f_n.log(),
                                              brute_force_f_n(theta, n, params).log_f_n.log());
          worst = std::max(worst, gap);
          failures += !(gap <= kTol);
          ++cases;
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {failures == 0 && secs < kBudgetSeconds,
          fmt("%.0f cases, worst rel err %.3g, %.2fs", static_cast<double>(cases), worst, secs)};
}

Outcome measure_identity() {
  constexpr double kTol = 1e-12;
  double worst = 0.0;
  for (double lambda : {2.0, 10.0}) {
    for (double epsilon : {0.1, 0.5}) {
      const Params params(lambda, 0.5, epsilon);
      for (std::uint64_t alpha = 1; alpha <= 100; ++alpha) {
        const double t = std::pow(lambda, -(1.0 - 0.5) * static_cast<double>(alpha) / epsilon);
        const double expected = 2.0 * pi - 4.0 * std::acos(t);
        worst = std::max(worst, std::abs(s_tilde_alpha(alpha, params).measure() - expected));
      }
    }
  }
  return {worst <= kTol, fmt("worst abs err %.3g (tol 1e-12)", worst)};
}

Outcome measure_bracket() {
  const auto t0 = std::chrono::steady_clock::now();
  const Params params(2.0, 0.5, 0.1);
  const MeasureBracket b = resonant_measure_bracket(params, 50);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double asymptotic = 4.0 * std::pow(2.0, -(1.0 - 0.5) / 0.1);
  const bool ok = b.lower >= 0.0625 * (1 - 1e-6) && b.upper <= 0.14 &&
                  std::abs(b.upper - asymptotic) <= 0.1 * asymptotic && secs < 5.0;
  return {ok, fmt("lower %.6f upper %.6f vs 4 lambda^(-(1-delta)/eps) = %.6f", b.lower, b.upper,
                  asymptotic) +
                  fmt(", %.3fs", secs)};
}

// min over ordered partitions of m of prod |cos(j theta)|, by direct
// recursion with std::cos (independent of the library's DP).
double min_cos_product(double theta, std::uint64_t m) {
  if (m == 0) return 1.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t j = 1; j <= m; ++j) {
    best = std::min(best, std::abs(std::cos(static_cast<double>(j) * theta)) *
                              min_cos_product(theta, m - j));
  }
  return best;
}

Outcome sandwich() {
  const Params params(2.0, 0.5, 0.5);
  constexpr std::uint64_t kHorizon = 20;
  constexpr std::uint64_t kInnerA = 10;
  const std::uint64_t outer_a = params.rotation_budget(kHorizon);
  std::mt19937_64 rng(3003);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const CircularIntervalSet inner = union_up_to(kInnerA, UnionSide::Inner, params);
  const CircularIntervalSet outside = union_up_to(outer_a, UnionSide::Outer, params).complement();
  int inner_fail = 0, outer_fail = 0, scan_fail = 0;
  for (int i = 0; i < 200; ++i) {
    const double theta = inner.point_at_measure(unit(rng) * inner.measure());
    const ResonanceCertificate cert = certify(theta, params, kHorizon);
    const auto* r = std::get_if<Resonant>(&cert);
    if (r == nullptr || !verify_certificate(*r, theta, params)) ++inner_fail;
  }
  for (int i = 0; i < 200; ++i) {
    const double theta = outside.point_at_measure(unit(rng) * outside.measure());
    const ResonanceCertificate cert = certify(theta, params, kHorizon);
    const auto* nr = std::get_if<NonResonantUpTo>(&cert);
    if (nr == nullptr || nr->horizon != kHorizon) ++outer_fail;
    for (std::uint64_t n = 1; n <= kHorizon; ++n) {
      const std::uint64_t m = params.rotation_budget(n);
      const double f = std::pow(2.0, static_cast<double>(n)) * min_cos_product(theta, m);
      const bool dp_ok = f_n(theta, n, params).log_f_n.log() >= params.log_threshold(n);
      if (!(f >= std::pow(2.0, 0.5 * static_cast<double>(n))) || !dp_ok) ++scan_fail;
    }
  }
  return {inner_fail == 0 && outer_fail == 0 && scan_fail == 0,
          "inner failures " + std::to_string(inner_fail) + "/200, outer failures " +
              std::to_string(outer_fail) + "/200, scan failures " + std::to_string(scan_fail)};
}

Outcome density() {
  std::mt19937_64 rng(4004);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int misses = 0;
  for (std::uint64_t alpha = 1; alpha <= 64; ++alpha) {
    const std::vector<double> witnesses = density_witnesses(alpha);
    const double min_len = pi / static_cast<double>(alpha);
    for (int i = 0; i < 100; ++i) {
      const double start = unit(rng) * kTwoPi;
      const double len = std::min(kTwoPi, min_len * (1.0 + 1e-9 + unit(rng)));
      bool hit = false;
      for (double phi : witnesses) {
        const double offset = reduce_angle(phi - start);
        if (offset > 0.0 && offset < len) hit = true;
      }
      misses += !hit;
    }
  }
  return {misses == 0, std::to_string(misses) + " of 6400 intervals missed"};
}

Outcome invariance_vs_sensitivity() {
  constexpr std::size_t kGrid = 2048;
  const std::vector<Word> words{Word{H(5), R(2), H(5), R(3), H(5)}, Word{H(5), R(2), H(9), R(3), H(1)},
                                Word{H(1), R(2), H(13), R(3), H(1)}};
  std::vector<std::vector<CurveSample>> curves;
  for (const Word& w : words) curves.push_back(comparison_curves(w, w, 2.0, kGrid));

  bool model_identical = true;
  for (std::size_t w = 1; w < words.size(); ++w) {
    for (std::size_t i = 0; i < kGrid; ++i) {
      model_identical &= curves[w][i].log_norm_model == curves[0][i].log_norm_model;
    }
  }
  std::string detail = model_identical ? "model curves identical" : "model curves differ";
  bool real_distinct = true;
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      double worst = 0.0;
      for (std::size_t i = 0; i < kGrid; ++i) {
        worst = std::max(worst, relative_gap(std::exp(curves[a][i].log_norm_real),
                                             std::exp(curves[b][i].log_norm_real)));
      }
      real_distinct &= worst > 0.1;
      detail += fmt("; real %.0f-%.0f max rel diff %.3g", static_cast<double>(a + 1),
                    static_cast<double>(b + 1), worst);
    }
  }
  return {model_identical && real_distinct, detail};
}

Outcome near_identity() {
  const Word w{R(1), H(7), R(1), H(8), R(1)};
  const auto curves = comparison_curves(w, w, 2.0, 2048);
  const double worst = max_log10_ratio(curves, w, 1e-3);
  return {worst <= 0.05, fmt("max |log10 ratio| %.4g (threshold 0.05)", worst)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1 closed-form norms equal brute-force products", formula_oracle},
      {"AC2 DP minimizer equals exhaustive minimum", minimizer_oracle},
      {"AC3 |S~_alpha| = 2pi - 4 arccos(t)", measure_identity},
      {"AC4 measure bracket for lambda=2 delta=0.5 eps=0.1", measure_bracket},
      {"AC5 sandwich: inner resonant, outer complement non-resonant", sandwich},
      {"AC6 density witnesses hit every long interval", density},
      {"AC7 model invariance vs real sensitivity", invariance_vs_sensitivity},
      {"AC8 model vs real near-identity (R H^7 R H^8 R)", near_identity},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
