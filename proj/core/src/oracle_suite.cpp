#include "resonant/oracle_suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "resonant/closed_form.hpp"
#include "resonant/minimizer.hpp"
#include "resonant/trig.hpp"
#include "resonant/word.hpp"
#include "resonant/word_format.hpp"

namespace resonant {

bool log_values_agree(double log_a, double log_b, double rel_tol) {
  if (std::isinf(log_a) || std::isinf(log_b)) return log_a == log_b;
  return std::abs(std::expm1(log_a - log_b)) <= rel_tol;
}

namespace {

double log_error(double log_a, double log_b) {
  if (std::isinf(log_a) || std::isinf(log_b)) return log_a == log_b ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(std::expm1(log_a - log_b));
}

void record(OracleCheck& check, double log_a, double log_b, double rel_tol,
            const std::string& context) {
  ++check.cases;
  const double err = log_error(log_a, log_b);
  check.worst_error = std::max(check.worst_error, err);
  if (!log_values_agree(log_a, log_b, rel_tol)) {
    if (check.failures == 0) check.first_failure = context;
    ++check.failures;
  }
}

}  // namespace

OracleCheck check_closed_form_against_products(std::uint64_t max_n, std::uint64_t max_m,
                                               std::size_t thetas_per_word, std::uint64_t seed,
                                               double rel_tol) {
  OracleCheck check;
  check.name = "closed-form norm vs brute-force product";
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  constexpr double kLambda = 2.0;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    for_each_word(n, max_m, [&](const Word& w) {
      for (std::size_t i = 0; i < thetas_per_word; ++i) {
        const double theta = angle(rng);
        const double closed = closed_form_norm(w, theta, kLambda).log();
        const double brute = std::log(l1_entry_norm(evaluate_word(w, theta, kLambda)));
        std::ostringstream ctx;
        ctx.precision(17);
        ctx << format_word(w) << " theta=" << theta;
        record(check, closed, brute, rel_tol, ctx.str());
      }
    });
  }
  return check;
}

OracleCheck check_minimizer_against_brute_force(std::uint64_t max_n, std::size_t thetas,
                                                std::uint64_t seed, double rel_tol) {
  OracleCheck check;
  check.name = "dynamic-programming f_n vs exhaustive minimum";
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (double epsilon : {0.25, 0.5}) {
    for (double lambda : {1.5, 2.0}) {
      const Params params(lambda, 0.5, epsilon);
      for (std::uint64_t n = 1; n <= max_n; ++n) {
        for (std::size_t i = 0; i < thetas; ++i) {
          const double theta = angle(rng);
          const double dp = f_n(theta, n, params).log_f_n.log();
          const double brute = brute_force_f_n(theta, n, params).log_f_n.log();
          std::ostringstream ctx;
          ctx.precision(17);
          ctx << "n=" << n << " lambda=" << lambda << " epsilon=" << epsilon << " theta=" << theta;
          record(check, dp, brute, rel_tol, ctx.str());
        }
      }
    }
  }
  return check;
}

}  // namespace resonant
