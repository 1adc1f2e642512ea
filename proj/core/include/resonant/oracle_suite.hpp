#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace resonant {

struct OracleCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  double worst_error = 0.0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

// Closed-form norm against the brute-force product for every word with
// n <= max_n and m <= max_m, at `thetas_per_word` seeded random angles.
OracleCheck check_closed_form_against_products(std::uint64_t max_n, std::uint64_t max_m,
                                               std::size_t thetas_per_word, std::uint64_t seed,
                                               double rel_tol = 1e-10);

// Dynamic-programming f_n against exhaustive minimization for n <= max_n,
// epsilon in {0.25, 0.5}, lambda in {1.5, 2}.
OracleCheck check_minimizer_against_brute_force(std::uint64_t max_n, std::size_t thetas,
                                                std::uint64_t seed, double rel_tol = 1e-10);

// |values agree| in the log domain: both -inf, or relative difference of
// the linear values <= rel_tol.
bool log_values_agree(double log_a, double log_b, double rel_tol);

}  // namespace resonant
